"""Rewrite words in alpha, beta into the theta/tau/Delta normal form.

A word starting with beta^-1 and ending with beta lands in the shape
``theta^m tau^2 D tau^i1 D ... tau^ik D tau^2``; any other word can first
be conjugated into that form by a power of beta.
"""

from burau4.braid import braid_eq
from burau4.normalform import (
    conjugate_to_shape,
    expand,
    format_gl,
    gl_substitute,
    gl_to_braid,
    parse_gl,
    theorem_shape,
)

for text in ["b^-1 a b", "b^-1 a^2 b", "b^-1 a b^-1 a^-1 b", "a b a^-1"]:
    w = parse_gl(text)
    if w[0] != -2 or w[-1] != 2:
        w = conjugate_to_shape(w)
        print(f"{text}: conjugated to {format_gl(w)}")
    trace = []
    alt = gl_substitute(w, trace)
    print(f"{format_gl(w)}")
    for step in trace:
        print(f"    {step}")
    print(f"  normal form: {alt}")
    m, exps = theorem_shape(alt)
    print(f"  m = {m}, interior exponents = {exps}")
    # the normal form names the same braid, not just the same matrix
    print(f"  same braid: {braid_eq(expand(alt), gl_to_braid(w))}\n")
