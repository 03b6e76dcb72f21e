"""Walk through the basic objects: generator matrices, the named braids
alpha, beta, tau, Delta, theta, and how braid equality is decided.

Run with ``python3 demos/01_identities.py``.
"""

from burau4.braid import ALPHA, BETA, DELTA, TAU, THETA, braid_eq, is_central, parse_braid
from burau4.burau import A, B, T, T_BAR, burau_eval
from burau4.matrix3 import IDENTITY

print("Burau images of the named braids (reversed-product convention):")
for name, word in [("alpha", ALPHA), ("beta", BETA), ("tau", TAU), ("Delta", DELTA)]:
    m = burau_eval(word)
    print(f"\n{name} = {word}")
    print(m.pretty())
    print(f"det = {m.det()}")

print("\nThe order-four matrix T and its relation to tau:")
print(T.pretty())
print("T^4 == I:", T**4 == IDENTITY)
print("T_bar == t*T:", T_BAR == T.shift(1))
print("A == T B T^-1:", A == T * B * T**3)

# Braid equality is exact: both words act on a free group of rank four and
# the resulting tuples of reduced free words are compared.
u, v = parse_braid("a"), parse_braid("t^-1 b t")
print(f"\n{u}  vs  {v}")
print("equal as braids:", braid_eq(u, v))
print("sigma1 sigma2 == sigma2 sigma1:", braid_eq(parse_braid("1 2"), parse_braid("2 1")))

print("\ntheta = tau^4 is central:", is_central(THETA))
print("Delta is central:", is_central(DELTA))
print("rho(theta) =", burau_eval(THETA).as_scalar(), "* I")
