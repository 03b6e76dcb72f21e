"""Search the products ``T_bar^2 D T_bar^i1 D ... T_bar^ik D T_bar^2`` for scalars.

A scalar ``t^(4m) I`` would give a braid in the Burau kernel.  The search
below covers every sequence with k <= 6; then a planted sequence whose
braid is trivial shows what a hit looks like.
"""

from burau4.kernelsearch import SearchConfig, search, verify_hit, word_matrix

print("product for the empty sequence:")
print(word_matrix(()).pretty())

summary = search(SearchConfig(max_k=6, dedup=True))
print()
print(summary.report())

# tau^2 D tau D tau^4 D tau^3 D tau^2 reduces to theta^5, so its matrix is
# t^20 I.  The exponent 4 lies outside the search range, which is why it has
# to be planted by hand.
print("\nplanted control 3 4 1:")
print(word_matrix((3, 4, 1)).pretty())
print(verify_hit((3, 4, 1), 5).report())
