"""
Reduction mod p
===============

An O-set can vanish mod p without vanishing over the integers; the
chain it yields is then a chain of links mod p.
"""

from odd_linkage import MultiIndex, Weight, basis_matrix, factor_candidate, rank_mod_p, rank_rational

IJ = MultiIndex.parse("123|111")
for p in (3, 5, 7):
    # w31 = p, w21 + 1 = 2p, w11 + 2 = 3p
    w = Weight((3 * p - 4, 2 * p - 2, p), (0, 0, 0))
    M = basis_matrix(IJ).evaluate(w)
    print(f"p={p}  w={w}  row {M[0]}  rank over Q {rank_rational(M)}  rank mod p {rank_mod_p(M, p)}")
    v = factor_candidate(w, IJ, modulus=p)
    print("   ", v.verdict, v.chain.render(), "verified:", v.chain.verify())
    print("    over Q:", factor_candidate(w, IJ).verdict)
