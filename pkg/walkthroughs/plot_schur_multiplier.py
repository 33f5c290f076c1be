"""
Two routes to the Schur multiplier
==================================

HL2 of a small Hom-Leibniz algebra, once from the chain complex and once
as the kernel of the commutator map on the exterior square.
"""

from homleibniz.catalog import example_5_2_iii, heisenberg
from homleibniz.homology import chain_complex, hl2_dim
from homleibniz.products import exterior_product, self_pair

# a three-dimensional algebra: [e1,e2] = e3, alpha(e1) = e3, alpha(e2) = e2
g = example_5_2_iii()
print(g)

# boundary ranks in low degrees
cx = chain_complex(g, 3)
for n in (2, 3):
    print("rank d%d =" % n, cx.rank(n))

# chain-complex route
print("dim HL2 from chains:", hl2_dim(g))

# exterior route: ker(lambda) on g ^ g
w = exterior_product(self_pair(g))
print("dim g^g:", w.dim, " dim ker lambda:", w.lambda_kernel().dim)

# the same comparison for H(2)
h = heisenberg(2)
print("H(2):", hl2_dim(h), exterior_product(self_pair(h)).lambda_kernel().dim)
