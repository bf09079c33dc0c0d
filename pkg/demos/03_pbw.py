"""Splitting a polynomial into ordered y-monomials times proper parts."""
from starcentral import catalog, leading_proper_part, parse_poly, pbw_decompose, rank

f = parse_poly("z1*y2*y1 + y1*z1")
dec = pbw_decompose(f)
print(f"f = {f}\nframe {[str(x) for x in dec.frame]}")
for exps, w in dec.entries:
    print(f"  {exps}: {w}")
assert dec.recombine() == f

# D1 = y1*C1 + [y1,z1][y2,z2]: rank (1, 0) and leading part C1
D1 = catalog.make_D(1)
print(f"\nD1 rank {rank(D1)}, leading proper part {leading_proper_part(D1)}")
print(f"C1 = {catalog.make_C(1)}")
