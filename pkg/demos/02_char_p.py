"""In characteristic p the p-th power of a symmetric variable becomes central."""
from starcentral import CheckConfig, RingConfig, is_central, y

for p in (3, 5, 7):
    f = y(1, RingConfig(p)) ** p
    r = is_central(f, CheckConfig(p, "symbolic"))
    print(f"char {p}: y1^{p} central = {r.holds} ({r.strategy}, truncation {r.truncation})")

# over the rationals the same polynomial is not central
r = is_central(y(1) ** 3)
print(f"char 0: y1^3 central = {r.holds}")
