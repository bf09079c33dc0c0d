"""Which polynomials vanish on M_{1,1}(E), and what a counterexample looks like."""
from starcentral import catalog, is_central, is_identity, parse_poly

for k in range(1, 11):
    h = catalog.make_H(k)
    print(f"H{k:<2} {'identity' if is_identity(h).holds else 'NOT an identity'}   {h}")

# a failure comes with an assignment into R that the checker has re-evaluated
report = is_identity(parse_poly("[y1,z1]"))
print("\n[y1,z1] fails:")
for x, value in sorted(report.witness.items()):
    print(f"  {x} = {value}")
print(f"  value = {report.value}")

# central but not an identity
for name in ("a", "b"):
    f = catalog.make_central(name)
    print(f"\n({name}) = {f}")
    print(f"  central: {is_central(f).holds}, identity: {is_identity(f).holds}")
