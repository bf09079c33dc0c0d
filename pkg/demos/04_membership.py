"""Certificates: C1 inside the star-space of (b), and the chain up to D2."""
from starcentral import GeneratorSet, catalog, is_member, verify_V_lemma, y
from starcentral.membership import identity_generators

b = GeneratorSet([catalog.make_central("b")], "star_space", "(b)")
cert = is_member(catalog.make_C(1), b)
print(f"C1 from (b): {len(cert.terms)} terms")
for t in cert.terms:
    subs = ", ".join(f"{x} -> {p}" for x, p in sorted(t.substitution.items()))
    print(f"  {t.coefficient} * (b)[{subs}]")
print("recombines:", cert.verify())

# y1 is a nonzero value somewhere, so no identity can produce it
print("\ny1 from H1..H10:", is_member(y(1), identity_generators()))

report = verify_V_lemma(L=2, N=1)
print()
for step in report.steps:
    n = len(step.certificate.terms) if step.found else "-"
    print(f"{step.name:<3} found={step.found}  terms={n}  via {step.generators}")
