import random
from fractions import Fraction

from starcentral.linalg import DenseSpan, SpanBuilder, in_span_fractions, solve_exact


def _random_vectors(rng, count, cols, density=0.5):
    out = []
    for _ in range(count):
        v = {c: rng.randint(-4, 4) for c in cols if rng.random() < density}
        out.append({k: c for k, c in v.items() if c})
    return out


def test_dense_span_agrees_with_fraction_oracle():
    rng = random.Random(4)
    cols = list(range(12))
    for trial in range(20):
        vecs = _random_vectors(rng, rng.randint(1, 9), cols)
        ds = DenseSpan(cols)
        ds.add_batch(vecs)
        targets = _random_vectors(rng, 3, cols) + [
            {k: sum(v.get(k, 0) for v in vecs[:2]) for k in cols}]
        for t in targets:
            t = {k: c for k, c in t.items() if c}
            assert ds.contains(t) == in_span_fractions(vecs, t)


def test_dense_span_solution_recombines():
    rng = random.Random(5)
    cols = list(range(8))
    vecs = _random_vectors(rng, 5, cols)
    ds = DenseSpan(cols)
    ds.add_batch(vecs[:2])
    ds.add_batch(vecs[2:])
    target = {k: 3 * vecs[0].get(k, 0) - vecs[4].get(k, 0) for k in cols}
    coeffs = ds.solve(target)
    assert coeffs is not None
    total = {k: sum(Fraction(c) * v.get(k, 0) for c, v in zip(coeffs, ds.vectors)) for k in cols}
    assert all(total[k] == target[k] for k in cols)


def test_dependent_vectors_are_dropped():
    ds = DenseSpan(["a", "b"])
    accepted = ds.add_batch([{"a": 1}, {"a": 2}, {"b": 1}, {"a": 1, "b": 1}])
    assert accepted == [True, False, True, False]
    assert ds.rank == 2


def test_span_builder_and_solve_exact():
    sb = SpanBuilder()
    assert sb.add({"x": 1, "y": 1})
    assert not sb.add({"x": 2, "y": 2})
    assert sb.contains({"x": Fraction(1, 3), "y": Fraction(1, 3)})
    assert not sb.contains({"x": 1})
    assert solve_exact([{"x": 1}, {"y": 2}], {"x": 3, "y": 1}) == [3, Fraction(1, 2)]
    assert solve_exact([{"x": 1}], {"y": 1}) is None
