import random
from fractions import Fraction

import pytest

from symring.fixedring import (
    FixedRingVector,
    admissible_partitions,
    evaluate_generator_polynomial,
    express_in_generators,
    fr_multiply,
    generator_image,
    hilbert_series,
    truncate,
    weight_zero_oracle,
)
from symring.macmahon import (
    SBarVector,
    canonical_bipartite,
    expand_kl,
)
from symring.partitions import Partition, partitions_of


def P(*parts):
    return Partition.from_parts(parts)


def test_truncate_examples():
    keep = SBarVector.basis(P(2))  # length + weight = 3
    assert truncate(keep, 3) == FixedRingVector.basis(3, P(2))
    kill = SBarVector.basis(P(1, 1))  # length + weight = 4
    assert truncate(kill, 3).is_zero()
    assert truncate(expand_kl(1, 1, P(1)), 2).is_zero()


def test_fixed_ring_vector_validates_basis_bound():
    with pytest.raises(ValueError):
        FixedRingVector(3, {P(1, 1): 1})


def test_generator_image():
    assert generator_image(1, 4) == FixedRingVector.basis(4, P(1), -1)
    assert generator_image(2, 4) == FixedRingVector.basis(4, P(2), 1)
    assert generator_image(5, 4).is_zero()  # beyond the generator range


def test_fr_multiply_unit():
    one = FixedRingVector.one(4)
    for lam in admissible_partitions(4):
        v = FixedRingVector.basis(4, lam)
        assert fr_multiply(one, v) == v
        assert fr_multiply(v, one) == v


def test_fr_multiply_square_of_degree_one_generator():
    g = generator_image(1, 4)
    got = fr_multiply(g, g)
    assert got == FixedRingVector(4, {P(1, 1): 2, P(2): 3})


def test_fr_multiply_truncates():
    # at n = 3 the (1,1) key dies, leaving only the single-row part
    g = generator_image(1, 3)
    assert fr_multiply(g, g) == FixedRingVector(3, {P(2): 3})


def test_fr_multiply_commutative_associative():
    rng = random.Random(13)
    for n in (2, 3, 4, 5):
        basis = admissible_partitions(n)
        for _ in range(4):
            a = FixedRingVector(n, {rng.choice(basis): rng.randrange(1, 4)})
            b = FixedRingVector(n, {rng.choice(basis): rng.randrange(1, 4)})
            c = FixedRingVector(n, {rng.choice(basis): rng.randrange(1, 4)})
            assert fr_multiply(a, b) == fr_multiply(b, a)
            assert fr_multiply(fr_multiply(a, b), c) == fr_multiply(a, fr_multiply(b, c))


def test_fr_multiply_keys_stay_admissible():
    for n in (3, 4, 5):
        basis = admissible_partitions(n)
        for lam in basis:
            for mu in basis:
                prod = fr_multiply(
                    FixedRingVector.basis(n, lam), FixedRingVector.basis(n, mu)
                )
                for nu in prod.coeffs:
                    assert nu.length + nu.weight <= n


def test_truncate_is_ring_map():
    # project(u v) = project(u) * project(v) for canonical classes
    rng = random.Random(14)
    from symring.macmahon import MacVector, multiply, sbar_project

    for n in (2, 3, 4, 5):
        for _ in range(4):
            w1 = rng.randrange(0, 3)
            w2 = rng.randrange(0, 3)
            lam = rng.choice(partitions_of(w1))
            mu = rng.choice(partitions_of(w2))
            u = MacVector.basis(canonical_bipartite(lam))
            v = MacVector.basis(canonical_bipartite(mu))
            left = truncate(sbar_project(multiply(u, v)), n)
            right = fr_multiply(
                truncate(SBarVector.basis(lam), n), truncate(SBarVector.basis(mu), n)
            )
            assert left == right, (n, lam.parts, mu.parts)


def test_express_in_generators_examples():
    assert express_in_generators(Partition(), 4) == {Partition(): Fraction(1)}
    assert express_in_generators(P(1), 4) == {P(1): Fraction(-1)}
    assert express_in_generators(P(1), 2) == {P(1): Fraction(-1)}
    # reconstruction: substituting the generators reproduces the basis vector
    for n in (3, 4, 5):
        for lam in admissible_partitions(n):
            expr = express_in_generators(lam, n)
            assert evaluate_generator_polynomial(expr, n) == FixedRingVector.basis(n, lam)
            for kappa in expr:
                assert kappa.weight == lam.weight  # homogeneous expression
                assert all(p <= n - 1 for p in kappa.parts)


def test_express_degree_four_solve():
    # the one-dimensional degree-4 solve: the single-row class of weight 2
    expr = express_in_generators(P(2), 3)
    assert evaluate_generator_polynomial(expr, 3) == FixedRingVector.basis(3, P(2))


def test_hilbert_series_values():
    assert hilbert_series(1) == (1,)
    assert hilbert_series(3) == (1, 1, 1)
    assert hilbert_series(4) == (1, 1, 2, 1)
    for n in range(1, 9):
        assert sum(hilbert_series(n)) == len(partitions_of(n))


def test_oracle_caps():
    with pytest.raises(ValueError):
        weight_zero_oracle(6, 4)
    with pytest.raises(ValueError):
        weight_zero_oracle(3, 14)
    weight_zero_oracle(6, 4, max_n=6)  # explicit override


def test_oracle_dimensions_match_series():
    for n in range(1, 5):
        orc = weight_zero_oracle(n, 10)
        series = hilbert_series(n)
        padded = series + (0,) * (6 - len(series))
        assert orc.dimensions() == padded


def test_oracle_n1_is_a_point():
    orc = weight_zero_oracle(1, 6)
    assert orc.dimensions() == (1, 0, 0, 0)


def test_oracle_products_match_fr_multiply():
    rng = random.Random(15)
    for n in (2, 3, 4):
        orc = weight_zero_oracle(n, 12)
        basis = admissible_partitions(n)
        pairs = [
            (lam, mu)
            for lam in basis
            for mu in basis
            if 2 * (lam.weight + mu.weight) <= 12
        ]
        for lam, mu in rng.sample(pairs, min(8, len(pairs))):
            prod = fr_multiply(
                FixedRingVector.basis(n, lam), FixedRingVector.basis(n, mu)
            )
            left = orc.reduce_product(
                {canonical_bipartite(lam): 1}, {canonical_bipartite(mu): 1}
            )
            coeffs = {canonical_bipartite(nu): c for nu, c in prod.coeffs.items()}
            d = 2 * (lam.weight + mu.weight)
            right = orc.reduce_combination(coeffs, d) if coeffs else {}
            assert left == right, (n, lam.parts, mu.parts)


def test_oracle_basis_change_is_invertible():
    # the canonical classes reduce to an independent generating set
    from symring.exact import EchelonSpan

    for n in (2, 3, 4):
        orc = weight_zero_oracle(n, 2 * (n - 1) if n > 1 else 2)
        for k in range(0, n):
            span = EchelonSpan()
            count = 0
            for lam in admissible_partitions(n, weight=k):
                res = orc.reduce_combination({canonical_bipartite(lam): 1}, 2 * k)
                assert res, (n, lam.parts)
                span.insert(res)
                count += 1
            assert span.rank == count == orc.dimension(2 * k)


def test_oracle_export_schema():
    orc = weight_zero_oracle(2, 4)
    data = orc.export_json()
    assert data["n"] == 2
    assert [d["dimension"] for d in data["degrees"]] == [1, 1, 0]
    assert all(
        isinstance(p["left"], list) and isinstance(p["value"], list)
        for p in data["products"]
    )


def test_generator_solve_error_surface():
    # an inadmissible request fails loudly rather than returning junk
    with pytest.raises(ValueError):
        express_in_generators(P(3), 3)


def test_fr_multiply_is_bilinear():
    rng = random.Random(18)
    for n in (3, 4):
        basis = admissible_partitions(n)
        for _ in range(5):
            a = FixedRingVector(n, {rng.choice(basis): rng.randrange(-3, 4)})
            b = FixedRingVector(n, {rng.choice(basis): rng.randrange(-3, 4)})
            c = FixedRingVector(n, {rng.choice(basis): rng.randrange(-3, 4)})
            assert fr_multiply(a + b, c) == fr_multiply(a, c) + fr_multiply(b, c)
            assert fr_multiply(a.scale(3), c) == fr_multiply(a, c).scale(3)


def test_rewriting_vs_oracle_on_arbitrary_balanced_classes():
    # not just lemma-shaped inputs: every balanced class of half-degree <= 4
    from symring.macmahon import sbar_project
    from symring.partitions import bipartite_partitions

    oracles = {n: weight_zero_oracle(n, 8) for n in range(1, 5)}
    for k in range(0, 5):
        for lab in bipartite_partitions(k, k):
            proj = sbar_project(lab)
            rhs = {canonical_bipartite(nu): c for nu, c in proj.coeffs.items()}
            for n, orc in oracles.items():
                left = orc.reduce_combination({lab: 1}, 2 * k)
                right = orc.reduce_combination(rhs, 2 * k) if rhs else {}
                assert left == right, (n, lab)
