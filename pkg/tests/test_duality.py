import pytest

from symring.classalg import ClassVector, cup, hook_partition
from symring.duality import hat, psi, psi_inverse, unhat, verify_main_theorem, xi
from symring.fixedring import FixedRingVector, admissible_partitions, fr_multiply, generator_image
from symring.partitions import Partition, class_degree, partitions_of


def P(*parts):
    return Partition.from_parts(parts)


def test_hat_examples():
    assert hat(Partition(), 5) == P(1, 1, 1, 1, 1)
    assert hat(P(1), 4) == P(2, 1, 1)
    assert hat(P(2), 4) == P(3, 1)
    with pytest.raises(ValueError):
        hat(P(2, 1), 4)  # length + weight = 5 > 4


def test_hat_is_a_bijection_onto_partitions_of_n():
    for n in range(1, 9):
        images = [hat(lam, n) for lam in admissible_partitions(n)]
        assert len(images) == len(set(images)) == len(partitions_of(n))
        assert set(images) == set(partitions_of(n))
        for lam in admissible_partitions(n):
            h = hat(lam, n)
            assert h.weight == n
            assert h.length == n - lam.weight
            assert unhat(h, n) == lam


def test_psi_examples():
    one = FixedRingVector.one(4)
    assert psi(one) == ClassVector.basis(4, P(1, 1, 1, 1))
    assert psi(FixedRingVector.basis(4, P(2))) == ClassVector.basis(4, P(3, 1))
    assert psi(FixedRingVector.basis(4, P(1))) == ClassVector.basis(4, P(2, 1, 1), -1)


def test_psi_degree_preserving_and_invertible():
    for n in range(1, 9):
        for lam in admissible_partitions(n):
            v = FixedRingVector.basis(n, lam)
            image = psi(v)
            (lam_hat, coeff), = image.coeffs.items()
            assert class_degree(lam_hat) == 2 * lam.weight
            assert abs(coeff) == 1
            assert psi_inverse(image) == v
        for lam_hat in partitions_of(n):
            c = ClassVector.basis(n, lam_hat)
            assert psi(psi_inverse(c)) == c


def test_xi_bijection_consistency():
    # xi reindexes the contributing mu onto hook-product terms: the length is
    # k+1, the weight matches, it sits below hat(lam), and the target classes
    # coincide
    for n in range(2, 8):
        for lam in admissible_partitions(n):
            lam_hat = hat(lam, n)
            for k in range(1, n):
                contributing = [
                    mu
                    for mu in lam.sub_partitions()
                    if lam.length - mu.length <= k + 1
                    and lam.weight + mu.length + k + 1 <= n
                ]
                images = set()
                for mu in contributing:
                    nu_hat = xi(mu, k, lam)
                    assert nu_hat.length == k + 1
                    assert nu_hat.weight == k + 1 + lam.weight - mu.weight
                    assert nu_hat.dominated_by(lam_hat)
                    images.add(nu_hat)
                    # the fixed-ring product key maps to the hook-product key
                    new_part = lam.weight - mu.weight + k
                    target = mu.with_part(new_part)
                    beta = list(lam_hat.mult) + [0] * max(
                        0, nu_hat.weight - len(lam_hat.mult)
                    )
                    for i in nu_hat.part_sizes():
                        beta[i - 1] -= nu_hat.multiplicity(i)
                    beta[nu_hat.weight - 1] += 1
                    assert hat(target, n) == Partition(beta)
                expected = {
                    nu
                    for nu in lam_hat.sub_partitions()
                    if nu.length == k + 1
                }
                assert images == expected
                assert len(images) == len(contributing)


def test_verify_main_theorem_small():
    for n in (1, 2, 3):
        report, elapsed = verify_main_theorem(n, mode="both")
        assert report["pass"]
        assert report["basis_bijective"]
        assert report["dims_match_class_algebra"]
        expected_checks = (n - 1) * len(admissible_partitions(n))
        assert len(report["checks"]) == expected_checks
        assert elapsed >= 0


def test_verify_main_theorem_example_pair():
    # n=4, k=1, lam=(1): both sides equal -(2 chi_(2,2) + 3 chi_(3,1))
    n = 4
    lhs = psi(fr_multiply(generator_image(1, n), FixedRingVector.basis(n, P(1))))
    hook = ClassVector.basis(n, hook_partition(1, n))
    rhs = cup(hook, ClassVector.basis(n, P(2, 1, 1))).scale(-1)
    want = ClassVector(4, {P(2, 2): -2, P(3, 1): -3})
    assert lhs == want
    assert rhs == want


def test_verify_identity_cup():
    # k cup against the empty class: psi of the generator itself
    n = 3
    report, _ = verify_main_theorem(n, mode="oracle")
    empties = [c for c in report["checks"] if c["lambda"] == []]
    assert len(empties) == n - 1
    for c in empties:
        assert c["pass"]
        assert c["lhs"] == c["rhs"]


def test_report_counterexample_on_forced_failure(monkeypatch):
    # breaking the closed formula must surface a minimal counterexample
    import symring.duality as duality

    real = duality._cup_side

    def tampered(k, lam, n, mode, cache=None):
        value = real(k, lam, n, mode, cache=cache)
        if k == 2 and lam.weight == 1:
            return value.scale(2)
        return value

    monkeypatch.setattr(duality, "_cup_side", tampered)
    report, _ = verify_main_theorem(4, mode="formula")
    assert not report["pass"]
    assert report["first_failure"] == {"k": 2, "lambda": [1]}
