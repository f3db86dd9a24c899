"""The graded linear map between the fixed ring and the associated-graded
center, and the end-to-end verification that it is a ring isomorphism.

On basis elements the map sends the class of lam (with the sign (-1)^|lam|)
to the class sum of the partition obtained by appending a part of size one
below every part and padding with n - l(lam) - |lam| fixed points.
"""

import time
from fractions import Fraction

from . import classalg
from .classalg import ClassVector, cup, hook_cup, hook_partition
from .fixedring import (
    FixedRingVector,
    admissible_partitions,
    fr_multiply,
    generator_image,
    hilbert_series,
)
from .partitions import Partition, partitions_of


def hat(lam, n):
    """The partition of n with multiplicities shifted up by one size and
    n - l(lam) - |lam| added fixed points."""
    slack = n - lam.length - lam.weight
    if slack < 0:
        raise ValueError(f"{lam!r} does not fit at n={n}")
    return Partition((slack,) + lam.mult)


def unhat(lam_hat, n):
    """Inverse of hat: drop the fixed points and shift sizes down by one."""
    if lam_hat.weight != n:
        raise ValueError("expected a partition of n")
    return Partition(lam_hat.mult[1:])


def psi(u):
    """Graded isomorphism onto the class basis: b_lam -> (-1)^|lam| chi_hat(lam)."""
    out = {}
    for lam, c in u.coeffs.items():
        out[hat(lam, u.n)] = c * Fraction(-1) ** lam.weight
    return ClassVector(u.n, out)


def psi_inverse(c):
    out = {}
    for lam_hat, v in c.coeffs.items():
        lam = unhat(lam_hat, c.n)
        if lam.length + lam.weight > c.n:
            raise AssertionError("unhat left the admissible range")
        out[lam] = v * Fraction(-1) ** lam.weight
    return FixedRingVector(c.n, out)


def xi(mu, k, lam):
    """The reindexing bijection of the main proof: gamma_1 = k+1-l(lam)+l(mu)
    and gamma_{i+1} = alpha_i - beta_i."""
    head = k + 1 - lam.length + mu.length
    if head < 0:
        raise ValueError("mu is too short to contribute")
    tail = tuple(
        lam.multiplicity(i) - mu.multiplicity(i)
        for i in range(1, len(lam.mult) + 1)
    )
    if any(t < 0 for t in tail):
        raise ValueError("mu is not below lam")
    return Partition((head,) + tail)


def _cup_side(k, lam, n, mode, cache=None):
    """psi(generator) cup psi(basis): by enumeration or the closed formula."""
    sign = Fraction(-1) ** lam.weight
    lam_hat = hat(lam, n)
    if mode == "formula":
        return hook_cup(k, lam_hat).scale(sign)
    hook_vec = ClassVector.basis(n, hook_partition(k, n))
    return cup(hook_vec, ClassVector.basis(n, lam_hat), cache=cache).scale(sign)


def verify_main_theorem(n, mode="oracle", cache=None):
    """Check, for every generator k and every basis element, that the map
    intertwines the fixed-ring product with the cup product.

    mode "oracle" computes the cup side by brute-force convolution,
    "formula" by the closed hook-product formula, "both" runs both.
    Also checks graded dimensions and basis bijectivity.  Returns a report
    dict; report["pass"] is the overall verdict.
    """
    if mode not in ("oracle", "formula", "both"):
        raise ValueError(f"unknown mode {mode!r}")
    started = time.monotonic()
    checks = []
    all_pass = True

    basis = admissible_partitions(n)

    # graded dimension comparison
    series = hilbert_series(n)
    class_dims = classalg.graded_dimensions(n)
    dims_expected = tuple(
        class_dims.get(2 * k, 0) for k in range(len(series))
    )
    dims_ok = series == dims_expected and sum(series) == len(partitions_of(n))

    # bijectivity of the basis correspondence
    hats = {hat(lam, n) for lam in basis}
    bijective = len(hats) == len(basis) and hats == set(partitions_of(n))
    all_pass = all_pass and dims_ok and bijective

    modes = ("oracle", "formula") if mode == "both" else (mode,)
    for k in range(1, n):
        gen = generator_image(k, n)
        for lam in basis:
            lhs = psi(fr_multiply(gen, FixedRingVector.basis(n, lam)))
            ok = True
            rhs = None
            for m in modes:
                rhs = _cup_side(k, lam, n, m, cache=cache)
                ok = ok and lhs == rhs
            checks.append(
                {
                    "k": k,
                    "lambda": list(lam.parts),
                    "pass": ok,
                    "lhs": lhs.to_json(),
                    "rhs": rhs.to_json(),
                }
            )
            all_pass = all_pass and ok

    failures = [(c["k"], tuple(c["lambda"])) for c in checks if not c["pass"]]
    report = {
        "n": n,
        "mode": mode,
        "dims": list(series),
        "dims_match_class_algebra": dims_ok,
        "basis_bijective": bijective,
        "checks": checks,
        "pass": bool(all_pass),
    }
    if failures:
        k0, lam0 = min(failures)
        report["first_failure"] = {"k": k0, "lambda": list(lam0)}
    return report, time.monotonic() - started
