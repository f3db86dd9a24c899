"""Slice presentations of nilpotent orbit closures and the partial-flag
cohomology ideal, with the degreewise equality check between them.

An instance is a pair (lam, mu): lam a padded partition of n (the Jordan
type cut out on the orbit side) and mu a composition of n with n
nonnegative parts (the block sizes of the parabolic).  Two homogeneous
ideals are built in the coordinate ring of the slice:

* the image of the invariant-theory ideal, generated by truncated products
  of elementary symmetric polynomials per block, transported generator by
  generator through the characteristic polynomials of the slice blocks;
* the minor ideal, the coefficients of low t-powers of the s-minors of
  t*I - Z(x) for the explicit block companion-like slice matrix Z(x).

Equality is checked degree by degree; once both quotients vanish on a full
window of degrees (one max-variable-weight wide) the equality propagates to
all degrees, so the check is complete, not just a truncation.
"""

import json
from fractions import Fraction
from itertools import combinations, product as iproduct

from .exact import GradedIdeal, PolynomialRing, ideals_equal_up_to, minor

DEFAULT_MAX_N = 4


class SpaltensteinInstance:
    """Validated (n, lam, mu) datum."""

    def __init__(self, n, lam, mu):
        lam = tuple(lam)
        mu = tuple(mu)
        if n < 1:
            raise ValueError("n must be positive")
        if len(lam) != n or len(mu) != n:
            raise ValueError("lam and mu must both have n entries (zeros allowed)")
        if any(x < 0 for x in lam) or any(x < 0 for x in mu):
            raise ValueError("entries must be nonnegative")
        if list(lam) != sorted(lam, reverse=True):
            raise ValueError("lam must be weakly decreasing")
        if sum(lam) != n or sum(mu) != n:
            raise ValueError("lam and mu must both sum to n")
        self.n = n
        self.lam = lam
        self.mu = mu

    @classmethod
    def from_json(cls, data):
        try:
            return cls(int(data["n"]), list(data["lambda"]), list(data["mu"]))
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed instance: {exc}") from exc

    def to_json(self):
        return {"n": self.n, "lambda": list(self.lam), "mu": list(self.mu)}

    def __repr__(self):
        return f"SpaltensteinInstance(n={self.n}, lam={self.lam}, mu={self.mu})"

    def blocks(self):
        """(index, size) for the nonempty blocks, 1-based index."""
        return [(i + 1, m) for i, m in enumerate(self.mu) if m > 0]

    def tail_sum(self, count):
        """Sum of the `count` smallest entries of the padded lam."""
        if count <= 0:
            return 0
        return sum(self.lam[self.n - count:])


def slice_ring(inst, with_t=False):
    """C[x^{(i)}_j] for the nonempty blocks, deg x^{(i)}_j = 2j; optionally
    with the char-poly variable t of degree 2 in front."""
    names = []
    degrees = []
    if with_t:
        names.append("t")
        degrees.append(2)
    for i, m in inst.blocks():
        for j in range(1, m + 1):
            names.append(f"x{i}_{j}")
            degrees.append(2 * j)
    return PolynomialRing(names, degrees)


def _block_f_matrix(m):
    """Superdiagonal matrix with entries j*(m - j); the lowering half of the
    standard triple for a regular nilpotent in gl_m.  Any completion of the
    triple would do; the ideal's independence of this choice is not checked."""
    F = [[0] * m for _ in range(m)]
    for j in range(1, m):
        F[j - 1][j] = j * (m - j)
    return F


def _block_z_matrix(inst, block_index, ring):
    """Z_i = E_i + x_1 I + sum_{j>=2} x_j F_i^{j-1} over the given ring."""
    i, m = block_index
    zero = ring.zero()
    Z = [[zero for _ in range(m)] for _ in range(m)]
    for r in range(1, m):
        Z[r][r - 1] = Z[r][r - 1] + 1  # E_i: ones below the diagonal
    x1 = ring.var(f"x{i}_1")
    for r in range(m):
        Z[r][r] = Z[r][r] + x1
    F = _block_f_matrix(m)
    Fp = [[Fraction(1) if a == b else Fraction(0) for b in range(m)] for a in range(m)]
    for j in range(2, m + 1):
        # Fp = F^(j-1)
        Fp = [
            [sum(Fp[a][k] * F[k][b] for k in range(m)) for b in range(m)]
            for a in range(m)
        ]
        xj = ring.var(f"x{i}_{j}")
        for a in range(m):
            for b in range(m):
                if Fp[a][b]:
                    Z[a][b] = Z[a][b] + xj.scalar_mul(Fp[a][b])
    return Z


def _t_matrix_block(inst, block_index, ring_t):
    """t*I - Z_i over the ring with t."""
    i, m = block_index
    Z = _block_z_matrix(inst, block_index, ring_t)
    t = ring_t.var("t")
    M = [[(-Z[a][b]) for b in range(m)] for a in range(m)]
    for a in range(m):
        M[a][a] = M[a][a] + t
    return M


def char_poly_map(inst):
    """The generator images: (block index i, r) -> homogeneous polynomial of
    degree 2r in the slice ring, read off the characteristic polynomial of
    the block slice matrix."""
    ring_t = slice_ring(inst, with_t=True)
    ring = slice_ring(inst)
    images = {}
    for i, m in inst.blocks():
        M = _t_matrix_block(inst, (i, m), ring_t)
        det = minor(M, range(m), range(m))
        for r in range(1, m + 1):
            coeff = det.coefficient_of("t", m - r)
            poly = coeff.map_to(ring).scalar_mul(Fraction(-1) ** r)
            if poly.degree() not in (-1, 2 * r):
                raise AssertionError("generator image is not homogeneous of degree 2r")
            images[(i, r)] = poly
    return images


def _generator_conditions(inst):
    """(subset, r) pairs defining the invariant-side ideal: for every
    nonempty subset of block positions, r beyond the subset's mu-sum minus
    the tail of lam counted against the untouched positive blocks."""
    n = inst.n
    out = []
    for m_size in range(1, n + 1):
        for subset in combinations(range(1, n + 1), m_size):
            mu_sum = sum(inst.mu[i - 1] for i in subset)
            a = sum(
                1 for i in range(1, n + 1) if inst.mu[i - 1] > 0 and i not in subset
            )
            threshold = mu_sum - inst.tail_sum(n - a)
            for r in range(max(threshold + 1, 0), mu_sum + 1):
                out.append((subset, r))
            if threshold < 0:
                out.append((subset, 0))  # the unit generator
    return out


def _e_poly(inst, i, r, ring, offsets):
    """Elementary symmetric polynomial of degree r in block i's x-variables."""
    m = inst.mu[i - 1]
    if r == 0:
        return ring.one()
    if r > m:
        return ring.zero()
    lo = offsets[i - 1]
    vars_ = [ring.var(f"x{k}") for k in range(lo + 1, lo + m + 1)]
    out = ring.zero()
    for chosen in combinations(vars_, r):
        term = ring.one()
        for v in chosen:
            term = term * v
        out = out + term
    return out


def _compositions(total, parts, caps):
    """Nonnegative integer tuples of length `parts` with the given sum and
    componentwise caps."""
    out = []

    def rec(idx, rem, acc):
        if idx == parts:
            if rem == 0:
                out.append(tuple(acc))
            return
        for v in range(min(rem, caps[idx]), -1, -1):
            rec(idx + 1, rem - v, acc + [v])

    rec(0, total, [])
    return out


def bo_x_ring(inst):
    """C[x_1..x_n] with deg x_i = 2, the ambient of the invariant-side ideal."""
    return PolynomialRing([f"x{k}" for k in range(1, inst.n + 1)], [2] * inst.n)


def bo_ideal(inst):
    """The invariant-side ideal realized in C[x_1..x_n].

    Generators are the convolution sums e_r over the flagged subsets; blocks
    partition the variables consecutively by mu.
    """
    ring = bo_x_ring(inst)
    offsets = []
    acc = 0
    for m in inst.mu:
        offsets.append(acc)
        acc += m
    gens = []
    for subset, r in _generator_conditions(inst):
        caps = [inst.mu[i - 1] for i in subset]
        total = ring.zero()
        for comp in _compositions(r, len(subset), caps):
            term = ring.one()
            for i, ri in zip(subset, comp):
                term = term * _e_poly(inst, i, ri, ring, offsets)
            total = total + term
        if not total.is_zero():
            gens.append(total)
    return GradedIdeal(ring, _dedupe(gens))


def psi_ideal(inst):
    """The image of the invariant-side ideal in the slice ring, generator by
    generator through the characteristic-polynomial map."""
    ring = slice_ring(inst)
    images = char_poly_map(inst)

    def e_tilde(i, r):
        if r == 0:
            return ring.one()
        if r > inst.mu[i - 1]:
            return ring.zero()
        return images[(i, r)]

    gens = []
    for subset, r in _generator_conditions(inst):
        caps = [inst.mu[i - 1] for i in subset]
        total = ring.zero()
        for comp in _compositions(r, len(subset), caps):
            term = ring.one()
            for i, ri in zip(subset, comp):
                term = term * e_tilde(i, ri)
            total = total + term
        if not total.is_zero():
            gens.append(total)
    return GradedIdeal(ring, _dedupe(gens))


def slice_ideal(inst):
    """The minor-side ideal: coefficients of t^k, k < (tail of lam of length
    s), over all s-minors of t*I - Z(x).

    A nonzero minor of the block-diagonal matrix is a product of per-block
    minors, so only block-aligned row/column choices are enumerated.
    """
    ring_t = slice_ring(inst, with_t=True)
    ring = slice_ring(inst)
    blocks = inst.blocks()

    per_block = []  # list of lists of (size, minor polynomial)
    for (i, m) in blocks:
        M = _t_matrix_block(inst, (i, m), ring_t)
        options = [(0, ring_t.one())]
        for s in range(1, m + 1):
            for rows in combinations(range(m), s):
                for cols in combinations(range(m), s):
                    det = minor(M, rows, cols)
                    if not det.is_zero():
                        options.append((s, det))
        per_block.append(options)

    gens = []
    for combo in iproduct(*per_block):
        s = sum(c[0] for c in combo)
        if s == 0:
            continue
        k_bound = inst.tail_sum(s)
        if k_bound <= 0:
            continue
        prod = ring_t.one()
        for _, det in combo:
            prod = prod * det
        for k in range(k_bound):
            g = prod.coefficient_of("t", k).map_to(ring)
            if not g.is_zero():
                gens.append(g)
    return GradedIdeal(ring, _dedupe(gens))


def _dedupe(gens):
    seen = []
    out = []
    for g in gens:
        key = tuple(sorted(g.terms.items()))
        if key not in seen:
            seen.append(key)
            out.append(g)
    return out


def _max_weight(ring):
    return max(ring.degrees)


def _quotient_profile(ideal, hard_cap):
    """Even-degree quotient dimensions up to saturation.

    Returns (dims list indexed by d/2, top nonzero degree) where dims are
    scanned until a full window of zeros of width max-variable-weight shows
    the ideal contains everything beyond.  Raises if the cap is hit first.
    """
    if ideal.is_unit():
        return [0], -1
    w = _max_weight(ideal.ring)
    window = w // 2  # consecutive even degrees needed
    dims = []
    zeros = 0
    d = 0
    while True:
        q = ideal.quotient_dimension(d)
        dims.append(q)
        zeros = zeros + 1 if q == 0 else 0
        if zeros >= window and d >= w:
            break
        d += 2
        if d > hard_cap:
            raise RuntimeError(
                f"quotient did not saturate below degree {hard_cap}"
            )
    top = -1
    for k, q in enumerate(dims):
        if q:
            top = 2 * k
    return dims, top


def verify_appendix_a(inst, dmax=None, hard_cap=None):
    """Compare the transported invariant-side ideal with the minor-side ideal
    degree by degree; report per-degree equality and the quotient series.

    With dmax omitted, the check runs to one saturation window past the top
    nonzero quotient degree of both sides, which proves equality in all
    degrees.
    """
    if hard_cap is None:
        hard_cap = 2 * inst.n * inst.n + 2 * max(inst.mu)
    I = psi_ideal(inst)
    J = slice_ideal(inst)

    unit_i, unit_j = I.is_unit(), J.is_unit()
    if unit_i or unit_j:
        ok = unit_i == unit_j
        return {
            "instance": inst.to_json(),
            "unit_ideal": True,
            "pass": ok,
            "dims": [],
            "degrees": [],
            "first_difference": None if ok else 0,
            "equal_in_all_degrees": ok,
            "palindromic": True,
        }

    dims_i, top_i = _quotient_profile(I, hard_cap)
    dims_j, top_j = _quotient_profile(J, hard_cap)
    w = _max_weight(I.ring)
    saturation_dmax = max(top_i, top_j) + w
    check_to = saturation_dmax if dmax is None else dmax

    equal_up_to, first_diff = ideals_equal_up_to(I, J, check_to)
    degrees = [
        {
            "degree": d,
            "equal": I.component(d) == J.component(d),
            "dim": I.quotient_dimension(d),
        }
        for d in range(0, check_to + 1, 2)
    ]

    complete = (
        equal_up_to
        and check_to >= saturation_dmax
        and dims_i == dims_j
    )
    dims = [q for q in dims_i]
    while dims and dims[-1] == 0:
        dims.pop()
    report = {
        "instance": inst.to_json(),
        "unit_ideal": False,
        "pass": equal_up_to and dims_i == dims_j,
        "dims": dims,
        "degrees": degrees,
        "first_difference": first_diff,
        "equal_in_all_degrees": complete,
        "palindromic": dims == dims[::-1],
    }
    return report


def all_compositions(n):
    """All n-part nonnegative compositions of n, lexicographically."""
    out = []

    def rec(idx, rem, acc):
        if idx == n - 1:
            out.append(tuple(acc + [rem]))
            return
        for v in range(rem + 1):
            rec(idx + 1, rem - v, acc + [v])

    rec(0, n, [])
    return out


def load_instance(path):
    with open(path, "r", encoding="utf-8") as fh:
        return SpaltensteinInstance.from_json(json.load(fh))
