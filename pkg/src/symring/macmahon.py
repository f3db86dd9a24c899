"""MacMahon symmetric functions in the monomial basis, and the quotient by
the unbalanced generators.

Two vector types live here.  ``MacVector`` is an element of the full ring S,
a finite combination of monomial symmetric functions indexed by bipartite
partitions.  ``SBarVector`` is an element of the quotient ring written on its
canonical basis, indexed by ordinary partitions lam via the multiset
(lam, 0)(0, 1)^|lam|.

The rewriting routine ``sbar_project`` follows the constructive basis proof:
a vector (a, b) with b > 0 and (a, b) != (0, 1) is eliminated through the
single-vector product expansion, either directly (the pivot generator dies
in the quotient when b != a + 1) or through a recursive product with the
balanced generator of degree a.  Termination metric: total degree minus the
number of (0, 1) entries.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial

from .exact import Polynomial, PolynomialRing
from .partitions import (
    BipartitePartition,
    EMPTY_BIPARTITE,
    Partition,
    f_coeff,
    recip_factorial,
)


@lru_cache(maxsize=None)
def xy_ring(n):
    """C[x_1..x_n, y_1..y_n] with the standard (total-degree) grading."""
    names = [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]
    return PolynomialRing(names)


def canonical_bipartite(lam):
    """The canonical-basis multiset (lam, 0)(0, 1)^|lam| of a partition."""
    vecs = [(p, 0) for p in lam.parts] + [(0, 1)] * lam.weight
    return BipartitePartition(vecs)


def canonical_form_partition(bp):
    """Inverse of canonical_bipartite, or None if bp is not of that shape."""
    parts = []
    zeros = 0
    for a, b in bp.vectors:
        if (a, b) == (0, 1):
            zeros += 1
        elif b == 0:
            parts.append(a)
        else:
            return None
    lam = Partition.from_parts(parts)
    if zeros != lam.weight:
        return None
    return lam


class MacVector:
    """A finite rational combination of monomial MacMahon symmetric functions."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for bp, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                clean[bp] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MacVector is immutable")

    @classmethod
    def basis(cls, bp, coeff=1):
        return cls({bp: Fraction(coeff)})

    @classmethod
    def one(cls):
        return cls.basis(EMPTY_BIPARTITE)

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, MacVector) and self.coeffs == other.coeffs

    def __add__(self, other):
        coeffs = dict(self.coeffs)
        for bp, c in other.coeffs.items():
            coeffs[bp] = coeffs.get(bp, Fraction(0)) + c
        return MacVector(coeffs)

    def __neg__(self):
        return MacVector({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return MacVector({k: c * v for k, v in self.coeffs.items()})

    def max_length(self):
        return max((bp.length for bp in self.coeffs), default=0)

    def items_sorted(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self):
        if not self.coeffs:
            return "MacVector(0)"
        bits = [f"{c}*m{''.join(map(str, bp.vectors))}" for bp, c in self.items_sorted()]
        return "MacVector(" + " + ".join(bits) + ")"


class SBarVector:
    """An element of the balanced quotient ring on its canonical basis."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        clean = {}
        for lam, c in (coeffs or {}).items():
            c = Fraction(c)
            if c:
                clean[lam] = c
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SBarVector is immutable")

    @classmethod
    def basis(cls, lam, coeff=1):
        return cls({lam: Fraction(coeff)})

    @classmethod
    def one(cls):
        return cls.basis(Partition())

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return isinstance(other, SBarVector) and self.coeffs == other.coeffs

    def __add__(self, other):
        coeffs = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            coeffs[lam] = coeffs.get(lam, Fraction(0)) + c
        return SBarVector(coeffs)

    def __neg__(self):
        return SBarVector({k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return SBarVector({k: c * v for k, v in self.coeffs.items()})

    def degrees(self):
        """Degrees 2|lam| of the contributing basis elements."""
        return sorted({2 * lam.weight for lam in self.coeffs})

    def items_sorted(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self):
        if not self.coeffs:
            return "SBarVector(0)"
        bits = [f"{c}*b{lam.parts}" for lam, c in self.items_sorted()]
        return "SBarVector(" + " + ".join(bits) + ")"


def realize(bp, n):
    """The monomial symmetric function of bp in n variable pairs.

    Symmetrization of x_1^{a_1} y_1^{b_1} ... with coefficients 0 or 1;
    the zero polynomial when bp has more vectors than there are pairs.
    """
    ring = xy_ring(n)
    if bp.length > n:
        return ring.zero()
    distinct = bp.distinct_vectors()
    mults = [bp.multiplicity(v) for v in distinct]
    terms = {}

    def rec(idx, free_slots, expo):
        if idx == len(distinct):
            terms[tuple(expo)] = Fraction(1)
            return
        a, b = distinct[idx]
        c = mults[idx]
        for chosen in combinations(free_slots, c):
            expo2 = list(expo)
            for s in chosen:
                expo2[s] = a
                expo2[n + s] = b
            rest = [s for s in free_slots if s not in chosen]
            rec(idx + 1, rest, expo2)

    rec(0, list(range(n)), [0] * (2 * n))
    return Polynomial(ring, terms)


def _orbit_size(bp, n):
    size = factorial(n) // factorial(n - bp.length)
    for v in bp.distinct_vectors():
        size //= factorial(bp.multiplicity(v))
    return size


def _label_of_exponent(expo, n):
    vecs = []
    for i in range(n):
        a, b = expo[i], expo[n + i]
        if (a, b) != (0, 0):
            vecs.append((a, b))
    return BipartitePartition(vecs)


def express_in_monomials(p):
    """Expand a symmetric polynomial of xy_ring(n) as a MacVector.

    Inverse of realize on combinations whose labels have length <= n.
    Raises ValueError if the input is not symmetric under the diagonal
    action on variable pairs.
    """
    nvars = len(p.ring.variables)
    if nvars % 2:
        raise ValueError("expected a ring of variable pairs")
    n = nvars // 2
    if p.ring != xy_ring(n):
        raise ValueError("expected a polynomial of xy_ring(n)")
    groups = {}
    for expo, c in p.terms.items():
        entry = groups.setdefault(_label_of_exponent(expo, n), [0, set()])
        entry[0] += 1
        entry[1].add(c)
    coeffs = {}
    for label, (count, values) in groups.items():
        if len(values) != 1 or count != _orbit_size(label, n):
            raise ValueError("polynomial is not symmetric in the variable pairs")
        coeffs[label] = next(iter(values))
    return MacVector(coeffs)


def vector_multiply(ab, bp):
    """Product of a single-vector monomial function with m_bp, in S.

    Each term either adjoins (a, b) as a new vector or absorbs it into one
    of the distinct vectors present; the coefficient is the multiplicity of
    the touched vector in the resulting multiset.
    """
    a, b = ab
    if (a, b) == (0, 0):
        raise ValueError("(0, 0) is not a monomial generator")
    out = {}
    joined = bp.add_vector((a, b))
    out[joined] = Fraction(joined.multiplicity((a, b)))
    for (i, j) in bp.distinct_vectors():
        target = bp.remove_vector((i, j)).add_vector((a + i, b + j))
        coeff = Fraction(target.multiplicity((a + i, b + j)))
        out[target] = out.get(target, Fraction(0)) + coeff
    return MacVector(out)


def multiply(u, v):
    """General product in S via realization in finitely many variable pairs.

    The number of pairs is the largest length sum over term pairs, which is
    enough for the expansion to be faithful.
    """
    if u.is_zero() or v.is_zero():
        return MacVector()
    n = u.max_length() + v.max_length()
    n = max(n, 1)
    pu = _realize_vector(u, n)
    pv = _realize_vector(v, n)
    return express_in_monomials(pu * pv)


def _realize_vector(u, n):
    ring = xy_ring(n)
    total = ring.zero()
    for bp, c in u.coeffs.items():
        total = total + realize(bp, n).scalar_mul(c)
    return total


_project_memo = {}


def sbar_project(u):
    """Image of an element of S in the quotient, on the canonical basis."""
    if isinstance(u, MacVector):
        out = SBarVector()
        for bp, c in u.coeffs.items():
            out = out + _project_basis(bp).scale(c)
        return out
    return _project_basis(u)


def _project_basis(bp):
    if bp in _project_memo:
        return _project_memo[bp]

    a_sum, b_sum = bp.bidegree
    if a_sum != b_sum:
        # the quotient is graded by bidegree and has no unbalanced part
        result = SBarVector()
        _project_memo[bp] = result
        return result

    lam = canonical_form_partition(bp)
    if lam is not None:
        result = SBarVector.basis(lam)
        _project_memo[bp] = result
        return result

    # pick the largest vector with b > 0 other than (0, 1) as the pivot
    pivot = max(v for v in bp.vectors if v[1] > 0 and v != (0, 1))
    a, b = pivot
    rest = bp.remove_vector(pivot)           # Lambda = (a,b) rest
    phi = rest.add_vector((0, 1))            # multiply m_{(a,b-1)} into (0,1) rest

    expansion = vector_multiply((a, b - 1), phi)
    c1 = expansion.coeffs[bp]
    correction = MacVector({k: c for k, c in expansion.coeffs.items() if k != bp})

    if b - 1 == a:
        # the pivot generator is balanced: recurse on the shorter factor and
        # multiply by the degree-a generator via the closed product formula
        lhs = SBarVector()
        for mu, c in _project_basis(phi).coeffs.items():
            lhs = lhs + generator_times_basis(a, mu).scale(c)
    else:
        lhs = SBarVector()  # the pivot generator dies in the quotient

    result = (lhs - sbar_project(correction)).scale(Fraction(1, c1))
    _project_memo[bp] = result
    return result


def expand_kl(k, l, lam):
    """Canonical-basis expansion of the class of (k, l)(lam, 0)(0, 1)^{|lam|+k-l}.

    Valid for k >= 0, l > 0 and |lam| + k - l >= 0.  Uses the general
    alternating-sum formula; on k >= l the direct single-sum formula is also
    evaluated and the two must agree.
    """
    if l <= 0:
        raise ValueError("l must be positive")
    if lam.weight + k - l < 0:
        raise ValueError("|lam| + k - l must be nonnegative")
    if (k, l) == (0, 1):
        # degenerate input: the prepended vector is itself (0, 1) and merges
        # with the zeros block, so the class is already canonical; the
        # alternating formula assumes the vector is new and over-counts here
        return SBarVector.basis(lam)
    general = _expand_kl_general(k, l, lam)
    if k >= l:
        direct = _expand_kl_direct(k, l, lam)
        if direct != general:
            raise AssertionError(
                f"the two expansion formulas disagree at k={k}, l={l}, lam={lam.parts}"
            )
    return general


def _expand_kl_direct(k, l, lam):
    # single sum over mu below lam, coefficient
    # (-1)^l l! (beta_new + 1) / ((l - l(lam) + l(mu))! prod (alpha_i - beta_i)!)
    out = {}
    sign = Fraction(-1) ** l
    for mu in lam.sub_partitions():
        new_part = lam.weight - mu.weight + k
        coeff = sign * factorial(l) * (mu.multiplicity(new_part) + 1)
        coeff *= recip_factorial(l - lam.length + mu.length)
        for i in lam.part_sizes():
            coeff *= recip_factorial(lam.multiplicity(i) - mu.multiplicity(i))
        if coeff == 0:
            continue
        nu = mu.with_part(new_part)
        out[nu] = out.get(nu, Fraction(0)) + coeff
    return SBarVector(out)


def _expand_kl_general(k, l, lam):
    out = {}
    sign_base = (-1) ** (lam.length + l)
    cap = lam.weight + k - l
    for mu in lam.sub_partitions():
        new_part = lam.weight - mu.weight + k
        if new_part == 0:
            # only possible for mu = lam with k = 0, where the inner sum is
            # empty (it needs |nu| <= |lam| - l < |lam|)
            continue
        inner = Fraction(0)
        for nu in lam.sub_partitions():
            if nu.weight > cap or not mu.dominated_by(nu):
                continue
            term = Fraction(sign_base * (-1) ** nu.length)
            term *= f_coeff(mu, nu, k + lam.weight)
            term *= factorial(lam.length - nu.length + lam.weight - nu.weight + k - l)
            term *= recip_factorial(lam.weight - nu.weight + k - l)
            for i in lam.part_sizes():
                term *= recip_factorial(lam.multiplicity(i) - nu.multiplicity(i))
            inner += term
        coeff = inner * (mu.multiplicity(new_part) + 1)
        if coeff == 0:
            continue
        target = mu.with_part(new_part)
        out[target] = out.get(target, Fraction(0)) + coeff
    return SBarVector(out)


def generator_times_basis(k, lam):
    """Product of the degree-k balanced generator with a canonical basis
    element, expanded on the canonical basis.

    Coefficient of the mu-term:
    (-1)^k k! (k + |lam| - |mu| + 1)(beta_new + 1)
    / ((k - l(lam) + l(mu) + 1)! prod_i (alpha_i - beta_i)!).
    """
    if k < 1:
        raise ValueError("generator index k must be positive")
    out = {}
    sign = Fraction(-1) ** k
    for mu in lam.sub_partitions():
        new_part = lam.weight - mu.weight + k
        coeff = sign * factorial(k) * (k + lam.weight - mu.weight + 1)
        coeff *= mu.multiplicity(new_part) + 1
        coeff *= recip_factorial(k - lam.length + mu.length + 1)
        for i in lam.part_sizes():
            coeff *= recip_factorial(lam.multiplicity(i) - mu.multiplicity(i))
        if coeff == 0:
            continue
        nu = mu.with_part(new_part)
        out[nu] = out.get(nu, Fraction(0)) + coeff
    return SBarVector(out)


def generator_vector(k):
    """The balanced generator of degree 2k on the canonical basis:
    m_bar_{(k,k)} = (-1)^k b_{(k)}."""
    if k < 1:
        raise ValueError("generator index k must be positive")
    return SBarVector.basis(Partition.from_parts([k]), Fraction(-1) ** k)
