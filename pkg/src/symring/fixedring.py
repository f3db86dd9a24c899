"""The torus-fixed-point ring of the n-th symmetric product of the plane.

Two fully independent computation paths live here.

Formula path: the ring is the truncation of the balanced MacMahon quotient
to basis elements with l(lam) + |lam| <= n; products route through the
closed generator-product expansion followed by truncation.

Oracle path (``WeightZeroOracle``): the ring is rebuilt from its definition.
Symmetric polynomials in exactly n variable pairs are represented on the
orbit-sum basis; the fixed-point ideal is generated by the unbalanced
orbit sums, its weight-zero graded pieces are computed by exact row
reduction, and products are honest polynomial multiplications reduced to
canonical normal form.  Nothing from the formula path is used: the oracle
has its own symmetrization and only shares the exact linear algebra
substrate.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from .exact import EchelonSpan, solve_linear
from .macmahon import (
    SBarVector,
    canonical_bipartite,
    generator_times_basis,
)
from .partitions import BipartitePartition, Partition, partitions_of

ORACLE_MAX_N = 5
ORACLE_MAX_DEGREE = 12


class GeneratorSolveError(RuntimeError):
    """The exact solve expressing a basis element in the ring generators
    failed; this would contradict the generation statement and is treated
    as a verification failure."""


def admissible_partitions(n, weight=None):
    """Partitions lam with l(lam) + |lam| <= n, optionally of fixed weight."""
    out = []
    weights = [weight] if weight is not None else range(n + 1)
    for k in weights:
        for lam in partitions_of(k):
            if lam.length + lam.weight <= n:
                out.append(lam)
    return out


class FixedRingVector:
    """Element of the fixed-point ring on the truncated canonical basis."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        clean = {}
        for lam, c in (coeffs or {}).items():
            if lam.length + lam.weight > n:
                raise ValueError(
                    f"{lam!r} violates the basis bound l+|.| <= {n}"
                )
            c = Fraction(c)
            if c:
                clean[lam] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("FixedRingVector is immutable")

    @classmethod
    def basis(cls, n, lam, coeff=1):
        return cls(n, {lam: Fraction(coeff)})

    @classmethod
    def one(cls, n):
        return cls.basis(n, Partition())

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, FixedRingVector)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("size mismatch")
        coeffs = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            coeffs[lam] = coeffs.get(lam, Fraction(0)) + c
        return FixedRingVector(self.n, coeffs)

    def __neg__(self):
        return FixedRingVector(self.n, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return FixedRingVector(self.n, {k: c * v for k, v in self.coeffs.items()})

    def degrees(self):
        return sorted({2 * lam.weight for lam in self.coeffs})

    def items_sorted(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self):
        if not self.coeffs:
            return f"FixedRingVector(n={self.n}, 0)"
        bits = [f"{c}*b{lam.parts}" for lam, c in self.items_sorted()]
        return f"FixedRingVector(n={self.n}, " + " + ".join(bits) + ")"


def truncate(u, n):
    """Project a canonical-basis quotient element to the fixed ring of size n,
    killing basis terms with l(lam) + |lam| > n."""
    if not isinstance(u, SBarVector):
        raise TypeError("truncate expects a canonical-basis SBarVector")
    kept = {
        lam: c for lam, c in u.coeffs.items() if lam.length + lam.weight <= n
    }
    return FixedRingVector(n, kept)


def generator_image(k, n):
    """Image of the balanced degree-k generator in the fixed ring."""
    if k < 1:
        raise ValueError("k must be positive")
    if k > n - 1:
        return FixedRingVector(n)
    return FixedRingVector.basis(n, Partition.from_parts([k]), Fraction(-1) ** k)


def generator_action(k, v):
    """Multiply by the balanced degree-k generator: closed product expansion
    on each basis term, then truncation."""
    out = FixedRingVector(v.n)
    for lam, c in v.coeffs.items():
        out = out + truncate(generator_times_basis(k, lam), v.n).scale(c)
    return out


_expr_memo = {}


def _monomial_action(kappa, n):
    """The product of generators g_k over the parts k of kappa, applied to 1."""
    key = (n, kappa)
    if key not in _expr_memo:
        v = FixedRingVector.one(n)
        for k in kappa.parts:
            v = generator_action(k, v)
        _expr_memo[key] = v
    return _expr_memo[key]


_gen_expr_memo = {}


def express_in_generators(lam, n):
    """Write the basis element of lam as a polynomial in the generators.

    Returns a dict kappa -> Fraction meaning sum_kappa c_kappa prod_{k in
    kappa} g_k, where g_k is the balanced degree-k generator.  Exists by the
    generation statement; a failed solve raises GeneratorSolveError.
    """
    if lam.length + lam.weight > n:
        raise ValueError("basis bound violated")
    key = (n, lam)
    if key in _gen_expr_memo:
        return _gen_expr_memo[key]
    if lam.weight == 0:
        result = {Partition(): Fraction(1)}
        _gen_expr_memo[key] = result
        return result
    monomials = [
        kappa for kappa in partitions_of(lam.weight) if len(kappa.mult) <= n - 1
    ]
    columns = [dict(_monomial_action(kappa, n).coeffs) for kappa in monomials]
    target = {lam: Fraction(1)}
    sol = solve_linear(columns, target)
    if sol is None:
        raise GeneratorSolveError(
            f"cannot express basis element {lam.parts} in generators at n={n}"
        )
    result = {kappa: c for kappa, c in zip(monomials, sol) if c}
    _gen_expr_memo[key] = result
    return result


def evaluate_generator_polynomial(expr, n):
    """Evaluate a dict kappa -> coeff of generator monomials in the ring."""
    out = FixedRingVector(n)
    for kappa, c in expr.items():
        out = out + _monomial_action(kappa, n).scale(c)
    return out


def fr_multiply(u, v):
    """Exact product in the fixed ring.

    One factor is rewritten as a polynomial in the balanced generators; each
    generator then acts through the closed product expansion with truncation
    after every step.
    """
    if u.n != v.n:
        raise ValueError("size mismatch")
    n = u.n
    # rewrite the factor with fewer terms
    if len(v.coeffs) < len(u.coeffs):
        u, v = v, u
    out = FixedRingVector(n)
    for lam, c in u.coeffs.items():
        expr = express_in_generators(lam, n)
        for kappa, d in expr.items():
            w = v
            for k in kappa.parts:
                w = generator_action(k, w)
            out = out + w.scale(c * d)
    return out


def hilbert_series(n):
    """Dimensions of the even graded pieces: the 2k-th entry counts
    partitions of k subject to the basis bound.  Sums to p(n)."""
    if n < 1:
        raise ValueError("n must be positive")
    dims = []
    for k in range(n):
        dims.append(len(admissible_partitions(n, weight=k)))
    while dims and dims[-1] == 0:
        dims.pop()
    return tuple(dims)


# ---------------------------------------------------------------------------
# weight-zero oracle
# ---------------------------------------------------------------------------


class WeightZeroOracle:
    """Independent model of the fixed ring by invariant-theory linear algebra.

    Works at exactly n variable pairs.  Invariants of each bidegree are
    spanned by orbit sums, labeled by the multiset of exponent vectors; the
    fixed-point ideal is generated by the unbalanced single-vector orbit
    sums, and its weight-zero degree-d piece is spanned by the products of a
    generator with every invariant orbit sum of the complementary weight.

    Why that span is the whole weight-zero piece: the scaling torus acts
    diagonally on the invariant ring, so every graded piece splits into
    weight spaces and every invariant f decomposes as a finite sum of pure
    weights.  A general ideal element is a sum of terms g * f with g one of
    the single-vector generators, of pure weight; its weight-zero component
    is the sum of g * (component of f with the opposite weight).  Hence
    products of each generator with the pure-weight orbit-sum basis already
    span, and no mixed-weight bookkeeping is needed.
    """

    def __init__(self, n, dmax, max_n=ORACLE_MAX_N, max_degree=ORACLE_MAX_DEGREE):
        if n < 1 or n > max_n:
            raise ValueError(f"oracle supports 1 <= n <= {max_n}")
        if dmax > max_degree:
            raise ValueError(f"oracle degree cap is {max_degree}")
        self.n = n
        self.dmax = dmax
        self._tables = {}

    # -- raw polynomial layer (exponent tuples of length 2n, integer coeffs)

    def _sym(self, vectors):
        """Orbit sum of the monomial with the given exponent vectors, as a
        dict exponent-tuple -> 1.  Deliberately rebuilt here (placements via
        permutations of the padded vector list) so the oracle shares no
        symmetrization code with the formula path."""
        n = self.n
        padded = tuple(vectors) + ((0, 0),) * (n - len(vectors))
        out = {}
        for placing in set(permutations(padded)):
            expo = [0] * (2 * n)
            for slot, (a, b) in enumerate(placing):
                expo[slot] = a
                expo[n + slot] = b
            out[tuple(expo)] = 1
        return out

    @staticmethod
    def _poly_mul(p, q):
        out = {}
        for e1, c1 in p.items():
            for e2, c2 in q.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return out

    def _labels(self, deg, weight):
        """Orbit labels of the given total degree and torus weight."""
        if (deg + weight) % 2 or (deg - weight) % 2:
            return ()
        a = (deg + weight) // 2
        b = (deg - weight) // 2
        if a < 0 or b < 0:
            return ()
        return _enumerate_orbit_labels(a, b, self.n)

    def _rep_exponent(self, label):
        n = self.n
        expo = [0] * (2 * n)
        for slot, (a, b) in enumerate(label.vectors):
            expo[slot] = a
            expo[n + slot] = b
        return tuple(expo)

    def _collect(self, poly, deg):
        """Express a symmetric polynomial on the weight-zero orbit labels of
        the given degree, by reading coefficients at representatives."""
        rep_index = {
            self._rep_exponent(label): label for label in self._labels(deg, 0)
        }
        out = {}
        for e, c in poly.items():
            label = rep_index.get(e)
            if label is not None and c:
                out[label] = Fraction(c)
        return out

    # -- per-degree ideal tables

    def table(self, d):
        """(labels, EchelonSpan of the ideal's weight-zero degree-d piece)."""
        if d in self._tables:
            return self._tables[d]
        if d > self.dmax:
            raise ValueError(f"degree {d} beyond oracle cap {self.dmax}")
        labels = self._labels(d, 0)
        span = EchelonSpan()
        for a in range(d + 1):
            for b in range(d + 1 - a):
                if a == b or (a, b) == (0, 0):
                    continue
                gen = self._sym(((a, b),))
                for h in self._labels(d - a - b, b - a):
                    prod = self._poly_mul(gen, self._sym(h.vectors))
                    row = self._collect(prod, d)
                    if row:
                        span.insert(row)
        self._tables[d] = (labels, span)
        return self._tables[d]

    def dimension(self, d):
        labels, span = self.table(d)
        return len(labels) - span.rank

    def dimensions(self):
        """Quotient dimensions for even degrees 0, 2, ..., dmax."""
        return tuple(self.dimension(d) for d in range(0, self.dmax + 1, 2))

    def basis_labels(self, d):
        labels, span = self.table(d)
        pivots = set(span.pivots())
        return tuple(label for label in labels if label not in pivots)

    # -- reductions

    def reduce_combination(self, coeffs, d):
        """Canonical residue of sum c_L m_L (given degree) in the quotient.

        Labels longer than n realize to zero and are dropped; remaining
        labels are unit vectors in the orbit basis.
        """
        vec = {}
        for label, c in coeffs.items():
            if label.length > self.n:
                continue
            if label.total_degree != d:
                raise ValueError("mixed degrees in reduce_combination")
            if label.weight != 0:
                raise ValueError("nonzero-weight label in weight-zero oracle")
            vec[label] = vec.get(label, Fraction(0)) + Fraction(c)
        _, span = self.table(d)
        return span.reduce(vec)

    def reduce_product(self, coeffs1, coeffs2):
        """Canonical residue of (sum c_L m_L)(sum c_M m_M), by honest
        polynomial multiplication followed by reduction."""
        d = None
        poly_total = {}
        for l1, c1 in coeffs1.items():
            if l1.length > self.n:
                continue
            p1 = self._sym(l1.vectors)
            for l2, c2 in coeffs2.items():
                if l2.length > self.n:
                    continue
                dd = l1.total_degree + l2.total_degree
                if d is None:
                    d = dd
                elif d != dd:
                    raise ValueError("mixed degrees in reduce_product")
                prod = self._poly_mul(p1, self._sym(l2.vectors))
                for e, c in prod.items():
                    poly_total[e] = poly_total.get(e, Fraction(0)) + c1 * c2 * c
        if d is None:
            return {}
        vec = self._collect(poly_total, d)
        _, span = self.table(d)
        return span.reduce(vec)

    def reduce_canonical(self, u):
        """Residues of a canonical-basis element, one per degree present."""
        by_degree = {}
        for lam, c in u.coeffs.items():
            by_degree.setdefault(2 * lam.weight, {})[canonical_bipartite(lam)] = c
        return {
            d: self.reduce_combination(coeffs, d)
            for d, coeffs in sorted(by_degree.items())
        }

    def multiplication_table(self):
        """Structure constants of products of quotient basis elements, for
        all degree pairs that stay under the cap."""
        table = {}
        for d1 in range(0, self.dmax + 1, 2):
            for d2 in range(d1, self.dmax + 1 - d1, 2):
                for l1 in self.basis_labels(d1):
                    for l2 in self.basis_labels(d2):
                        res = self.reduce_product({l1: 1}, {l2: 1})
                        table[(l1, l2)] = res
        return table

    def export_json(self):
        degrees = []
        for d in range(0, self.dmax + 1, 2):
            degrees.append(
                {
                    "degree": d,
                    "dimension": self.dimension(d),
                    "basis": [label.to_json() for label in self.basis_labels(d)],
                }
            )
        products = []
        for (l1, l2), res in sorted(
            self.multiplication_table().items(),
            key=lambda kv: (kv[0][0].sort_key(), kv[0][1].sort_key()),
        ):
            products.append(
                {
                    "left": l1.to_json(),
                    "right": l2.to_json(),
                    "value": [[label.to_json(), str(c)] for label, c in
                              sorted(res.items(), key=lambda kv: kv[0].sort_key())],
                }
            )
        return {
            "n": self.n,
            "dmax": self.dmax,
            "degrees": degrees,
            "products": products,
        }


@lru_cache(maxsize=None)
def _enumerate_orbit_labels(a, b, max_length):
    """Multisets of at most max_length nonzero vectors with componentwise
    sum (a, b); the oracle's own enumeration."""
    vecs = sorted(
        ((p, q) for p in range(a + 1) for q in range(b + 1) if (p, q) != (0, 0)),
        reverse=True,
    )
    out = []

    def rec(rem_a, rem_b, start, acc):
        if len(acc) > max_length:
            return
        if (rem_a, rem_b) == (0, 0):
            out.append(BipartitePartition(acc))
            return
        for idx in range(start, len(vecs)):
            p, q = vecs[idx]
            if p <= rem_a and q <= rem_b:
                rec(rem_a - p, rem_b - q, idx, acc + [(p, q)])

    rec(a, b, 0, [])
    return tuple(out)


def weight_zero_oracle(n, dmax, **caps):
    """Construct the independent multiplication-table oracle."""
    return WeightZeroOracle(n, dmax, **caps)
