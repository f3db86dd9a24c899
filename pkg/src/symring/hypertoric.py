"""Vector configurations, Gale duality, matroid circuits, and the two
presentations of the cohomology of a smooth hypertoric variety.

The Stanley-Reisner side quotients C[e_1..e_n] by the circuit monomials and
the linear forms carried by the configuration.  The dual side models the
torus-fixed functions on the dual hypertoric variety: a monomial in the
u-variables dies exactly when its support carries a linear dependence, and
the moment-map linear forms are imposed on top.  The dual side decides
vanishing by rank computations on supports, not via the circuit list, so
the two constructions stay independent down to the span level.
"""

import json
import random
from fractions import Fraction
from itertools import combinations

from .exact import EchelonSpan, PolynomialRing, GradedIdeal

SIMPLE_SEARCH_TRIES = 64


class VectorConfig:
    """Rows a_i spanning (for honest configs) the integer lattice Z^d."""

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        if rows:
            d = len(rows[0])
            if any(len(r) != d for r in rows):
                raise ValueError("rows must share one length")
        self.rows = rows

    @classmethod
    def from_json(cls, data):
        try:
            vectors = data["vectors"]
            return cls([list(v) for v in vectors])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed configuration: {exc}") from exc

    def to_json(self):
        return {"vectors": [list(r) for r in self.rows]}

    @property
    def n(self):
        return len(self.rows)

    @property
    def d(self):
        return len(self.rows[0]) if self.rows else 0

    def validate(self):
        """Nonzero rows, full rank, and lattice-spanning (all invariant
        factors 1)."""
        if self.n == 0:
            raise ValueError("empty configuration")
        if any(all(x == 0 for x in row) for row in self.rows):
            raise ValueError("zero row in configuration")
        if _rank([list(r) for r in self.rows]) != self.d:
            raise ValueError("rows do not span over the rationals")
        minors = _top_minors(self.rows, self.d)
        g = 0
        for m in minors:
            g = _gcd(g, abs(m))
            if g == 1:
                break
        if g != 1:
            raise ValueError("rows do not span the lattice over the integers")

    def __repr__(self):
        return f"VectorConfig({list(self.rows)})"


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return abs(a)


def _rank(rows):
    span = EchelonSpan()
    r = 0
    for row in rows:
        vec = {j: Fraction(x) for j, x in enumerate(row) if x}
        if span.insert(vec):
            r += 1
    return r


def _int_det(matrix):
    n = len(matrix)
    if n == 0:
        return 1
    if n == 1:
        return matrix[0][0]
    total = 0
    for j in range(n):
        if matrix[0][j] == 0:
            continue
        sub = [row[:j] + row[j + 1:] for row in matrix[1:]]
        term = matrix[0][j] * _int_det(sub)
        total += term if j % 2 == 0 else -term
    return total


def _top_minors(rows, d):
    out = []
    for subset in combinations(range(len(rows)), d):
        out.append(_int_det([list(rows[i]) for i in subset]))
    return out


def is_unimodular(cfg):
    """Every d x d minor is 0 or +-1."""
    return all(abs(m) <= 1 for m in _top_minors(cfg.rows, cfg.d))


def kernel_lattice_basis(rows):
    """Saturated integer basis of { v : sum_i v_i rows[i] = 0 }.

    Column reduction of the d x n matrix with the rows as columns, tracked
    by a unimodular matrix; the columns that end up zero give the basis.
    """
    n = len(rows)
    d = len(rows[0]) if rows else 0
    cols = [[rows[i][r] for r in range(d)] for i in range(n)]  # column i = a_i
    U = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # U[:, i]

    def col_op(j, k, q):
        # column_j -= q * column_k
        for r in range(d):
            cols[j][r] -= q * cols[k][r]
        for r in range(n):
            U[r][j] -= q * U[r][k]

    fixed = 0
    for row in range(d):
        while True:
            nonzero = [j for j in range(fixed, n) if cols[j][row] != 0]
            if len(nonzero) <= 1:
                break
            nonzero.sort(key=lambda j: abs(cols[j][row]))
            k, j = nonzero[0], nonzero[1]
            q = cols[j][row] // cols[k][row]
            col_op(j, k, q)
        nonzero = [j for j in range(fixed, n) if cols[j][row] != 0]
        if nonzero:
            j = nonzero[0]
            if j != fixed:
                cols[j], cols[fixed] = cols[fixed], cols[j]
                for r in range(n):
                    U[r][j], U[r][fixed] = U[r][fixed], U[r][j]
            fixed += 1
    basis = []
    for j in range(fixed, n):
        if any(cols[j][r] != 0 for r in range(d)):
            raise AssertionError("kernel column not annihilated")
        vec = [U[r][j] for r in range(n)]
        lead = next((x for x in vec if x), 0)
        if lead < 0:
            vec = [-x for x in vec]
        basis.append(tuple(vec))
    return basis


def gale_dual(cfg):
    """The dual configuration: row i is the i-th coordinate functional
    pushed to the relation lattice, i.e. the i-th row of a kernel basis
    matrix.  Not validated (duals of bases have zero rows)."""
    basis = kernel_lattice_basis([list(r) for r in cfg.rows])
    k = len(basis)
    rows = [[basis[j][i] for j in range(k)] for i in range(cfg.n)]
    return VectorConfig(rows)


def is_simple(cfg, r):
    """Simplicity of the shifted arrangement x . a_i + r_i = 0: every set of
    hyperplanes with a common point must have independent normals."""
    if len(r) != cfg.n:
        raise ValueError("shift vector must have one entry per row")
    for size in range(2, cfg.n + 1):
        for subset in combinations(range(cfg.n), size):
            coeff_rank = _rank([list(cfg.rows[i]) for i in subset])
            aug_rank = _rank([list(cfg.rows[i]) + [-r[i]] for i in subset])
            consistent = coeff_rank == aug_rank
            if consistent and coeff_rank < size:
                return False
    return True


def find_simple_shift(cfg, seed=0, tries=SIMPLE_SEARCH_TRIES):
    """Randomized search for a shift making the arrangement simple."""
    rng = random.Random(seed)
    for attempt in range(tries):
        box = 2 + attempt
        r = tuple(rng.randint(-box, box) for _ in range(cfg.n))
        if is_simple(cfg, r):
            return r
    return None


class MatroidComplex:
    """Circuit data of a configuration: minimal dependent subsets together
    with their (primitive, sign-normalized) relation vectors."""

    def __init__(self, ground_size, circuits):
        self.ground_size = ground_size
        self.circuits = tuple(circuits)  # (indices tuple, relation tuple)

    def circuit_sets(self):
        return [set(c[0]) for c in self.circuits]

    def all_pm_one(self):
        return all(
            all(abs(x) == 1 for x in rel if x != 0) for _, rel in self.circuits
        )

    def __eq__(self, other):
        return (
            isinstance(other, MatroidComplex)
            and self.ground_size == other.ground_size
            and sorted(c[0] for c in self.circuits)
            == sorted(c[0] for c in other.circuits)
        )

    def __repr__(self):
        return f"MatroidComplex({[c[0] for c in self.circuits]})"


def circuits(cfg):
    """All minimal dependent subsets with their relations."""
    found = []
    for size in range(1, cfg.n + 1):
        for subset in combinations(range(cfg.n), size):
            if any(set(c[0]).issubset(subset) for c in found):
                continue
            sub_rows = [list(cfg.rows[i]) for i in subset]
            if _rank(sub_rows) == len(subset):
                continue
            kernel = kernel_lattice_basis(sub_rows)
            if len(kernel) != 1:
                raise AssertionError("circuit kernel is not one-dimensional")
            rel = list(kernel[0])
            g = 0
            for x in rel:
                g = _gcd(g, x)
            rel = [x // g for x in rel]
            lead = next(x for x in rel if x)
            if lead < 0:
                rel = [-x for x in rel]
            full = [0] * cfg.n
            for pos, i in enumerate(subset):
                full[i] = rel[pos]
            found.append((tuple(subset), tuple(full)))
    return MatroidComplex(cfg.n, found)


class QuotientData:
    """Graded quotient of a polynomial ring in n degree-2 variables: per
    degree the ideal span, the standard monomial basis, and dimensions."""

    def __init__(self, n, component_fn, hard_cap):
        self.n = n
        self.ring = PolynomialRing([f"e{i}" for i in range(1, n + 1)], [2] * n)
        self._component_fn = component_fn
        self._spans = {}
        self.dims = []
        d = 0
        zeros = 0
        while True:
            q = self.quotient_dimension(d)
            self.dims.append(q)
            zeros = zeros + 1 if q == 0 else 0
            if zeros >= 2 and d >= 2:
                break
            d += 2
            if d > hard_cap:
                raise RuntimeError(
                    f"quotient not visibly finite below degree {hard_cap}; "
                    "all variables must be nilpotent in the verified cases"
                )
        self.top = 0
        for k, q in enumerate(self.dims):
            if q:
                self.top = 2 * k
        while self.dims and self.dims[-1] == 0:
            self.dims.pop()
        self.dims = tuple(self.dims)

    def span(self, d):
        if d not in self._spans:
            self._spans[d] = self._component_fn(self.ring, d)
        return self._spans[d]

    def quotient_dimension(self, d):
        return self.ring.component_dimension(d) - self.span(d).rank

    def basis(self, d):
        pivots = set(self.span(d).pivots())
        return [m for m in self.ring.monomials_of_degree(d) if m not in pivots]

    def reduce_monomial_product(self, m1, m2):
        prod = tuple(a + b for a, b in zip(m1, m2))
        d = self.ring.monomial_degree(prod)
        return tuple(sorted(self.span(d).reduce({prod: Fraction(1)}).items()))

    def multiplication_table(self):
        table = {}
        for d1 in range(0, self.top + 1, 2):
            for d2 in range(d1, self.top + 1 - d1, 2):
                for m1 in self.basis(d1):
                    for m2 in self.basis(d2):
                        table[(m1, m2)] = self.reduce_monomial_product(m1, m2)
        return table

    def nilpotence_exponents(self):
        """Smallest m with e_i^m in the ideal, per variable; the quotient is
        visibly finite so these exist below top/2 + 1."""
        out = []
        for i in range(self.n):
            m = 1
            while True:
                expo = tuple(m if j == i else 0 for j in range(self.n))
                d = 2 * m
                if self.span(d).contains({expo: Fraction(1)}):
                    out.append(m)
                    break
                m += 1
                if 2 * m > self.top + 2:
                    raise RuntimeError(f"variable {i + 1} is not nilpotent")
        return out


def _check_smooth(cfg, seed):
    """The smoothness hypothesis behind both presentations: a lattice-spanning
    unimodular configuration admitting a simple shift."""
    cfg.validate()
    if not is_unimodular(cfg):
        raise ValueError("configuration is not unimodular")
    if find_simple_shift(cfg, seed=seed) is None:
        raise ValueError("no simple shift found; arrangement may be degenerate")


def sr_quotient(cfg, matroid=None, check_smooth=True, seed=0):
    """The circuit-monomial presentation: Stanley-Reisner ideal of the
    independence complex plus the coefficient linear forms."""
    if check_smooth:
        _check_smooth(cfg, seed)
    matroid = matroid or circuits(cfg)
    if not matroid.all_pm_one():
        raise ValueError("a circuit relation is not plus-minus one")
    n, d = cfg.n, cfg.d
    ring = PolynomialRing([f"e{i}" for i in range(1, n + 1)], [2] * n)
    gens = []
    for subset, _rel in matroid.circuits:
        expo = tuple(1 if i in subset else 0 for i in range(n))
        gens.append(ring.monomial(expo))
    for j in range(d):
        form = ring.zero()
        for i in range(n):
            if cfg.rows[i][j]:
                form = form + ring.var(f"e{i + 1}").scalar_mul(cfg.rows[i][j])
        if not form.is_zero():
            gens.append(form)
    ideal = GradedIdeal(ring, gens)

    def component(qring, deg):
        return ideal.component(deg)

    return QuotientData(n, component, hard_cap=2 * (n + 2))


def dual_fixed_ring(cfg, check_smooth=True, seed=0):
    """The dual-side presentation, built from support ranks.

    Degree piece of the ideal: monomials whose support is linearly
    dependent, plus the moment-map linear forms times lower monomials.
    The circuit list is never consulted.
    """
    if check_smooth:
        _check_smooth(cfg, seed)
    n, d = cfg.n, cfg.d
    dependent = {}

    def support_dependent(expo):
        supp = frozenset(i for i, e in enumerate(expo) if e)
        if supp not in dependent:
            rows = [list(cfg.rows[i]) for i in sorted(supp)]
            dependent[supp] = _rank(rows) < len(supp)
        return dependent[supp]

    def component(ring, deg):
        span = EchelonSpan()
        for mono in ring.monomials_of_degree(deg):
            if support_dependent(mono):
                span.insert({mono: Fraction(1)})
        if deg >= 2:
            lower = ring.monomials_of_degree(deg - 2)
            for j in range(d):
                for mono in lower:
                    vec = {}
                    for i in range(n):
                        if cfg.rows[i][j]:
                            key = tuple(
                                e + 1 if t == i else e for t, e in enumerate(mono)
                            )
                            vec[key] = vec.get(key, Fraction(0)) + cfg.rows[i][j]
                    if vec:
                        span.insert(vec)
        return span

    return QuotientData(n, component, hard_cap=2 * (n + 2))


def verify_appendix_b(cfg, seed=0):
    """Smoothness gate, then the two quotient presentations compared in
    dimensions, degreewise spans, and structure constants."""
    cfg.validate()
    report = {"config": cfg.to_json(), "seed": seed}
    unimodular = is_unimodular(cfg)
    report["unimodular"] = unimodular
    matroid = circuits(cfg)
    report["circuits"] = [list(c[0]) for c in matroid.circuits]
    report["circuit_relations_pm_one"] = matroid.all_pm_one()
    shift = find_simple_shift(cfg, seed=seed)
    report["simple_shift"] = list(shift) if shift is not None else None
    if not unimodular or shift is None or not matroid.all_pm_one():
        report["pass"] = False
        report["reason"] = "smoothness hypothesis failed"
        return report

    sr = sr_quotient(cfg, matroid, check_smooth=False)
    dual = dual_fixed_ring(cfg, check_smooth=False)
    report["dims"] = list(sr.dims)
    report["dims_dual"] = list(dual.dims)
    dims_ok = sr.dims == dual.dims

    spans_ok = True
    first_diff = None
    top = max(sr.top, dual.top)
    for d in range(0, top + 2 + 1, 2):
        if sr.span(d).canonical() != dual.span(d).canonical():
            spans_ok = False
            first_diff = d
            break
    report["first_difference"] = first_diff

    table_ok = sr.multiplication_table() == dual.multiplication_table()
    report["structure_constants_match"] = table_ok
    report["nilpotence"] = sr.nilpotence_exponents()
    report["pass"] = bool(dims_ok and spans_ok and table_ok)
    return report


def load_config(path):
    with open(path, "r", encoding="utf-8") as fh:
        return VectorConfig.from_json(json.load(fh))
