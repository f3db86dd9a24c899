"""Exact substrate: sparse multivariate polynomials over Fraction with an
assignable grading, symbolic minors, and degreewise echelon spans of graded
ideals.

No floating point anywhere.  Spans are kept in reduced row echelon form with
a fixed monomial order, so two spans are equal iff their stored rows are
bit-identical.
"""

from fractions import Fraction

# Largest ambient degree-piece dimension we are willing to eliminate over.
MAX_COMPONENT_DIM = 20000


class PolynomialRing:
    """A polynomial ring with named variables and positive integer degrees."""

    def __init__(self, variables, degrees=None):
        self.variables = tuple(variables)
        if len(set(self.variables)) != len(self.variables):
            raise ValueError("duplicate variable names")
        if degrees is None:
            degrees = (1,) * len(self.variables)
        self.degrees = tuple(degrees)
        if len(self.degrees) != len(self.variables):
            raise ValueError("one degree per variable required")
        if any(d <= 0 for d in self.degrees):
            raise ValueError("degrees must be positive")
        self._index = {v: i for i, v in enumerate(self.variables)}

    def __eq__(self, other):
        return (
            isinstance(other, PolynomialRing)
            and self.variables == other.variables
            and self.degrees == other.degrees
        )

    def __hash__(self):
        return hash((self.variables, self.degrees))

    def __repr__(self):
        return f"PolynomialRing({self.variables}, degrees={self.degrees})"

    def var_index(self, name):
        try:
            return self._index[name]
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return self.constant(1)

    def constant(self, c):
        c = Fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * len(self.variables): c})

    def var(self, name):
        expo = [0] * len(self.variables)
        expo[self.var_index(name)] = 1
        return Polynomial(self, {tuple(expo): Fraction(1)})

    def monomial(self, expo, coeff=1):
        coeff = Fraction(coeff)
        if coeff == 0:
            return self.zero()
        return Polynomial(self, {tuple(expo): coeff})

    def monomial_degree(self, expo):
        return sum(e * d for e, d in zip(expo, self.degrees))

    def monomials_of_degree(self, d):
        """All exponent tuples of weighted degree exactly d, deterministic order."""
        n = len(self.variables)
        out = []

        def rec(i, rem, acc):
            if i == n:
                if rem == 0:
                    out.append(tuple(acc))
                return
            w = self.degrees[i]
            for e in range(rem // w, -1, -1):
                rec(i + 1, rem - e * w, acc + [e])

        rec(0, d, [])
        out.sort(reverse=True)
        return out

    def component_dimension(self, d):
        return len(self.monomials_of_degree(d))


class Polynomial:
    """Sparse polynomial: a map from exponent tuples to nonzero Fractions."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = {e: c for e, c in terms.items() if c != 0}

    def _check_ring(self, other):
        if self.ring != other.ring:
            raise ValueError("variable-set mismatch between polynomial operands")

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == self.ring.constant(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        self._check_ring(other)
        terms = dict(self.terms)
        for e, c in other.terms.items():
            val = terms.get(e, Fraction(0)) + c
            if val:
                terms[e] = val
            else:
                terms.pop(e, None)
        return Polynomial(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scalar_mul(other)
        self._check_ring(other)
        terms = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                val = terms.get(e, Fraction(0)) + c1 * c2
                if val:
                    terms[e] = val
                else:
                    terms.pop(e, None)
        return Polynomial(self.ring, terms)

    __rmul__ = __mul__

    def scalar_mul(self, c):
        c = Fraction(c)
        return Polynomial(self.ring, {e: c * v for e, v in self.terms.items()})

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def coefficient_of(self, name, power):
        """Coefficient of name**power, as a polynomial with that variable removed
        from the exponent (set to zero)."""
        i = self.ring.var_index(name)
        terms = {}
        for e, c in self.terms.items():
            if e[i] == power:
                e2 = e[:i] + (0,) + e[i + 1:]
                terms[e2] = terms.get(e2, Fraction(0)) + c
        return Polynomial(self.ring, terms)

    def substitute(self, name, value):
        """Substitute a polynomial (same ring) or constant for a variable."""
        if isinstance(value, (int, Fraction)):
            value = self.ring.constant(value)
        self._check_ring(value)
        i = self.ring.var_index(name)
        out = self.ring.zero()
        powers = {0: self.ring.one()}

        def power_of(k):
            if k not in powers:
                powers[k] = power_of(k - 1) * value
            return powers[k]

        for e, c in self.terms.items():
            base = Polynomial(self.ring, {e[:i] + (0,) + e[i + 1:]: c})
            out = out + base * power_of(e[i])
        return out

    def degree(self):
        """Maximum weighted degree of the terms, or -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(self.ring.monomial_degree(e) for e in self.terms)

    def is_homogeneous(self):
        degs = {self.ring.monomial_degree(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self):
        comps = {}
        for e, c in self.terms.items():
            comps.setdefault(self.ring.monomial_degree(e), {})[e] = c
        return {d: Polynomial(self.ring, t) for d, t in sorted(comps.items())}

    def map_to(self, ring, var_map=None):
        """Reinterpret in another ring; variables map by name unless remapped.
        Only variables that actually occur need to exist in the target."""
        trans = {}
        terms = {}
        for e, c in self.terms.items():
            e2 = [0] * len(ring.variables)
            for idx, exp in enumerate(e):
                if exp:
                    if idx not in trans:
                        name = self.ring.variables[idx]
                        target = var_map.get(name, name) if var_map else name
                        trans[idx] = ring.var_index(target)
                    e2[trans[idx]] += exp
            key = tuple(e2)
            terms[key] = terms.get(key, Fraction(0)) + c
        return Polynomial(ring, terms)

    def __str__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda m: (self.ring.monomial_degree(m), m), reverse=True):
            c = self.terms[e]
            factors = []
            for name, exp in zip(self.ring.variables, e):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            mono = "*".join(factors)
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}*{mono}"
            sign = "-" if c < 0 else "+"
            bits.append((sign, body))
        head_sign, head = bits[0]
        text = ("-" if head_sign == "-" else "") + head
        for sign, body in bits[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"<{self}>"


def minor(matrix, rows, cols):
    """Exact symbolic determinant of the submatrix matrix[rows][cols].

    Cofactor expansion along the sparsest row; entries are Polynomials
    (or plain scalars mixed in), all over one ring.
    """
    rows = list(rows)
    cols = list(cols)
    if len(rows) != len(cols):
        raise ValueError("minor requires equally many rows and columns")
    if not rows:
        raise ValueError("empty minor is not defined here")
    ring = None
    for r in rows:
        for c in cols:
            if isinstance(matrix[r][c], Polynomial):
                ring = matrix[r][c].ring
                break
        if ring:
            break
    if ring is None:
        raise ValueError("matrix has no polynomial entries")

    def as_poly(entry):
        return entry if isinstance(entry, Polynomial) else ring.constant(entry)

    def det(rs, cs):
        if len(rs) == 1:
            return as_poly(matrix[rs[0]][cs[0]])
        # expand along the row with most zero entries
        best, best_count = 0, -1
        for i, r in enumerate(rs):
            zeros = sum(1 for c in cs if as_poly(matrix[r][c]).is_zero())
            if zeros > best_count:
                best, best_count = i, zeros
        r = rs[best]
        rest = rs[:best] + rs[best + 1:]
        total = ring.zero()
        for j, c in enumerate(cs):
            entry = as_poly(matrix[r][c])
            if entry.is_zero():
                continue
            sub = det(rest, cs[:j] + cs[j + 1:])
            term = entry * sub
            if (best + j) % 2:
                term = -term
            total = total + term
        return total

    return det(rows, cols)


class EchelonSpan:
    """A subspace of a based vector space, held in reduced row echelon form.

    Vectors are dicts key -> Fraction over sortable keys.  Pivot of a row is
    its largest key; rows are normalized to pivot coefficient 1 and fully
    back-reduced, so the stored representation is canonical for the span.
    """

    def __init__(self):
        self.rows = {}  # pivot key -> row dict

    @property
    def rank(self):
        return len(self.rows)

    def reduce(self, vec):
        """Canonical residue of vec modulo the span (does not modify self)."""
        v = {k: Fraction(c) for k, c in vec.items() if c != 0}
        while v:
            hit = None
            for k in v:
                if k in self.rows and (hit is None or k > hit):
                    hit = k
            if hit is None:
                break
            coeff = v[hit]
            for k, c in self.rows[hit].items():
                val = v.get(k, Fraction(0)) - coeff * c
                if val:
                    v[k] = val
                else:
                    v.pop(k, None)
        return v

    def insert(self, vec):
        """Add a vector to the span; returns True if the rank grew."""
        v = self.reduce(vec)
        if not v:
            return False
        pivot = max(v)
        inv = Fraction(1) / v[pivot]
        row = {k: c * inv for k, c in v.items()}
        for p, r in self.rows.items():
            if pivot in r:
                coeff = r[pivot]
                for k, c in row.items():
                    val = r.get(k, Fraction(0)) - coeff * c
                    if val:
                        r[k] = val
                    else:
                        r.pop(k, None)
        self.rows[pivot] = row
        return True

    def contains(self, vec):
        return not self.reduce(vec)

    def pivots(self):
        return sorted(self.rows)

    def canonical(self):
        """Hashable canonical form of the span."""
        return tuple(
            (p, tuple(sorted(self.rows[p].items())))
            for p in sorted(self.rows)
        )

    def __eq__(self, other):
        return isinstance(other, EchelonSpan) and self.canonical() == other.canonical()

    def __repr__(self):
        return f"EchelonSpan(rank={self.rank})"


def solve_linear(columns, target):
    """Solve sum_j x_j columns[j] = target exactly.

    columns: list of dicts key -> Fraction; target: same.  Returns a list of
    Fractions or None if inconsistent.
    """
    span = EchelonSpan()
    # coordinate keys (1, k) sort above tag keys (0, j), so pivots land on
    # genuine coordinates and the tags just record the combination used
    n = len(columns)
    for j, col in enumerate(columns):
        v = {(1, k): Fraction(c) for k, c in col.items()}
        v[(0, j)] = Fraction(1)
        span.insert(v)
    t = {(1, k): Fraction(c) for k, c in target.items()}
    res = span.reduce(t)
    if any(k[0] == 1 for k in res):
        return None
    sol = [Fraction(0)] * n
    for k, c in res.items():
        sol[k[1]] = -c
    return sol


class GradedIdeal:
    """A homogeneous ideal given by generators, with per-degree echelon spans."""

    def __init__(self, ring, generators):
        self.ring = ring
        gens = []
        for g in generators:
            if g.ring != ring:
                raise ValueError("generator from a different ring")
            if g.is_zero():
                continue
            if not g.is_homogeneous():
                raise ValueError(f"inhomogeneous generator: {g}")
            gens.append(g)
        self.generators = tuple(gens)
        self._components = {}

    def is_unit(self):
        return any(g.degree() == 0 for g in self.generators)

    def component(self, d):
        """Echelon span of the degree-d piece of the ideal."""
        if d in self._components:
            return self._components[d]
        dim = self.ring.component_dimension(d)
        if dim > MAX_COMPONENT_DIM:
            raise RuntimeError(
                f"ambient degree-{d} piece has dimension {dim} > {MAX_COMPONENT_DIM}"
            )
        span = EchelonSpan()
        for g in self.generators:
            gd = g.degree()
            if gd > d:
                continue
            for mono in self.ring.monomials_of_degree(d - gd):
                vec = {}
                for e, c in g.terms.items():
                    key = tuple(a + b for a, b in zip(e, mono))
                    vec[key] = vec.get(key, Fraction(0)) + c
                span.insert(vec)
        self._components[d] = span
        return span

    def quotient_dimension(self, d):
        return self.ring.component_dimension(d) - self.component(d).rank

    def reduce(self, poly):
        """Canonical normal form of a homogeneous polynomial modulo the ideal."""
        if poly.is_zero():
            return poly
        if not poly.is_homogeneous():
            raise ValueError("reduce expects a homogeneous polynomial")
        d = poly.degree()
        res = self.component(d).reduce(poly.terms)
        return Polynomial(self.ring, res)

    def contains(self, poly):
        if poly.is_zero():
            return True
        return all(
            self.component(d).contains(p.terms)
            for d, p in poly.homogeneous_components().items()
        )

    def standard_monomials(self, d):
        """Monomials of degree d not occurring as pivots, a basis of the quotient."""
        pivots = set(self.component(d).pivots())
        return [m for m in self.ring.monomials_of_degree(d) if m not in pivots]


def degree_component_span(ideal, d):
    """Echelon basis of the degree-d piece of a graded ideal: the span of
    monomial multiples of the generators landing in degree d."""
    return ideal.component(d)


def ideals_equal_up_to(I, J, dmax):
    """Compare degree components of two ideals for all d <= dmax.

    Returns (True, None) or (False, first differing degree).  Both ideals
    must share the ambient ring and grading.
    """
    if I.ring != J.ring:
        raise ValueError("ideals live in different ambient rings")
    for d in range(dmax + 1):
        if I.ring.component_dimension(d) == 0:
            continue
        if I.component(d) != J.component(d):
            return (False, d)
    return (True, None)
