"""Integer partitions, bipartite partitions, and guarded factorial coefficients.

Partitions are stored by part multiplicities: ``mult[i]`` is the number of
parts equal to ``i + 1``, with trailing zeros trimmed.  Every coefficient
formula downstream is written in terms of multiplicities, so this encoding
gives O(1) access where it matters.
"""

from fractions import Fraction
from functools import lru_cache
from math import factorial


def recip_factorial(k):
    """1/k! as an exact Fraction, with the convention 1/k! = 0 for k < 0.

    Single shared helper so the guarded-factorial convention cannot drift
    between the various coefficient formulas.
    """
    if k < 0:
        return Fraction(0)
    return Fraction(1, factorial(k))


class Partition:
    """A partition of a nonnegative integer, encoded by multiplicities."""

    __slots__ = ("mult",)

    def __init__(self, mult=()):
        m = list(mult)
        while m and m[-1] == 0:
            m.pop()
        if any(c < 0 for c in m):
            raise ValueError("negative multiplicity")
        object.__setattr__(self, "mult", tuple(m))

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @classmethod
    def from_parts(cls, parts):
        parts = list(parts)
        if any(p < 0 for p in parts):
            raise ValueError("parts must be nonnegative")
        parts = [p for p in parts if p > 0]
        m = [0] * (max(parts) if parts else 0)
        for p in parts:
            m[p - 1] += 1
        return cls(m)

    @property
    def parts(self):
        out = []
        for i in range(len(self.mult), 0, -1):
            out.extend([i] * self.mult[i - 1])
        return tuple(out)

    @property
    def length(self):
        return sum(self.mult)

    @property
    def weight(self):
        return sum((i + 1) * c for i, c in enumerate(self.mult))

    def multiplicity(self, i):
        """Number of parts equal to i, for i >= 1."""
        if 1 <= i <= len(self.mult):
            return self.mult[i - 1]
        return 0

    def part_sizes(self):
        """Distinct part sizes present, ascending."""
        return tuple(i + 1 for i, c in enumerate(self.mult) if c > 0)

    def with_part(self, j):
        """The partition with one extra part of size j >= 1."""
        if j < 1:
            raise ValueError("part size must be positive")
        m = list(self.mult) + [0] * max(0, j - len(self.mult))
        m[j - 1] += 1
        return Partition(m)

    def without_part(self, j):
        """The partition with one part of size j removed."""
        if self.multiplicity(j) == 0:
            raise ValueError(f"no part of size {j} to remove")
        m = list(self.mult)
        m[j - 1] -= 1
        return Partition(m)

    def dominated_by(self, other):
        """Componentwise multiplicity comparison (not the usual dominance)."""
        return all(c <= other.multiplicity(i + 1) for i, c in enumerate(self.mult))

    def sub_partitions(self):
        """All partitions mu with mu componentwise below self, deterministic order."""
        ranges = [range(c + 1) for c in self.mult]
        out = []

        def rec(i, acc):
            if i == len(ranges):
                out.append(Partition(acc))
                return
            for c in ranges[i]:
                rec(i + 1, acc + [c])

        rec(0, [])
        return out

    def sort_key(self):
        return (self.weight, tuple(-p for p in self.parts))

    def __eq__(self, other):
        return isinstance(other, Partition) and self.mult == other.mult

    def __hash__(self):
        return hash(self.mult)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return f"Partition{self.parts}"

    def to_json(self):
        return list(self.parts)


EMPTY_PARTITION = Partition()


@lru_cache(maxsize=None)
def partitions_of(n):
    """All partitions of n, each once, in descending lexicographic part order.

    partitions_of(3) = [(3), (2,1), (1,1,1)].
    """
    if n < 0:
        raise ValueError("n must be nonnegative")

    out = []

    def rec(remaining, largest, acc):
        if remaining == 0:
            out.append(Partition.from_parts(acc))
            return
        for p in range(min(remaining, largest), 0, -1):
            rec(remaining - p, p, acc + [p])

    rec(n, n if n else 1, [])
    return tuple(out)


def dominates(mu, nu):
    """True iff mu has componentwise smaller multiplicities than nu."""
    return mu.dominated_by(nu)


def class_size(lam):
    """Size of the conjugacy class of cycle type lam in the symmetric group,
    n! / prod_i i^{a_i} a_i!."""
    n = lam.weight
    denom = 1
    for i, c in enumerate(lam.mult):
        denom *= (i + 1) ** c * factorial(c)
    return factorial(n) // denom


def class_degree(lam):
    """Filtration degree 2(n - length) of the class of cycle type lam."""
    return 2 * (lam.weight - lam.length)


def f_coeff(mu, nu, x):
    """The rational coefficient
    (x-|nu|)! (x-|mu|+1) / ((x-|nu|-l(nu)+l(mu)+1)! prod_i (c_i - b_i)!)
    with b, c the multiplicities of mu, nu and guarded factorials.

    Vanishes whenever mu is not componentwise below nu or a guarded
    factorial argument is negative.  Requires x >= |nu|.
    """
    if x < nu.weight:
        raise ValueError(f"x={x} must be at least |nu|={nu.weight}")
    val = Fraction(factorial(x - nu.weight)) * (x - mu.weight + 1)
    val *= recip_factorial(x - nu.weight - nu.length + mu.length + 1)
    top = max(len(mu.mult), len(nu.mult))
    for i in range(1, top + 1):
        val *= recip_factorial(nu.multiplicity(i) - mu.multiplicity(i))
    return val


class BipartitePartition:
    """A multiset of nonzero vectors (a, b) in N x N, stored sorted."""

    __slots__ = ("vectors",)

    def __init__(self, vectors=()):
        vecs = []
        for a, b in vectors:
            if a < 0 or b < 0:
                raise ValueError("vector components must be nonnegative")
            if (a, b) == (0, 0):
                raise ValueError("(0, 0) is not allowed in a bipartite partition")
            vecs.append((a, b))
        object.__setattr__(self, "vectors", tuple(sorted(vecs)))

    def __setattr__(self, name, value):
        raise AttributeError("BipartitePartition is immutable")

    @property
    def length(self):
        return len(self.vectors)

    @property
    def bidegree(self):
        """Componentwise sum (a, b) of the vectors."""
        return (sum(v[0] for v in self.vectors), sum(v[1] for v in self.vectors))

    @property
    def total_degree(self):
        a, b = self.bidegree
        return a + b

    @property
    def weight(self):
        """Torus weight a - b of the bidegree."""
        a, b = self.bidegree
        return a - b

    def half_degree(self):
        """d(Lambda) = (a + b)/2 when integral, else the exact Fraction."""
        t = self.total_degree
        return t // 2 if t % 2 == 0 else Fraction(t, 2)

    def multiplicity(self, vec):
        return self.vectors.count(tuple(vec))

    def distinct_vectors(self):
        return tuple(dict.fromkeys(self.vectors))

    def add_vector(self, vec):
        return BipartitePartition(self.vectors + (tuple(vec),))

    def remove_vector(self, vec):
        vec = tuple(vec)
        if vec not in self.vectors:
            raise ValueError(f"vector {vec} not present")
        idx = self.vectors.index(vec)
        return BipartitePartition(self.vectors[:idx] + self.vectors[idx + 1:])

    def count_01(self):
        """Number of (0, 1) entries, the e(Lambda) of the rewriting metric."""
        return self.vectors.count((0, 1))

    def sort_key(self):
        return (self.total_degree, self.length, self.vectors)

    def __eq__(self, other):
        return isinstance(other, BipartitePartition) and self.vectors == other.vectors

    def __hash__(self):
        return hash(self.vectors)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()

    def __repr__(self):
        return "BipartitePartition" + "".join(str(v) for v in self.vectors)

    def to_json(self):
        return [list(v) for v in self.vectors]


EMPTY_BIPARTITE = BipartitePartition()


def add_vector(bp, vec):
    return bp.add_vector(vec)


def remove_vector(bp, vec):
    return bp.remove_vector(vec)


def multiplicity(bp, vec):
    return bp.multiplicity(vec)


@lru_cache(maxsize=None)
def bipartite_partitions(a, b, max_length=None):
    """All bipartite partitions of bidegree (a, b), optionally length-capped.

    Vectors are chosen in decreasing order, so the enumeration is
    deterministic.
    """
    vecs = sorted(
        ((p, q) for p in range(a + 1) for q in range(b + 1) if (p, q) != (0, 0)),
        reverse=True,
    )
    out = []

    def rec(rem_a, rem_b, start, acc):
        if max_length is not None and len(acc) > max_length:
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
