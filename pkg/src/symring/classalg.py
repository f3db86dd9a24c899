"""The center of the symmetric group algebra: class sums, convolution by
brute-force enumeration, the associated-graded cup product, and the closed
formula for cup products with hook classes.

Structure constants are computed once per (n, class, class) pair by fixing a
single representative of the larger class and enumerating the smaller class;
centrality makes the resulting counts class-independent.  Results are
memoized in memory and mirrored to a small versioned on-disk cache.
"""

import itertools
import json
import os
import tempfile
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Partition, class_degree, class_size, partitions_of

# Enumeration cap; S_8 has 40320 elements and the full structure-constant
# table is still a few seconds.  Raise explicitly via max_n to go beyond.
DEFAULT_MAX_N = 8

CACHE_ENV_VAR = "SYMRING_CACHE_DIR"
CACHE_FORMAT = "symring-structure-constants"
CACHE_VERSION = 1


def cycle_type(perm):
    """Cycle type of a permutation given as a tuple of images of 0..n-1."""
    n = len(perm)
    seen = [False] * n
    parts = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        parts.append(length)
    return Partition.from_parts(parts)


def compose(sigma, tau):
    """sigma after tau: (sigma tau)(i) = sigma(tau(i))."""
    return tuple(sigma[t] for t in tau)


def canonical_permutation(lam, n):
    """The permutation of S_n with cycles of the given type laid out on
    consecutive points, largest cycle first."""
    if lam.weight > n:
        raise ValueError("cycle type does not fit in S_n")
    images = list(range(n))
    start = 0
    for p in lam.parts:
        for off in range(p):
            images[start + off] = start + (off + 1) % p
        start += p
    return tuple(images)


@lru_cache(maxsize=None)
def _class_table(n):
    """All of S_n bucketed by cycle type."""
    table = {lam: [] for lam in partitions_of(n)}
    for perm in itertools.permutations(range(n)):
        table[cycle_type(perm)].append(perm)
    return table


def class_elements(n, lam):
    """The full conjugacy class of cycle type lam in S_n."""
    if lam.weight != n:
        raise ValueError("cycle type must be a partition of n")
    return _class_table(n)[lam]


class StructureConstantCache:
    """Two-level memo for class-sum structure constants.

    Disk layout: one JSON file per n with a versioned header and records
    keyed by the two cycle types, values listing (cycle type, coefficient)
    pairs.  Partitions are serialized as part lists, e.g. "[3,1]".
    """

    def __init__(self, directory=None):
        self._dir = directory
        self._mem = {}
        self._loaded = set()
        self._dirty = set()

    def directory(self):
        if self._dir is not None:
            return self._dir
        env = os.environ.get(CACHE_ENV_VAR)
        if env:
            return env
        return os.path.join(os.path.expanduser("~"), ".cache", "symring")

    def _path(self, n):
        return os.path.join(self.directory(), f"structure_constants_n{n}.json")

    @staticmethod
    def _key(lam, mu):
        a, b = sorted([lam, mu])
        return f"{list(a.parts)}|{list(b.parts)}"

    def _load(self, n):
        if n in self._loaded:
            return
        self._loaded.add(n)
        path = self._path(n)
        try:
            with open(path, "r", encoding="utf-8") as fh:
                data = json.load(fh)
        except (OSError, ValueError):
            return
        if data.get("format") != CACHE_FORMAT or data.get("version") != CACHE_VERSION:
            return
        for key, pairs in data.get("records", {}).items():
            self._mem[(n, key)] = {
                Partition.from_parts(json.loads(parts)): int(coeff)
                for parts, coeff in pairs
            }

    def _flush(self, n):
        directory = self.directory()
        try:
            os.makedirs(directory, exist_ok=True)
            records = {}
            for (m, key), coeffs in self._mem.items():
                if m != n:
                    continue
                records[key] = sorted(
                    (json.dumps(list(nu.parts), separators=(",", ":")), c)
                    for nu, c in coeffs.items()
                )
            payload = {
                "format": CACHE_FORMAT,
                "version": CACHE_VERSION,
                "n": n,
                "records": records,
            }
            fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                json.dump(payload, fh, sort_keys=True, separators=(",", ":"))
            os.replace(tmp, self._path(n))
        except OSError:
            pass  # cache is an optimization, never a failure

    def get(self, n, lam, mu):
        self._load(n)
        return self._mem.get((n, self._key(lam, mu)))

    def put(self, n, lam, mu, coeffs):
        self._mem[(n, self._key(lam, mu))] = coeffs
        self._flush(n)


_default_cache = StructureConstantCache()


def structure_constants(n, lam, mu, cache=None, max_n=DEFAULT_MAX_N):
    """Coefficients of the product of two class sums in the class basis.

    Returns a dict Partition -> int with
    chi_lam * chi_mu = sum_nu coeffs[nu] chi_nu.
    """
    if lam.weight != n or mu.weight != n:
        raise ValueError("both cycle types must be partitions of n")
    if n > max_n:
        raise ValueError(f"n={n} exceeds the enumeration cap {max_n}")
    cache = cache or _default_cache
    hit = cache.get(n, lam, mu)
    if hit is not None:
        return dict(hit)

    # fix a representative in the larger class, enumerate the smaller one
    big, small = (lam, mu) if class_size(lam) >= class_size(mu) else (mu, lam)
    rep = canonical_permutation(big, n)
    counts = {}
    for tau in class_elements(n, small):
        nu = cycle_type(compose(rep, tau))
        counts[nu] = counts.get(nu, 0) + 1
    big_size = class_size(big)
    coeffs = {}
    for nu, d in counts.items():
        total = big_size * d
        size_nu = class_size(nu)
        if total % size_nu:
            raise AssertionError("class count not divisible by class size")
        coeffs[nu] = total // size_nu
    cache.put(n, lam, mu, coeffs)
    return dict(coeffs)


class ClassVector:
    """An element of the center of C[S_n] in the class-sum basis."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n, coeffs=None):
        self.n = n
        clean = {}
        for lam, c in (coeffs or {}).items():
            if lam.weight != n:
                raise ValueError(f"{lam!r} is not a partition of {n}")
            c = Fraction(c)
            if c:
                clean[lam] = c
        self.coeffs = clean

    @classmethod
    def basis(cls, n, lam, coeff=1):
        return cls(n, {lam: Fraction(coeff)})

    @classmethod
    def identity(cls, n):
        return cls.basis(n, Partition.from_parts([1] * n))

    def is_zero(self):
        return not self.coeffs

    def __eq__(self, other):
        return (
            isinstance(other, ClassVector)
            and self.n == other.n
            and self.coeffs == other.coeffs
        )

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError("size mismatch")
        coeffs = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            coeffs[lam] = coeffs.get(lam, Fraction(0)) + c
        return ClassVector(self.n, coeffs)

    def __neg__(self):
        return ClassVector(self.n, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        return ClassVector(self.n, {k: c * v for k, v in self.coeffs.items()})

    def degrees(self):
        return sorted({class_degree(lam) for lam in self.coeffs})

    def homogeneous_degree(self):
        """The common degree of all terms, or None if mixed (zero -> 0)."""
        degs = self.degrees()
        if not degs:
            return 0
        if len(degs) > 1:
            return None
        return degs[0]

    def degree_part(self, d):
        return ClassVector(
            self.n, {k: c for k, c in self.coeffs.items() if class_degree(k) == d}
        )

    def items_sorted(self):
        return sorted(self.coeffs.items(), key=lambda kv: kv[0].sort_key())

    def __repr__(self):
        if not self.coeffs:
            return "ClassVector(0)"
        bits = [f"{c}*chi{lam.parts}" for lam, c in self.items_sorted()]
        return "ClassVector(" + " + ".join(bits) + ")"

    def to_json(self):
        return {
            json.dumps(list(lam.parts), separators=(",", ":")): str(c)
            for lam, c in self.items_sorted()
        }


def convolve(a, b, cache=None, max_n=DEFAULT_MAX_N):
    """Product in the center of C[S_n], by enumerated structure constants."""
    if a.n != b.n:
        raise ValueError("size mismatch")
    out = {}
    for lam, ca in a.coeffs.items():
        for mu, cb in b.coeffs.items():
            for nu, c in structure_constants(a.n, lam, mu, cache, max_n).items():
                out[nu] = out.get(nu, Fraction(0)) + ca * cb * c
    return ClassVector(a.n, out)


def cup(a, b, cache=None, max_n=DEFAULT_MAX_N):
    """Associated-graded product: convolve, keep the top filtration degree.

    Both inputs must be homogeneous; lower-degree convolution terms are
    discarded (terms above the degree sum would violate the filtration and
    raise).
    """
    da = a.homogeneous_degree()
    db = b.homogeneous_degree()
    if da is None or db is None:
        raise ValueError("cup requires homogeneous inputs")
    full = convolve(a, b, cache, max_n)
    if any(d > da + db for d in full.degrees()):
        raise AssertionError("convolution violated the filtration bound")
    return full.degree_part(da + db)


def hook_partition(k, n):
    """The hook (k+1, 1^(n-k-1)) as a Partition."""
    if not 1 <= k <= n - 1:
        raise ValueError("hook parameter k must satisfy 1 <= k <= n-1")
    return Partition.from_parts([k + 1] + [1] * (n - k - 1))


def hook_cup(k, lam_hat):
    """Closed formula for the cup product of the hook class sum with chi_lam.

    Sums over partitions nu of length k+1 componentwise below lam_hat; the
    term coefficient is k! |nu| (a_{|nu|} + 1) / prod_i g_i! where a, g are
    the multiplicities of lam_hat and nu, and the target class replaces the
    nu-cycles of lam_hat by a single |nu|-cycle.
    """
    n = lam_hat.weight
    if not 1 <= k <= n - 1:
        raise ValueError("hook parameter k out of range")
    out = {}
    for nu in _partitions_with_length_below(lam_hat, k + 1):
        w = nu.weight
        coeff = Fraction(factorial(k) * w * (lam_hat.multiplicity(w) + 1))
        for i in nu.part_sizes():
            coeff /= factorial(nu.multiplicity(i))
        target_mult = list(lam_hat.mult) + [0] * max(0, w - len(lam_hat.mult))
        for i in nu.part_sizes():
            target_mult[i - 1] -= nu.multiplicity(i)
        target_mult[w - 1] += 1
        target = Partition(target_mult)
        out[target] = out.get(target, Fraction(0)) + coeff
    return ClassVector(n, out)


def _partitions_with_length_below(lam_hat, length):
    """Partitions nu with l(nu) = length and componentwise nu <= lam_hat."""
    sizes = lam_hat.part_sizes()
    out = []

    def rec(idx, remaining, acc):
        if remaining == 0:
            out.append(Partition(acc))
            return
        if idx == len(sizes):
            return
        i = sizes[idx]
        cap = min(lam_hat.multiplicity(i), remaining)
        for c in range(cap, -1, -1):
            m = list(acc) + [0] * (i - len(acc))
            if c:
                m[i - 1] = c
            rec(idx + 1, remaining - c, m)

    rec(0, length, [])
    return out


def graded_dimensions(n):
    """Dimension of each graded piece of the center: degree 2k counts the
    partitions of n with length n - k."""
    dims = {}
    for lam in partitions_of(n):
        d = class_degree(lam)
        dims[d] = dims.get(d, 0) + 1
    return dims
