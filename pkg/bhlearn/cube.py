# 2026 bhlearn developers

"""
Exact representation and Fourier-Walsh analysis of real functions on the hypercube
{-1,1}^n. Points and subsets are packed into integers: bit i of a point is set iff
its coordinate x_{i+1} is -1, and bit i of a subset is set iff i+1 belongs to it.
With this convention w_S(x) = (-1)^popcount(S & x) and the transform is a plain
unnormalized Hadamard butterfly over the table index.

Dense truth tables are limited to :code:`repo.settings.n_max` coordinates; sparse
expansions (:class:`coeff_map`) work for any dimension.
"""

import logging
import math

import numpy as np

from bhlearn import repo

LOG = logging.getLogger(__name__)


def _check_cap(n, cap=None):
    cap = repo.settings.n_max if cap is None else cap
    if n > cap:
        raise OverflowError('dimension %d exceeds the dense table cap %d' % (n, cap))


def _check_dimension(n):
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError('invalid dimension: %s' % n)


class _mask:
    """An n-bit packed word: shared base of :class:`point_mask` and :class:`subset_mask`"""
    __slots__ = ('n', 'bits')

    def __init__(self, n, bits=0):
        _check_dimension(n)
        bits = int(bits)
        if bits < 0 or bits >> n:
            raise ValueError('mask %s does not fit into %d bits' % (repo.tohex(abs(bits)), n))
        object.__setattr__(self, 'n', int(n))
        object.__setattr__(self, 'bits', bits)

    def __setattr__(self, key, value):
        raise AttributeError('masks are immutable')

    def __eq__(self, other):
        return type(self) is type(other) and self.n == other.n and self.bits == other.bits

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.bits))

    def __int__(self):
        return self.bits

    def __repr__(self):
        return '%s(n=%d, bits=0x%s)' % (type(self).__name__, self.n, repo.tohex(self.bits))

    def hex(self):
        return repo.tohex(self.bits)


class point_mask(_mask):
    """A point x of {-1,1}^n; bit i set iff x_{i+1} = -1"""
    __slots__ = ()

    @classmethod
    def from_signs(cls, signs):
        signs = list(signs)
        if any(s not in (-1, 1) for s in signs):
            raise ValueError('coordinates must be -1 or +1')
        return cls(len(signs), repo.tomask(i for i, s in enumerate(signs) if s == -1))

    def signs(self):
        return np.array([-1 if self.bits >> i & 1 else 1 for i in range(self.n)], dtype=float)


class subset_mask(_mask):
    """A subset S of {1..n}; bit i set iff i+1 is in S"""
    __slots__ = ()

    @classmethod
    def from_indices(cls, n, indices):
        """:param indices: 1-based coordinates, as subsets are written in the text"""
        indices = list(indices)
        if any(i < 1 or i > n for i in indices):
            raise ValueError('subset %s is not contained in {1..%d}' % (indices, n))
        return cls(n, repo.tomask(i - 1 for i in indices))

    def indices(self):
        """1-based members"""
        return [i + 1 for i in repo.toindices(self.bits)]

    def __len__(self):
        return repo.popcount(self.bits)


def _bits_of(mask, n):
    """Accepts masks or raw ints; checks the dimension of masks."""
    if isinstance(mask, _mask):
        if mask.n != n:
            raise ValueError('dimension mismatch: %d != %d' % (mask.n, n))
        return mask.bits
    bits = int(mask)
    if bits < 0 or bits >> n:
        raise ValueError('mask %s does not fit into %d bits' % (repo.tohex(abs(bits)), n))
    return bits


class truth_table:
    """
    The dense table of a function on {-1,1}^n. Index i holds f at the point whose
    packed bits are i. The values are a read-only float64 array.
    """

    def __init__(self, n, values):
        _check_dimension(n)
        _check_cap(n)
        values = np.array(values, dtype=np.float64)
        if values.shape != (1 << n,):
            raise ValueError('a table on %d coordinates needs %d values, got shape %s'
                             % (n, 1 << n, values.shape))
        if not np.all(np.isfinite(values)):
            raise ValueError('table values must be finite')
        values.flags.writeable = False
        self.n = int(n)
        self.values = values

    def __len__(self):
        return len(self.values)

    def __getitem__(self, point):
        return float(self.values[_bits_of(point, self.n)])

    def __eq__(self, other):
        return isinstance(other, truth_table) and self.n == other.n \
               and np.array_equal(self.values, other.values)

    def __repr__(self):
        return 'truth_table(n=%d)' % self.n

    def scaled(self, factor):
        return truth_table(self.n, self.values * factor)


class coeff_map:
    """
    A sparse Fourier-Walsh expansion: packed subset -> real coefficient. Exact zeros
    are dropped on construction. If :code:`max_degree` is declared, every key must
    have at most that many members.
    """

    def __init__(self, n, entries=None, max_degree=None):
        _check_dimension(n)
        self.n = int(n)
        self.max_degree = max_degree
        self._entries = dict()
        for key, value in (dict(entries) if entries is not None else dict()).items():
            bits = _bits_of(key, self.n)
            value = float(value)
            if not math.isfinite(value):
                raise ValueError('coefficient of %s is not finite' % repo.tohex(bits))
            if max_degree is not None and repo.popcount(bits) > max_degree:
                raise ValueError('subset %s exceeds declared degree %d' % (repo.tohex(bits), max_degree))
            if value != 0.0:
                self._entries[bits] = value

    def __len__(self):
        return len(self._entries)

    def __iter__(self):
        return iter(self._entries)

    def __contains__(self, key):
        return _bits_of(key, self.n) in self._entries

    def __getitem__(self, key):
        return self._entries.get(_bits_of(key, self.n), 0.0)

    def get(self, key, default=0.0):
        return self._entries.get(_bits_of(key, self.n), default)

    def items(self):
        return self._entries.items()

    def keys(self):
        return self._entries.keys()

    def values(self):
        return self._entries.values()

    def __eq__(self, other):
        return isinstance(other, coeff_map) and self.n == other.n and self._entries == other._entries

    def __repr__(self):
        return 'coeff_map(n=%d, %d terms)' % (self.n, len(self))

    def isclose(self, other, tol=None):
        """Coefficientwise comparison over the union of supports"""
        tol = repo.settings.tolerance if tol is None else tol
        if self.n != other.n:
            return False
        return all(abs(self[k] - other[k]) <= tol for k in set(self.keys()) | set(other.keys()))

    def scaled(self, factor):
        return coeff_map(self.n, {k: v * factor for k, v in self.items()})

    def __add__(self, other):
        if self.n != other.n:
            raise ValueError('dimension mismatch: %d != %d' % (self.n, other.n))
        total = dict(self.items())
        for key, value in other.items():
            total[key] = total.get(key, 0.0) + value
        return coeff_map(self.n, total)

    def dense(self):
        """The coefficients as a dense array indexed by subset bits."""
        _check_cap(self.n)
        dense = np.zeros(1 << self.n)
        for key, value in self.items():
            dense[key] = value
        return dense


def fwht(values):
    """
    Unnormalized Walsh-Hadamard butterfly over a length-2^n array:
    out[S] = sum_y values[y] * (-1)^popcount(S & y). Applying it twice multiplies
    by 2^n. Runs in O(n 2^n) with a fixed, deterministic summation order.
    """
    a = np.array(values, dtype=np.float64)
    size = len(a)
    if size == 0 or size & (size - 1):
        raise ValueError('length %d is not a power of two' % size)
    h = 1
    while h < size:
        a = a.reshape(-1, 2, h)
        lo, hi = a[:, 0, :], a[:, 1, :]
        a = np.stack((lo + hi, lo - hi), axis=1).reshape(-1)
        h *= 2
    return a


def ifwht(values):
    """Inverse of :func:`fwht`: the same butterfly divided by the length."""
    a = fwht(values)
    return a / float(len(a))


def levels(n):
    """Cardinality of every subset mask 0..2^n-1, as an integer array."""
    _check_cap(n)
    lv = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        lv[1 << i:2 << i] = lv[:1 << i] + 1
    return lv


def evaluate_character(S, x):
    """w_S(x) = prod_{i in S} x_i = (-1)^popcount(S & x)"""
    if not isinstance(S, subset_mask) or not isinstance(x, point_mask):
        raise ValueError('expected a subset_mask and a point_mask')
    if S.n != x.n:
        raise ValueError('dimension mismatch: %d != %d' % (S.n, x.n))
    return -1.0 if repo.parity(S.bits & x.bits) else 1.0


def walsh_transform(f):
    """All Fourier coefficients f^(S) = 2^-n sum_y f(y) w_S(y); exact zeros dropped."""
    _check_cap(f.n)
    dense = fwht(f.values) / float(1 << f.n)
    support = np.flatnonzero(dense)
    return coeff_map(f.n, zip(support.tolist(), dense[support].tolist()))


def to_truth_table(c):
    """Evaluates an expansion at all 2^n points through the inverse butterfly."""
    _check_cap(c.n)
    return truth_table(c.n, fwht(c.dense()))


def evaluate_expansion(c, x):
    """sum_S c(S) w_S(x)"""
    bits = _bits_of(x, c.n)
    return math.fsum(-v if repo.parity(k & bits) else v for k, v in c.items())


def unpack_points(bits_matrix):
    """(N, n) Boolean matrix -> packed integer points, for n within the dense cap."""
    bits_matrix = np.asarray(bits_matrix, dtype=bool)
    weights = np.left_shift(np.int64(1), np.arange(bits_matrix.shape[1], dtype=np.int64))
    return bits_matrix.astype(np.int64) @ weights


def character_matrix(bits_matrix, subsets):
    """
    The +-1 matrix W[j, s] = w_{S_s}(X_j) for a batch of points given as an (N, n)
    Boolean matrix and a list of subsets given as index tuples (0-based).
    """
    bits_matrix = np.asarray(bits_matrix, dtype=bool)
    W = np.ones((bits_matrix.shape[0], len(subsets)))
    by_size = dict()
    for s, idx in enumerate(subsets):
        by_size.setdefault(len(idx), list()).append(s)
    for k, cols in by_size.items():
        if k == 0:
            continue
        idx = np.array([subsets[s] for s in cols], dtype=np.intp)
        odd = np.bitwise_xor.reduce(bits_matrix[:, idx], axis=2)
        W[:, cols] = 1.0 - 2.0 * odd
    return W


def evaluate_batch(c, bits_matrix):
    """Evaluates a sparse expansion on an (N, n) Boolean point matrix, any n."""
    bits_matrix = np.asarray(bits_matrix, dtype=bool)
    if bits_matrix.ndim != 2 or bits_matrix.shape[1] != c.n:
        raise ValueError('points must form an (N, %d) matrix' % c.n)
    keys = list(c.keys())
    if not keys:
        return np.zeros(bits_matrix.shape[0])
    W = character_matrix(bits_matrix, [repo.toindices(k) for k in keys])
    return W @ np.array([c[k] for k in keys])


def l2_squared_distance(c1, c2):
    """||g1 - g2||^2_L2 by Parseval over the union of supports"""
    if c1.n != c2.n:
        raise ValueError('dimension mismatch: %d != %d' % (c1.n, c2.n))
    keys = set(c1.keys()) | set(c2.keys())
    return math.fsum((c1[k] - c2[k]) ** 2 for k in keys)


def linf_norm(f):
    _check_cap(f.n)
    return float(np.max(np.abs(f.values)))


def rademacher_projection(c, level):
    """The part of the expansion on sets of size exactly :code:`level`"""
    if not 1 <= level <= c.n:
        raise ValueError('level %s outside 1..%d' % (level, c.n))
    return coeff_map(c.n, {k: v for k, v in c.items() if repo.popcount(k) == level})


def lp_fourier_norm(c, p):
    """(sum_S |c(S)|^p)^(1/p), p >= 1"""
    if not p >= 1:
        raise ValueError('p must be at least 1, got %s' % p)
    if len(c) == 0:
        return 0.0
    a = np.abs(np.fromiter(c.values(), dtype=np.float64, count=len(c)))
    # scale by the largest entry against under/overflow
    top = a.max()
    return float(top * np.sum((a / top) ** p) ** (1.0 / p))


def degree(c):
    """Largest |S| with a nonzero coefficient, 0 for the empty map."""
    return max((repo.popcount(k) for k in c.keys()), default=0)


def harmonic_extension_eval(c, x):
    """The multilinear extension sum_S c(S) prod_{j in S} x_j on the cube [-1,1]^n"""
    x = np.asarray(x, dtype=np.float64)
    if x.shape != (c.n,):
        raise ValueError('expected %d coordinates, got shape %s' % (c.n, x.shape))
    if not np.all(np.abs(x) <= 1 + 1e-12):
        raise ValueError('point must lie in [-1,1]^%d, got %s' % (c.n, x))
    return math.fsum(v * float(np.prod(x[repo.toindices(k)])) for k, v in c.items())
