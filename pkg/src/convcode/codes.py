"""Linear block codes over GF(2) and the structural operations on them.

Covers duals, puncturing, shortening, exact minimum distance by
Gray-code enumeration, information sets, encoding, and decoding from a
coordinate subset.  Codes are immutable except for the distance caches,
which are filled idempotently.
"""

from __future__ import annotations

import random
from typing import Optional, Sequence, Tuple

from .gf2 import (
    BitMatrix,
    BitVector,
    DimensionError,
    SizeGuardError,
    inverse,
    mat_mul,
    rank,
    row_space_equal,
    rref,
    solve,
    right_kernel_basis,
    vec_mat,
)

DEFAULT_K_LIMIT = 24


class CodeError(ValueError):
    """Invalid code construction or operation argument."""


class LinearCode:
    """An [n, k] binary linear code given by a full-rank generator matrix.

    ``k == 0`` marks the zero code on n coordinates (its generator is
    None); it arises from shortening and is a legal value everywhere the
    structural operations need it.
    """

    __slots__ = ("n", "k", "generator", "_d", "_d_dual")

    def __init__(self, n: int, generator: Optional[BitMatrix]):
        if n < 1:
            raise CodeError("block length must be >= 1")
        if generator is None:
            self.n = n
            self.k = 0
            self.generator = None
        else:
            if generator.cols != n:
                raise CodeError("generator width must equal the block length")
            if rank(generator) != generator.rows:
                raise CodeError(
                    "dependent rows in generator; supply a full-rank matrix"
                )
            self.n = n
            self.k = generator.rows
            self.generator = generator
        self._d: Optional[int] = None
        self._d_dual: Optional[int] = None

    @property
    def is_zero(self) -> bool:
        return self.k == 0

    def __repr__(self) -> str:
        return f"LinearCode(n={self.n}, k={self.k})"


def from_generator(m: BitMatrix) -> LinearCode:
    """Code generated by the rows of m; rejects rank-deficient input."""
    return LinearCode(m.cols, m)


def zero_code(n: int) -> LinearCode:
    return LinearCode(n, None)


def same_code(a: LinearCode, b: LinearCode) -> bool:
    """Row-space equality (generator choice does not matter)."""
    if a.n != b.n:
        return False
    if a.is_zero or b.is_zero:
        return a.is_zero and b.is_zero
    return row_space_equal(a.generator, b.generator)


def min_distance(c: LinearCode, k_limit: int = DEFAULT_K_LIMIT) -> int:
    """Exact minimum Hamming weight over the nonzero codewords.

    Enumerates all 2^k messages in Gray-code order (one row XOR per
    step).  Guarded by k_limit; the result is cached on the code.
    """
    if c.is_zero:
        raise CodeError("the zero code has no nonzero codeword")
    if c._d is not None:
        return c._d
    if c.k > k_limit:
        raise SizeGuardError(
            f"minimum-distance scan of 2^{c.k} codewords exceeds the "
            f"limit k <= {k_limit}"
        )
    rows = c.generator.row_words
    best = c.n + 1
    cw = 0
    for i in range(1, 1 << c.k):
        cw ^= rows[(i & -i).bit_length() - 1]
        w = cw.bit_count()
        if w < best:
            best = w
            if best == 1:
                break
    c._d = best
    return best


def dual(c: LinearCode) -> LinearCode:
    """The [n, n-k] dual code {h : x . h = 0 for all x in c}.

    Total on the degenerate ends: dual of the zero code is the full
    space, dual of the full space is the zero code.
    """
    if c.is_zero:
        return from_generator(BitMatrix.identity(c.n))
    if c.k == c.n:
        return zero_code(c.n)
    basis = right_kernel_basis(c.generator)
    gen = BitMatrix([v.mask for v in basis], c.n)
    return from_generator(gen)


def dual_distance(c: LinearCode, k_limit: int = DEFAULT_K_LIMIT) -> int:
    """Minimum distance of the dual code; cached."""
    if c._d_dual is None:
        c._d_dual = min_distance(dual(c), k_limit=k_limit)
    return c._d_dual


def _check_coords(n: int, s: Sequence[int]) -> Tuple[int, ...]:
    s = tuple(s)
    if len(set(s)) != len(s):
        raise CodeError("repeated coordinates in index set")
    for j in s:
        if not 0 <= j < n:
            raise CodeError(f"coordinate {j} out of range for length {n}")
    return tuple(sorted(s))


def puncture(c: LinearCode, s: Sequence[int]) -> LinearCode:
    """Projection of the code onto the coordinates in s."""
    s = _check_coords(c.n, s)
    if not s:
        raise CodeError("puncturing set must be nonempty")
    if c.is_zero:
        return zero_code(len(s))
    restricted = c.generator.select_columns(s)
    reduced, pivots = rref(restricted)
    if not pivots:
        return zero_code(len(s))
    return from_generator(BitMatrix(reduced.row_words[: len(pivots)], len(s)))


def shorten(c: LinearCode, s: Sequence[int]) -> LinearCode:
    """Codewords supported inside s, projected onto s."""
    s = _check_coords(c.n, s)
    if not s:
        raise CodeError("shortening set must be nonempty")
    if c.is_zero:
        return zero_code(len(s))
    complement = [j for j in range(c.n) if j not in set(s)]
    if not complement:
        return c
    # Messages u with (u . G) vanishing outside s.
    outside = c.generator.select_columns(complement)
    kernel = right_kernel_basis(outside.transpose())
    if not kernel:
        return zero_code(len(s))
    words = []
    for u in kernel:
        cw = vec_mat(u, c.generator)
        words.append(cw.mask)
    gen = BitMatrix(words, c.n).select_columns(s)
    return from_generator(gen)


def is_information_set(c: LinearCode, s: Sequence[int]) -> bool:
    """True iff the generator columns indexed by s are invertible."""
    if c.is_zero:
        raise CodeError("the zero code has no information set")
    s = _check_coords(c.n, s)
    if len(s) != c.k:
        raise CodeError(f"information set must have size k = {c.k}")
    return rank(c.generator.select_columns(s)) == c.k


def first_information_set(c: LinearCode) -> Tuple[int, ...]:
    """Lexicographically first information set (greedy column scan)."""
    if c.is_zero:
        raise CodeError("the zero code has no information set")
    _, pivots = rref(c.generator)
    return pivots


def encode(c: LinearCode, u: BitVector) -> BitVector:
    if c.is_zero:
        raise CodeError("the zero code cannot encode messages")
    if u.n != c.k:
        raise DimensionError(f"message length must be k = {c.k}")
    return vec_mat(u, c.generator)


def decode_from_positions(
    c: LinearCode, s: Sequence[int], vals: BitVector
) -> BitVector:
    """The unique message whose codeword agrees with vals on s."""
    if c.is_zero:
        raise CodeError("the zero code cannot be decoded")
    s = _check_coords(c.n, s)
    if vals.n != len(s):
        raise DimensionError("values length must equal |S|")
    if len(s) != c.k or not is_information_set(c, s):
        raise CodeError("S is not an information set")
    sub = c.generator.select_columns(s)
    # u . sub = vals  <=>  sub^T . u = vals
    u = solve(sub.transpose(), vals)
    assert u is not None
    return u


def contains(c: LinearCode, x: BitVector) -> bool:
    """Membership of x in the code."""
    if x.n != c.n:
        raise DimensionError("vector length must equal the block length")
    if c.is_zero:
        return x.mask == 0
    if x.mask == 0:
        return True
    stacked = BitMatrix(list(c.generator.row_words) + [x.mask], c.n)
    return rank(stacked) == c.k


def systematic_generator(c: LinearCode, s: Sequence[int]) -> BitMatrix:
    """Generator whose restriction to the information set s is the identity.

    Row t corresponds to the t-th element of sorted(s).
    """
    s = _check_coords(c.n, s)
    if len(s) != c.k or not is_information_set(c, s):
        raise CodeError("S is not an information set")
    sub = c.generator.select_columns(s)
    return mat_mul(inverse(sub), c.generator)


def sampled_min_weight(
    c: LinearCode, trials: int = 100_000, seed: int = 0
) -> int:
    """Minimum weight over `trials` random nonzero codewords.

    A randomized floor check for codes too large for the exhaustive
    scan; the true distance is at most the returned value.
    """
    if c.is_zero:
        raise CodeError("the zero code has no nonzero codeword")
    rng = random.Random(seed)
    rows = c.generator.row_words
    k = c.k
    best = c.n + 1
    for _ in range(trials):
        u = rng.getrandbits(k)
        while u == 0:
            u = rng.getrandbits(k)
        cw = 0
        t = u
        while t:
            cw ^= rows[(t & -t).bit_length() - 1]
            t &= t - 1
        w = cw.bit_count()
        if w < best:
            best = w
    return best


def random_code(n: int, k: int, rng: random.Random) -> LinearCode:
    """Uniformly random full-rank generator -> an [n, k] code."""
    if not 1 <= k <= n:
        raise CodeError("need 1 <= k <= n")
    while True:
        words = [rng.getrandbits(n) for _ in range(k)]
        m = BitMatrix(words, n)
        if rank(m) == k:
            return from_generator(m)
