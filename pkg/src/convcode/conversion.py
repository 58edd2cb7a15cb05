"""Code conversion in the merge regime.

A conversion takes one codeword from each of several initial codes and
produces a codeword of a final code whose dimension is the sum of the
initial dimensions.  Linear conversions are represented by a conversion
matrix Y: the block-diagonal stack of initial generators times Y must
generate the final code.  Columns of Y of weight 1 mark final symbols
inherited unchanged from an initial symbol; heavier columns mark new
symbols, and their support rows are the symbols that must be read.

Also provides the explicit Reed-Muller merge RM(r, m-1) x RM(r-1, m-1)
-> RM(r, m) and its recursive multi-code chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Sequence, Tuple

from .gf2 import (
    BitMatrix,
    BitVector,
    DimensionError,
    block_diag,
    inverse,
    mat_mul,
    rank,
    row_space_equal,
    vec_mat,
)
from .codes import (
    LinearCode,
    contains,
    decode_from_positions,
    first_information_set,
    systematic_generator,
)
from .reedmuller import (
    degree_block_a,
    low_weight_positions,
    rm_code,
    zero_columns,
)


class ConversionError(ValueError):
    """Invalid conversion instance, matrix, or input codewords."""


@dataclass(frozen=True)
class ConvertibleInstance:
    """Initial codes plus a final code with matching total dimension."""

    initial_codes: Tuple[LinearCode, ...]
    final_code: LinearCode

    @property
    def lam(self) -> int:
        return len(self.initial_codes)

    @property
    def n_initial(self) -> Tuple[int, ...]:
        return tuple(c.n for c in self.initial_codes)

    @property
    def k_initial(self) -> Tuple[int, ...]:
        return tuple(c.k for c in self.initial_codes)

    @property
    def n_final(self) -> int:
        return self.final_code.n

    @property
    def k_final(self) -> int:
        return self.final_code.k

    @property
    def total_initial_length(self) -> int:
        return sum(self.n_initial)

    def block_starts(self) -> Tuple[int, ...]:
        starts = [0]
        for n in self.n_initial[:-1]:
            starts.append(starts[-1] + n)
        return tuple(starts)

    def stacked_generator(self) -> BitMatrix:
        """Block-diagonal stack of the initial generators."""
        return block_diag([c.generator for c in self.initial_codes])

    def owner_of(self, row: int) -> Tuple[int, int]:
        """Map a stacked-coordinate row to (code index, local coordinate)."""
        for i, start in enumerate(self.block_starts()):
            if start <= row < start + self.n_initial[i]:
                return i, row - start
        raise IndexError(row)


@dataclass(frozen=True)
class ConversionMatrix:
    """Matrix Y of a linear conversion, with initial block sizes."""

    y: BitMatrix
    blocks: Tuple[int, ...]

    def __post_init__(self):
        if self.y.rows != sum(self.blocks):
            raise DimensionError("block sizes must sum to the row count")


@dataclass(frozen=True)
class CostReport:
    """Symbol classification and cost accounting of one conversion.

    unchanged_per_code[i] holds FINAL coordinates inherited from code i;
    read_per_code[i] holds LOCAL coordinates of code i that are read.
    """

    unchanged_per_code: Tuple[frozenset, ...]
    new_symbols: frozenset
    read_per_code: Tuple[frozenset, ...]

    @property
    def unchanged_counts(self) -> Tuple[int, ...]:
        return tuple(len(u) for u in self.unchanged_per_code)

    @property
    def unchanged_total(self) -> int:
        return sum(self.unchanged_counts)

    @property
    def write_cost(self) -> int:
        return len(self.new_symbols)

    @property
    def read_counts(self) -> Tuple[int, ...]:
        return tuple(len(r) for r in self.read_per_code)

    @property
    def read_cost(self) -> int:
        return sum(self.read_counts)

    @property
    def access_cost(self) -> int:
        return self.read_cost + self.write_cost

    def to_record(self) -> dict:
        return {
            "U": list(self.unchanged_counts),
            "W": self.write_cost,
            "R": list(self.read_counts),
            "access": self.access_cost,
        }


def make_instance(
    initial: Sequence[LinearCode], final: LinearCode
) -> ConvertibleInstance:
    initial = tuple(initial)
    if not initial:
        raise ConversionError("need at least one initial code")
    total_k = sum(c.k for c in initial)
    if total_k != final.k:
        raise ConversionError(
            f"merge regime requires sum(k_I) = k_F, got {total_k} != {final.k}"
        )
    for c in initial:
        if c.is_zero:
            raise ConversionError("initial codes must have dimension >= 1")
    return ConvertibleInstance(initial, final)


def verify_conversion(inst: ConvertibleInstance, y: ConversionMatrix) -> bool:
    """True iff G_I . Y has rank k_F and generates the final code.

    Row-space equality, not literal matrix equality: a valid conversion
    may land on any generator choice of the final code.
    """
    if y.blocks != inst.n_initial:
        raise DimensionError("conversion-matrix blocks do not match instance")
    if y.y.cols != inst.n_final:
        raise DimensionError("conversion-matrix width must be n_F")
    product = mat_mul(inst.stacked_generator(), y.y)
    if rank(product) != inst.k_final:
        return False
    return row_space_equal(product, inst.final_code.generator)


def classify_symbols(
    inst: ConvertibleInstance, y: ConversionMatrix
) -> CostReport:
    """Classify every final coordinate as unchanged or new and collect reads.

    A final coordinate is unchanged iff its Y column has weight 1; the
    single support row attributes it to an initial code.  Support rows of
    heavier columns become read symbols of their owning codes.
    """
    if not verify_conversion(inst, y):
        raise ConversionError("matrix is not a valid conversion for instance")
    lam = inst.lam
    unchanged: List[set] = [set() for _ in range(lam)]
    reads: List[set] = [set() for _ in range(lam)]
    new: set = set()
    for j in range(inst.n_final):
        col = y.y.column_mask(j)
        w = col.bit_count()
        if w == 1:
            i, local = inst.owner_of(col.bit_length() - 1)
            unchanged[i].add(j)
        else:
            new.add(j)
            t = col
            while t:
                row = (t & -t).bit_length() - 1
                i, local = inst.owner_of(row)
                reads[i].add(local)
                t &= t - 1
    return CostReport(
        tuple(frozenset(u) for u in unchanged),
        frozenset(new),
        tuple(frozenset(r) for r in reads),
    )


def default_conversion(inst: ConvertibleInstance) -> ConversionMatrix:
    """Decode-and-re-encode conversion: read an information set of each
    initial code, keep those k_F symbols in place on an information set
    of the final code, and write the remaining n_F - k_F symbols.
    """
    starts = inst.block_starts()
    kept_rows: List[int] = []  # stacked coordinates of the kept symbols
    for i, c in enumerate(inst.initial_codes):
        for j in first_information_set(c):
            kept_rows.append(starts[i] + j)
    s_final = first_information_set(inst.final_code)
    sys_gen = systematic_generator(inst.final_code, s_final)
    # Final coordinate q is a combination of the kept symbols with the
    # coefficients of sys_gen; Y row kept_rows[s] is row s of sys_gen.
    n_total = inst.total_initial_length
    words = [0] * n_total
    for s, row in enumerate(kept_rows):
        words[row] = sys_gen.row_words[s]
    y = BitMatrix(words, inst.n_final)
    return ConversionMatrix(y, inst.n_initial)


def apply_conversion(
    inst: ConvertibleInstance,
    y: ConversionMatrix,
    codewords: Sequence[BitVector],
) -> BitVector:
    """Run the conversion on one codeword per initial code."""
    if len(codewords) != inst.lam:
        raise ConversionError("need exactly one codeword per initial code")
    for c, x in zip(inst.initial_codes, codewords):
        if not contains(c, x):
            raise ConversionError("input is not a codeword of its code")
    mask = 0
    shift = 0
    for c, x in zip(inst.initial_codes, codewords):
        mask |= x.mask << shift
        shift += c.n
    stacked = BitVector(inst.total_initial_length, mask)
    return vec_mat(stacked, y.y)


def rm_merge_procedure(
    r: int, m: int
) -> Tuple[ConvertibleInstance, ConversionMatrix, CostReport]:
    """The explicit merge RM(r, m-1) x RM(r-1, m-1) -> RM(r, m).

    All first-code symbols stay unchanged in the left half; the
    second-code symbols at the zero columns of the degree-r block stay
    unchanged in the right half; each remaining right-half symbol is the
    matching degree-r combination of the first codeword plus the
    corresponding second-codeword symbol.
    """
    if not 1 <= r <= m - 1:
        raise ConversionError("need 1 <= r <= m - 1")
    c1 = rm_code(r, m - 1)
    c2 = rm_code(r - 1, m - 1)
    cf = rm_code(r, m)
    inst = make_instance([c1.code, c2.code], cf.code)

    half = 1 << (m - 1)
    a = degree_block_a(r, m)
    zeros = set(zero_columns(a))
    k1, k2 = c1.code.k, c2.code.k
    n_deg_r = a.rows  # number of degree-exactly-r monomials

    # Functionals extracting the degree-r message coefficients of the
    # first codeword from its weight-<=r information set.
    s1 = low_weight_positions(r, m - 1)
    inv1 = inverse(c1.code.generator.select_columns(s1))
    w_masks = []
    for t in range(n_deg_r):
        idx = k1 - n_deg_r + t  # degree-r coefficients are the last rows
        mask = 0
        for s, pos in enumerate(s1):
            mask |= inv1.get(s, idx) << pos
        w_masks.append(mask)

    direct_reads = (half - k2) <= k2
    if not direct_reads:
        # The zero columns are the weight-<=(r-1) points: an information
        # set of the second code, so its other symbols can be decoded.
        z_sorted = sorted(zeros)
        sys2 = systematic_generator(c2.code, z_sorted)

    col_masks: List[int] = []
    for j in range(half):
        col_masks.append(1 << j)
    for j in range(half):
        if j in zeros:
            col_masks.append(1 << (half + j))
            continue
        c1_part = 0
        for t in range(n_deg_r):
            if a.get(t, j):
                c1_part ^= w_masks[t]
        if direct_reads:
            c2_part = 1 << (half + j)
        else:
            c2_part = 0
            for s, pos in enumerate(z_sorted):
                c2_part |= sys2.get(s, j) << (half + pos)
        col_masks.append(c1_part | c2_part)

    y = ConversionMatrix(
        BitMatrix.from_columns(col_masks, 2 * half), inst.n_initial
    )
    report = classify_symbols(inst, y)
    return inst, y, report


def rm_merge_apply(
    r: int, m: int, c1_word: BitVector, c2_word: BitVector
) -> BitVector:
    """Symbol-level execution of the Reed-Muller merge.

    Touches only the declared read positions and equals apply_conversion
    with the matrix emitted by rm_merge_procedure.
    """
    if not 1 <= r <= m - 1:
        raise ConversionError("need 1 <= r <= m - 1")
    c1 = rm_code(r, m - 1)
    c2 = rm_code(r - 1, m - 1)
    if not contains(c1.code, c1_word):
        raise ConversionError("first input is not a codeword of RM(r, m-1)")
    if not contains(c2.code, c2_word):
        raise ConversionError("second input is not a codeword of RM(r-1, m-1)")

    half = 1 << (m - 1)
    a = degree_block_a(r, m)
    zeros = set(zero_columns(a))
    k1, k2 = c1.code.k, c2.code.k
    n_deg_r = a.rows

    s1 = low_weight_positions(r, m - 1)
    u = decode_from_positions(
        c1.code, s1, BitVector.from_bits([c1_word[p] for p in s1])
    )
    w = [(u.mask >> (k1 - n_deg_r + t)) & 1 for t in range(n_deg_r)]

    direct_reads = (half - k2) <= k2
    if direct_reads:
        def second_symbol(j: int) -> int:
            return c2_word[j]
    else:
        z_sorted = sorted(zeros)
        vals = BitVector.from_bits([c2_word[p] for p in z_sorted])
        re_encoded = vec_mat(vals, systematic_generator(c2.code, z_sorted))

        def second_symbol(j: int) -> int:
            return re_encoded[j]

    mask = c1_word.mask
    for j in range(half):
        if j in zeros:
            bit = c2_word[j]
        else:
            bit = sum(w[t] & a.get(t, j) for t in range(n_deg_r)) & 1
            bit ^= second_symbol(j)
        mask |= bit << (half + j)
    return BitVector(2 * half, mask)


def rm_merge_chain(
    r: int, m: int, depth: int
) -> Tuple[ConvertibleInstance, ConversionMatrix, CostReport]:
    """Recursive merge chain: re-split the first initial code depth times.

    Produces a lambda = depth + 1 instance with initial codes
    RM(r, m-depth), RM(r-1, m-depth), RM(r-1, m-depth+1), ...,
    RM(r-1, m-1) and final code RM(r, m); the composed conversion matrix
    is the product of the per-stage matrices lifted by identity blocks.
    """
    if depth < 1:
        raise ConversionError("depth must be >= 1")
    if r < depth or m - 1 < depth:
        raise ConversionError("need r >= depth and m - 1 >= depth")
    # Innermost stage merges two leaves into RM(r, m - depth + 1).
    _, y_stage, _ = rm_merge_procedure(r, m - depth + 1)
    composed = y_stage.y
    leaves = [rm_code(r, m - depth).code, rm_code(r - 1, m - depth).code]
    for s in range(depth - 1, 0, -1):
        out_m = m - s + 1
        _, y_stage, _ = rm_merge_procedure(r, out_m)
        lift = block_diag(
            [composed, BitMatrix.identity(1 << (out_m - 1))]
        )
        composed = mat_mul(lift, y_stage.y)
        leaves.append(rm_code(r - 1, out_m - 1).code)
    inst = make_instance(leaves, rm_code(r, m).code)
    y = ConversionMatrix(composed, inst.n_initial)
    report = classify_symbols(inst, y)
    return inst, y, report
