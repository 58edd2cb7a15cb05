"""Walk through one small merge conversion end to end.

Two [3,2] single-parity codes are merged into a [5,4] final code.  We
build a conversion matrix by hand, verify it, classify every final
symbol as unchanged or new, and compare the resulting access cost with
the generic fallback construction and with the exhaustive optimum.
"""

from convcode import (
    BitMatrix,
    BitVector,
    ConversionMatrix,
    apply_conversion,
    classify_symbols,
    default_conversion,
    dual_distance,
    encode,
    from_generator,
    make_instance,
    min_access_cost,
    min_distance,
    verify_conversion,
)

# Initial codes: both are [3,2] codes with a single parity symbol.
c1 = from_generator(BitMatrix.from_rows([[1, 0, 1], [0, 1, 1]]))
c2 = from_generator(BitMatrix.from_rows([[1, 1, 0], [0, 1, 1]]))

# Final code: [5,4], last coordinate is the parity of all four message bits.
cf = from_generator(BitMatrix.from_rows([
    [1, 0, 0, 0, 1],
    [0, 1, 0, 0, 1],
    [0, 0, 1, 0, 1],
    [0, 0, 0, 1, 1],
]))

inst = make_instance([c1, c2], cf)
print(f"merging {inst.lam} codes, n_I={inst.n_initial}, k_I={inst.k_initial}")
print(f"final code: n={cf.n} k={cf.k} d={min_distance(cf)} "
      f"d_dual={dual_distance(cf)}")

# A hand-built conversion matrix.  Rows are the six initial coordinates
# (three per code), columns the five final coordinates.  The first four
# columns each copy one initial symbol; the last column adds the two
# parity symbols together.
y = ConversionMatrix(
    BitMatrix.from_columns(
        [1 << 0, 1 << 1, 1 << 3, 1 << 4, (1 << 2) | (1 << 5)], 6
    ),
    inst.n_initial,
)
print("\nconversion matrix valid:", verify_conversion(inst, y))

report = classify_symbols(inst, y)
print("costs:", report.to_record())
for i, u in enumerate(report.unchanged_per_code):
    print(f"  code {i + 1}: unchanged final coords {sorted(u)}, "
          f"reads local coords {sorted(report.read_per_code[i])}")
print(f"  new symbols written: {sorted(report.new_symbols)}")

# Run the conversion on actual codewords.
x1 = encode(c1, BitVector.from_bits([1, 0]))
x2 = encode(c2, BitVector.from_bits([1, 1]))
out = apply_conversion(inst, y, [x1, x2])
print(f"\napply: {x1.to_bits()} + {x2.to_bits()} -> {out.to_bits()}")

# The generic fallback keeps one information set and rewrites the rest.
fallback = classify_symbols(inst, default_conversion(inst))
print("\nfallback construction costs:", fallback.to_record())

# Exhaustive search over every valid conversion matrix.
best_y, best = min_access_cost(inst)
print("exhaustive optimum costs: ", best.to_record())
print("hand-built matrix is optimal:", report.access_cost == best.access_cost)
