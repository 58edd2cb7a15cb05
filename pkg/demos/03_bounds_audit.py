"""Audit the Reed-Muller merge costs against the closed-form bounds.

For each merge RM(r, m-1) x RM(r-1, m-1) -> RM(r, m) we evaluate the
unchanged-symbol caps (Singleton-type and dual-distance), the read
floors (delta and omega forms), and the pinch identity, then compare
them with the costs the explicit construction actually achieves.
"""

from convcode import ParamSet, audit, rm_merge_procedure


def merge_params(r, m):
    inst, _, report = rm_merge_procedure(r, m)
    p = ParamSet(
        inst.n_initial, inst.k_initial, inst.n_final, inst.k_final,
        1 << (m - r),      # d of RM(r, m)
        1 << (r + 1),      # d of the dual RM(m-r-1, m)
    )
    return p, report


for m in range(3, 7):
    for r in range(1, m - 1):
        p, costs = merge_params(r, m)
        rep = audit(p, costs)
        tights = [b.name for b in rep.records if b.tight]
        status = "OK " if not rep.violations else "VIOLATED"
        print(f"r={r} m={m}: {status} costs={costs.to_record()}")
        if tights:
            print(f"         tight: {', '.join(sorted(set(tights)))}")

# One case in detail: r=2, m=4.
print("\ndetail for r=2, m=4:")
p, costs = merge_params(2, 4)
for b in audit(p, costs).records:
    where = "" if b.index is None else f"[i={b.index + 1}]"
    if not b.applicable:
        print(f"  {b.name}{where}: not applicable")
    else:
        print(f"  {b.name}{where}: value={b.value} "
              f"satisfied={b.satisfied} slack={b.slack}")
