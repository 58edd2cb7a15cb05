"""Closed-form lower/upper bounds on merge-conversion costs.

All evaluators take a plain parameter set, so the caller may supply the
final distance and dual distance either from the exhaustive scan or
from a known formula.  Bounds that do not apply to the given parameters
are reported as inapplicable rather than omitted.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .conversion import CostReport


class BoundsError(ValueError):
    """Invalid parameter set or mismatched report."""


@dataclass(frozen=True)
class ParamSet:
    """Merge-instance parameters used by the bound formulas."""

    n_initial: Tuple[int, ...]
    k_initial: Tuple[int, ...]
    n_final: int
    k_final: int
    d_final: int
    d_final_dual: int

    def __post_init__(self):
        if len(self.n_initial) != len(self.k_initial) or not self.n_initial:
            raise BoundsError("n_I and k_I must be nonempty and equal length")
        if sum(self.k_initial) != self.k_final:
            raise BoundsError("sum(k_I) must equal k_F")
        for n, k in zip(self.n_initial, self.k_initial):
            if not 1 <= k <= n:
                raise BoundsError("need 1 <= k_I <= n_I")
        if not 1 <= self.k_final <= self.n_final:
            raise BoundsError("need 1 <= k_F <= n_F")
        if self.d_final > self.n_final - self.k_final + 1:
            raise BoundsError("d_F violates the Singleton bound")

    @property
    def lam(self) -> int:
        return len(self.n_initial)

    def _check_index(self, i: int) -> None:
        if not 0 <= i < self.lam:
            raise BoundsError(f"code index {i} out of range")


def unchanged_upper_singleton(p: ParamSet, i: int) -> int:
    """Singleton-type cap: |U_i| <= min{n_Ii, n_F - d_F - sum_{j!=i} k_Ij + 1}."""
    p._check_index(i)
    others = sum(k for j, k in enumerate(p.k_initial) if j != i)
    return min(p.n_initial[i], p.n_final - p.d_final - others + 1)


def unchanged_upper_dual(p: ParamSet, i: int) -> Optional[int]:
    """Dual-distance cap: |U_i| <= k_Ii, applicable when d_F_dual > k_Ii + 1."""
    p._check_index(i)
    if p.d_final_dual > p.k_initial[i] + 1:
        return p.k_initial[i]
    return None


def unchanged_lower_complement(p: ParamSet, i: int) -> Optional[int]:
    """Floor on the others: sum_{j!=i} |U_j| >= sum_{j!=i} k_Ij (lambda >= 2)."""
    p._check_index(i)
    if p.lam < 2:
        return None
    return sum(k for j, k in enumerate(p.k_initial) if j != i)


def unchanged_total_lower(p: ParamSet) -> Optional[int]:
    """Total floor: |U| >= k_F when lambda >= 2."""
    if p.lam < 2:
        return None
    return p.k_final


def read_lower_delta(p: ParamSet, i: int, u_i: int) -> int:
    """Read floor from delta_i = u_i - d_F + 1: k_Ii if delta <= 0, else
    k_Ii - delta_i (clamped at 0)."""
    p._check_index(i)
    if not 0 <= u_i <= p.n_initial[i]:
        raise BoundsError("u_i must be between 0 and n_Ii")
    delta = u_i - p.d_final + 1
    if delta <= 0:
        return p.k_initial[i]
    return max(p.k_initial[i] - delta, 0)


def read_lower_omega(p: ParamSet, i: int) -> int:
    """Report-free read floor from omega_i = n_F - 2 d_F - sum_{j!=i} k_Ij + 2."""
    p._check_index(i)
    others = sum(k for j, k in enumerate(p.k_initial) if j != i)
    omega = p.n_final - 2 * p.d_final - others + 2
    if omega <= 0:
        return p.k_initial[i]
    return max(p.k_initial[i] - omega, 0)


def delta_sign_check(p: ParamSet, i: int) -> bool:
    """True iff d_F > n_Ii - k_Ii + 1, which forces delta_i <= 0."""
    p._check_index(i)
    return p.d_final > p.n_initial[i] - p.k_initial[i] + 1


@dataclass(frozen=True)
class BoundRecord:
    """One evaluated bound: value, applicability, and (when audited
    against a cost report) satisfaction and slack."""

    name: str
    index: Optional[int]  # 0-based code index, None for global bounds
    value: Optional[int]
    applicable: bool
    satisfied: Optional[bool] = None
    slack: Optional[int] = None

    @property
    def tight(self) -> Optional[bool]:
        if self.satisfied is None:
            return None
        return self.satisfied and self.slack == 0

    def to_record(self) -> dict:
        return {
            "name": self.name,
            "i": None if self.index is None else self.index + 1,
            "value": self.value,
            "applicable": self.applicable,
            "satisfied": self.satisfied,
            "tight": self.tight,
        }


@dataclass(frozen=True)
class BoundReport:
    records: Tuple[BoundRecord, ...]

    @property
    def violations(self) -> Tuple[BoundRecord, ...]:
        return tuple(r for r in self.records if r.satisfied is False)

    def find(self, name: str, index: Optional[int] = None) -> BoundRecord:
        for r in self.records:
            if r.name == name and r.index == index:
                return r
        raise KeyError((name, index))

    def to_records(self) -> List[dict]:
        return [r.to_record() for r in self.records]


def evaluate_bounds(p: ParamSet) -> BoundReport:
    """All bound values for p, with no cost report to compare against."""
    return _build_report(p, report=None)


def audit(p: ParamSet, report: CostReport) -> BoundReport:
    """Evaluate every bound against a cost report.

    The upper bounds (singleton, dual) and the read floors (delta, omega)
    hold for every valid linear conversion, so a violation there is a
    bug.  The unchanged-symbol floors (complement, total, pinch) assume
    a conversion that keeps as many symbols unchanged as the parameters
    allow; the constructions in this package satisfy them, but a
    deliberately wasteful conversion matrix can report fewer unchanged
    symbols and show up as a violation.
    """
    if len(report.unchanged_per_code) != p.lam:
        raise BoundsError("report and parameter set disagree on lambda")
    if report.unchanged_total + report.write_cost != p.n_final:
        raise BoundsError("report does not cover n_F final coordinates")
    return _build_report(p, report=report)


def _rec(
    name: str,
    index: Optional[int],
    value: Optional[int],
    observed: Optional[int],
    direction: str,
) -> BoundRecord:
    applicable = value is not None
    if not applicable or observed is None:
        return BoundRecord(name, index, value, applicable)
    if direction == "upper":
        return BoundRecord(
            name, index, value, True, observed <= value, value - observed
        )
    if direction == "lower":
        return BoundRecord(
            name, index, value, True, observed >= value, observed - value
        )
    # equality
    return BoundRecord(
        name, index, value, True, observed == value, abs(observed - value)
    )


def _build_report(p: ParamSet, report: Optional[CostReport]) -> BoundReport:
    u = report.unchanged_counts if report else None
    r = report.read_counts if report else None
    records: List[BoundRecord] = []
    for i in range(p.lam):
        records.append(
            _rec(
                "unchanged_upper_singleton",
                i,
                unchanged_upper_singleton(p, i),
                None if u is None else u[i],
                "upper",
            )
        )
        records.append(
            _rec(
                "unchanged_upper_dual",
                i,
                unchanged_upper_dual(p, i),
                None if u is None else u[i],
                "upper",
            )
        )
        others_obs = None if u is None else sum(u) - u[i]
        records.append(
            _rec(
                "unchanged_lower_complement",
                i,
                unchanged_lower_complement(p, i),
                others_obs,
                "lower",
            )
        )
        delta_value = (
            None if u is None else read_lower_delta(p, i, u[i])
        )
        records.append(
            _rec(
                "read_lower_delta",
                i,
                delta_value,
                None if r is None else r[i],
                "lower",
            )
        )
        records.append(
            _rec(
                "read_lower_omega",
                i,
                read_lower_omega(p, i),
                None if r is None else r[i],
                "lower",
            )
        )
    records.append(
        _rec(
            "unchanged_total_lower",
            None,
            unchanged_total_lower(p),
            None if u is None else sum(u),
            "lower",
        )
    )
    # Pinch: when the dual cap applies to every code and lambda >= 2, the
    # upper and lower bounds force |U| = k_F exactly.
    pinch_applies = p.lam >= 2 and all(
        unchanged_upper_dual(p, i) is not None for i in range(p.lam)
    )
    records.append(
        _rec(
            "unchanged_total_pinch",
            None,
            p.k_final if pinch_applies else None,
            None if u is None else sum(u),
            "equal",
        )
    )
    return BoundReport(tuple(records))
