"""Closed-form sufficient conditions for ordering two order statistics.

Each nonparametric shape class (decreasing density, increasing hazard rate,
and so on) is generated by one reference distribution through a convex,
concave, or star-shaped transform.  When the parent distribution lies in
such a class, ordering X_{i:n} against X_{j:m} in the increasing concave
(icv) or increasing convex (icx) sense reduces to comparing two explicit
numbers: the means of the reference-transformed beta order statistics.

The checkers return Holds or Undetermined, never a refutation: these are
one-sided sufficient conditions.  Witness values (both sides of the
decisive inequality) ride along in the verdict for reporting.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .refdist import OrderStatSpec, ReferenceDistribution
from .specfun import digamma, harmonic_sum

__all__ = [
    "ShapeClass",
    "TransformKind",
    "VerdictStatus",
    "OrderVerdict",
    "UnsupportedClassError",
    "BoundaryCaseError",
    "check_icv",
    "check_icx",
    "check_mean_dominated_by_orderstat",
    "check_mean_dominates_orderstat",
]


class UnsupportedClassError(ValueError):
    """A checker was asked about a shape class outside its catalogue."""


class BoundaryCaseError(ValueError):
    """The closed-form condition is undefined at these ranks."""


class TransformKind(enum.Enum):
    CONVEX = "convex"
    CONCAVE = "concave"
    STAR_SHAPED = "star-shaped"


class ShapeClass(enum.Enum):
    """Nonparametric shape classes, each tied to (transform kind, reference G)."""

    DD = "DD"        # decreasing density
    ID = "ID"        # increasing density
    DDA = "DDA"      # decreasing density on average (F(x)/x decreasing)
    IHR = "IHR"      # increasing hazard rate
    DHR = "DHR"      # decreasing hazard rate
    DHRA = "DHRA"    # decreasing hazard rate on average
    DRHR = "DRHR"    # decreasing reversed hazard rate
    IOR = "IOR"      # increasing odds rate
    DOR = "DOR"      # decreasing odds rate
    ILOR = "ILOR"    # increasing log-odds rate
    DLOR = "DLOR"    # decreasing log-odds rate
    DROR = "DROR"    # decreasing reversed odds rate

    @property
    def transform(self) -> TransformKind:
        return _CATALOG[self][0]

    @property
    def reference(self) -> ReferenceDistribution:
        return _CATALOG[self][1]


_R = ReferenceDistribution
_CATALOG: dict[ShapeClass, tuple[TransformKind, ReferenceDistribution]] = {
    ShapeClass.DD: (TransformKind.CONVEX, _R.UNIFORM),
    ShapeClass.ID: (TransformKind.CONCAVE, _R.UNIFORM),
    ShapeClass.DDA: (TransformKind.STAR_SHAPED, _R.UNIFORM),
    ShapeClass.IHR: (TransformKind.CONCAVE, _R.EXPONENTIAL),
    ShapeClass.DHR: (TransformKind.CONVEX, _R.EXPONENTIAL),
    ShapeClass.DHRA: (TransformKind.STAR_SHAPED, _R.EXPONENTIAL),
    ShapeClass.DRHR: (TransformKind.CONVEX, _R.NEG_EXPONENTIAL),
    ShapeClass.IOR: (TransformKind.CONCAVE, _R.LOG_LOGISTIC_1),
    ShapeClass.DOR: (TransformKind.CONVEX, _R.LOG_LOGISTIC_1),
    ShapeClass.ILOR: (TransformKind.CONCAVE, _R.LOGISTIC),
    ShapeClass.DLOR: (TransformKind.CONVEX, _R.LOGISTIC),
    ShapeClass.DROR: (TransformKind.CONVEX, _R.NEG_LOG_LOGISTIC_1),
}

ICV_CLASSES = frozenset(c for c in ShapeClass if c.transform is TransformKind.CONCAVE)
ICX_CLASSES = frozenset(c for c in ShapeClass if c.transform is TransformKind.CONVEX)


class VerdictStatus(enum.Enum):
    HOLDS = "holds"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True, slots=True)
class OrderVerdict:
    order: str
    status: VerdictStatus
    lhs_witness: float
    rhs_witness: float
    condition_name: str

    @property
    def holds(self) -> bool:
        return self.status is VerdictStatus.HOLDS


def _condition_values(shape: ShapeClass, a: OrderStatSpec, b: OrderStatSpec) -> tuple[float, float, str, bool]:
    """Left value, right value, human-readable name, and whether the class
    condition asks lhs >= rhs (True) or lhs <= rhs (False)."""
    i, n, j, m = a.i, a.n, b.i, b.n
    if shape in (ShapeClass.ID, ShapeClass.DD):
        return i / (n + 1.0), j / (m + 1.0), "i/(n+1) vs j/(m+1)", True
    if shape in (ShapeClass.IHR, ShapeClass.DHR):
        return (
            harmonic_sum(n - i + 1, n),
            harmonic_sum(m - j + 1, m),
            "sum 1/k over n-i+1..n vs m-j+1..m",
            True,
        )
    if shape in (ShapeClass.IOR, ShapeClass.DOR):
        return i / n, j / m, "i/n vs j/m", True
    if shape in (ShapeClass.ILOR, ShapeClass.DLOR):
        return (
            digamma(float(i)) - digamma(float(n - i + 1)),
            digamma(float(j)) - digamma(float(m - j + 1)),
            "psi(i)-psi(n-i+1) vs psi(j)-psi(m-j+1)",
            True,
        )
    if shape is ShapeClass.DRHR:
        return harmonic_sum(i, n), harmonic_sum(j, m), "sum 1/k over i..n vs j..m", False
    if shape is ShapeClass.DROR:
        if i == 1 or j == 1:
            raise BoundaryCaseError(
                "DROR condition compares (n-i+1)/(i-1) against (m-j+1)/(j-1), "
                "which diverges at rank 1; use the quadrature probe instead"
            )
        return (
            (n - i + 1) / (i - 1.0),
            (m - j + 1) / (j - 1.0),
            "(n-i+1)/(i-1) vs (m-j+1)/(j-1)",
            False,
        )
    raise AssertionError(shape)


def check_icv(shape: ShapeClass, a: OrderStatSpec, b: OrderStatSpec) -> OrderVerdict:
    """Sufficient condition for X_{i:n} >=_icv X_{j:m} under a concave-class parent.

    Needs rank dominance i >= j plus the class inequality; either failing
    yields Undetermined (the condition is one-sided, not a disproof).
    """
    if shape not in ICV_CLASSES:
        raise UnsupportedClassError(
            f"{shape.value} is not an icv-side (concave-transform) class"
        )
    lhs, rhs, name, _ = _condition_values(shape, a, b)
    if a.i < b.i:
        return OrderVerdict("icv", VerdictStatus.UNDETERMINED, lhs, rhs, f"rank precondition i >= j failed; {name}")
    status = VerdictStatus.HOLDS if lhs >= rhs else VerdictStatus.UNDETERMINED
    return OrderVerdict("icv", status, lhs, rhs, f"{shape.value}: {name}")


def check_icx(shape: ShapeClass, a: OrderStatSpec, b: OrderStatSpec) -> OrderVerdict:
    """Sufficient condition for X_{i:n} >=_icx X_{j:m} under a convex-class parent.

    Needs i <= j plus the class inequality.  For DD/DHR/DOR/DLOR the
    inequality reads lhs >= rhs; for the negative-reference classes DRHR and
    DROR it flips to lhs <= rhs because the transformed means are negatives
    of the tabulated quantities.
    """
    if shape not in ICX_CLASSES:
        raise UnsupportedClassError(
            f"{shape.value} is not an icx-side (convex-transform) class"
        )
    lhs, rhs, name, geq = _condition_values(shape, a, b)
    if a.i > b.i:
        return OrderVerdict("icx", VerdictStatus.UNDETERMINED, lhs, rhs, f"rank precondition i <= j failed; {name}")
    ok = lhs >= rhs if geq else lhs <= rhs
    status = VerdictStatus.HOLDS if ok else VerdictStatus.UNDETERMINED
    return OrderVerdict("icx", status, lhs, rhs, f"{shape.value}: {name}")


_MEAN_GEQ_CLASSES = frozenset({ShapeClass.ID, ShapeClass.ILOR, ShapeClass.IHR})
_MEAN_LEQ_CLASSES = frozenset({ShapeClass.DD, ShapeClass.DLOR, ShapeClass.DHR, ShapeClass.DRHR})


def check_mean_dominated_by_orderstat(shape: ShapeClass, s: OrderStatSpec) -> OrderVerdict:
    """Sufficient condition for E X_{i:n} >= E X (the parent mean).

    Specialization of the icv comparison against the full-sample singleton
    (1, 1); only the concave-side classes where that specialization is
    informative are accepted (ID, ILOR, IHR).
    """
    if shape not in _MEAN_GEQ_CLASSES:
        raise UnsupportedClassError(
            f"mean-dominated check supports ID/ILOR/IHR, got {shape.value}"
        )
    return check_icv(shape, s, OrderStatSpec(1, 1))


def check_mean_dominates_orderstat(shape: ShapeClass, s: OrderStatSpec) -> OrderVerdict:
    """Sufficient condition for E X >= E X_{j:m}, via icx against (1, 1)."""
    if shape not in _MEAN_LEQ_CLASSES:
        raise UnsupportedClassError(
            f"mean-dominates check supports DD/DLOR/DHR/DRHR, got {shape.value}"
        )
    return check_icx(shape, OrderStatSpec(1, 1), s)
