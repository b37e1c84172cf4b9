"""Exact evaluation of the counting inequalities.

Everything here is integer or ``Fraction`` arithmetic; no floats.  The
parameter ``m`` is the minimum length of a non-triangular face.  From
``f <= f3 + (2e - 3 f3)/m`` and ``3 f3 < 2 f`` one gets ``f < 6e/(m+6)``;
substituting into ``e = n + f - 2`` gives ``e < (m+6)(n-2)/m``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .plane import GraphCounts, PlaneGraph, counts
from .structure import adjacent_triangles_exist

Rational = Fraction

MIN_M = 7


class InvalidM(ValueError):
    pass


class InvalidN(ValueError):
    pass


def _check_m(m: int) -> None:
    if m < MIN_M:
        raise InvalidM(f"m must be >= {MIN_M}, got {m}")


def format_rational(q: Fraction | int) -> str:
    """Lossless ``"p/q"`` text form (denominator always written)."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Theorem4Verdict:
    hypotheses_hold: bool
    counts: GraphCounts
    conclusion_holds: bool
    slack: Fraction
    failed_hypotheses: tuple[str, ...] = ()


def theorem4_verdict(pg: PlaneGraph) -> Theorem4Verdict:
    """Check whether triangular faces are fewer than two thirds of all faces.

    Hypotheses: connected (guaranteed by ``PlaneGraph``), minimum degree at
    least 3, and no edge lying in two 3-cycles.
    """
    c = counts(pg)
    failed = []
    if not pg.graph.is_connected():
        failed.append("connected")
    if min(pg.graph.degrees(), default=0) < 3:
        failed.append("min_degree>=3")
    if adjacent_triangles_exist(pg.graph):
        failed.append("no_shared_triangle_edge")
    return Theorem4Verdict(
        hypotheses_hold=not failed,
        counts=c,
        conclusion_holds=3 * c.f3 < 2 * c.f,
        slack=Fraction(2 * c.f, 3) - c.f3,
        failed_hypotheses=tuple(failed),
    )


@dataclass(frozen=True)
class BoundChain:
    m: int
    face_coefficient: Fraction
    edge_slope: Fraction
    edge_offset: Fraction

    def edge_bound(self, n: int) -> Fraction:
        return self.edge_slope * n - self.edge_offset


def bound_chain(m: int) -> BoundChain:
    _check_m(m)
    return BoundChain(
        m=m,
        face_coefficient=Fraction(6, m + 6),
        edge_slope=Fraction(m + 6, m),
        edge_offset=Fraction(2 * (m + 6), m),
    )


def raw_face_bound(m: int, e: int, f3: int) -> Fraction:
    """``f3 + (2e - 3 f3)/m``; valid for any ``m >= 3`` by summing face lengths."""
    return f3 + Fraction(2 * e - 3 * f3, m)


def face_count_bound(m: int, e: int, f3: int) -> tuple[Fraction, Fraction]:
    """Return ``(raw upper bound on f, strict closed-form bound 6e/(m+6))``."""
    _check_m(m)
    if e < 0 or f3 < 0:
        raise ValueError("e and f3 must be non-negative")
    return raw_face_bound(m, e, f3), Fraction(6 * e, m + 6)


def edge_upper_bound(m: int, n: int) -> Fraction:
    _check_m(m)
    if n < 1:
        raise InvalidN(f"n must be >= 1, got {n}")
    return Fraction((m + 6) * (n - 2), m)


def ky_lower_bound(n: int) -> Fraction:
    """Minimum edge count ``(5n - 2)/3`` of a 4-critical graph on ``n`` vertices."""
    if n < 4:
        raise InvalidN(f"4-critical graphs have n >= 4, got {n}")
    return Fraction(5 * n - 2, 3)


@dataclass(frozen=True)
class ContradictionReport:
    """Where the edge lower bound for 4-critical graphs meets the counting upper bound.

    A contradiction at ``n`` means ``ky_lower_bound(n) >= edge_upper_bound(m, n)``,
    so no counterexample on ``n`` vertices can exist.

    ``threshold_n`` is the least ``N >= 4`` such that every ``n >= N``
    contradicts, or ``None`` when arbitrarily large ``n`` escape.
    ``contradicts_up_to`` is the largest contradicting ``n`` when the
    contradiction only covers a finite range (``None`` otherwise).
    """

    m: int
    always_contradicts: bool
    threshold_n: int | None
    contradicts_up_to: int | None
    gap_slope: Fraction
    gap_offset: Fraction


def contradiction_report(m: int) -> ContradictionReport:
    _check_m(m)
    chain = bound_chain(m)
    # gap(n) = lower(n) - upper(n) = slope * n + offset
    slope = Fraction(5, 3) - chain.edge_slope
    offset = Fraction(-2, 3) + chain.edge_offset

    def gap(n: int) -> Fraction:
        return ky_lower_bound(n) - edge_upper_bound(m, n)

    assert gap(4) == 4 * slope + offset
    if slope >= 0:
        if gap(4) >= 0:
            return ContradictionReport(m, True, 4, None, slope, offset)
        if slope == 0:
            return ContradictionReport(m, False, None, None, slope, offset)
        n0 = max(4, -(-(-offset) // slope))  # ceil(-offset / slope)
        while gap(n0) < 0:
            n0 += 1
        while n0 > 4 and gap(n0 - 1) >= 0:
            n0 -= 1
        return ContradictionReport(m, False, n0, None, slope, offset)
    # slope < 0: contradiction only for n <= offset / (-slope)
    last = offset // (-slope)
    while gap(last + 1) >= 0:
        last += 1
    while last >= 4 and gap(last) < 0:
        last -= 1
    return ContradictionReport(m, False, None, int(last) if last >= 4 else None, slope, offset)
