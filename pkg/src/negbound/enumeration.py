"""Brute-force enumeration of negative curve classes on blow-ups of the
plane, and batch verification of the blow-up bounds against them.

Enumeration is restricted to blow-ups of the projective plane at n <= 8
points, where the general-position classification of negative curves is
classical and finite.  Hirzebruch and ruled blow-up models get spot-check
classes only (exceptional classes, fiber differences f - E_i, and the
negative section).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable, Iterator, Sequence

from .bounds import BoundReport, evaluate_curve
from .lattice import DivisorClass, LatticeError, SurfaceModel
from .riemann_roch import arithmetic_genus
from .zariski import CandidateCurveSet


@dataclass(frozen=True)
class CurveClassQuery:
    """Search targets: classes C with C^2 = self_int and K.C = canonical_degree,
    of degree at most max_degree against the pulled-back line."""

    surface: SurfaceModel
    self_int: int
    canonical_degree: int
    max_degree: int

    def __post_init__(self) -> None:
        if self.max_degree < 1:
            raise ValueError(f"max_degree must be >= 1, got {self.max_degree}")


@dataclass(frozen=True)
class VerificationRun:
    """Bound reports for a batch of curve classes; ``failures`` lists the
    indices whose witnessed C^2 fell below the computed bound."""

    surface: SurfaceModel
    curves: tuple[DivisorClass, ...]
    reports: tuple[BoundReport, ...]
    failures: tuple[int, ...]


def minus_one_degree_cutoff(n: int) -> int:
    """Largest degree d a class dH - sum(m_i E_i) with C^2 = K.C = -1 can
    have on a blow-up of the plane at n general points.

    Such a class has sum(m_i) = 3d - 1 and sum(m_i^2) = d^2 + 1, so
    Cauchy-Schwarz over the n multiplicities forces
    (3d - 1)^2 <= n*(d^2 + 1).  For n = 8 this gives d <= 7; smaller n
    give smaller cutoffs.
    """
    if not 1 <= n <= 8:
        raise ValueError(f"cutoff is only meaningful for 1 <= n <= 8, got {n}")
    best = 1
    for d in range(1, 101):
        if (3 * d - 1) ** 2 <= n * (d * d + 1):
            best = d
    return best


def _check_plane_blowup(surface: SurfaceModel) -> int:
    if surface.kind != "projective_plane":
        raise LatticeError(
            f"enumeration supports blow-ups of the plane only, got kind "
            f"{surface.kind!r}"
        )
    n = surface.n_blowups
    if n > 8:
        raise LatticeError(
            f"enumeration needs n <= 8 (finitely many negative classes), got n = {n}"
        )
    return n


def _multiplicity_vectors(slots: int, total: int, sq_total: int) -> Iterator[tuple[int, ...]]:
    """All tuples of `slots` non-negative integers with the given sum and sum
    of squares, in lexicographic order.  Prunes with sum^2 <= slots * sqsum
    (Cauchy-Schwarz) and sqsum <= sum^2 (non-negativity)."""
    if slots == 0:
        if total == 0 and sq_total == 0:
            yield ()
        return
    if total < 0 or sq_total < 0:
        return
    if total * total > slots * sq_total or sq_total > total * total:
        return
    hi = min(total, isqrt(sq_total))
    for v in range(0, hi + 1):
        for rest in _multiplicity_vectors(slots - 1, total - v, sq_total - v * v):
            yield (v,) + rest


def enumerate_classes(query: CurveClassQuery) -> tuple[DivisorClass, ...]:
    """All classes C = dH - sum(m_i E_i), 0 <= d <= max_degree, m_i >= 0,
    with C^2 = self_int and K.C = canonical_degree, plus the pure exceptional
    classes E_i when they match the targets.  Deterministic: sorted by
    coordinate vector, duplicate-free."""
    surface = query.surface
    n = _check_plane_blowup(surface)
    found: list[tuple[Fraction, ...]] = []

    if query.self_int == -1 and query.canonical_degree == -1:
        for e in surface.exceptional_classes():
            found.append(e.coords)

    for d in range(0, query.max_degree + 1):
        total = 3 * d + query.canonical_degree  # sum of multiplicities
        sq_total = d * d - query.self_int  # sum of squared multiplicities
        if total < 0 or sq_total < 0:
            continue
        for mults in _multiplicity_vectors(n, total, sq_total):
            if d == 0 and all(m == 0 for m in mults):
                continue  # the zero class is not a curve class
            coords = (Fraction(d),) + tuple(Fraction(-m) for m in mults)
            found.append(coords)

    found.sort()
    return tuple(DivisorClass(c) for c in found)


def minus_one_query(surface: SurfaceModel) -> CurveClassQuery:
    """The standard (-1)-class query with the Cauchy-Schwarz degree cutoff."""
    n = _check_plane_blowup(surface)
    cutoff = minus_one_degree_cutoff(n) if n >= 1 else 1
    return CurveClassQuery(
        surface=surface, self_int=-1, canonical_degree=-1, max_degree=cutoff
    )


def minus_one_classes(surface: SurfaceModel) -> tuple[DivisorClass, ...]:
    return enumerate_classes(minus_one_query(surface))


def minus_one_candidates(surface: SurfaceModel) -> CandidateCurveSet:
    """The enumerated (-1)-classes as a candidate set for Zariski
    decomposition.  On a general-position del Pezzo model (n <= 8) these are
    all the irreducible negative curves, so the set is complete."""
    return CandidateCurveSet(curves=minus_one_classes(surface), complete=True)


def spot_check_classes(surface: SurfaceModel) -> tuple[DivisorClass, ...]:
    """Negative classes worth checking on hirzebruch/ruled blow-up models:
    the exceptional classes, the fiber differences f - E_i, and the negative
    section C0 when C0^2 < 0."""
    if surface.kind not in ("hirzebruch", "ruled"):
        raise LatticeError(
            f"spot-check classes are defined for hirzebruch/ruled models, "
            f"got kind {surface.kind!r}"
        )
    classes: list[DivisorClass] = []
    section = surface.lattice.basis_class(0)
    if surface.dot(section, section) < 0:
        classes.append(section)
    fiber = surface.lattice.basis_class(1)
    for e in surface.exceptional_classes():
        classes.append(e)
        classes.append(fiber - e)
    return tuple(classes)


def verify_bounds(
    surface: SurfaceModel,
    curves: Sequence[DivisorClass],
    pg_map: Callable[[DivisorClass], int] | None = None,
) -> VerificationRun:
    """Evaluate the chi-appropriate blow-up bound on every class and record
    which classes (if any) fall below it.  Violations are data, not errors.

    Every class must have non-negative integer arithmetic genus; anything
    else is not a curve class and is rejected.  ``pg_map`` supplies geometric
    genera where a caller wants them recorded; it defaults to 0, the correct
    value for (-1)-classes.
    """
    curves = tuple(curves)
    for curve in curves:
        pa = arithmetic_genus(surface, curve)
        if pa.denominator != 1 or pa < 0:
            raise ValueError(
                f"class with coordinates {tuple(map(str, curve.coords))} has "
                f"arithmetic genus {pa}; not a curve class"
            )
    reports = tuple(
        evaluate_curve(surface, curve, pg=pg_map(curve) if pg_map else 0)
        for curve in curves
    )
    failures = tuple(i for i, report in enumerate(reports) if not report.satisfied)
    return VerificationRun(
        surface=surface, curves=curves, reports=reports, failures=failures
    )
