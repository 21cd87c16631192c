"""Zariski decomposition D = P + N relative to a finite candidate set of
irreducible negative curves.

The decomposition produced here is correct relative to the supplied
candidate set: P is only guaranteed non-negative against the listed
curves.  When the set is complete (it contains every irreducible curve of
negative self-intersection on the surface, e.g. the enumerated (-1)-classes
on a general-position del Pezzo model), the output is the true Zariski
decomposition.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .lattice import DivisorClass, LatticeError, SurfaceModel, format_class
from .riemann_roch import arithmetic_genus


class DecompositionError(ValueError):
    """The divisor is not decomposable relative to the candidate model."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; indicates a bug, not bad input."""


@dataclass(frozen=True)
class CandidateCurveSet:
    """A finite set of irreducible-curve classes, possibly of negative square.

    ``complete`` asserts (it cannot be checked here) that the set contains
    every irreducible curve of negative self-intersection on the surface.
    """

    curves: tuple[DivisorClass, ...]
    complete: bool = False

    def __post_init__(self) -> None:
        curves = tuple(self.curves)
        object.__setattr__(self, "curves", curves)
        seen = set()
        for c in curves:
            if c.coords in seen:
                raise LatticeError(f"duplicate candidate class {c.coords}")
            seen.add(c.coords)

    def __len__(self) -> int:
        return len(self.curves)


@dataclass(frozen=True)
class ZariskiDecomposition:
    """The pair (P, N): nef part P, negative part N = sum a_i E_i with all
    a_i > 0 and negative-definite support Gram matrix, P orthogonal to the
    support."""

    nef_part: DivisorClass
    support: tuple[DivisorClass, ...]
    coefficients: tuple[Fraction, ...]

    def negative_part(self) -> DivisorClass:
        total = DivisorClass((Fraction(0),) * self.nef_part.rank)
        for a, e in zip(self.coefficients, self.support):
            total = total + a * e
        return total


def _det(matrix: Sequence[Sequence[Fraction]]) -> Fraction:
    """Exact determinant by Gaussian elimination with row swaps."""
    n = len(matrix)
    a = [list(row) for row in matrix]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] / a[col][col]
                for c in range(col, n):
                    a[r][c] -= f * a[col][c]
    return det


def _solve(matrix: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction]:
    """Solve M x = rhs exactly; M must be nonsingular."""
    n = len(matrix)
    a = [list(matrix[i]) + [rhs[i]] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise DecompositionError("singular orthogonality system")
        a[col], a[pivot] = a[pivot], a[col]
        d = a[col][col]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col] / d
                for c in range(col, n + 1):
                    a[r][c] -= f * a[col][c]
    return [a[i][n] / a[i][i] for i in range(n)]


def is_negative_definite(gram: Sequence[Sequence[int | Fraction]]) -> bool:
    """Sylvester criterion in exact arithmetic: the k-th leading principal
    minor must have sign (-1)^k for every k.  The empty matrix counts as
    negative definite."""
    n = len(gram)
    rows = [[Fraction(x) for x in row] for row in gram]
    if any(len(row) != n for row in rows):
        raise LatticeError("negative-definiteness needs a square matrix")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise LatticeError(
                    f"negative-definiteness needs a symmetric matrix; "
                    f"entry ({i},{j}) = {rows[i][j]} but ({j},{i}) = {rows[j][i]}"
                )
    for k in range(1, n + 1):
        minor = _det([row[:k] for row in rows[:k]])
        if (minor > 0) != (k % 2 == 0) or minor == 0:
            return False
    return True


def _gram(surface: SurfaceModel, curves: Sequence[DivisorClass]) -> list[list[Fraction]]:
    return [[surface.dot(a, b) for b in curves] for a in curves]


def _check_candidates(surface: SurfaceModel, candidates: CandidateCurveSet) -> None:
    for c in candidates.curves:
        if c.rank != surface.rank:
            raise LatticeError(
                f"candidate rank {c.rank} does not match surface rank {surface.rank}"
            )
        pa = arithmetic_genus(surface, c)
        if pa.denominator != 1 or pa < 0:
            raise LatticeError(
                f"candidate {format_class(surface.lattice, c)} has arithmetic "
                f"genus {pa}; candidates must have non-negative integer genus"
            )


def validate_decomposition(
    surface: SurfaceModel,
    divisor: DivisorClass,
    candidates: CandidateCurveSet,
    dec: ZariskiDecomposition,
) -> None:
    """Check every defining property of a Zariski decomposition, exactly.

    Raises InvariantError on the first violation: the coordinate identity
    D = P + sum a_i E_i, positivity of the coefficients, negative
    definiteness of the support Gram matrix, orthogonality P.E_i = 0,
    non-negativity of P against every candidate, and P.P >= 0.
    """
    recombined = dec.nef_part + dec.negative_part()
    if recombined.coords != divisor.coords:
        raise InvariantError("P + N does not recombine to D")
    if any(a <= 0 for a in dec.coefficients):
        raise InvariantError("negative part has a non-positive coefficient")
    if not is_negative_definite(_gram(surface, dec.support)):
        raise InvariantError("support Gram matrix is not negative definite")
    for e in dec.support:
        if surface.dot(dec.nef_part, e) != 0:
            raise InvariantError("nef part is not orthogonal to the support")
    for c in candidates.curves:
        if surface.dot(dec.nef_part, c) < 0:
            raise InvariantError("nef part is negative against a candidate curve")
    if surface.dot(dec.nef_part, dec.nef_part) < 0:
        raise InvariantError("nef part has negative self-intersection")


def zariski_decompose(
    surface: SurfaceModel,
    divisor: DivisorClass,
    candidates: CandidateCurveSet,
) -> ZariskiDecomposition:
    """Iterative decomposition by support enlargement.

    Start with empty support S.  Solve the orthogonality system
    (Gram over S) a = (D.E_i) for the current support, and as long as the
    remainder P = D - sum a_i E_i is negative against some candidate outside
    S, add the first such candidate (in stored order) and re-solve.  The
    support only grows, so at most |candidates| rounds occur; the fixpoint
    is the unique decomposition, so the scan order does not matter.

    Rejects with DecompositionError when the input is not pseudoeffective
    relative to the candidate model: D.H < 0 up front, a support whose Gram
    matrix is not negative definite, a non-positive coefficient at the
    fixpoint, or a remainder of negative square.
    """
    if divisor.rank != surface.rank:
        raise LatticeError(
            f"divisor rank {divisor.rank} does not match surface rank {surface.rank}"
        )
    _check_candidates(surface, candidates)
    if surface.dot(divisor, surface.polarization) < 0:
        raise DecompositionError(
            "divisor has negative degree against the polarization; "
            "not pseudoeffective at the lattice level"
        )

    order = candidates.curves
    support_idx: list[int] = []
    coeffs: list[Fraction] = []
    for _ in range(len(order) + 1):
        nef = divisor
        for a, i in zip(coeffs, support_idx):
            nef = nef - a * order[i]
        violator = None
        for i, curve in enumerate(order):
            if i not in support_idx and surface.dot(nef, curve) < 0:
                violator = i
                break
        if violator is None:
            break
        support_idx.append(violator)
        chosen = [order[i] for i in support_idx]
        gram = _gram(surface, chosen)
        if not is_negative_definite(gram):
            names = ", ".join(format_class(surface.lattice, c) for c in chosen)
            raise DecompositionError(
                f"support {{{names}}} has a Gram matrix that is not negative "
                f"definite; divisor is not pseudoeffective relative to the "
                f"candidate model"
            )
        coeffs = _solve(gram, [surface.dot(divisor, c) for c in chosen])
    else:  # pragma: no cover - the support strictly grows each round
        raise InvariantError("support enlargement failed to terminate")

    if any(a <= 0 for a in coeffs):
        raise DecompositionError(
            "orthogonality system produced a non-positive coefficient; "
            "divisor is not pseudoeffective relative to the candidate model"
        )
    if surface.dot(nef, nef) < 0:
        raise DecompositionError(
            "remainder has negative self-intersection; the candidate set "
            "does not account for all negativity of this divisor"
        )
    dec = ZariskiDecomposition(
        nef_part=nef,
        support=tuple(order[i] for i in support_idx),
        coefficients=tuple(coeffs),
    )
    validate_decomposition(surface, divisor, candidates, dec)
    return dec


def zariski_brute_force(
    surface: SurfaceModel,
    divisor: DivisorClass,
    candidates: CandidateCurveSet,
) -> ZariskiDecomposition:
    """Independent oracle: exhaust all candidate subsets.

    Every subset with a negative-definite Gram matrix is tried as a support:
    solve the orthogonality system, keep the subsets whose coefficients are
    all positive and whose remainder is non-negative against every candidate
    (and of non-negative square).  Exactly one decomposition may survive;
    it must agree with the iterative algorithm.

    The subset walk prunes hard: a principal submatrix of a negative-definite
    matrix is negative definite, so supersets of a failed subset are skipped,
    and for a one-element extension of a good subset only the full
    determinant's sign needs checking.
    """
    if len(candidates) > 20:
        raise DecompositionError(
            f"brute-force oracle is limited to 20 candidates, got {len(candidates)}"
        )
    if divisor.rank != surface.rank:
        raise LatticeError(
            f"divisor rank {divisor.rank} does not match surface rank {surface.rank}"
        )
    _check_candidates(surface, candidates)
    if surface.dot(divisor, surface.polarization) < 0:
        raise DecompositionError(
            "divisor has negative degree against the polarization; "
            "not pseudoeffective at the lattice level"
        )

    order = candidates.curves
    full_gram = _gram(surface, order)
    rhs_all = [surface.dot(divisor, c) for c in order]
    found: list[ZariskiDecomposition] = []

    def consider(idx: list[int]) -> None:
        chosen = [order[i] for i in idx]
        gram = [[full_gram[i][j] for j in idx] for i in idx]
        coeffs = _solve(gram, [rhs_all[i] for i in idx]) if idx else []
        if any(a <= 0 for a in coeffs):
            return
        nef = divisor
        for a, c in zip(coeffs, chosen):
            nef = nef - a * c
        if any(surface.dot(nef, c) < 0 for c in order):
            return
        if surface.dot(nef, nef) < 0:
            return
        found.append(
            ZariskiDecomposition(
                nef_part=nef, support=tuple(chosen), coefficients=tuple(coeffs)
            )
        )

    def extend(idx: list[int], start: int) -> None:
        k = len(idx)
        for j in range(start, len(order)):
            ext = idx + [j]
            minor = _det([[full_gram[a][b] for b in ext] for a in ext])
            # bordered Sylvester step: idx is already negative definite
            if minor == 0 or (minor > 0) != ((k + 1) % 2 == 0):
                continue
            consider(ext)
            extend(ext, j + 1)

    consider([])
    extend([], 0)

    if not found:
        raise DecompositionError(
            "no candidate subset yields a valid decomposition; divisor is "
            "not pseudoeffective relative to the candidate model"
        )
    first = found[0]
    for other in found[1:]:
        same = (
            other.nef_part.coords == first.nef_part.coords
            and {e.coords for e in other.support} == {e.coords for e in first.support}
        )
        if not same:
            raise InvariantError(
                "candidate model admits more than one decomposition; "
                "the candidate set violates the uniqueness assumptions"
            )
    return first
