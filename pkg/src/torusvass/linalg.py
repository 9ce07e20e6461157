"""Exact dense linear algebra and exact univariate interpolation.

Everything operates on :class:`fractions.Fraction`.  Elimination pivots on
the first nonzero entry scanning top to bottom; exact arithmetic needs no
numerical pivoting and this keeps the output deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import DegreeExceeded


@dataclass(frozen=True)
class ExactMatrix:
    """An augmented system: each row is (coefficients of the unknowns, rhs)."""

    entries: tuple[tuple[Fraction, ...], ...]
    unknowns: int

    def __post_init__(self):
        if not self.entries:
            raise ValueError("system needs at least one row")
        for row in self.entries:
            if len(row) != self.unknowns + 1:
                raise ValueError(
                    f"row of width {len(row)} in a system with {self.unknowns} unknowns"
                )

    @classmethod
    def augmented(cls, rows: Iterable[Sequence], rhs: Iterable) -> "ExactMatrix":
        packed = []
        width = None
        for row, b in zip(rows, rhs):
            packed.append(tuple(Fraction(x) for x in row) + (Fraction(b),))
            width = len(row)
        if width is None:
            raise ValueError("system needs at least one row")
        return cls(tuple(packed), width)

    @property
    def rows(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class LinearSolution:
    solution: Optional[tuple[Fraction, ...]]  # present iff unique
    rank: int
    consistent: bool


def solve_exact(system: ExactMatrix) -> LinearSolution:
    """Gaussian elimination over the rationals with exact pivoting.

    Returns the unique solution when ``consistent and rank == unknowns``;
    otherwise the solution is absent and (rank, consistent) diagnose the
    system.  Deterministic for a given input.
    """
    m = [list(row) for row in system.entries]
    nrows, ncols = len(m), system.unknowns
    pivots: list[int] = []
    prow = 0
    for pcol in range(ncols):
        pivot = None
        for i in range(prow, nrows):
            if m[i][pcol] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        m[prow], m[pivot] = m[pivot], m[prow]
        lead = m[prow][pcol]
        for i in range(prow + 1, nrows):
            if m[i][pcol] != 0:
                f = m[i][pcol] / lead
                for c in range(pcol, ncols + 1):
                    m[i][c] -= f * m[prow][c]
        pivots.append(pcol)
        prow += 1
    rank = prow
    consistent = all(m[i][ncols] == 0 for i in range(rank, nrows))
    if not consistent or rank < ncols:
        return LinearSolution(None, rank, consistent)
    sol = [Fraction(0)] * ncols
    for i in range(rank - 1, -1, -1):
        pc = pivots[i]
        acc = m[i][ncols]
        for c in range(pc + 1, ncols):
            acc -= m[i][c] * sol[c]
        sol[pc] = acc / m[i][pc]
    return LinearSolution(tuple(sol), rank, consistent)


@dataclass(frozen=True)
class ExactPoly:
    """A univariate polynomial with rational coefficients, ascending degree."""

    coefficients: tuple[Fraction, ...]
    variable: str = "x"

    @classmethod
    def make(cls, coefficients: Iterable, variable: str = "x") -> "ExactPoly":
        coeffs = [Fraction(c) for c in coefficients]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        return cls(tuple(coeffs), variable)

    @classmethod
    def from_degree_map(cls, numerators: dict[int, int], denominator: int = 1,
                        variable: str = "x") -> "ExactPoly":
        """Polynomial sum(numerators[d] * var**d) / denominator."""
        top = max(numerators, default=0)
        coeffs = [Fraction(numerators.get(d, 0), denominator) for d in range(top + 1)]
        return cls.make(coeffs, variable)

    @property
    def degree(self) -> Optional[int]:
        return len(self.coefficients) - 1 if self.coefficients else None

    def evaluate(self, x) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * Fraction(x) + c
        return acc

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for d, c in enumerate(self.coefficients):
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append(f"({c})*{self.variable}")
            else:
                parts.append(f"({c})*{self.variable}^{d}")
        return " + ".join(parts)


def interpolate_poly(points: Sequence[tuple], max_degree: int,
                     variable: str = "x") -> ExactPoly:
    """Unique polynomial of degree <= max_degree through the first
    max_degree+1 points, verified exactly against any remaining points.

    Raises DegreeExceeded when a surplus point is off the fitted polynomial,
    which signals that the true degree exceeds max_degree.
    """
    pts = [(Fraction(x), Fraction(y)) for x, y in points]
    if len(pts) < max_degree + 1:
        raise ValueError(f"need at least {max_degree + 1} points, got {len(pts)}")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise ValueError("point abscissae must be pairwise distinct")

    # Newton divided differences on the leading points
    head = pts[: max_degree + 1]
    hx = [x for x, _ in head]
    dd = [y for _, y in head]
    n = len(head)
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (hx[i] - hx[i - level])

    # expand the Newton form into the monomial basis
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]  # running product (x - x0)...(x - x_{k-1})
    for k in range(n):
        for d, c in enumerate(basis):
            coeffs[d] += dd[k] * c
        grown = [Fraction(0)] * (len(basis) + 1)
        for d, c in enumerate(basis):
            grown[d] -= c * hx[k]
            grown[d + 1] += c
        basis = grown

    poly = ExactPoly.make(coeffs, variable)
    for x, y in pts[max_degree + 1:]:
        if poly.evaluate(x) != y:
            raise DegreeExceeded(
                f"point ({x}, {y}) is off the degree-{max_degree} fit; "
                "the data has higher degree"
            )
    return poly
