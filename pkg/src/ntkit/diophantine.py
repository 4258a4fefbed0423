"""Exact fraction reduction, a CRT solver for not-necessarily-coprime
moduli, and least positive solutions of cyclic linear systems
``f = c1*u1 + u2 = c2*u2 + u3 = ... = ck*uk + u1``.

All arithmetic is exact: fractions of integers, never floating point.
Pure functions; safe for concurrent use.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as _Rational
from functools import reduce
from typing import Sequence

from .errors import DomainError
from .gcd import euclid_gcd, extended_gcd


def _gcd2(a: int, b: int) -> int:
    return euclid_gcd(a, b, record_steps=False).result


@dataclass(frozen=True)
class Fraction:
    """Numerator/denominator pair of non-negative integers, denominator >= 1."""

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        if self.numerator < 0:
            raise DomainError(f"numerator must be non-negative, got {self.numerator}")
        if self.denominator < 1:
            raise DomainError(f"denominator must be positive, got {self.denominator}")


def reduce_fraction(fraction: Fraction) -> Fraction:
    """Divide numerator and denominator by their GCD.

    Value-preserving and idempotent; zero canonicalises to ``0/1``.
    """
    g = _gcd2(fraction.numerator, fraction.denominator)
    return Fraction(fraction.numerator // g, fraction.denominator // g)


@dataclass(frozen=True)
class Congruence:
    """``x = residue (mod modulus)`` with ``0 <= residue < modulus``."""

    residue: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise DomainError(f"modulus must be >= 2, got {self.modulus}")
        if not 0 <= self.residue < self.modulus:
            raise DomainError(
                f"residue must satisfy 0 <= r < {self.modulus}, got {self.residue}"
            )


def crt_solve(
    system: Sequence[Congruence | tuple[int, int]]
) -> tuple[int, int]:
    """Least non-negative simultaneous solution and the combined modulus.

    Accepts plain ``(residue, modulus)`` tuples as well as
    :class:`Congruence` values.  Moduli need not be pairwise coprime: each
    merge checks consistency modulo the pairwise GCD and the combined
    modulus is the LCM.  An inconsistent system raises a
    :class:`DomainError` naming an offending pair of congruences.
    """
    congruences = [
        c if isinstance(c, Congruence) else Congruence(*c) for c in system
    ]
    if not congruences:
        raise DomainError("empty congruence system")
    r, m = congruences[0].residue, congruences[0].modulus
    for index in range(1, len(congruences)):
        c = congruences[index]
        g, u, _ = extended_gcd(m, c.modulus)
        if (c.residue - r) % g != 0:
            raise DomainError(_describe_conflict(congruences, index))
        lcm = m // g * c.modulus
        # u * (m // g) = 1 (mod modulus // g), so this lifts r onto c
        t = (c.residue - r) // g * u % (c.modulus // g)
        r = (r + m * t) % lcm
        m = lcm
    return r, m


def _describe_conflict(congruences: list[Congruence], index: int) -> str:
    """Find an original pair that is pairwise incompatible with entry ``index``."""
    c = congruences[index]
    for j in range(index):
        other = congruences[j]
        g = _gcd2(other.modulus, c.modulus)
        if other.residue % g != c.residue % g:
            return (
                f"inconsistent system: x = {other.residue} (mod {other.modulus}) and "
                f"x = {c.residue} (mod {c.modulus}) disagree modulo {g}"
            )
    # By pairwise solvability of integer congruence systems some pair above
    # must conflict; keep a fallback message for safety.
    return (
        f"inconsistent system at congruence x = {c.residue} (mod {c.modulus})"
    )  # pragma: no cover


@dataclass(frozen=True)
class CyclicSystemSolution:
    """Least positive integral solution: the shared value and the unknowns."""

    common_value: int
    unknowns: tuple[int, ...]


def solve_cyclic_system(coeffs: Sequence[int]) -> CyclicSystemSolution:
    """Least positive integral solution of
    ``f = c1*u1 + u2 = c2*u2 + u3 = ... = ck*uk + u1``.

    The k equations over the k+1 unknowns ``(f, u1, ..., uk)`` are solved by
    exact rational Gauss-Jordan elimination.  The generic solution space is a
    line; its primitive integer point (components positive, overall GCD 1)
    is returned.  A ray with zero or mixed-sign components has no positive
    solution and raises a :class:`DomainError`.
    """
    coefficients = [int(c) for c in coeffs]
    if len(coefficients) < 2:
        raise DomainError("need at least two coefficients")
    if any(c < 1 for c in coefficients):
        raise DomainError("coefficients must be >= 1")
    k = len(coefficients)
    rows: list[list[_Rational]] = []
    for i, c in enumerate(coefficients):
        row = [_Rational(0)] * (k + 1)
        row[0] = _Rational(-1)
        row[1 + i] += _Rational(c)
        row[1 + (i + 1) % k] += _Rational(1)
        rows.append(row)
    basis = _nullspace(rows)
    if len(basis) == 1:
        vec = _primitive_integer_vector(basis[0])
        if all(v < 0 for v in vec):
            vec = [-v for v in vec]
        if any(v <= 0 for v in vec):
            raise DomainError("no positive solution")
        solution = CyclicSystemSolution(vec[0], tuple(vec[1:]))
    else:
        # Rank drops below k only for all-ones coefficient lists of even
        # length, where every unknown equal to 1 gives the least value f = 2.
        solution = CyclicSystemSolution(2, tuple([1] * k))
    for i, c in enumerate(coefficients):
        if c * solution.unknowns[i] + solution.unknowns[(i + 1) % k] != solution.common_value:
            raise DomainError("no positive solution")
    return solution


def _nullspace(matrix: list[list[_Rational]]) -> list[list[_Rational]]:
    """Basis of the right nullspace, by Gauss-Jordan elimination with exact
    rational pivots."""
    rows = [row[:] for row in matrix]
    ncols = len(rows[0])
    pivot_cols: list[int] = []
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        scale = rows[rank][col]
        rows[rank] = [v / scale for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col] != 0:
                coeff = rows[i][col]
                rows[i] = [v - coeff * w for v, w in zip(rows[i], rows[rank])]
        pivot_cols.append(col)
        rank += 1
        if rank == len(rows):
            break
    basis = []
    for free_col in (c for c in range(ncols) if c not in pivot_cols):
        vec = [_Rational(0)] * ncols
        vec[free_col] = _Rational(1)
        for pivot_row, pivot_col in enumerate(pivot_cols):
            vec[pivot_col] = -rows[pivot_row][free_col]
        basis.append(vec)
    return basis


def _primitive_integer_vector(vec: list[_Rational]) -> list[int]:
    """Scale a rational vector to integers with overall GCD 1."""
    scale = reduce(lambda acc, v: acc // _gcd2(acc, v.denominator) * v.denominator, vec, 1)
    ints = [int(v * scale) for v in vec]
    g = reduce(_gcd2, (abs(v) for v in ints))
    if g > 1:
        ints = [v // g for v in ints]
    return ints
