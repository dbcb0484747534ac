"""Independent brute-force verifiers.

These ship with the library (not only the test suite) so derived values can
be re-checked by users: exhaustive lattice enumeration, a second signature
algorithm that shares no code with the Descartes route, and box scans for
characteristic vectors.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .errors import SearchSpaceTooLargeError, SingularFormError
from .lattice import IntegralLattice, determinant, is_characteristic

_MAX_ENUM_RANK = 4
_MAX_ENUM_BOUND = 2
_MAX_BOX = 4_000_000


@dataclass(frozen=True)
class EnumerationSpec:
    rank: int
    entry_bound: int
    unimodular_only: bool = False


def enumerate_lattices(spec: EnumerationSpec) -> Iterator[IntegralLattice]:
    """Every symmetric integer matrix of the given rank with entries in
    [-bound, bound], in row-major lexicographic order over the upper
    triangle; optionally filtered to |det| = 1."""
    if spec.rank < 0 or spec.entry_bound < 0:
        raise ValueError("rank and entry_bound must be nonnegative")
    if spec.rank > _MAX_ENUM_RANK or spec.entry_bound > _MAX_ENUM_BOUND:
        raise SearchSpaceTooLargeError(
            f"exhaustive enumeration is guarded to rank <= {_MAX_ENUM_RANK} "
            f"and entries <= {_MAX_ENUM_BOUND}"
        )
    return _enumerate(spec)


def _enumerate(spec: EnumerationSpec) -> Iterator[IntegralLattice]:
    n = spec.rank
    positions = [(i, j) for i in range(n) for j in range(i, n)]
    values = range(-spec.entry_bound, spec.entry_bound + 1)
    for combo in itertools.product(values, repeat=len(positions)):
        g = [[0] * n for _ in range(n)]
        for (i, j), v in zip(positions, combo):
            g[i][j] = g[j][i] = v
        lat = IntegralLattice(tuple(tuple(row) for row in g))
        if spec.unimodular_only and abs(determinant(lat)) != 1:
            continue
        yield lat


def signature_by_diagonalization(lat: IntegralLattice) -> int:
    """Signature via exact rational congruence diagonalization.

    Nonzero diagonal entries are used as 1x1 pivots; when the remaining
    diagonal is all zero, an off-diagonal entry gives a hyperbolic 2x2
    pivot block contributing +1 and -1.  Entirely independent of the
    characteristic-polynomial route.
    """
    n = lat.rank
    a = [[Fraction(v) for v in row] for row in lat.gram]
    pos = neg = 0
    k = 0
    while k < n:
        piv = next((j for j in range(k, n) if a[j][j] != 0), None)
        if piv is not None:
            if piv != k:
                _swap(a, k, piv)
            d = a[k][k]
            if d > 0:
                pos += 1
            else:
                neg += 1
            for i in range(k + 1, n):
                if a[i][k]:
                    f = a[i][k] / d
                    for j in range(k + 1, n):
                        a[i][j] -= f * a[k][j]
            for i in range(k + 1, n):
                a[k][i] = a[i][k] = Fraction(0)
            k += 1
            continue
        off = next((j for j in range(k + 1, n) if a[k][j] != 0), None)
        if off is None:
            raise SingularFormError("form is singular (determinant 0)")
        if off != k + 1:
            _swap(a, k + 1, off)
        # 2x2 block [[0, c], [c, 0]]: signature 0, Schur-complement the rest.
        c = a[k][k + 1]
        pos += 1
        neg += 1
        for i in range(k + 2, n):
            vi0, vi1 = a[i][k], a[i][k + 1]
            if vi0 or vi1:
                for j in range(k + 2, n):
                    a[i][j] -= (vi0 * a[k + 1][j] + vi1 * a[k][j]) / c
        for i in range(k + 2, n):
            a[k][i] = a[i][k] = Fraction(0)
            a[k + 1][i] = a[i][k + 1] = Fraction(0)
        k += 2
    return pos - neg


def _swap(a, i, j):
    a[i], a[j] = a[j], a[i]
    for row in a:
        row[i], row[j] = row[j], row[i]


def characteristic_exhaustive(
    lat: IntegralLattice, bound: int
) -> list[tuple[int, ...]]:
    """All characteristic vectors with coordinates in [-bound, bound], by
    plain box scan, in lexicographic order."""
    if bound < 0:
        raise ValueError("bound must be nonnegative")
    n = lat.rank
    if (2 * bound + 1) ** n > _MAX_BOX:
        raise SearchSpaceTooLargeError(
            f"box scan of size {(2 * bound + 1) ** n} exceeds the guard"
        )
    return [
        v
        for v in itertools.product(range(-bound, bound + 1), repeat=n)
        if is_characteristic(lat, v)
    ]
