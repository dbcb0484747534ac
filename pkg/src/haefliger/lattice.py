"""Exact arithmetic on integral symmetric bilinear forms.

Everything here is plain Python integers, so rank-22 determinants and
characteristic polynomials never overflow.  Lattices are immutable and
hashable; the expensive per-form quantities (signature, determinant) are
cached on the Gram matrix.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .errors import (
    DimensionMismatchError,
    NonUnimodularError,
    NotCharacteristicError,
    NotSquareError,
    NotSymmetricError,
    SingularFormError,
)

Gram = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class IntegralLattice:
    """A free Z-module of finite rank with a symmetric integer Gram matrix."""

    gram: Gram

    def __post_init__(self):
        n = len(self.gram)
        for row in self.gram:
            if len(row) != n:
                raise NotSquareError(
                    f"gram matrix must be square, got row of length {len(row)} in rank {n}"
                )
        for i in range(n):
            for j in range(i + 1, n):
                if self.gram[i][j] != self.gram[j][i]:
                    raise NotSymmetricError(
                        f"gram[{i}][{j}] = {self.gram[i][j]} != gram[{j}][{i}] = {self.gram[j][i]}"
                    )

    @property
    def rank(self) -> int:
        return len(self.gram)


@dataclass(frozen=True)
class CharVector:
    """An integer vector satisfying the mod-2 characteristic condition.

    For every Gram row g_i the pairing <coords, g_i> must agree with
    <g_i, g_i> mod 2; this is exactly what makes sigma - <e, e> divisible
    by 8 (van der Blij) on unimodular forms.
    """

    lattice: IntegralLattice
    coords: tuple[int, ...]

    def __post_init__(self):
        g = self.lattice.gram
        n = len(g)
        if len(self.coords) != n:
            raise DimensionMismatchError(
                f"vector of length {len(self.coords)} in lattice of rank {n}"
            )
        bad = _first_noncharacteristic_index(g, self.coords)
        if bad is not None:
            raise NotCharacteristicError(
                f"vector is not characteristic: fails at basis index {bad}", index=bad
            )


def _first_noncharacteristic_index(gram: Gram, x: Sequence[int]) -> int | None:
    for i, row in enumerate(gram):
        if (sum(a * b for a, b in zip(row, x)) - row[i]) % 2:
            return i
    return None


def make_lattice(rows: Sequence[Sequence[int]]) -> IntegralLattice:
    """Build a lattice from any square symmetric matrix of integers."""
    gram = tuple(tuple(operator.index(v) for v in row) for row in rows)
    return IntegralLattice(gram)


def one(sign: int = 1) -> IntegralLattice:
    """The rank-1 form <+1> or <-1>."""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return IntegralLattice(((sign,),))


def hyperbolic() -> IntegralLattice:
    """The hyperbolic plane [[0,1],[1,0]]."""
    return IntegralLattice(((0, 1), (1, 0)))


# E8 Dynkin diagram: a chain 0-1-2-3-4-5-6 with node 7 attached to node 4,
# i.e. legs of lengths 4, 2, 1 at the trivalent node.
_E8_EDGES = ((0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7))


def e8(sign: int = 1) -> IntegralLattice:
    """The rank-8 even unimodular form of signature 8*sign.

    Diagonal 2 and off-diagonal -1 along the E8 Dynkin adjacency; sign=-1
    negates the whole matrix.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    g = [[0] * 8 for _ in range(8)]
    for i in range(8):
        g[i][i] = 2 * sign
    for i, j in _E8_EDGES:
        g[i][j] = g[j][i] = -sign
    return IntegralLattice(tuple(tuple(row) for row in g))


def direct_sum(a: IntegralLattice, b: IntegralLattice) -> IntegralLattice:
    """Block-diagonal sum; rank and signature add, determinant multiplies."""
    na, nb = a.rank, b.rank
    rows = []
    for i in range(na):
        rows.append(a.gram[i] + (0,) * nb)
    for i in range(nb):
        rows.append((0,) * na + b.gram[i])
    return IntegralLattice(tuple(rows))


# -- signature: fraction-free characteristic polynomial + Descartes ----------

def _components(gram: Gram) -> list[tuple[int, ...]]:
    """Connected components of the support graph (nonzero off-diagonals)."""
    n = len(gram)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in range(n):
                if not seen[j] and gram[i][j] != 0:
                    seen[j] = True
                    stack.append(j)
        comps.append(tuple(sorted(comp)))
    return comps


def _subgram(gram: Gram, idx: tuple[int, ...]) -> Gram:
    return tuple(tuple(gram[i][j] for j in idx) for i in idx)


def _charpoly(gram: Gram) -> list[int]:
    """Coefficients [1, c1, ..., cn] of det(tI - G), exact over Z.

    Faddeev-LeVerrier iteration: P_1 = G, c_k = -tr(P_k)/k,
    P_{k+1} = G(P_k + c_k I).  The trace divisions are exact.
    """
    n = len(gram)
    coeffs = [1]
    p = [list(row) for row in gram]
    for k in range(1, n + 1):
        tr = sum(p[i][i] for i in range(n))
        if tr % k:
            raise AssertionError("Faddeev-LeVerrier trace division not exact")
        ck = -(tr // k)
        coeffs.append(ck)
        if k == n:
            break
        for i in range(n):
            p[i][i] += ck
        p = [
            [sum(gram[i][m] * p[m][j] for m in range(n)) for j in range(n)]
            for i in range(n)
        ]
    return coeffs


def _sign_changes(coeffs: Sequence[int]) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


@lru_cache(maxsize=None)
def _component_signature(gram: Gram) -> int:
    coeffs = _charpoly(gram)
    if coeffs[-1] == 0:
        raise SingularFormError("form is singular (determinant 0)")
    n = len(gram)
    # All roots are real (symmetric matrix), so Descartes' rule is exact.
    pos = _sign_changes(coeffs)
    neg = _sign_changes([c if (n - k) % 2 == 0 else -c for k, c in enumerate(coeffs)])
    if pos + neg != n:
        raise AssertionError("Descartes count does not exhaust the spectrum")
    return pos - neg


def signature(lat: IntegralLattice) -> int:
    """Exact signature: #positive minus #negative eigenvalues.

    The Gram matrix splits into orthogonal components (block-diagonal
    support); each component's characteristic polynomial is computed
    fraction-free and its real-root signs counted by Descartes' rule.
    Raises SingularFormError when det = 0.
    """
    return sum(
        _component_signature(_subgram(lat.gram, idx)) for idx in _components(lat.gram)
    )


# -- determinant: fraction-free Bareiss elimination ---------------------------

@lru_cache(maxsize=None)
def _component_determinant(gram: Gram) -> int:
    n = len(gram)
    if n == 0:
        return 1
    m = [list(row) for row in gram]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def determinant(lat: IntegralLattice) -> int:
    """Exact integer determinant of the Gram matrix."""
    det = 1
    for idx in _components(lat.gram):
        det *= _component_determinant(_subgram(lat.gram, idx))
    return det


def is_unimodular(lat: IntegralLattice) -> bool:
    return abs(determinant(lat)) == 1


def is_even(lat: IntegralLattice) -> bool:
    """True when every diagonal self-pairing is even."""
    return all(lat.gram[i][i] % 2 == 0 for i in range(lat.rank))


# -- characteristic vectors ---------------------------------------------------

def is_characteristic(lat: IntegralLattice, x: Sequence[int]) -> bool:
    """True iff <x, g_i> = <g_i, g_i> mod 2 for every Gram row g_i."""
    if len(x) != lat.rank:
        raise DimensionMismatchError(
            f"vector of length {len(x)} in lattice of rank {lat.rank}"
        )
    return _first_noncharacteristic_index(lat.gram, x) is None


def characteristic_basis(lat: IntegralLattice) -> tuple[CharVector, list[tuple[int, ...]]]:
    """Solve Gx = diag(G) mod 2 on a unimodular lattice.

    Returns a particular characteristic vector with coordinates in {0, 1}
    and a basis of the mod-2 solution kernel.  The full characteristic set
    is the particular vector plus twice arbitrary lattice vectors plus
    kernel lifts; for unimodular G the matrix is invertible mod 2, so the
    kernel is empty and the solution is unique mod 2.
    """
    if not is_unimodular(lat):
        raise NonUnimodularError(
            f"characteristic machinery needs |det| = 1, got det {determinant(lat)}"
        )
    n = lat.rank
    rows = [[lat.gram[i][j] & 1 for j in range(n)] + [lat.gram[i][i] & 1] for i in range(n)]
    pivot_col = []
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(n):
            if i != r and rows[i][c]:
                rows[i] = [(a + b) & 1 for a, b in zip(rows[i], rows[r])]
        pivot_col.append(c)
        r += 1
    for i in range(r, n):
        if rows[i][n]:
            raise NonUnimodularError("mod-2 system inconsistent")
    particular = [0] * n
    for i, c in enumerate(pivot_col):
        particular[c] = rows[i][n]
    free_cols = [c for c in range(n) if c not in pivot_col]
    kernel = []
    for f in free_cols:
        v = [0] * n
        v[f] = 1
        for i, c in enumerate(pivot_col):
            v[c] = rows[i][f]
        kernel.append(tuple(v))
    return CharVector(lat, tuple(particular)), kernel


def cup_square(e: CharVector) -> int:
    """The self-pairing <e, e> = e^T G e."""
    g = e.lattice.gram
    x = e.coords
    return sum(g[i][j] * x[i] * x[j] for i in range(len(x)) for j in range(len(x)))
