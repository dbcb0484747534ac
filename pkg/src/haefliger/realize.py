"""Realization procedures: prescribe the Hopf invariant, the signature, or
both at once, and search a fixed unimodular form for a characteristic Euler
vector hitting a target Haefliger invariant.

Attaching a P block trades signature +1 against Hopf invariant -1 and a
Q block the reverse, so both trades leave the boundary isotopy class alone.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NonUnimodularError, OddSmaleInvariantError
from .lattice import (
    CharVector,
    IntegralLattice,
    characteristic_basis,
    determinant,
    is_unimodular,
    signature,
)
from .surface import (
    SeifertSurfaceModel,
    boundary_connected_sum,
    haefliger_invariant,
    hopf_invariant,
    p_block,
    q_block,
    s2xs2,
)


@dataclass(frozen=True)
class CompressionData:
    """Signature target A and Euler-square target B for a compressible model."""

    A: int
    B: int

    def __post_init__(self):
        if (self.A - self.B) % 8:
            raise ValueError(f"A - B = {self.A - self.B} is not divisible by 8")
        if (3 * self.A + self.B) % 2:
            raise ValueError(f"3A + B = {3 * self.A + self.B} is odd")

    @property
    def haefliger(self) -> int:
        return -((self.A - self.B) // 8)

    @property
    def smale(self) -> int:
        return (3 * self.A + self.B) // 2


@dataclass(frozen=True)
class RealizationPlan:
    """A base model plus the P/Q blocks attached to hit the target."""

    base: SeifertSurfaceModel
    p_count: int
    q_count: int
    result: SeifertSurfaceModel

    def __post_init__(self):
        if self.p_count < 0 or self.q_count < 0:
            raise ValueError("block counts must be nonnegative")
        if self.result.form.rank != self.base.form.rank + self.p_count + self.q_count:
            raise ValueError("result rank does not match the attached blocks")
        if haefliger_invariant(self.result) != haefliger_invariant(self.base):
            raise ValueError("plan changed the boundary isotopy class")


def _attach(base: SeifertSurfaceModel, p: int, q: int) -> RealizationPlan:
    result = base
    for _ in range(p):
        result = boundary_connected_sum(result, p_block())
    for _ in range(q):
        result = boundary_connected_sum(result, q_block())
    return RealizationPlan(base, p, q, result)


def realize_hopf(base: SeifertSurfaceModel, target_h: int) -> RealizationPlan:
    """Attach P/Q blocks until the Hopf invariant equals target_h."""
    h = hopf_invariant(base)
    if target_h < h:
        return _attach(base, h - target_h, 0)
    return _attach(base, 0, target_h - h)


def realize_signature(base: SeifertSurfaceModel, target_sigma: int) -> RealizationPlan:
    """Attach P/Q blocks until the signature equals target_sigma."""
    s = signature(base.form)
    return _attach(base, max(0, target_sigma - s), max(0, s - target_sigma))


def solve_compression(omega_target: int, smale_target: int) -> CompressionData:
    """Solve -(A-B)/8 = omega, (3A+B)/2 = smale; solvable iff smale is even."""
    if smale_target % 2:
        raise OddSmaleInvariantError(
            f"no embedding projects to an immersion with odd Smale invariant "
            f"{smale_target}"
        )
    a = (smale_target - 4 * omega_target) // 2
    return CompressionData(a, a + 8 * omega_target)


def realize_compression(omega_target: int, smale_target: int) -> SeifertSurfaceModel:
    """A model with the given Haefliger invariant whose projection has the
    given (even) Smale invariant: signature A and Hopf invariant -B."""
    data = solve_compression(omega_target, smale_target)
    base = s2xs2(omega_target, 1)
    step = realize_signature(base, data.A)
    # With sigma pinned to A and the Haefliger invariant preserved, the Hopf
    # invariant is already -B; this step just re-checks that and attaches
    # nothing.
    return realize_hopf(step.result, -data.B).result


def realize_form(
    form: IntegralLattice, omega_target: int, bound: int
) -> CharVector | None:
    """Search characteristic vectors e with sup-norm <= bound for
    <e, e> = sigma + 8*omega_target on the given unimodular form.

    Candidates are ordered by increasing sup-norm, then coordinatewise with
    values compared by magnitude and positive before negative (0, 1, -1,
    2, -2, ...); the first solution in that order is returned.  Returns
    None when the bounded search is exhausted.
    """
    if not is_unimodular(form):
        raise NonUnimodularError(
            f"realization needs a unimodular form, got det {determinant(form)}"
        )
    n = form.rank
    target = signature(form) + 8 * omega_target
    if n == 0:
        return CharVector(form, ()) if target == 0 else None
    particular, _ = characteristic_basis(form)
    parity = [c & 1 for c in particular.coords]
    gram = form.gram
    # abs_cross[k] = sum of |gram[i][j]| over k <= i < j < n
    abs_cross = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        abs_cross[k] = abs_cross[k + 1] + sum(abs(gram[k][j]) for j in range(k + 1, n))
    for s in range(bound + 1):
        if s == 0:
            if target == 0 and not any(parity):
                return CharVector(form, (0,) * n)
            continue
        coords = _shell_search(gram, parity, s, target, abs_cross)
        if coords is not None:
            return CharVector(form, coords)
    return None


def _shell_search(gram, parity, s, target, abs_cross):
    """First vector of sup-norm exactly s solving the quadratic equation,
    in magnitude-then-sign coordinate order; None if the shell has none."""
    n = len(gram)
    allowed = []
    for i in range(n):
        vals = [v for v in range(-s, s + 1) if (v - parity[i]) % 2 == 0]
        vals.sort(key=lambda v: (abs(v), v < 0))
        allowed.append(vals)
    can_hit = [s % 2 == p for p in parity]
    suffix_hit = [False] * (n + 1)
    for k in range(n - 1, -1, -1):
        suffix_hit[k] = suffix_hit[k + 1] or can_hit[k]
    if not suffix_hit[0]:
        return None
    coords = [0] * n
    cross = [0] * n  # cross[j] = 2 * sum_{i already fixed} gram[i][j] * coords[i]
    pad_sq = s * s

    def bounds_from(k):
        # Range of the remaining contribution: per-coordinate diagonal and
        # fixed-cross terms exactly, pairwise cross terms by absolute bound.
        lo = hi = 0
        for j in range(k, n):
            gjj = gram[j][j]
            cj = cross[j]
            vals = [gjj * v * v + cj * v for v in allowed[j]]
            lo += min(vals)
            hi += max(vals)
        pad = 2 * abs_cross[k] * pad_sq
        return lo - pad, hi + pad

    def rec(k, acc, hit):
        if k == n:
            return tuple(coords) if hit and acc == target else None
        if not hit and not suffix_hit[k]:
            return None
        lo, hi = bounds_from(k)
        if not lo <= target - acc <= hi:
            return None
        row = gram[k]
        ck = cross[k]
        for v in allowed[k]:
            coords[k] = v
            if v:
                for j in range(k + 1, n):
                    cross[j] += 2 * row[j] * v
            r = rec(k + 1, acc + row[k] * v * v + ck * v, hit or abs(v) == s)
            if v:
                for j in range(k + 1, n):
                    cross[j] -= 2 * row[j] * v
            if r is not None:
                return r
        coords[k] = 0
        return None

    return rec(0, 0, False)
