"""Seifert-surface models and their invariants.

A model is the algebraic shadow of a compact oriented 4-manifold embedded
in the 6-sphere with boundary a knotted 3-sphere: the intersection form of
the closed-up manifold plus the normal Euler class of the embedding.  The
Euler class must be characteristic, which is exactly what makes the
Haefliger invariant -(sigma + H)/8 an integer.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Sequence

from .errors import (
    DimensionMismatchError,
    InternalCongruenceViolationError,
    NonUnimodularError,
)
from .lattice import (
    CharVector,
    IntegralLattice,
    cup_square,
    determinant,
    direct_sum,
    e8,
    hyperbolic,
    is_unimodular,
    make_lattice,
    one,
    signature,
)


@dataclass(frozen=True)
class SeifertSurfaceModel:
    """(intersection form, characteristic Euler vector, provenance label)."""

    form: IntegralLattice
    euler: CharVector
    label: str = ""

    def __post_init__(self):
        if not is_unimodular(self.form):
            raise NonUnimodularError(
                f"intersection form must be unimodular, got det {determinant(self.form)}"
            )
        if self.euler.lattice != self.form:
            raise DimensionMismatchError("euler vector belongs to a different lattice")


def make_surface(
    form: IntegralLattice, euler: Sequence[int], label: str = ""
) -> SeifertSurfaceModel:
    """Validate and build a model from a form plus raw Euler coordinates."""
    if not is_unimodular(form):
        raise NonUnimodularError(
            f"intersection form must be unimodular, got det {determinant(form)}"
        )
    vec = CharVector(form, tuple(operator.index(c) for c in euler))
    return SeifertSurfaceModel(form, vec, label)


def hopf_invariant(model: SeifertSurfaceModel) -> int:
    """Hopf invariant of the boundary normal field: minus the Euler square."""
    return -cup_square(model.euler)


def haefliger_invariant(model: SeifertSurfaceModel) -> int:
    """The isotopy-class invariant -(sigma + H)/8, always an integer.

    Divisibility is van der Blij's congruence; a failure means a broken
    model invariant, so it is raised as a hard error rather than rounded.
    """
    total = signature(model.form) + hopf_invariant(model)
    if total % 8:
        raise InternalCongruenceViolationError(
            f"sigma + H = {total} is not divisible by 8"
        )
    return -(total // 8)


def boundary_connected_sum(
    a: SeifertSurfaceModel, b: SeifertSurfaceModel
) -> SeifertSurfaceModel:
    """Join along boundary disks: forms add, Euler classes concatenate."""
    form = direct_sum(a.form, b.form)
    return SeifertSurfaceModel(
        form,
        CharVector(form, a.euler.coords + b.euler.coords),
        f"{a.label} ♮ {b.label}",
    )


# -- named constructions ------------------------------------------------------

def s2xs2(a: int, b: int) -> SeifertSurfaceModel:
    """Punctured S2 x S2 with normal Euler class (2a, 2b); realizes a*b."""
    return make_surface(hyperbolic(), (2 * a, 2 * b), f"s2xs2({a},{b})")


def cp2(k: int) -> SeifertSurfaceModel:
    """Punctured complex projective plane with normal Euler class 2k+1."""
    return make_surface(one(1), (2 * k + 1,), f"cp2({k})")


def cp2bar(k: int) -> SeifertSurfaceModel:
    """Orientation-reversed cp2(k): signature -1, Hopf invariant (2k+1)^2."""
    return make_surface(one(-1), (2 * k + 1,), f"cp2bar({k})")


def kummer(a: int, b: int) -> SeifertSurfaceModel:
    """Punctured Kummer surface, Euler class (0,...,0,2a,2b) in the last
    hyperbolic block; signature -16, realizes 2 + a*b."""
    form = direct_sum(
        direct_sum(direct_sum(e8(-1), e8(-1)), direct_sum(hyperbolic(), hyperbolic())),
        hyperbolic(),
    )
    coords = (0,) * 20 + (2 * a, 2 * b)
    return make_surface(form, coords, f"kummer({a},{b})")


def p_block() -> SeifertSurfaceModel:
    """cp2(0) relabeled: adds +1 to signature and -1 to the Hopf invariant."""
    return make_surface(one(1), (1,), "P")


def q_block() -> SeifertSurfaceModel:
    """cp2bar(0) relabeled: adds -1 to signature and +1 to the Hopf invariant."""
    return make_surface(one(-1), (1,), "Q")


# -- wire format ---------------------------------------------------------------

_BUILDERS = {
    "s2xs2": (s2xs2, 2),
    "cp2": (cp2, 1),
    "cp2bar": (cp2bar, 1),
    "kummer": (kummer, 2),
    "p": (p_block, 0),
    "q": (q_block, 0),
}


def _as_int(v) -> int:
    """Accept a JSON int or a decimal string (used for > 53-bit magnitudes)."""
    if isinstance(v, bool):
        raise ValueError(f"expected an integer, got {v!r}")
    if isinstance(v, int):
        return v
    if isinstance(v, str):
        return int(v, 10)
    raise ValueError(f"expected an integer, got {v!r}")


def from_spec(obj) -> SeifertSurfaceModel:
    """Build a model from its JSON-style description.

    Three shapes are accepted: {"gram": [[...]], "euler": [...], "label": s},
    {"builder": name, "params": [...]}, and {"sum": [spec, ...]}.
    """
    if not isinstance(obj, dict):
        raise ValueError(f"surface spec must be an object, got {type(obj).__name__}")
    if "sum" in obj:
        parts = obj["sum"]
        if not isinstance(parts, list) or not parts:
            raise ValueError("'sum' must be a non-empty list of surface specs")
        models = [from_spec(p) for p in parts]
        result = models[0]
        for m in models[1:]:
            result = boundary_connected_sum(result, m)
        return result
    if "builder" in obj:
        name = obj["builder"]
        if name not in _BUILDERS:
            raise ValueError(f"unknown builder {name!r}")
        fn, arity = _BUILDERS[name]
        params = [_as_int(p) for p in obj.get("params", [])]
        if len(params) != arity:
            raise ValueError(f"builder {name!r} takes {arity} params, got {len(params)}")
        return fn(*params)
    if "gram" in obj:
        gram = obj["gram"]
        if not isinstance(gram, list) or not all(isinstance(r, list) for r in gram):
            raise ValueError("'gram' must be a list of rows")
        form = make_lattice([[_as_int(v) for v in row] for row in gram])
        euler = [_as_int(v) for v in obj.get("euler", [])]
        label = obj.get("label", "")
        if not isinstance(label, str):
            raise ValueError("'label' must be a string")
        return make_surface(form, euler, label)
    raise ValueError("surface spec needs one of 'gram', 'builder', 'sum'")
