"""Smale-invariant arithmetic for immersions of the 3-sphere in 5-space."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParityViolationError
from .lattice import cup_square, signature
from .surface import SeifertSurfaceModel


@dataclass(frozen=True)
class SingularSeifertData:
    """Signature of a generic-map domain plus its algebraic cusp count."""

    sigma: int
    cusps: int

    def __post_init__(self):
        if (3 * self.sigma + self.cusps) % 2:
            raise ParityViolationError(
                f"3*{self.sigma} + {self.cusps} is odd; no immersion of S^3 "
                "has such singular data"
            )


def smale_from_singular(data: SingularSeifertData) -> int:
    """(3*sigma + cusps)/2, exact by the parity invariant."""
    return (3 * data.sigma + data.cusps) // 2


def smale_of_projection(model: SeifertSurfaceModel) -> int:
    """Smale invariant of the compressed projection: (3*sigma + e.e)/2.

    Integrality holds for every valid model: sigma = e.e mod 8 makes
    3*sigma + e.e = 4*sigma mod 8, hence even.
    """
    total = 3 * signature(model.form) + cup_square(model.euler)
    assert total % 2 == 0, "characteristic euler class forces even 3*sigma + e.e"
    return total // 2


def is_liftable_parity(omega: int) -> bool:
    """An immersion lifts to an embedding of S^3 in 6-space iff omega is even."""
    return omega % 2 == 0
