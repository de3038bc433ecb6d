"""Class parameter alpha and the per-vertex forest degree cap."""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadParameterError


@dataclass(frozen=True)
class ClassParams:
    """The parameter alpha (>= 5); thresholds are derived, never stored."""

    alpha: int

    def __post_init__(self) -> None:
        if self.alpha < 5:
            raise BadParameterError(f"alpha must be >= 5, got {self.alpha}")

    @property
    def h_degree_cap(self) -> int:
        """Maximum degree permitted in the leftover subgraph H."""
        return self.alpha - 5

    @property
    def h_headroom(self) -> int:
        """Largest H-degree that still leaves room to absorb one more edge."""
        return self.alpha - 6


def forest_cap(d: int, params: ClassParams) -> int:
    """Per-vertex degree cap in each forest: max(2, ceil((d - alpha + 6) / 2)).

    The ceiling is the true mathematical one (rounds toward +inf), which
    matters because d - alpha + 6 is frequently negative.
    """
    return max(2, -((params.alpha - 6 - d) // 2))
