from __future__ import annotations

import pydantic
from loguru import logger

from contextual.geometry.configurations import GeometryError, PointLineGeometry
from contextual.parameters.parameters import CAPS


class ColoringSizeError(GeometryError):
    """Too many points for the exhaustive colorability search"""


class KSAssignment(pydantic.BaseModel):
    """Dichotomic values (+1 or -1) for the points of a geometry."""

    model_config = pydantic.ConfigDict(frozen=True)

    values: dict[int, int]

    @pydantic.field_validator("values")
    @classmethod
    def values_validator(cls, values: dict[int, int]) -> dict[int, int]:
        if any(value not in (1, -1) for value in values.values()):
            raise GeometryError("Assigned values must be +1 or -1")
        return values

    def is_valid_for(self, g: PointLineGeometry) -> bool:
        """The product of the values on every line equals the line sign."""
        for line, sign in zip(g.lines, g.line_signs):
            product = 1
            for point in line:
                product *= self.values[point]
            if product != sign:
                return False
        return True


def ks_colorable(g: PointLineGeometry) -> KSAssignment | None:
    """Searches all 2**|points| assignments for a noncontextual one.

    Points are assigned in index order and a line is checked as soon as its last point is
    assigned. None certifies that the geometry is a Kochen-Specker (parity) proof.

    Raises:
        ColoringSizeError: If the geometry has more than 24 points.
    """
    n_points = len(g.points)
    if n_points > CAPS["max_ks_points"]:
        logger.error(f"Colorability check requested for {n_points} points")
        raise ColoringSizeError(
            f"Exhaustive search is limited to {CAPS['max_ks_points']} points, got {n_points}"
        )
    closing: list[list[int]] = [[] for _ in range(n_points)]
    for index, line in enumerate(g.lines):
        if line:
            closing[max(line)].append(index)
    values = [0] * n_points

    def consistent(point: int) -> bool:
        for index in closing[point]:
            product = 1
            for q in g.lines[index]:
                product *= values[q]
            if product != g.line_signs[index]:
                return False
        return True

    def assign(point: int) -> bool:
        if point == n_points:
            return True
        for value in (1, -1):
            values[point] = value
            if consistent(point) and assign(point + 1):
                return True
        values[point] = 0
        return False

    if not assign(0):
        return None
    return KSAssignment(values=dict(enumerate(values)))
