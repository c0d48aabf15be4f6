import pydantic
import pytest

from contextual.geometry.configurations import PointLineGeometry, gq22_geometry
from contextual.geometry.kochen_specker import ColoringSizeError, KSAssignment, ks_colorable
from contextual.pauli.observable import all_projective


def test_mermin_square_is_ks_proof(mermin_square: PointLineGeometry) -> None:
    assert ks_colorable(mermin_square) is None


def test_mermin_pentagram_is_ks_proof(mermin_pentagram: PointLineGeometry) -> None:
    assert ks_colorable(mermin_pentagram) is None


def test_positive_rows_are_colorable(mermin_square: PointLineGeometry) -> None:
    rows = PointLineGeometry.from_lines(mermin_square.points, mermin_square.lines[:3])
    assignment = ks_colorable(rows)
    assert assignment is not None
    assert assignment.is_valid_for(rows)
    assert not assignment.is_valid_for(mermin_square)


def test_fano_plane_is_colorable(fano: PointLineGeometry) -> None:
    assignment = ks_colorable(fano)
    assert assignment is not None
    assert assignment.is_valid_for(fano)


def test_gq22_is_ks_proof() -> None:
    assert ks_colorable(gq22_geometry()) is None


def test_values_must_be_signs() -> None:
    with pytest.raises(pydantic.ValidationError):
        KSAssignment(values={0: 2})


def test_point_cap() -> None:
    points = list(all_projective(3))[:25]
    with pytest.raises(ColoringSizeError):
        ks_colorable(PointLineGeometry.from_lines(points, []))
