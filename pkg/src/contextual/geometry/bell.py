"""Bell-CHSH quadruples of Pauli observables and their census."""
from __future__ import annotations

from typing import Iterator

import numpy as np
import pydantic
from loguru import logger
from numpy.typing import NDArray
from tqdm import tqdm

from contextual.geometry.configurations import GeometryError, PointLineGeometry, grid_geometry
from contextual.parameters.parameters import REFERENCE_DATA, TOLERANCES, show_progress
from contextual.pauli import observable
from contextual.pauli.dense import commutator
from contextual.pauli.observable import PauliObservable
from contextual.utils.bitsets import above, commutation_masks, iter_bits


class BellQuadrupleError(GeometryError):
    """Four observables without the Bell-CHSH commutation pattern"""


class CensusRangeError(GeometryError):
    """Census requested for an unsupported number of qubits"""


class BellQuadruple(pydantic.BaseModel):
    """sigma1 anticommutes with sigma3, sigma2 with sigma4; all other pairs commute."""

    model_config = pydantic.ConfigDict(frozen=True)

    sigma1: PauliObservable
    sigma2: PauliObservable
    sigma3: PauliObservable
    sigma4: PauliObservable

    @pydantic.model_validator(mode="after")
    def pattern_validator(self) -> BellQuadruple:
        s1, s2, s3, s4 = self.sigmas
        if len({s.n for s in self.sigmas}) != 1:
            raise BellQuadrupleError("Observables act on different numbers of qubits")
        if len({s.code for s in self.sigmas}) != 4 or any(s.is_identity for s in self.sigmas):
            raise BellQuadrupleError("Observables must be distinct non-identity classes")
        if observable.commutes(s1, s3) or observable.commutes(s2, s4):
            raise BellQuadrupleError(f"{s1}, {s3} and {s2}, {s4} must anticommute")
        if not all(observable.commutes(a, b) for a in (s2, s4) for b in (s1, s3)):
            raise BellQuadrupleError(f"{s2} and {s4} must commute with {s1} and {s3}")
        return self

    @classmethod
    def parse(cls, texts: list[str]) -> BellQuadruple:
        s1, s2, s3, s4 = (PauliObservable.parse(text).canonical() for text in texts)
        return cls(sigma1=s1, sigma2=s2, sigma3=s3, sigma4=s4)

    @classmethod
    def from_codes(cls, n: int, codes: tuple[int, int, int, int]) -> BellQuadruple:
        s1, s2, s3, s4 = (PauliObservable.from_code(n, code) for code in codes)
        return cls(sigma1=s1, sigma2=s2, sigma3=s3, sigma4=s4)

    @property
    def sigmas(self) -> tuple[PauliObservable, ...]:
        return self.sigma1, self.sigma2, self.sigma3, self.sigma4


def reference_quadruple() -> BellQuadruple:
    """(IX, XI, IZ, ZI)"""
    return BellQuadruple.parse(REFERENCE_DATA["bell_quadruple"])


def chsh_matrix(
    s1: PauliObservable, s2: PauliObservable, s3: PauliObservable, s4: PauliObservable
) -> NDArray:
    """C = s2 (s1 + s3) + s4 (s3 - s1), with no commutation requirement on the inputs."""
    m1, m2, m3, m4 = (s.canonical().to_matrix() for s in (s1, s2, s3, s4))
    return m2 @ (m1 + m3) + m4 @ (m3 - m1)


def chsh_operator(q: BellQuadruple) -> NDArray:
    """Bell-CHSH operator of a quadruple, checked against C**2 = 4I + [s1, s3][s2, s4].

    Raises:
        GeometryError: If the identity fails entry-wise beyond the tolerance.
    """
    c = chsh_matrix(*q.sigmas)
    m1, m2, m3, m4 = (s.to_matrix() for s in q.sigmas)
    expected = 4 * np.eye(c.shape[0]) + commutator(m1, m3) @ commutator(m2, m4)
    if not np.allclose(c @ c, expected, rtol=0.0, atol=TOLERANCES["identity_check"]):
        logger.error(f"CHSH identity fails for {[str(s) for s in q.sigmas]}")
        raise GeometryError("C^2 = 4I + [s1, s3][s2, s4] does not hold")
    return c


def _check_census_range(n: int) -> None:
    if n not in (1, 2, 3):
        logger.error(f"Bell census requested for {n=} qubits")
        raise CensusRangeError(f"Bell census is supported for 1 to 3 qubits, {n=} given")


def anticommuting_pairs(n: int) -> list[tuple[int, int]]:
    """Unordered pairs a < c of anticommuting projective classes, as codes."""
    size = 1 << (2 * n)
    masks = commutation_masks(n)
    full = (1 << size) - 2
    return [
        (a, c)
        for a in range(1, size)
        for c in iter_bits(full & ~masks[a] & above(a))
    ]


def bell_census(n: int, progress: bool | None = None) -> int:
    """Number of Bell-CHSH quadruples up to relabeling.

    A quadruple is an unordered pair of disjoint unordered anticommuting pairs
    {{a, c}, {b, d}} with b and d commuting with both a and c. For every anticommuting
    pair {a, c} the anticommuting pairs inside the common commutant are counted;
    every quadruple is seen from both of its diagonals.

    Raises:
        CensusRangeError: If n is not 1, 2 or 3.
    """
    _check_census_range(n)
    masks = commutation_masks(n)
    progress = show_progress() if progress is None else progress
    total = 0
    for a, c in tqdm(anticommuting_pairs(n), disable=not progress, desc="Bell census"):
        common = masks[a] & masks[c]
        for b in iter_bits(common):
            total += bin(common & ~masks[b] & above(b)).count("1")
    count = total // 2
    logger.info(f"Bell census for {n} qubits: {count}")
    return count


def bell_census_decomposition(n: int) -> tuple[int, int, int]:
    """(anticommuting pairs, anticommuting pairs in one common commutant, census).

    The commutant count is the same for every pair, so census = pairs * per_pair / 2.
    """
    _check_census_range(n)
    masks = commutation_masks(n)
    pairs = anticommuting_pairs(n)
    if not pairs:
        return 0, 0, 0
    per_pair = set()
    for a, c in pairs:
        common = masks[a] & masks[c]
        per_pair.add(
            sum(bin(common & ~masks[b] & above(b)).count("1") for b in iter_bits(common))
        )
    if len(per_pair) != 1:
        raise GeometryError(f"Commutant pair counts differ between pairs: {sorted(per_pair)}")
    inner = per_pair.pop()
    return len(pairs), inner, len(pairs) * inner // 2


def bell_quadruple_codes(n: int) -> Iterator[tuple[int, int, int, int]]:
    """Every census quadruple once, as codes (s1, s2, s3, s4) with s1 the smallest code."""
    _check_census_range(n)
    masks = commutation_masks(n)
    for a, c in anticommuting_pairs(n):
        common = masks[a] & masks[c] & above(a)
        for b in iter_bits(common):
            for d in iter_bits(masks[a] & masks[c] & ~masks[b] & above(b)):
                yield a, b, c, d


def bell_quadruples(n: int) -> Iterator[BellQuadruple]:
    for codes in bell_quadruple_codes(n):
        yield BellQuadruple.from_codes(n, codes)


class BellDiagram(pydantic.BaseModel):
    """Black vertices are the quadruple, white vertices the products along the square's edges.

    Attributes:
        black: s1, s2, s3, s4 in cyclic order around the square.
        white: s1s2, s2s3, s3s4, s4s1 as canonical representatives.
    """

    black: tuple[PauliObservable, ...]
    white: tuple[PauliObservable, ...]

    @property
    def edge_triples(self) -> list[tuple[PauliObservable, ...]]:
        return [(self.black[i], self.white[i], self.black[(i + 1) % 4]) for i in range(4)]

    def edges_commute(self) -> bool:
        return all(
            observable.commutes(a, b)
            for triple in self.edge_triples
            for i, a in enumerate(triple)
            for b in triple[i + 1 :]
        )

    def opposite_whites_commute(self) -> bool:
        return observable.commutes(self.white[0], self.white[2]) and observable.commutes(
            self.white[1], self.white[3]
        )

    def missing_operator(self) -> PauliObservable:
        """The common product of both opposite white pairs.

        Raises:
            GeometryError: If the two opposite pairs multiply to different classes.
        """
        first = observable.multiply(self.white[0], self.white[2]).canonical()
        second = observable.multiply(self.white[1], self.white[3]).canonical()
        if first.code != second.code:
            raise GeometryError(f"Opposite white pairs multiply to {first} and {second}")
        return first


def bell_diagram(q: BellQuadruple) -> BellDiagram:
    s = q.sigmas
    white = tuple(observable.multiply(s[i], s[(i + 1) % 4]).canonical() for i in range(4))
    return BellDiagram(black=s, white=white)


def complete_to_square(q: BellQuadruple) -> PointLineGeometry:
    """Fills the Bell diagram's missing operator in and returns the 3x3 grid.

    Rows: (s1, s1s2, s2), (s4s1, m, s2s3), (s4, s3s4, s3).
    """
    diagram = bell_diagram(q)
    s1, s2, s3, s4 = diagram.black
    w12, w23, w34, w41 = diagram.white
    grid = [[s1, w12, s2], [w41, diagram.missing_operator(), w23], [s4, w34, s3]]
    return grid_geometry(grid)
