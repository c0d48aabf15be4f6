"""Census of Mermin pentagrams built from lines of four mutually commuting observables."""
from __future__ import annotations

import time
from collections import Counter
from itertools import combinations
from multiprocessing import Pool
from typing import Iterator

import pydantic
from loguru import logger
from tqdm import tqdm

from contextual.geometry.configurations import PointLineGeometry
from contextual.parameters.parameters import REFERENCE_DATA, default_workers, show_progress
from contextual.pauli import observable
from contextual.pauli.observable import PauliObservable
from contextual.utils.bitsets import above, commutation_masks, iter_bits

Line = tuple[int, int, int, int]
Pentagram = tuple[Line, Line, Line, Line, Line]


def good_lines(n: int) -> list[Line]:
    """4-subsets a < b < c < d of mutually commuting classes with a + b + c + d = 0.

    Their products are plus or minus the identity. For three qubits there are 945.
    """
    masks = commutation_masks(n)
    lines = []
    size = 1 << (2 * n)
    for a in range(1, size):
        for b in iter_bits(masks[a] & above(a)):
            for c in iter_bits(masks[a] & masks[b] & above(b)):
                d = a ^ b ^ c
                if d > c:
                    lines.append((a, b, c, d))
    return lines


def line_sign(n: int, line: Line) -> int:
    return observable.product_sign(PauliObservable.from_code(n, code) for code in line)


class _LineIncidence:
    """Bitmask tables over line indices used by the pentagram search."""

    def __init__(self, n: int) -> None:
        self.n = n
        self.lines = good_lines(n)
        self.signs = [line_sign(n, line) for line in self.lines]
        count = len(self.lines)
        self.through: dict[int, int] = {}
        for index, line in enumerate(self.lines):
            for point in line:
                self.through[point] = self.through.get(point, 0) | (1 << index)
        self.meeting_once = [0] * count
        self.meet: list[dict[int, int]] = [{} for _ in range(count)]
        sets = [set(line) for line in self.lines]
        for i, j in combinations(range(count), 2):
            common = sets[i] & sets[j]
            if len(common) == 1:
                point = common.pop()
                self.meeting_once[i] |= 1 << j
                self.meeting_once[j] |= 1 << i
                self.meet[i][j] = self.meet[j][i] = point

    def pentagrams_from(self, first: int) -> list[tuple[int, ...]]:
        """Index 5-tuples i < j < k < l < m, pairwise meeting once, no three concurrent."""
        found = []
        i = first
        cand_j = self.meeting_once[i] & above(i)
        for j in iter_bits(cand_j):
            p_ij = self.meet[i][j]
            cand_k = cand_j & self.meeting_once[j] & above(j) & ~self.through[p_ij]
            for k in iter_bits(cand_k):
                blocked = self.through[self.meet[i][k]] | self.through[self.meet[j][k]]
                cand_l = cand_k & self.meeting_once[k] & above(k) & ~blocked
                for l in iter_bits(cand_l):
                    blocked_l = (
                        self.through[self.meet[i][l]]
                        | self.through[self.meet[j][l]]
                        | self.through[self.meet[k][l]]
                    )
                    cand_m = cand_l & self.meeting_once[l] & above(l) & ~blocked_l
                    found.extend((i, j, k, l, m) for m in iter_bits(cand_m))
        return found


class PentagramCensus(pydantic.BaseModel):
    """Pentagram-shaped configurations and the magic ones among them.

    Attributes:
        n: Number of qubits.
        good_lines: Number of lines of four available to the search.
        count: Pentagrams with an odd number of negative lines.
        sign_histogram: Number of pentagram-shaped configurations per negative-line count.
        pentagrams: The magic pentagrams, each as five sorted code lines, sorted.
    """

    n: int
    good_lines: int
    count: int
    sign_histogram: dict[int, int]
    pentagrams: list[Pentagram]


_INCIDENCE: _LineIncidence | None = None


def _init_worker(n: int) -> None:
    global _INCIDENCE  # pylint: disable=global-statement
    _INCIDENCE = _LineIncidence(n)


def _search_root(first: int) -> list[tuple[int, ...]]:
    assert _INCIDENCE is not None
    return _INCIDENCE.pentagrams_from(first)


def pentagram_census(
    n: int = 3, workers: int | None = None, progress: bool | None = None
) -> PentagramCensus:
    """Enumerates all pentagrams over the n-qubit lines of four.

    The root level (the smallest line of the pentagram) is split across worker processes.
    Results are merged and sorted, so the outcome does not depend on scheduling.
    """
    workers = default_workers() if workers is None else workers
    progress = show_progress() if progress is None else progress
    start = time.perf_counter()
    incidence = _LineIncidence(n)
    roots = range(len(incidence.lines))
    found: list[tuple[int, ...]] = []
    if workers > 1 and len(incidence.lines) > 0:
        with Pool(workers, initializer=_init_worker, initargs=(n,)) as pool:
            for part in tqdm(
                pool.imap_unordered(_search_root, roots, chunksize=8),
                total=len(roots),
                disable=not progress,
                desc="Pentagram census",
            ):
                found.extend(part)
    else:
        for first in tqdm(roots, disable=not progress, desc="Pentagram census"):
            found.extend(incidence.pentagrams_from(first))

    histogram: Counter[int] = Counter()
    magic = []
    for indices in found:
        negatives = sum(1 for index in indices if incidence.signs[index] < 0)
        histogram[negatives] += 1
        if negatives % 2:
            magic.append(tuple(incidence.lines[index] for index in indices))
    magic.sort()
    logger.info(
        f"{len(found)} pentagram-shaped configurations on {len(incidence.lines)} lines, "
        f"{len(magic)} with an odd number of negative lines "
        f"({time.perf_counter() - start:.1f} s)"
    )
    return PentagramCensus(
        n=n,
        good_lines=len(incidence.lines),
        count=len(magic),
        sign_histogram=dict(sorted(histogram.items())),
        pentagrams=magic,
    )


def iter_pentagrams(census: PentagramCensus) -> Iterator[PointLineGeometry]:
    for pentagram in census.pentagrams:
        yield pentagram_geometry(census.n, pentagram)


def pentagram_geometry(n: int, pentagram: tuple[Line, ...]) -> PointLineGeometry:
    codes = sorted({code for line in pentagram for code in line})
    index = {code: i for i, code in enumerate(codes)}
    points = [PauliObservable.from_code(n, code) for code in codes]
    return PointLineGeometry.from_lines(points, [[index[c] for c in line] for line in pentagram])


def canonical_mermin_pentagram() -> PointLineGeometry:
    """The pentagram with the single negative line {XXX, YYX, YXY, XYY}."""
    data = REFERENCE_DATA["mermin_pentagram"]
    points = [PauliObservable.parse(text) for text in data["points"]]
    return PointLineGeometry.from_lines(points, data["lines"])
