import pytest

from contextual.capacity.graphs import SmallGraph, cycle, pentagram_graph, petersen
from contextual.dessins.hypermap import Hypermap, fig1, fig2, fig3b
from contextual.geometry.configurations import PointLineGeometry, canonical_mermin_square
from contextual.geometry.configurations import fano_heptads
from contextual.geometry.pentagrams import canonical_mermin_pentagram
from contextual.pauli.observable import PauliObservable


@pytest.fixture
def mermin_square_grid() -> list[list[str]]:
    return [
        ["IX", "XX", "XI"],
        ["ZX", "YY", "XZ"],
        ["ZI", "ZZ", "IZ"],
    ]


@pytest.fixture
def mermin_pentagram_points() -> list[str]:
    return ["XXX", "YYX", "YXY", "XYY", "XII", "IXI", "IIX", "YII", "IYI", "IIY"]


@pytest.fixture
def bell_quadruple_texts() -> list[str]:
    return ["IX", "XI", "IZ", "ZI"]


@pytest.fixture
def two_qubit_observables() -> list[PauliObservable]:
    return [PauliObservable.parse(text) for text in ("XX", "YY", "ZZ", "XZ", "ZX", "YI")]


@pytest.fixture
def mermin_square() -> PointLineGeometry:
    return canonical_mermin_square()


@pytest.fixture
def mermin_pentagram() -> PointLineGeometry:
    return canonical_mermin_pentagram()


@pytest.fixture(scope="session")
def heptads() -> list[PointLineGeometry]:
    return fano_heptads()


@pytest.fixture
def fano(heptads: list[PointLineGeometry]) -> PointLineGeometry:
    return heptads[0]


@pytest.fixture
def dessin_fig1() -> Hypermap:
    return fig1()


@pytest.fixture
def dessin_fig2() -> Hypermap:
    return fig2()


@pytest.fixture
def dessin_fig3b() -> Hypermap:
    return fig3b()


@pytest.fixture
def pentagon() -> SmallGraph:
    return cycle(5)


@pytest.fixture
def petersen_graph() -> SmallGraph:
    return petersen()


@pytest.fixture
def pentagram() -> SmallGraph:
    return pentagram_graph()
