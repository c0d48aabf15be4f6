import numpy as np
import pydantic
import pytest

from contextual.pauli import observable
from contextual.pauli.observable import (
    PauliError,
    PauliObservable,
    PauliParseError,
    QubitCountError,
    all_projective,
)


@pytest.mark.parametrize(
    "text, exponent, letters",
    [("IX", 0, "IX"), ("-ZZ", 2, "ZZ"), ("iY", 1, "Y"), ("-iXYZ", 3, "XYZ"), ("+XI", 0, "XI")],
)
def test_parse(text: str, exponent: int, letters: str) -> None:
    p = PauliObservable.parse(text)
    assert p.phase_exponent == exponent
    assert p.letters == letters
    assert p.n == len(letters)


def test_str_keeps_phase() -> None:
    assert str(PauliObservable.parse("-iXYZ")) == "-iXYZ"
    assert str(PauliObservable.parse("ZZ")) == "ZZ"


@pytest.mark.parametrize("text", ["", "XQ", "2X", "i-X", "xx"])
def test_parse_rejects_bad_notation(text: str) -> None:
    with pytest.raises(PauliParseError):
        PauliObservable.parse(text)


def test_qubit_count_cap() -> None:
    with pytest.raises(pydantic.ValidationError):
        PauliObservable(n=9)
    with pytest.raises(pydantic.ValidationError):
        PauliObservable(n=0)


def test_bits_must_fit() -> None:
    with pytest.raises(pydantic.ValidationError):
        PauliObservable(n=1, x_bits=2)


def test_single_qubit_products() -> None:
    x, y, z = (PauliObservable.parse(t) for t in "XYZ")
    assert str(x * z) == "-iY"
    assert str(z * x) == "iY"
    assert str(x * y) == "iZ"
    assert (x * x).is_identity
    assert (y * y).phase_exponent == 0


def test_commutation(two_qubit_observables: list[PauliObservable]) -> None:
    xx, yy, zz, xz, zx, yi = two_qubit_observables
    assert observable.commutes(xx, yy)
    assert observable.commutes(xx, zz)
    assert observable.commutes(xz, zx)
    assert not observable.commutes(xx, yi)
    assert not observable.commutes(zz, yi)
    assert not observable.commutes(PauliObservable.parse("XI"), PauliObservable.parse("ZI"))


def test_commutation_matches_matrices(two_qubit_observables: list[PauliObservable]) -> None:
    for a in two_qubit_observables:
        for b in two_qubit_observables:
            ma, mb = a.to_matrix(), b.to_matrix()
            assert observable.commutes(a, b) == np.allclose(ma @ mb, mb @ ma)


def test_product_matches_matrices(two_qubit_observables: list[PauliObservable]) -> None:
    for a in two_qubit_observables:
        for b in two_qubit_observables:
            assert np.allclose((a * b).to_matrix(), a.to_matrix() @ b.to_matrix())


def test_different_sizes_rejected() -> None:
    with pytest.raises(QubitCountError):
        observable.commutes(PauliObservable.parse("X"), PauliObservable.parse("XX"))
    with pytest.raises(QubitCountError):
        observable.multiply(PauliObservable.parse("X"), PauliObservable.parse("XX"))


def test_product_sign() -> None:
    line = [PauliObservable.parse(t) for t in ("XX", "YY", "ZZ")]
    assert observable.product_sign(line) == -1
    row = [PauliObservable.parse(t) for t in ("IX", "XX", "XI")]
    assert observable.product_sign(row) == 1


def test_product_sign_needs_identity() -> None:
    with pytest.raises(PauliError):
        observable.product_sign([PauliObservable.parse("XX"), PauliObservable.parse("YY")])


def test_canonical_and_code() -> None:
    p = PauliObservable.parse("-iXZ")
    q = p.canonical()
    assert q.phase_exponent == 0
    assert q.code == p.code
    assert PauliObservable.from_code(2, p.code) == q
    assert q.with_sign(-1).phase_exponent == 2


def test_all_projective() -> None:
    classes = list(all_projective(2))
    assert len(classes) == 15
    assert len({p.code for p in classes}) == 15
    assert all(p.is_hermitian and not p.is_identity for p in classes)
    assert len(list(all_projective(3))) == 63


def test_matrix_of_y() -> None:
    assert np.allclose(PauliObservable.parse("Y").to_matrix(), [[0, -1j], [1j, 0]])
    assert PauliObservable.parse("XYZ").to_matrix().shape == (8, 8)


def _every_operator(n: int) -> list[PauliObservable]:
    return [
        PauliObservable.from_code(n, code, phase)
        for code in range(1 << (2 * n))
        for phase in range(4)
    ]


@pytest.mark.parametrize("n", [1, 2])
def test_every_pair_matches_matrices(n: int) -> None:
    operators = _every_operator(n)
    matrices = [p.to_matrix() for p in operators]
    for a, ma in zip(operators, matrices):
        for b, mb in zip(operators, matrices):
            assert observable.commutes(a, b) == np.allclose(ma @ mb, mb @ ma)
            assert np.allclose((a * b).to_matrix(), ma @ mb)


def test_random_three_qubit_operators_match_matrices() -> None:
    rng = np.random.default_rng(2023)
    for _ in range(1000):
        codes = rng.integers(0, 64, size=2)
        phases = rng.integers(0, 4, size=2)
        a, b = (
            PauliObservable.from_code(3, int(code), int(phase))
            for code, phase in zip(codes, phases)
        )
        ma, mb = a.to_matrix(), b.to_matrix()
        assert observable.commutes(a, b) == np.allclose(ma @ mb, mb @ ma)
        assert np.allclose((a * b).to_matrix(), ma @ mb)


def test_product_is_associative() -> None:
    rng = np.random.default_rng(7)
    for _ in range(500):
        n = int(rng.integers(1, 5))
        a, b, c = (
            PauliObservable.from_code(n, int(rng.integers(0, 1 << (2 * n))), int(rng.integers(4)))
            for _ in range(3)
        )
        assert (a * b) * c == a * (b * c)


@pytest.mark.parametrize("n, commuting, anticommuting", [(2, 6, 8), (3, 30, 32)])
def test_commutation_counts(n: int, commuting: int, anticommuting: int) -> None:
    classes = list(all_projective(n))
    for a in classes:
        others = [b for b in classes if b != a]
        together = sum(observable.commutes(a, b) for b in others)
        assert together == commuting
        assert len(others) - together == anticommuting


@pytest.mark.parametrize("n", [1, 2, 3])
def test_projective_observables_square_to_identity(n: int) -> None:
    identity = PauliObservable.identity(n)
    for p in all_projective(n):
        assert p * p == identity
        assert np.allclose(p.to_matrix() @ p.to_matrix(), np.eye(1 << n))
