"""N-qubit Pauli observables in the binary symplectic representation.

An observable is ``i**phase_exponent * P(x_0, z_0) (x) ... (x) P(x_{n-1}, z_{n-1})`` with

    P(0, 0) = I,  P(1, 0) = X,  P(0, 1) = Z,  P(1, 1) = Y

where Y is the Hermitian matrix ``iXZ``. Qubit 0 is the leftmost letter of the text notation
and the most significant bit of ``x_bits`` and ``z_bits``.
"""
from __future__ import annotations

import re
from functools import reduce
from typing import Iterable, Iterator

import numpy as np
import pydantic
from loguru import logger
from numpy.typing import NDArray

from contextual.parameters.parameters import CAPS


class PauliError(ValueError):
    """An error related to Pauli observables"""


class QubitCountError(PauliError):
    """Observables with incompatible or out of range qubit counts"""


class PauliParseError(PauliError):
    """Text that is not a Pauli observable"""


LETTERS = {(0, 0): "I", (1, 0): "X", (0, 1): "Z", (1, 1): "Y"}
BITS = {letter: bits for bits, letter in LETTERS.items()}
PHASE_PREFIXES = {0: "", 1: "i", 2: "-", 3: "-i"}

SINGLE_QUBIT_MATRICES = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

_NOTATION = re.compile(r"^(?P<sign>[+-]?)(?P<imaginary>i?)(?P<letters>[IXYZ]+)$")


def _popcount(value: int) -> int:
    return bin(value).count("1")


def symplectic_form(x1: int, z1: int, x2: int, z2: int) -> int:
    """The binary symplectic form a.x.b.z + a.z.b.x (mod 2) on bit-packed operators."""
    return (_popcount(x1 & z2) + _popcount(z1 & x2)) & 1


def product_phase(x1: int, z1: int, x2: int, z2: int) -> int:
    """Exponent of i picked up by P(x1, z1) P(x2, z2) = i**k P(x1 ^ x2, z1 ^ z2)."""
    x3, z3 = x1 ^ x2, z1 ^ z2
    return (
        _popcount(x1 & z1) + _popcount(x2 & z2) + 2 * _popcount(z1 & x2) - _popcount(x3 & z3)
    ) % 4


class PauliObservable(pydantic.BaseModel):
    """An N-qubit Pauli operator: a power of i times a tensor product of I, X, Y, Z.

    Attributes:
        n: Number of qubits.
        phase_exponent: k in the overall phase i**k.
        x_bits: X-part of the symplectic vector, qubit 0 in the most significant bit.
        z_bits: Z-part of the symplectic vector.
    """

    model_config = pydantic.ConfigDict(frozen=True)

    n: int
    phase_exponent: int = 0
    x_bits: int = 0
    z_bits: int = 0

    @pydantic.field_validator("n")
    @classmethod
    def qubit_count_validator(cls, value: int) -> int:
        if not 1 <= value <= CAPS["max_qubits"]:
            raise QubitCountError(
                f"Unsupported number of qubits: {value=}. Use 1 to {CAPS['max_qubits']} qubits."
            )
        return value

    @pydantic.field_validator("phase_exponent")
    @classmethod
    def phase_validator(cls, value: int) -> int:
        return value % 4

    @pydantic.model_validator(mode="after")
    def bits_validator(self) -> PauliObservable:
        if not (0 <= self.x_bits < 1 << self.n and 0 <= self.z_bits < 1 << self.n):
            raise PauliError(f"Bit strings do not fit in {self.n} qubits")
        return self

    @classmethod
    def parse(cls, text: str) -> PauliObservable:
        """Reads the text notation, e.g. ``IX``, ``-ZZ``, ``iY`` or ``-iXYZ``.

        Raises:
            PauliParseError: If the text is not in the notation.
        """
        match = _NOTATION.match(text.strip())
        if match is None:
            raise PauliParseError(f"Not a Pauli observable: {text!r}")
        letters = match["letters"]
        exponent = (2 if match["sign"] == "-" else 0) + (1 if match["imaginary"] else 0)
        x_bits = z_bits = 0
        for letter in letters:
            x, z = BITS[letter]
            x_bits = (x_bits << 1) | x
            z_bits = (z_bits << 1) | z
        return cls(n=len(letters), phase_exponent=exponent, x_bits=x_bits, z_bits=z_bits)

    @classmethod
    def from_code(cls, n: int, code: int, phase_exponent: int = 0) -> PauliObservable:
        return cls(
            n=n, phase_exponent=phase_exponent, x_bits=code >> n, z_bits=code & ((1 << n) - 1)
        )

    @classmethod
    def identity(cls, n: int) -> PauliObservable:
        return cls(n=n)

    def __str__(self) -> str:
        return PHASE_PREFIXES[self.phase_exponent] + self.letters

    @property
    def letters(self) -> str:
        return "".join(
            LETTERS[((self.x_bits >> shift) & 1, (self.z_bits >> shift) & 1)]
            for shift in range(self.n - 1, -1, -1)
        )

    @property
    def phase(self) -> complex:
        return (1, 1j, -1, -1j)[self.phase_exponent]

    @property
    def code(self) -> int:
        """Integer symplectic encoding (x_bits, z_bits); the projective class of the operator."""
        return (self.x_bits << self.n) | self.z_bits

    @property
    def is_identity(self) -> bool:
        return self.x_bits == 0 and self.z_bits == 0

    @property
    def is_hermitian(self) -> bool:
        return self.phase_exponent % 2 == 0

    def canonical(self) -> PauliObservable:
        """The Hermitian representative with phase +1 of the projective class."""
        return PauliObservable(n=self.n, x_bits=self.x_bits, z_bits=self.z_bits)

    def with_sign(self, sign: int) -> PauliObservable:
        return PauliObservable(
            n=self.n, phase_exponent=0 if sign > 0 else 2, x_bits=self.x_bits, z_bits=self.z_bits
        )

    def __mul__(self, other: PauliObservable) -> PauliObservable:
        return multiply(self, other)

    def to_matrix(self) -> NDArray:
        return to_matrix(self)


def _check_same_size(a: PauliObservable, b: PauliObservable) -> None:
    if a.n != b.n:
        logger.error(f"Mismatched qubit counts: {a} has {a.n}, {b} has {b.n}")
        raise QubitCountError(f"Observables act on different systems ({a.n=}, {b.n=})")


def commutes(a: PauliObservable, b: PauliObservable) -> bool:
    """Whether two observables commute, decided by the binary symplectic form.

    Raises:
        QubitCountError: If the observables act on different numbers of qubits.
    """
    _check_same_size(a, b)
    return symplectic_form(a.x_bits, a.z_bits, b.x_bits, b.z_bits) == 0


def multiply(a: PauliObservable, b: PauliObservable) -> PauliObservable:
    """Exact product ab, phases included.

    Raises:
        QubitCountError: If the observables act on different numbers of qubits.
    """
    _check_same_size(a, b)
    exponent = (
        a.phase_exponent
        + b.phase_exponent
        + product_phase(a.x_bits, a.z_bits, b.x_bits, b.z_bits)
    )
    return PauliObservable(
        n=a.n, phase_exponent=exponent, x_bits=a.x_bits ^ b.x_bits, z_bits=a.z_bits ^ b.z_bits
    )


def multiply_all(observables: Iterable[PauliObservable]) -> PauliObservable:
    """Left-to-right product of a non-empty sequence of observables."""
    return reduce(multiply, observables)


def product_sign(observables: Iterable[PauliObservable]) -> int:
    """Sign s of a product of canonical representatives equal to s times the identity.

    Raises:
        PauliError: If the product is not plus or minus the identity.
    """
    product = multiply_all(observable.canonical() for observable in observables)
    if not product.is_identity or product.phase_exponent % 2:
        raise PauliError(f"Product {product} is not plus or minus the identity")
    return 1 if product.phase_exponent == 0 else -1


def to_matrix(a: PauliObservable) -> NDArray:
    """Dense 2**n x 2**n matrix: Kronecker product of the factors times the phase."""
    factors = [SINGLE_QUBIT_MATRICES[letter] for letter in a.letters]
    return a.phase * reduce(np.kron, factors)


def all_projective(n: int) -> Iterator[PauliObservable]:
    """The 4**n - 1 non-identity projective classes, in increasing ``code`` order."""
    for code in range(1, 1 << (2 * n)):
        yield PauliObservable.from_code(n, code)
