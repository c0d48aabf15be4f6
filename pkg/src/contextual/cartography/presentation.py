"""Finitely presented groups with words over generator columns.

A word is a tuple of columns: generator g is column 2g and its inverse is column 2g + 1, so
``column ^ 1`` inverts a letter. The same numbering indexes the columns of coset tables.
"""
from __future__ import annotations

import re
from typing import Sequence

import pydantic
from loguru import logger

Word = tuple[int, ...]


class CartographyError(ValueError):
    """An error related to presentations, coset tables and permutation groups"""


class PresentationError(CartographyError):
    """A malformed presentation or an impossible Tietze transformation"""


_TOKEN = re.compile(r"^(?P<name>[A-Za-z_]\w*)(\^(?P<power>-?\d+))?$")


def invert(word: Word) -> Word:
    return tuple(column ^ 1 for column in reversed(word))


def free_reduce(word: Word) -> Word:
    reduced: list[int] = []
    for column in word:
        if reduced and reduced[-1] == column ^ 1:
            reduced.pop()
        else:
            reduced.append(column)
    return tuple(reduced)


def cyclically_reduce(word: Word) -> Word:
    word = free_reduce(word)
    while len(word) > 1 and word[0] == word[-1] ^ 1:
        word = word[1:-1]
    return word


class FinitelyPresentedGroup(pydantic.BaseModel):
    """<generators | relators>, every relator a word equal to the identity."""

    model_config = pydantic.ConfigDict(frozen=True)

    generators: tuple[str, ...]
    relators: tuple[Word, ...]

    @pydantic.model_validator(mode="after")
    def words_validator(self) -> FinitelyPresentedGroup:
        if len(set(self.generators)) != len(self.generators) or not self.generators:
            raise PresentationError(f"Invalid generator names {self.generators}")
        width = 2 * len(self.generators)
        for relator in self.relators:
            if any(not 0 <= column < width for column in relator):
                raise PresentationError(f"Relator {relator} uses unknown generators")
        return self

    @classmethod
    def parse(cls, generators: Sequence[str], relators: Sequence[str]) -> FinitelyPresentedGroup:
        """Reads relators like ``"r1^2"`` or ``"r0*r1*r2"``.

        Raises:
            PresentationError: If a token names an unknown generator or is malformed.
        """
        index = {name: i for i, name in enumerate(generators)}
        words = []
        for text in relators:
            word: list[int] = []
            for token in text.replace(" ", "").split("*"):
                match = _TOKEN.match(token)
                if match is None or match["name"] not in index:
                    logger.error(f"Cannot read {token!r} in relator {text!r}")
                    raise PresentationError(f"Cannot read {token!r} in relator {text!r}")
                power = int(match["power"] or 1)
                column = 2 * index[match["name"]] + (1 if power < 0 else 0)
                word.extend([column] * abs(power))
            words.append(cyclically_reduce(tuple(word)))
        return cls(generators=tuple(generators), relators=tuple(w for w in words if w))

    def word_to_text(self, word: Word) -> str:
        return "*".join(
            self.generators[column // 2] + ("^-1" if column % 2 else "") for column in word
        )

    def eliminate_generator(self, name: str) -> FinitelyPresentedGroup:
        """Tietze transformation removing a generator that occurs once in some relator.

        From the relator ``u g v`` follows ``g = u^-1 v^-1``, which is substituted into the
        remaining relators.

        Raises:
            PresentationError: If no relator contains the generator exactly once.
        """
        if name not in self.generators:
            raise PresentationError(f"Unknown generator {name!r}")
        g = self.generators.index(name)
        for position, relator in enumerate(self.relators):
            occurrences = [i for i, column in enumerate(relator) if column // 2 == g]
            if len(occurrences) == 1:
                break
        else:
            raise PresentationError(f"No relator contains {name!r} exactly once")
        i = occurrences[0]
        u, v = relator[:i], relator[i + 1 :]
        value = invert(u) + invert(v)
        if relator[i] % 2:
            value = invert(value)

        def substitute(word: Word) -> Word:
            result: list[int] = []
            for column in word:
                if column // 2 == g:
                    result.extend(value if column % 2 == 0 else invert(value))
                else:
                    result.append(column)
            return tuple(column - 2 if column // 2 > g else column for column in result)

        relators = [
            cyclically_reduce(substitute(other))
            for j, other in enumerate(self.relators)
            if j != position
        ]
        generators = self.generators[:g] + self.generators[g + 1 :]
        logger.debug(f"Eliminated {name} = {self.word_to_text(value)}")
        return FinitelyPresentedGroup(
            generators=generators, relators=tuple(sorted({r for r in relators if r}))
        )


CARTOGRAPHIC_GROUP_FULL = FinitelyPresentedGroup.parse(
    ["rho0", "rho1", "rho2"], ["rho1^2", "rho0*rho1*rho2"]
)
# <rho0, rho1 | rho1^2> after rho2 = (rho0 rho1)^-1
CARTOGRAPHIC_GROUP = CARTOGRAPHIC_GROUP_FULL.eliminate_generator("rho2")
