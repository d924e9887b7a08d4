"""Braid words, the Artin action on a free group, and exact braid equality.

A braid word on n strands is a freely reduced sequence of signed
generator indices (``+i`` for the i-th elementary crossing, ``-i`` for
its inverse).  Free reduction alone does not solve the word problem;
``braids_equal`` decides equality through the classical faithful Artin
action on F_n,

    x_i -> x_i x_{i+1} x_i^{-1},   x_{i+1} -> x_i,   others fixed,

so two braid words are equal iff their actions agree on every generator.
This oracle is exact and fast for the word lengths that occur here; no
Garside machinery is involved.

Note ``==`` on BraidWord is structural (same reduced letters); use
``braids_equal`` for equality in the group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from . import _kernels
from .errors import MalformedWordError, StrandMismatchError, WordSyntaxError
from .endo import Automorphism, Endomorphism
from .words import FreeWord


@dataclass(frozen=True, slots=True)
class BraidWord:
    """A word in the braid group B_strands, stored freely reduced."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 2:
            raise MalformedWordError(f"need at least 2 strands, got {self.strands}")
        raw = tuple(int(x) for x in self.letters)
        for x in raw:
            if x == 0 or abs(x) >= self.strands:
                raise MalformedWordError(
                    f"crossing {x} is out of range for {self.strands} strands"
                )
        object.__setattr__(self, "letters", _kernels.reduce_letters(raw))

    @classmethod
    def _wrap(cls, strands: int, letters: tuple[int, ...]) -> "BraidWord":
        b = object.__new__(cls)
        object.__setattr__(b, "strands", strands)
        object.__setattr__(b, "letters", letters)
        return b

    @classmethod
    def identity(cls, strands: int) -> "BraidWord":
        return cls(strands)

    @classmethod
    def generator(cls, strands: int, index: int, sign: int = 1) -> "BraidWord":
        return cls(strands, (index * sign,))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if self.strands != other.strands:
            raise StrandMismatchError(
                f"cannot concatenate braids on {self.strands} and {other.strands} strands"
            )
        return BraidWord._wrap(
            self.strands, _kernels.concat_reduced(self.letters, other.letters)
        )

    def inverse(self) -> "BraidWord":
        return BraidWord._wrap(self.strands, _kernels.invert_reduced(self.letters))

    def __invert__(self) -> "BraidWord":
        return self.inverse()

    def __pow__(self, exponent: int) -> "BraidWord":
        base = self if exponent >= 0 else self.inverse()
        out = BraidWord.identity(self.strands)
        for _ in range(abs(exponent)):
            out = out * base
        return out

    def conjugated_by(self, c: "BraidWord") -> "BraidWord":
        """c * self * c^-1."""
        return c * self * c.inverse()

    def __str__(self) -> str:
        return format_braid(self)

    def __repr__(self) -> str:
        return f"BraidWord({self.strands}, {self.letters!r})"


@lru_cache(maxsize=None)
def _artin_generator(strands: int, index: int) -> Automorphism:
    """The Artin automorphism of F_strands induced by one crossing."""
    n = strands
    x = lambda k, sign=1: FreeWord.generator(n, k, sign)
    i = index
    forward = Endomorphism.from_image_map(
        n, {i: FreeWord(n, (i, i + 1, -i)), i + 1: x(i)}
    )
    backward = Endomorphism.from_image_map(
        n, {i: x(i + 1), i + 1: FreeWord(n, (-(i + 1), i, i + 1))}
    )
    return Automorphism(forward, backward)


def artin_action(braid: BraidWord) -> Automorphism:
    """The automorphism of F_strands carried by a braid word.

    Homomorphic for the composition convention of the endo module: the
    rightmost crossing of the word acts first.
    """
    out = Automorphism.identity(braid.strands)
    for letter in braid.letters:
        gen = _artin_generator(braid.strands, abs(letter))
        out = out * (gen if letter > 0 else gen.inverse())
    return out


def braids_equal(b1: BraidWord, b2: BraidWord) -> bool:
    """Exact equality in the braid group, via faithfulness of the Artin action."""
    if b1.strands != b2.strands:
        raise StrandMismatchError(
            f"cannot compare braids on {b1.strands} and {b2.strands} strands"
        )
    if b1.letters == b2.letters:
        return True
    return artin_action(b1) == artin_action(b2)


def half_twist(strands: int) -> BraidWord:
    """The positive half twist: (s_1..s_{n-1})(s_1..s_{n-2})...(s_1)."""
    letters = []
    for top in range(strands - 1, 0, -1):
        letters.extend(range(1, top + 1))
    return BraidWord(strands, tuple(letters))


def full_twist(strands: int) -> BraidWord:
    """(s_1..s_{n-1})^n, the generator of the center of B_n for n >= 3."""
    return BraidWord(strands, tuple(range(1, strands))) ** strands


def full_twist_center_check(strands: int) -> bool:
    """Mechanically confirm that the full twist commutes with every generator."""
    if strands < 3:
        raise MalformedWordError(f"center check needs at least 3 strands, got {strands}")
    ft = full_twist(strands)
    return all(
        braids_equal(ft * BraidWord.generator(strands, i), BraidWord.generator(strands, i) * ft)
        for i in range(1, strands)
    )


# Named abbreviations accepted by the 6-strand parser.
_NAMED_B6 = {
    "DELTA6": lambda: half_twist(6).letters,
    "ALPHA": lambda: (4, 5) * 3,
    "BETA": lambda: (-3, 1, 2, 1, 2, 1, 2, 3),
    "GAMMA": lambda: (1, -3, 5),
}


def parse_braid(text: str, strands: int) -> BraidWord:
    """Parse whitespace-separated signed crossing indices.

    ``k`` is the k-th generator, ``-k`` its inverse.  On six strands the
    tokens DELTA6, ALPHA, BETA and GAMMA expand to the corresponding
    named braids.
    """
    letters: list[int] = []
    for match in re.finditer(r"\S+", text):
        token = match.group()
        if token in _NAMED_B6:
            if strands != 6:
                raise WordSyntaxError(
                    f"named braid {token} is only defined on 6 strands", match.start()
                )
            letters.extend(_NAMED_B6[token]())
            continue
        try:
            value = int(token)
        except ValueError:
            raise WordSyntaxError(f"bad token {token!r}", match.start()) from None
        if value == 0 or abs(value) >= strands:
            raise WordSyntaxError(
                f"crossing {value} is out of range for {strands} strands", match.start()
            )
        letters.append(value)
    return BraidWord(strands, tuple(letters))


def format_braid(braid: BraidWord) -> str:
    """Space-joined signed indices; the identity formats as ""."""
    return " ".join(str(x) for x in braid.letters)
