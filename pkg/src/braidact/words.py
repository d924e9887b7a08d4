"""Freely reduced words in a free group of finite rank.

Letters are encoded as nonzero signed integers (the Tietze convention):
``+k`` is the k-th generator and ``-k`` its inverse.  For a group of
even rank 2g the generators carry the names ``a1..ag, b1..bg`` in that
order, so ``a_i`` has index ``i`` and ``b_i`` has index ``g+i``; this is
also the basis order used for abelianized matrices.

Words reduce at construction and stay reduced, so equality of group
elements is plain sequence equality.  All values are immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from . import _kernels
from .errors import MalformedWordError, RankMismatchError, WordSyntaxError


class Letter(NamedTuple):
    """A single generator occurrence: 1-based index plus a sign."""

    generator: int
    sign: int

    def encode(self) -> int:
        return self.generator * self.sign

    @classmethod
    def decode(cls, code: int) -> "Letter":
        if code == 0:
            raise MalformedWordError("letter code 0 is not a generator")
        return cls(abs(code), 1 if code > 0 else -1)


@dataclass(frozen=True, slots=True)
class FreeWord:
    """A freely reduced word; the identity is the empty word.

    The constructor accepts any raw letter sequence (signed integers or
    Letter pairs), validates indices against ``rank``, and reduces.
    """

    rank: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.rank < 0:
            raise MalformedWordError(f"rank must be >= 0, got {self.rank}")
        raw = tuple(x.encode() if isinstance(x, Letter) else int(x) for x in self.letters)
        for x in raw:
            if x == 0 or abs(x) > self.rank:
                raise MalformedWordError(
                    f"letter {x} is outside the alphabet of rank {self.rank}"
                )
        object.__setattr__(self, "letters", _kernels.reduce_letters(raw))

    @classmethod
    def _wrap(cls, rank: int, letters: tuple[int, ...]) -> "FreeWord":
        """Internal: adopt an already-reduced, already-validated tuple."""
        w = object.__new__(cls)
        object.__setattr__(w, "rank", rank)
        object.__setattr__(w, "letters", letters)
        return w

    @classmethod
    def identity(cls, rank: int) -> "FreeWord":
        return cls(rank)

    @classmethod
    def generator(cls, rank: int, index: int, sign: int = 1) -> "FreeWord":
        if sign not in (1, -1):
            raise MalformedWordError(f"sign must be +1 or -1, got {sign}")
        return cls(rank, (index * sign,))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def is_identity(self) -> bool:
        return not self.letters

    def as_letters(self) -> tuple[Letter, ...]:
        return tuple(Letter.decode(x) for x in self.letters)

    def __mul__(self, other: "FreeWord") -> "FreeWord":
        if not isinstance(other, FreeWord):
            return NotImplemented
        if self.rank != other.rank:
            raise RankMismatchError(
                f"cannot concatenate words of ranks {self.rank} and {other.rank}"
            )
        return FreeWord._wrap(self.rank, _kernels.concat_reduced(self.letters, other.letters))

    def inverse(self) -> "FreeWord":
        return FreeWord._wrap(self.rank, _kernels.invert_reduced(self.letters))

    def __invert__(self) -> "FreeWord":
        return self.inverse()

    def __pow__(self, exponent: int) -> "FreeWord":
        base = self if exponent >= 0 else self.inverse()
        out = FreeWord.identity(self.rank)
        for _ in range(abs(exponent)):
            out = out * base
        return out

    def is_positive(self) -> bool:
        """True iff the word lies in the free monoid on the generators."""
        return all(x > 0 for x in self.letters)

    def abelianized(self) -> tuple[int, ...]:
        """Signed occurrence count of each generator, as a length-rank vector."""
        counts = [0] * self.rank
        for x in self.letters:
            counts[abs(x) - 1] += 1 if x > 0 else -1
        return tuple(counts)

    def __str__(self) -> str:
        if self.rank % 2:
            return " ".join(str(x) for x in self.letters)
        return format_word(self)

    def __repr__(self) -> str:
        return f"FreeWord({self.rank}, {self.letters!r})"


def reduce_word(rank: int, letters: Iterable[int | Letter]) -> FreeWord:
    """Freely reduce a raw letter sequence into a word of the given rank."""
    return FreeWord(rank, tuple(letters))


_TOKEN = re.compile(r"([abAB])([1-9][0-9]*)\Z")


def parse_word(text: str, rank: int) -> FreeWord:
    """Parse the whitespace-separated ``a1 B2 ...`` grammar.

    Lowercase tokens are generators, uppercase their inverses; the empty
    string is the identity.  Requires an even rank 2g so that the a/b
    naming is meaningful.
    """
    stripped = text.strip()
    if not stripped:
        return FreeWord.identity(rank)
    if rank % 2:
        raise WordSyntaxError(f"the a/b grammar needs an even rank, got {rank}", 0)
    g = rank // 2
    codes = []
    for match in re.finditer(r"\S+", text):
        token = match.group()
        m = _TOKEN.match(token)
        if m is None:
            raise WordSyntaxError(f"bad token {token!r}", match.start())
        name, index = m.group(1), int(m.group(2))
        if index > g:
            raise WordSyntaxError(
                f"index {index} in {token!r} exceeds genus {g} (rank {rank})",
                match.start(),
            )
        code = index if name in "aA" else g + index
        if name.isupper():
            code = -code
        codes.append(code)
    return FreeWord(rank, tuple(codes))


def format_word(word: FreeWord) -> str:
    """Format a word in the grammar accepted by parse_word (identity -> "")."""
    if word.rank % 2:
        raise ValueError(f"the a/b grammar needs an even rank, got {word.rank}")
    g = word.rank // 2
    tokens = []
    for x in word.letters:
        k = abs(x)
        name = f"a{k}" if k <= g else f"b{k - g}"
        tokens.append(name.upper() if x < 0 else name)
    return " ".join(tokens)
