"""Endomorphisms and automorphisms of a free group, given by generator images.

Composition follows standard function-composition order: ``e1 * e2``
applies ``e2`` first, then ``e1``, so the images of the product are
``e1(e2(x_k))``.  Equality of endomorphisms of a free group is equality
of generator images, which word reduction makes a plain comparison.

An Automorphism carries an explicit inverse; the pair is checked to be
mutually inverse at construction time.  General inversion in Aut(F_n)
is out of scope, but every map built here has a closed-form inverse.
"""

from __future__ import annotations

from typing import Sequence

from . import _kernels
from .errors import NotInverseError, RankMismatchError, WordSyntaxError
from .matrices import IntMatrix
from .words import FreeWord, format_word, parse_word

DEFAULT_LENGTH_CAP = 10**6

_length_cap = DEFAULT_LENGTH_CAP


def get_length_cap() -> int:
    return _length_cap


def set_length_cap(cap: int) -> None:
    """Set the reduced-length bound enforced during substitution.

    Images under braid actions can grow exponentially in word length;
    the cap turns runaway growth into a clean ResourceLimitError.
    """
    global _length_cap
    if cap < 1:
        raise ValueError(f"cap must be positive, got {cap}")
    _length_cap = cap


class Endomorphism:
    """A map of F_rank determined by the images of the generators."""

    __slots__ = ("rank", "images", "_pos", "_neg")

    def __init__(self, rank: int, images: Sequence[FreeWord]):
        images = tuple(images)
        if len(images) != rank:
            raise RankMismatchError(f"need {rank} images, got {len(images)}")
        for w in images:
            if w.rank != rank:
                raise RankMismatchError(
                    f"image {w!r} has rank {w.rank}, expected {rank}"
                )
        self.rank = rank
        self.images = images
        self._pos = tuple(w.letters for w in images)
        self._neg = tuple(_kernels.invert_reduced(w.letters) for w in images)

    @classmethod
    def identity(cls, rank: int) -> "Endomorphism":
        return cls(rank, tuple(FreeWord.generator(rank, k) for k in range(1, rank + 1)))

    @classmethod
    def from_image_map(cls, rank: int, images: dict[int, FreeWord]) -> "Endomorphism":
        """Identity on every generator except those listed in ``images``."""
        return cls(
            rank,
            tuple(
                images.get(k, FreeWord.generator(rank, k)) for k in range(1, rank + 1)
            ),
        )

    def apply(self, word: FreeWord, cap: int | None = None) -> FreeWord:
        if word.rank != self.rank:
            raise RankMismatchError(
                f"cannot apply rank-{self.rank} map to rank-{word.rank} word"
            )
        letters = _kernels.substitute(
            self._pos, self._neg, word.letters, _length_cap if cap is None else cap
        )
        return FreeWord._wrap(self.rank, letters)

    def __call__(self, word: FreeWord) -> FreeWord:
        return self.apply(word)

    def __mul__(self, other: "Endomorphism") -> "Endomorphism":
        if not isinstance(other, Endomorphism):
            return NotImplemented
        if self.rank != other.rank:
            raise RankMismatchError(
                f"cannot compose maps of ranks {self.rank} and {other.rank}"
            )
        return Endomorphism(self.rank, tuple(self.apply(w) for w in other.images))

    def compose(self, other: "Endomorphism") -> "Endomorphism":
        """``self.compose(other)`` applies ``other`` first."""
        return self * other

    def __pow__(self, exponent: int) -> "Endomorphism":
        if exponent < 0:
            raise ValueError("negative powers need an Automorphism")
        out = Endomorphism.identity(self.rank)
        for _ in range(exponent):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Endomorphism):
            return NotImplemented
        return self.rank == other.rank and self._pos == other._pos

    def __hash__(self) -> int:
        return hash((self.rank, self._pos))

    def is_identity(self) -> bool:
        return self == Endomorphism.identity(self.rank)

    def fixes(self, generator: int) -> bool:
        return self._pos[generator - 1] == (generator,)

    def abelianization_matrix(self) -> IntMatrix:
        """Induced matrix on Z^rank; column k is the abelianized image of x_k."""
        return IntMatrix.from_columns(tuple(w.abelianized() for w in self.images))

    def __repr__(self) -> str:
        return f"Endomorphism({self.rank}, {list(self.images)!r})"

    def __str__(self) -> str:
        return format_endomorphism(self)


class Automorphism:
    """An invertible Endomorphism bundled with its verified inverse."""

    __slots__ = ("forward", "backward")

    def __init__(self, forward: Endomorphism, backward: Endomorphism):
        if forward.rank != backward.rank:
            raise RankMismatchError(
                f"forward rank {forward.rank} != backward rank {backward.rank}"
            )
        for left, right, name in (
            (forward, backward, "forward o backward"),
            (backward, forward, "backward o forward"),
        ):
            for k in range(1, left.rank + 1):
                if left.apply(right.images[k - 1]).letters != (k,):
                    raise NotInverseError(
                        f"{name} does not fix generator {k}", generator=k
                    )
        self.forward = forward
        self.backward = backward

    @classmethod
    def _trusted(cls, forward: Endomorphism, backward: Endomorphism) -> "Automorphism":
        """Internal: skip the inverse check (for products of verified maps)."""
        a = object.__new__(cls)
        a.forward = forward
        a.backward = backward
        return a

    @classmethod
    def identity(cls, rank: int) -> "Automorphism":
        e = Endomorphism.identity(rank)
        return cls._trusted(e, e)

    @property
    def rank(self) -> int:
        return self.forward.rank

    @property
    def images(self) -> tuple[FreeWord, ...]:
        return self.forward.images

    def apply(self, word: FreeWord, cap: int | None = None) -> FreeWord:
        return self.forward.apply(word, cap)

    def __call__(self, word: FreeWord) -> FreeWord:
        return self.forward.apply(word)

    def inverse(self) -> "Automorphism":
        return Automorphism._trusted(self.backward, self.forward)

    def __mul__(self, other: "Automorphism") -> "Automorphism":
        if not isinstance(other, Automorphism):
            return NotImplemented
        return Automorphism._trusted(
            self.forward * other.forward, other.backward * self.backward
        )

    def compose(self, other: "Automorphism") -> "Automorphism":
        return self * other

    def __pow__(self, exponent: int) -> "Automorphism":
        base = self if exponent >= 0 else self.inverse()
        out = Automorphism.identity(self.rank)
        for _ in range(abs(exponent)):
            out = out * base
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Automorphism):
            return NotImplemented
        return self.forward == other.forward

    def __hash__(self) -> int:
        return hash(self.forward)

    def is_identity(self) -> bool:
        return self.forward.is_identity()

    def abelianization_matrix(self) -> IntMatrix:
        return self.forward.abelianization_matrix()

    def __repr__(self) -> str:
        return f"Automorphism({self.forward!r})"

    def __str__(self) -> str:
        return format_endomorphism(self.forward)


def make_automorphism(forward: Endomorphism, backward: Endomorphism) -> Automorphism:
    """Pair two endomorphisms, verifying they are mutually inverse."""
    return Automorphism(forward, backward)


def format_endomorphism(e: Endomorphism) -> str:
    """One ``name -> image`` line per generator, in the word grammar."""
    lines = []
    for k in range(1, e.rank + 1):
        name = format_word(FreeWord.generator(e.rank, k))
        lines.append(f"{name} -> {format_word(e.images[k - 1])}")
    return "\n".join(lines)


def parse_endomorphism(text: str, rank: int) -> Endomorphism:
    """Parse the ``name -> image`` line format produced by format_endomorphism.

    Generators missing from the text are fixed.
    """
    images: dict[int, FreeWord] = {}
    for lineno, line in enumerate(text.splitlines()):
        if not line.strip():
            continue
        if "->" not in line:
            raise WordSyntaxError(f"missing '->' in line {lineno + 1}", 0)
        left, right = line.split("->", 1)
        source = parse_word(left, rank)
        if len(source.letters) != 1 or source.letters[0] < 0:
            raise WordSyntaxError(
                f"left side of line {lineno + 1} must be a single generator", 0
            )
        images[source.letters[0]] = parse_word(right, rank)
    return Endomorphism.from_image_map(rank, images)
