"""Pure-Python word kernels.

A word over a free alphabet is a sequence of nonzero signed integers:
``+k`` is the k-th generator, ``-k`` its inverse.  "Reduced" means no
adjacent pair ``x, -x``.  Every kernel returns a reduced tuple.

This module is the reference implementation; ``_core.pyx`` is a compiled
twin with identical semantics, selected at import time by the package
``__init__``.
"""

from __future__ import annotations

from collections.abc import Sequence

from braidact.errors import ResourceLimitError

BACKEND = "pure"


def reduce_letters(letters: Sequence[int]) -> tuple[int, ...]:
    """Freely reduce an arbitrary letter sequence."""
    stack: list[int] = []
    push = stack.append
    pop = stack.pop
    for x in letters:
        if stack and stack[-1] == -x:
            pop()
        else:
            push(x)
    return tuple(stack)


def concat_reduced(w1: Sequence[int], w2: Sequence[int]) -> tuple[int, ...]:
    """Concatenate two reduced words, cancelling only at the seam."""
    i = len(w1)
    j = 0
    n2 = len(w2)
    while i > 0 and j < n2 and w1[i - 1] == -w2[j]:
        i -= 1
        j += 1
    return tuple(w1[:i]) + tuple(w2[j:])


def invert_reduced(w: Sequence[int]) -> tuple[int, ...]:
    """Inverse of a reduced word: reversed order, flipped signs."""
    return tuple(-x for x in reversed(w))


def substitute(
    pos_images: Sequence[tuple[int, ...]],
    neg_images: Sequence[tuple[int, ...]],
    word: Sequence[int],
    cap: int,
) -> tuple[int, ...]:
    """Apply a generator substitution to a reduced word, reducing on the fly.

    ``pos_images[k-1]`` / ``neg_images[k-1]`` are the reduced images of
    the k-th generator and of its inverse.  Raises ResourceLimitError as
    soon as the reduced intermediate exceeds ``cap`` letters.
    """
    stack: list[int] = []
    push = stack.append
    pop = stack.pop
    for x in word:
        image = pos_images[x - 1] if x > 0 else neg_images[-x - 1]
        for y in image:
            if stack and stack[-1] == -y:
                pop()
            else:
                push(y)
                if len(stack) > cap:
                    raise ResourceLimitError(cap)
    return tuple(stack)
