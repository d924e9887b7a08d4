"""Backend parity: the compiled kernels must agree with the pure twins."""

import random

import pytest

from braidact import _kernels
from braidact.errors import ResourceLimitError

SEED = 0xFA57

pure = _kernels.backend_module("pure")
backends = [_kernels.backend_module(name) for name in _kernels.available_backends()]


def random_raw(rng, rank, n):
    return tuple(rng.choice([1, -1]) * rng.randrange(1, rank + 1) for _ in range(n))


@pytest.mark.parametrize("impl", backends, ids=lambda m: m.BACKEND)
def test_reduce_agrees_with_pure(impl):
    rng = random.Random(SEED)
    for _ in range(300):
        raw = random_raw(rng, 5, rng.randrange(60))
        assert impl.reduce_letters(raw) == pure.reduce_letters(raw)


@pytest.mark.parametrize("impl", backends, ids=lambda m: m.BACKEND)
def test_concat_and_invert_agree_with_pure(impl):
    rng = random.Random(SEED)
    for _ in range(300):
        w1 = pure.reduce_letters(random_raw(rng, 5, rng.randrange(40)))
        w2 = pure.reduce_letters(random_raw(rng, 5, rng.randrange(40)))
        assert impl.concat_reduced(w1, w2) == pure.concat_reduced(w1, w2)
        assert impl.invert_reduced(w1) == pure.invert_reduced(w1)


@pytest.mark.parametrize("impl", backends, ids=lambda m: m.BACKEND)
def test_substitute_agrees_with_pure(impl):
    rng = random.Random(SEED)
    for _ in range(200):
        rank = rng.randrange(2, 6)
        pos = tuple(
            pure.reduce_letters(random_raw(rng, rank, rng.randrange(1, 6)))
            for _ in range(rank)
        )
        neg = tuple(pure.invert_reduced(img) for img in pos)
        word = pure.reduce_letters(random_raw(rng, rank, rng.randrange(50)))
        assert impl.substitute(pos, neg, word, 10**6) == pure.substitute(pos, neg, word, 10**6)


@pytest.mark.parametrize("impl", backends, ids=lambda m: m.BACKEND)
def test_substitute_enforces_the_cap(impl):
    pos = ((1, 2),)
    neg = ((-2, -1),)
    word = (1,) * 50
    with pytest.raises(ResourceLimitError):
        impl.substitute(pos, neg, word, 30)


def test_backend_selection_reports_a_name():
    assert _kernels.backend_name() in ("compiled", "pure")
    with pytest.raises(ValueError):
        _kernels.backend_module("jitted")


def test_set_backend_roundtrip():
    original = _kernels.backend_name()
    try:
        _kernels.set_backend("pure")
        assert _kernels.backend_name() == "pure"
        assert _kernels.reduce_letters((1, -1, 2)) == (2,)
    finally:
        _kernels.set_backend(original)
    assert _kernels.backend_name() == original
