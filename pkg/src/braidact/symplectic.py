"""The symplectic shadow of the braid action.

Abelianizing the action on F_2g gives integer matrices acting on Z^2g
in the basis (a_1.., b_1..).  Every such matrix preserves the standard
alternating form <a_i, b_i> = -<b_i, a_i> = 1, i.e. lands in Sp_2g(Z):
``braid_matrix`` computes that image for a braid word (a homomorphism
into Sp_2g(Z)) and ``is_symplectic`` is the exact membership test
M^T J M = J for the block form J = [[0, I], [-I, 0]].
"""

from __future__ import annotations

import random
from functools import lru_cache

from .action import GenusContext, twist_automorphism
from .braids import BraidWord
from .errors import DimensionMismatchError, StrandMismatchError
from .matrices import IntMatrix
from .report import VerificationReport, condition_check, equality_check


def standard_form(g: int) -> IntMatrix:
    """The 2g x 2g alternating-form matrix [[0, I_g], [-I_g, 0]]."""
    n = 2 * g
    rows = []
    for i in range(n):
        row = [0] * n
        if i < g:
            row[g + i] = 1
        else:
            row[i - g] = -1
        rows.append(tuple(row))
    return IntMatrix(tuple(rows))


def is_symplectic(m: IntMatrix, g: int | None = None) -> bool:
    """True iff  m^T J m = J  for the standard alternating form."""
    if g is None:
        if m.dim % 2:
            raise DimensionMismatchError(f"symplectic matrices have even size, got {m.dim}")
        g = m.dim // 2
    elif m.dim != 2 * g:
        raise DimensionMismatchError(f"expected size {2 * g}, got {m.dim}")
    j = standard_form(g)
    return m.transpose() * j * m == j


@lru_cache(maxsize=None)
def _twist_matrices(g: int) -> tuple[tuple[IntMatrix, ...], tuple[IntMatrix, ...]]:
    ctx = GenusContext(g)
    pos = tuple(
        twist_automorphism(ctx, i).abelianization_matrix() for i in range(1, 2 * g + 2)
    )
    neg = tuple(m.inverse() for m in pos)
    return pos, neg


def braid_matrix(ctx: GenusContext, braid: BraidWord) -> IntMatrix:
    """Abelianized image of a braid word: a matrix in Sp_2g(Z).

    Functorially equal to abelianizing the braid's automorphism; it is
    evaluated as a product of the generator matrices.
    """
    if braid.strands != ctx.strands:
        raise StrandMismatchError(
            f"braid on {braid.strands} strands does not act at genus {ctx.g}"
            f" (need {ctx.strands})"
        )
    pos, neg = _twist_matrices(ctx.g)
    out = IntMatrix.identity(ctx.rank)
    for letter in braid.letters:
        out = out * (pos[letter - 1] if letter > 0 else neg[-letter - 1])
    return out


def sl2_matrices() -> tuple[IntMatrix, IntMatrix]:
    """The genus-1 generator matrices [[1,1],[0,1]] and [[1,0],[1,1]]."""
    return IntMatrix(((1, 1), (0, 1))), IntMatrix(((1, 0), (1, 1)))


def verify_symplectic_generators(genus_range=(1, 2, 3, 4)) -> VerificationReport:
    """Check that every twist matrix satisfies the symplectic relation."""
    checks = []
    for g in genus_range:
        ctx = GenusContext(g)
        for i in range(1, 2 * g + 2):
            m = twist_automorphism(ctx, i).abelianization_matrix()
            checks.append(
                condition_check(
                    f"symplectic.g{g}.twist-{i}",
                    f"abelianized twist {i} satisfies M^T J M = J (genus {g})",
                    is_symplectic(m, g),
                    witness=str(m),
                )
            )
    return VerificationReport("symplectic-generators", tuple(checks))


def random_braid(rng: random.Random, strands: int, length: int) -> BraidWord:
    """A uniformly random (unreduced) braid word of the given length."""
    letters = []
    for _ in range(length):
        i = rng.randrange(1, strands)
        letters.append(i if rng.random() < 0.5 else -i)
    return BraidWord(strands, tuple(letters))


def verify_symplectic_random(
    ctx: GenusContext, count: int = 500, max_length: int = 40, seed: int = 20260809
) -> VerificationReport:
    """Symplectic membership and determinant 1 for random braid images."""
    rng = random.Random(seed)
    bad_sympl = None
    bad_det = None
    for _ in range(count):
        b = random_braid(rng, ctx.strands, rng.randrange(max_length + 1))
        m = braid_matrix(ctx, b)
        if bad_sympl is None and not is_symplectic(m, ctx.g):
            bad_sympl = b
        if bad_det is None and m.det() != 1:
            bad_det = b
    checks = (
        condition_check(
            f"symplectic.g{ctx.g}.random-membership",
            f"{count} random braid images at genus {ctx.g} all satisfy M^T J M = J"
            f" (seed {seed})",
            bad_sympl is None,
            witness="" if bad_sympl is None else str(bad_sympl),
        ),
        condition_check(
            f"symplectic.g{ctx.g}.random-determinant",
            f"{count} random braid images at genus {ctx.g} all have determinant 1"
            f" (seed {seed})",
            bad_det is None,
            witness="" if bad_det is None else str(bad_det),
        ),
    )
    return VerificationReport(f"symplectic-random(g={ctx.g})", checks)


def verify_sl2_braid_relation() -> VerificationReport:
    """The genus-1 matrices satisfy A B^{-1} A = B^{-1} A B^{-1}."""
    a, b = sl2_matrices()
    binv = b.inverse()
    checks = (
        equality_check(
            "symplectic.g1.sl2-braid-relation",
            "A B^-1 A = B^-1 A B^-1 for the genus-1 matrices",
            a * binv * a,
            binv * a * binv,
        ),
    )
    return VerificationReport("sl2-braid-relation", checks)
