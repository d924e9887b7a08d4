"""Braid-group actions on free groups and their symplectic shadows.

The package provides exact word arithmetic in free groups and braid
groups, the twist action of the braid group on 2g+2 strands on the free
group of rank 2g, its abelianization into the symplectic modular group,
and verification suites that mechanically re-derive the identities
behind the genus-2 braid-type presentation of Sp_4(Z).

Hot word kernels run on a compiled extension when available, with a
pure-Python fallback selected at import (see ``braidact.kernel_backend``).
"""

from ._kernels import available_backends as kernel_backends
from ._kernels import backend_name as kernel_backend
from .action import (
    GenusContext,
    braid_automorphism,
    descending_cycle,
    sturmian_g1,
    twist_automorphism,
    verify_center_vanishes,
    verify_u_braid_relations,
)
from .braids import (
    BraidWord,
    artin_action,
    braids_equal,
    format_braid,
    full_twist,
    full_twist_center_check,
    half_twist,
    parse_braid,
)
from .endo import (
    Automorphism,
    Endomorphism,
    format_endomorphism,
    get_length_cap,
    make_automorphism,
    parse_endomorphism,
    set_length_cap,
)
from .errors import (
    BraidactError,
    DimensionMismatchError,
    MalformedWordError,
    NonUnimodularError,
    NotInverseError,
    RankMismatchError,
    ResourceLimitError,
    StrandMismatchError,
    WordSyntaxError,
)
from .matrices import IntMatrix
from .report import Check, VerificationReport
from .symplectic import (
    braid_matrix,
    is_symplectic,
    sl2_matrices,
    standard_form,
    verify_symplectic_generators,
)
from .words import FreeWord, Letter, format_word, parse_word, reduce_word

__version__ = "0.1.0"

__all__ = [
    "Automorphism",
    "BraidWord",
    "BraidactError",
    "Check",
    "DimensionMismatchError",
    "Endomorphism",
    "FreeWord",
    "GenusContext",
    "IntMatrix",
    "Letter",
    "MalformedWordError",
    "NonUnimodularError",
    "NotInverseError",
    "RankMismatchError",
    "ResourceLimitError",
    "StrandMismatchError",
    "VerificationReport",
    "WordSyntaxError",
    "artin_action",
    "braid_automorphism",
    "braid_matrix",
    "braids_equal",
    "descending_cycle",
    "format_braid",
    "format_endomorphism",
    "format_word",
    "full_twist",
    "full_twist_center_check",
    "get_length_cap",
    "half_twist",
    "is_symplectic",
    "kernel_backend",
    "kernel_backends",
    "make_automorphism",
    "parse_braid",
    "parse_endomorphism",
    "parse_word",
    "reduce_word",
    "set_length_cap",
    "sl2_matrices",
    "standard_form",
    "sturmian_g1",
    "twist_automorphism",
    "verify_center_vanishes",
    "verify_symplectic_generators",
    "verify_u_braid_relations",
]
