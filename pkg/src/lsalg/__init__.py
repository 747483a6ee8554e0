"""LS algebras over posets with bonds: paths, discrete algebras, Gorenstein and Groebner checks."""

from .errors import CapExceeded, InvalidPath, LeadingTermError, LSError, PosetError, PosetSyntaxError, RelationsError
from .kernels import BACKEND
from .poset import (
    PosetWithBonds,
    chain_poset,
    diamond,
    double_diamond,
    extended_bond,
    linear_extensions,
    maximal_chains,
    parse_poset,
    validate,
)
from .paths import (
    Dominance,
    LSPath,
    canonical_form,
    count_paths,
    dominance,
    dotplus,
    enumerate_paths,
    is_ls_path,
    is_standard,
    lspath,
    rlex_compare,
)
from .discrete import hilbert_function, stanley_symmetry, straighten, to_monomial

__version__ = "0.1.0"

__all__ = [
    "CapExceeded",
    "InvalidPath",
    "LeadingTermError",
    "LSError",
    "PosetError",
    "PosetSyntaxError",
    "RelationsError",
    "BACKEND",
    "PosetWithBonds",
    "chain_poset",
    "diamond",
    "double_diamond",
    "extended_bond",
    "linear_extensions",
    "maximal_chains",
    "parse_poset",
    "validate",
    "Dominance",
    "LSPath",
    "canonical_form",
    "count_paths",
    "dominance",
    "dotplus",
    "enumerate_paths",
    "is_ls_path",
    "is_standard",
    "lspath",
    "rlex_compare",
    "hilbert_function",
    "stanley_symmetry",
    "straighten",
    "to_monomial",
]
