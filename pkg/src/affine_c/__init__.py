"""Schubert calculus of the type C affine Grassmannian via nilCoxeter algebras and Schur Q functions."""

from .cartan import CartanData, type_c_affine
from .weyl import CapacityError, WeylElement, from_word, group_table, reduced_words
from .zee import build_zee, lee_partition, rho
from .nilcoxeter import NilCoxElem, pieri, pp_generator, pp_schubert
from .coproduct import phi0_delta_closed, verify_t_phip
from .symfunc import MSym, schur_p, schur_q, theta
from .schubert import affine_stanley, dual_kschur, duality_matrix

__version__ = "0.1.0"

__all__ = [
    "CartanData", "type_c_affine", "CapacityError", "WeylElement", "from_word", "group_table",
    "reduced_words", "build_zee", "lee_partition", "rho", "NilCoxElem", "pieri",
    "pp_generator", "pp_schubert", "phi0_delta_closed", "verify_t_phip", "MSym", "schur_p",
    "schur_q", "theta", "affine_stanley", "dual_kschur", "duality_matrix",
]
