"""Exact tools for normality and squarefree Gröbner bases of low-codimension toric ideals."""

from .exactmath import IntegerMatrix, RankDeficientError, hermite_normal_form, integer_kernel, smith_index
from .gale import GaleDiagram, gale_diagram, sign_classes
from .semigroup import Configuration, NotPointedError, in_semigroup, normality_oracle
from .kernelgeom import covering_radius_bounds, covers_space, q_zero
from .binomial import Binomial, TermOrder, buchberger, toric_ideal_mingens
from .theorem1 import decide_normal, verify_theorem1
from .corpus import parse_matrix, parse_matrix_text, random_configuration

__version__ = "0.1.0"

__all__ = [
    "IntegerMatrix",
    "RankDeficientError",
    "hermite_normal_form",
    "integer_kernel",
    "smith_index",
    "GaleDiagram",
    "gale_diagram",
    "sign_classes",
    "Configuration",
    "NotPointedError",
    "in_semigroup",
    "normality_oracle",
    "covering_radius_bounds",
    "covers_space",
    "q_zero",
    "Binomial",
    "TermOrder",
    "buchberger",
    "toric_ideal_mingens",
    "decide_normal",
    "verify_theorem1",
    "parse_matrix",
    "parse_matrix_text",
    "random_configuration",
]
