"""Groebner bases, ideal operations, syzygies, resolutions and Hilbert series."""

from .buchberger import GBEngine, groebner_basis, is_groebner
from .hilbert import HilbertData, hilbert_data, hilbert_data_from_initial, monomial_numerator
from .ideal import (
    INFINITE_HEIGHT,
    Ideal,
    dimension,
    eliminate,
    fresh_name,
    groebner,
    height,
    ideal_equal,
    ideal_intersect,
    ideal_membership,
    ideal_quotient,
    normal_form,
    radical_membership,
    saturate,
)
from .modules import ModuleGB, minimal_generators, module_membership, syzygies
from .resolution import FreeComplex, free_resolution, minimalize

__all__ = [
    "GBEngine",
    "groebner_basis",
    "is_groebner",
    "HilbertData",
    "hilbert_data",
    "hilbert_data_from_initial",
    "monomial_numerator",
    "INFINITE_HEIGHT",
    "Ideal",
    "dimension",
    "eliminate",
    "fresh_name",
    "groebner",
    "height",
    "ideal_equal",
    "ideal_intersect",
    "ideal_membership",
    "ideal_quotient",
    "normal_form",
    "radical_membership",
    "saturate",
    "ModuleGB",
    "minimal_generators",
    "module_membership",
    "syzygies",
    "FreeComplex",
    "free_resolution",
    "minimalize",
]
