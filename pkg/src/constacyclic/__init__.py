"""Constacyclic code workbench: finite fields, cyclotomic-coset signatures,
a fast sufficient equivalence test, linear-code properties and classical
constructions."""

from .codes import LinearCode, PropertySet, cc_code, classify, dual, min_distance, weight_distribution
from .constructions import (
    BklcTable,
    DerivationStep,
    best_puncture,
    best_shorten,
    construction_x,
    extend,
    puncture,
    recursively_modify,
    shorten,
)
from .cosets import CCParams, CosetMultiset, cc_params, cyclotomic_cosets, signature
from .equiv import EquivVerdict, PartitionResult, cc_coset_eq, coset_eq, partition
from .gf import GF, field_make
from .grammar import parse_element, parse_poly, print_poly
from .polyring import Poly, generator_from_check

__all__ = [
    "BklcTable", "CCParams", "CosetMultiset", "DerivationStep", "EquivVerdict", "GF", "LinearCode",
    "PartitionResult", "Poly", "PropertySet", "best_puncture", "best_shorten", "cc_code", "cc_coset_eq",
    "cc_params", "classify", "construction_x", "coset_eq", "cyclotomic_cosets", "dual", "extend",
    "field_make", "generator_from_check", "min_distance", "parse_element", "parse_poly", "partition",
    "print_poly", "puncture", "recursively_modify", "shorten", "signature", "weight_distribution",
]
