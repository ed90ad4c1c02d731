"""Exact crystal-basis sl(2) + sl(2) toolkit for the genetic code."""

from .crystal_core import CrystalState, HalfInt, crystal_casimir, half, irrep_states, lower, raise_
from .genetic_code import CODONS, GeneticCode, Labels, build_table, codon_labels, synonymous_classes
from .misread import CrystalTensorOp, MisreadSpec, RankRules, allowed, allowed_double, operator_for, we_apply
from .multiplets import EXPECTED_CENSUS, PipelineConfig, census, compare_to_code, run_pipeline
from .tensor_crystal import Order, couple, tensor_lower, tensor_raise

__version__ = "0.1.0"

__all__ = [
    "CODONS", "EXPECTED_CENSUS", "CrystalState", "CrystalTensorOp", "GeneticCode", "HalfInt",
    "Labels", "MisreadSpec", "Order", "PipelineConfig", "RankRules", "allowed", "allowed_double",
    "build_table", "census", "codon_labels", "compare_to_code", "couple", "crystal_casimir", "half",
    "irrep_states", "lower", "operator_for", "raise_", "run_pipeline", "synonymous_classes",
    "tensor_lower", "tensor_raise", "we_apply",
]
