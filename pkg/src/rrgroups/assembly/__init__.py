"""Assembly of reducible reflection-rotation groups from triples, and the inverse decomposition."""

from .construct import DecompositionError, RotationKind, assemble, assembly_generators, decompose, kind_of
from .data import (CASE_TAGS, ROTATION_ONLY, AssemblyData, AssemblyError, Isomorphism, TripleDatum,
                   ValidationReport, data_from_json, data_from_text, expected_diagram, identify_case,
                   simple_reflections, validate, validate_triple)

__all__ = [
    "CASE_TAGS", "ROTATION_ONLY", "AssemblyData", "AssemblyError", "DecompositionError", "Isomorphism",
    "RotationKind", "TripleDatum", "ValidationReport", "assemble", "assembly_generators", "data_from_json",
    "data_from_text", "decompose", "expected_diagram", "identify_case", "kind_of", "simple_reflections",
    "validate", "validate_triple",
]
