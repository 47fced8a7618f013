"""Exact construction and analysis of finite reflection-rotation groups."""

from .cyclofield import CycloMatrix, CyclotomicNumber, cos_sin, galois, zeta
from .matgroup import MatrixGroup

__all__ = ["CycloMatrix", "CyclotomicNumber", "MatrixGroup", "cos_sin", "galois", "zeta"]
__version__ = "0.1.0"
