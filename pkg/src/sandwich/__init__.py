"""Very special sandwich algebras obtained by deleting an extremity of a Dynkin diagram."""
from .carving import Carving, HatClass, NotExtremityError, carve
from .classify import ClassificationReport, PaperEntry, classify_all, run_case, verify_paper
from .exactvec import HalfVec, IntMatrix, dot, kernel_generator
from .nilrad import NilradicalAnalysis, StructureDescriptor, analyse
from .rootsys import RootSystem, SimpleType, build

__all__ = [
    "Carving", "ClassificationReport", "HalfVec", "HatClass", "IntMatrix",
    "NilradicalAnalysis", "NotExtremityError", "PaperEntry", "RootSystem",
    "SimpleType", "StructureDescriptor", "analyse", "build", "carve",
    "classify_all", "dot", "kernel_generator", "run_case", "verify_paper",
]
