"""Set-graded non-commutative Poisson algebras: axioms, connections, ideals, gr-simplicity."""

from .algebra import ExtLabel, GradedAlgebra, SpecError, validate
from .analysis import Verdict, decompose, gr_simple_criterion, gr_simple_direct
from .document import load_corpus, load_path, load_spec, to_document
from .support import connection_classes, psi, reachable, star

__all__ = [
    "ExtLabel",
    "GradedAlgebra",
    "SpecError",
    "Verdict",
    "connection_classes",
    "decompose",
    "gr_simple_criterion",
    "gr_simple_direct",
    "load_corpus",
    "load_path",
    "load_spec",
    "psi",
    "reachable",
    "star",
    "to_document",
    "validate",
]
