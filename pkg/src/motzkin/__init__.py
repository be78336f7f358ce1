"""Exact counting, sampling, and generating functions for Motzkin paths
that avoid given subword patterns.

The package decomposes an avoidance class into a finite rule system
(`build_specification`), counts and samples from it (`SpecCounter`), and
computes closed-form generating functions in Q(x)[C] where C is the
aerated Catalan series (`delta`, `solve_closed_form`).
"""

from .classes import EMPTY, ClassDescriptor, full_class, normalize
from .counting import EmptyAtLengthError, SpecCounter
from .genfun import NonClosedForm, delta, extract_equations, gamma, solve_closed_form
from .paths import contains, enumerate_motzkin, oracle_count
from .strategies import Specification, build_specification

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "ClassDescriptor",
    "EmptyAtLengthError",
    "NonClosedForm",
    "SpecCounter",
    "Specification",
    "build_specification",
    "contains",
    "delta",
    "enumerate_motzkin",
    "extract_equations",
    "full_class",
    "gamma",
    "normalize",
    "oracle_count",
    "solve_closed_form",
    "__version__",
]
