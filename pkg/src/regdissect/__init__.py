"""regdissect: synthesize and verify regular-language dissectors.

A language C dissects an infinite language L when both C∩L and L−C are
infinite.  This package builds witness DFAs for that property from length
patterns, symbol counts and semi-linear structure, verifies them against
enumerated members up to a length bound, and emits machine-checkable
certificates.  It also decides the factorial counterexample exactly,
constructs separators with infinite margins for nested language pairs, and
bounds Boolean-hierarchy class expressions.
"""

from .upsets import ArithmeticProgression, UltimatelyPeriodicSet

__version__ = "0.1.0"

__all__ = [
    "ArithmeticProgression",
    "UltimatelyPeriodicSet",
    "__version__",
]
