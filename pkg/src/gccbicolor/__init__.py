"""Faithful edge bicolorings of biregular bigraphs, with the Great Circle
Challenge puzzle worked out as a (5,3)-bicoloring problem."""

from .core import (
    BiregularGraph,
    ColorPairSystem,
    EdgeBicoloring,
    SymbolPermutationPair,
    ValidationReport,
    Violation,
    check_faithful,
    check_proper,
    check_weight_compatible,
    is_increasing,
    is_symmetrically_reversible,
    validate_biregular,
)
from .cyclic import CyclicParams, build_cyclic_bigraph, greedy_bicolor
from .dataset import DatasetError, load_corrected, load_dataset, validate_dataset
from .gcc import GccSolution, default_gprime, verify_gcc_solution
from .search import enumerate_gcc_solutions

__version__ = "0.1.0"
