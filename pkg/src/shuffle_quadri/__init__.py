"""Shuffle quadri-algebra on the tensor algebra of a finite alphabet.

Exact integer arithmetic on word combinations, the four quadri products and
their dendriform sums, the deconcatenation coproducts, and an exhaustive
checker for the identities relating them to concatenation.
"""
from .core import (DEFAULT_ALPHABET, EMPTY, Alphabet, Combination, TensorCombination,
                   bilinear_extend, linear_extend, tensor, word_of_string)
from .errors import (AlgebraError, ArityError, EmptyWordInOracle, ExprSyntaxError,
                     ExpressionError, ExprTypeError, SpecDomainError, UndefinedOnUnitPair,
                     UnitNotInHPlus, UnknownLetter, UnknownOperator)
from .hopf import (concat, conc, deconcat, deconcat_prime, deconcat_second, delta,
                   delta_prime, delta_second, sh, shuffle, shuffle_enumerated)
from .quadri import (DerivedOp, QuadriOp, derived, ne, nw, prec, quadri_oracle,
                     se, star, succ, sw, sweedler_sum, vee, wedge)
from .laws import InstanceSpec, LawReport, check_law, run_suite
from .expr import evaluate, parse

__version__ = "0.1.0"


def clear_caches():
    """Drop memoized shuffle and quadri products."""
    from .hopf import clear_caches as clear_hopf
    from .quadri import clear_caches as clear_quadri
    clear_hopf()
    clear_quadri()
