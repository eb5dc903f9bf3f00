"""Groebner-Shirshov bases for finitely presented associative algebras over Z."""

from .freealg import (
    EMPTY,
    ONE,
    ZERO,
    Cmp,
    DegLex,
    InvalidInputError,
    MonomialOrder,
    Polynomial,
    Word,
    add,
    compare_words,
    leading_term,
    mul,
    support,
)
from .gsb import (
    CompletionResult,
    Composition,
    GsbReport,
    Kind,
    Outcome,
    check_gsb,
    complete,
    expand_witness,
    find_compositions,
    membership,
)
from .linalg import solve_integer_linear
from .parsing import (
    NonMonicRelationError,
    ParseError,
    PresentationError,
    UnknownGeneratorError,
    format_polynomial,
    format_word,
    parse_polynomial,
    parse_presentation,
)
from .rewrite import (
    InvalidRuleSetError,
    PreconditionError,
    ReductionStep,
    ReductionTrace,
    RewriteRule,
    RuleSet,
    enumerate_irr,
    find_occurrence,
    is_irreducible_word,
    normal_form,
    reduce_once,
)
from .solver import (
    InternalConsistencyError,
    InverseCertificate,
    NoSolutionUpToDegree,
    TrivialRing,
    invert_element,
    verify_inverse,
)

__version__ = "0.1.0"
