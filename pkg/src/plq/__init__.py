"""Power quotients of plactic-like monoids.

Insertion algorithms, normal forms, idempotents, counting formulas, and
a brute-force congruence oracle that verifies all of them from the
defining presentations.
"""

from .errors import (
    ContentMismatch,
    IndexOutOfRange,
    LengthMismatch,
    NotStabilized,
    NotUnique,
    OccurrenceOutOfRange,
    PlqError,
    UnknownFamily,
)
from .words import (
    Alphabet,
    Evaluation,
    SigmaMap,
    Word,
    content,
    evaluation_of,
    expansion,
    is_inflation_of,
    multiply_evaluations,
    reduce_evaluation,
    shortlex_compare,
    sigma_reduce_word,
)
from .sequences import bell, borel, catalan, schroder_shifted, sequence_value
from .presentations import Presentation, instantiate_relations, presentation
from .oracle import (
    FiniteMonoid,
    JReport,
    are_equivalent,
    check_type1,
    check_type2,
    enumerate_monoid,
    idempotents_of,
    j_analysis,
    monoid_of,
)
from . import chinese, plactic, sylvester

__version__ = "0.1.0"

__all__ = [
    "Alphabet",
    "ContentMismatch",
    "Evaluation",
    "FiniteMonoid",
    "IndexOutOfRange",
    "JReport",
    "LengthMismatch",
    "NotStabilized",
    "NotUnique",
    "OccurrenceOutOfRange",
    "PlqError",
    "Presentation",
    "SigmaMap",
    "UnknownFamily",
    "Word",
    "are_equivalent",
    "bell",
    "borel",
    "catalan",
    "check_type1",
    "check_type2",
    "chinese",
    "content",
    "enumerate_monoid",
    "evaluation_of",
    "expansion",
    "idempotents_of",
    "instantiate_relations",
    "is_inflation_of",
    "j_analysis",
    "monoid_of",
    "multiply_evaluations",
    "plactic",
    "presentation",
    "reduce_evaluation",
    "schroder_shifted",
    "sequence_value",
    "shortlex_compare",
    "sigma_reduce_word",
    "sylvester",
]
