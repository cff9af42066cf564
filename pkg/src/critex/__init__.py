"""critex: exact repetition measures of k-automatic sequences.

A sequence automaton (Dfao) feeds first-order predicate compilation into
pair languages whose quotient suprema and largest limit values are the
classical repetition measures: the critical exponent and its recurrent,
special, initial, and Diophantine variants, plus the optimal linear
recurrence constant.  All results are exact rationals or infinite, with
machine-checkable witnesses.
"""

from .automaton import Dfa, Dfao, Nfa, PumpDecomposition
from .exponents import (
    ExponentResult,
    RecurrenceReport,
    critical_exponent,
    diophantine_exponent,
    initial_critical_exponents,
    is_recurrent,
    linear_recurrence,
    period_language,
    recurrent_critical_exponent,
    special_exponent,
)
from .numeral import DigitWord, RadixContext, decode, encode, encode_pair, ratio
from .quotient import (
    CandidateSet,
    Comparator,
    SupResult,
    candidates,
    comparator_dfa,
    check_pair_closure,
    is_sup_infinite,
    largest_limit_quotient,
    pump_ratio,
    sup_quo,
)
from .rational import INF, Infinity, Value, fmt_value

__version__ = "0.1.0"

__all__ = [
    "Dfa",
    "Dfao",
    "Nfa",
    "PumpDecomposition",
    "DigitWord",
    "RadixContext",
    "encode",
    "decode",
    "encode_pair",
    "ratio",
    "INF",
    "Infinity",
    "Value",
    "fmt_value",
    "Comparator",
    "CandidateSet",
    "SupResult",
    "comparator_dfa",
    "pump_ratio",
    "is_sup_infinite",
    "candidates",
    "sup_quo",
    "largest_limit_quotient",
    "check_pair_closure",
    "ExponentResult",
    "RecurrenceReport",
    "period_language",
    "critical_exponent",
    "recurrent_critical_exponent",
    "special_exponent",
    "initial_critical_exponents",
    "diophantine_exponent",
    "is_recurrent",
    "linear_recurrence",
    "__version__",
]
