"""Decision engine for categorical syllogisms.

Syllogisms are decided two independent ways: by reducing oriented chain
diagrams to a normal form and matching the conclusion's shape, and by
exhaustively enumerating region models as a semantic oracle.  The catalog
module runs both over every mood and figure and checks they agree.
"""

from .chains import (
    BULLET,
    Arrow,
    Chain,
    ChainError,
    JunctionMismatch,
    NoSuchOccurrence,
    PropKind,
    Proposition,
    TermId,
    chain_from_text,
    concat,
    diagram,
    is_bullet,
    is_term,
    join_premisses,
    splice_existence,
)
from .inference import (
    MAJOR,
    MIDDLE,
    MINOR,
    Assumption,
    Figure,
    Mood,
    NotReducible,
    ReductionStep,
    Syllogism,
    Trace,
    Validity,
    Verdict,
    assumption_proposition,
    conclusion_of,
    decide,
    match_conclusion,
    normalize,
    premiss_chain,
    premisses_of,
    reduce_at,
    reducible_positions,
)
from .regions import (
    MAX_TERMS,
    ModelSpace,
    RegionModel,
    TooManyTerms,
    UnknownTerm,
    eval_proposition,
    semantic_decide,
    semantic_verdict,
    space_for,
)
from .catalog import (
    LawResult,
    TableRow,
    TermNotInChain,
    UnsupportedN,
    all_moods,
    all_syllogisms,
    check_rules,
    count_valid_nterm,
    enumerate_all,
    mutually_excluded,
    opposition_laws,
)
from .notation import (
    AmbiguousTerms,
    BadFigure,
    BadMoodLetter,
    NotASyllogism,
    NotationError,
    SourceSpan,
    parse_any,
    parse_compact,
    parse_corpus,
    parse_proposition,
    parse_syllogism_block,
    render_block,
    render_compact,
    render_proposition,
)

__version__ = "0.1.0"
