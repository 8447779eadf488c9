"""Deciding syllogisms by chain reduction.

The single rewrite rule deletes an interior term node whose two incident
arrows point the same way, merging them into one arrow; bullets and the
two end nodes are never deleted, so every step preserves the bullet count
and the endpoints.  Reduction terminates (the chain shrinks) and reaches
the same normal form in every order; the test suite exercises that
order-independence exhaustively rather than assuming it.

A syllogism is decided by building the premiss chain, running it to
normal form, and comparing the result with the conclusion's own diagram,
subject on the left and predicate on the right.  No mirroring or term
relabelling is applied when matching: a chain that is the mirror image of
the conclusion swaps the roles of subject and predicate and does not
count.  An existence assumption ("there is some X") is handled by
splicing ``X <- * -> X`` into the premiss chain at each occurrence of X
and reducing again; an unconditional match always wins over a conditional
one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum

from .chains import (
    Chain,
    PropKind,
    Proposition,
    TermId,
    concat,
    diagram,
    is_term,
    splice_existence,
)

# Canonical term names of a three-term syllogism.
MINOR = "S"  # subject of the conclusion, occurs in the second premiss
MIDDLE = "M"  # occurs in both premisses, never in the conclusion
MAJOR = "P"  # predicate of the conclusion, occurs in the first premiss


class NotReducible(ValueError):
    """The requested position is not a deletable term node."""


class Figure(IntEnum):
    """Placement of the three terms across the premisses."""

    ONE = 1
    TWO = 2
    THREE = 3
    FOUR = 4


# figure -> ((subject, predicate) of first premiss, same for second).
_FIGURE_LAYOUT = {
    Figure.ONE: ((MIDDLE, MAJOR), (MINOR, MIDDLE)),
    Figure.TWO: ((MAJOR, MIDDLE), (MINOR, MIDDLE)),
    Figure.THREE: ((MIDDLE, MAJOR), (MIDDLE, MINOR)),
    Figure.FOUR: ((MAJOR, MIDDLE), (MIDDLE, MINOR)),
}


@dataclass(frozen=True)
class Mood:
    """Kinds of the two premisses and the conclusion, in that order."""

    first: PropKind
    second: PropKind
    conclusion: PropKind

    @classmethod
    def from_text(cls, letters: str) -> "Mood":
        if len(letters) != 3:
            raise ValueError(f"a mood has three letters, got {letters!r}")
        return cls(*(PropKind(c) for c in letters))

    def __str__(self) -> str:
        return self.first.value + self.second.value + self.conclusion.value


class Assumption(Enum):
    """Optional existential import: one of the three terms is inhabited."""

    NONE = "none"
    SOME_S = "S"
    SOME_M = "M"
    SOME_P = "P"

    @property
    def term(self) -> TermId | None:
        return None if self is Assumption.NONE else self.value

    @property
    def phrase(self) -> str | None:
        return None if self is Assumption.NONE else f"there is some {self.value}"


@dataclass(frozen=True)
class Syllogism:
    """A mood and figure, optionally with an assumption of existence."""

    mood: Mood
    figure: Figure
    assumption: Assumption = Assumption.NONE

    def __str__(self) -> str:
        text = f"{self.mood}-{self.figure.value}"
        if self.assumption is not Assumption.NONE:
            text += f" +{self.assumption.value}"
        return text


@dataclass(frozen=True)
class ReductionStep:
    """One deletion: the node index removed and the chains around it."""

    position: int
    deleted_term: TermId
    before: Chain
    after: Chain


@dataclass(frozen=True)
class Trace:
    """A full reduction run from an initial chain to its normal form."""

    initial: Chain
    steps: tuple[ReductionStep, ...]
    normal_form: Chain

    def step_lines(self) -> list[str]:
        return [
            f"step {k}: delete {s.deleted_term} at {s.position}: {s.before} => {s.after}"
            for k, s in enumerate(self.steps, start=1)
        ]

    def as_dict(self) -> dict:
        return {
            "initial": str(self.initial),
            "steps": [
                {
                    "position": s.position,
                    "deleted_term": s.deleted_term,
                    "before": str(s.before),
                    "after": str(s.after),
                }
                for s in self.steps
            ],
            "normal_form": str(self.normal_form),
        }


class Validity(Enum):
    INVALID = "invalid"
    VALID = "valid"
    VALID_WITH_ASSUMPTION = "valid-with-assumption"


@dataclass(frozen=True)
class Verdict:
    """Outcome of deciding a syllogism, with the witnessing trace if any."""

    validity: Validity
    assumption: Assumption = Assumption.NONE
    trace: Trace | None = None

    @classmethod
    def invalid(cls) -> "Verdict":
        return cls(Validity.INVALID)

    @classmethod
    def valid(cls, trace: Trace | None = None) -> "Verdict":
        return cls(Validity.VALID, trace=trace)

    @classmethod
    def under_assumption(
        cls, assumption: Assumption, trace: Trace | None = None
    ) -> "Verdict":
        if assumption is Assumption.NONE:
            raise ValueError("a conditional verdict names its assumption")
        return cls(Validity.VALID_WITH_ASSUMPTION, assumption, trace)

    @property
    def is_valid(self) -> bool:
        return self.validity is not Validity.INVALID

    def summary(self) -> str:
        if self.validity is Validity.VALID_WITH_ASSUMPTION:
            return f"valid +{self.assumption.value}"
        return self.validity.value


def reducible_positions(chain: Chain) -> list[int]:
    """Interior term nodes whose two incident arrows point the same way."""
    return [
        i
        for i in range(1, len(chain.nodes) - 1)
        if is_term(chain.nodes[i]) and chain.arrows[i - 1] is chain.arrows[i]
    ]


def reduce_at(chain: Chain, position: int) -> Chain:
    """Delete the term node at ``position``, merging its two arrows."""
    if position not in reducible_positions(chain):
        raise NotReducible(f"node {position} of {chain} is not reducible")
    nodes = chain.nodes[:position] + chain.nodes[position + 1 :]
    arrows = chain.arrows[:position] + chain.arrows[position + 1 :]
    return Chain(nodes, arrows)


def normalize(chain: Chain) -> Trace:
    """Reduce at the leftmost reducible position until none remains.

    The strategy is immaterial for the result (all orders meet in the same
    normal form) but makes traces deterministic.
    """
    steps = []
    current = chain
    while True:
        positions = reducible_positions(current)
        if not positions:
            return Trace(chain, tuple(steps), current)
        i = positions[0]
        after = reduce_at(current, i)
        steps.append(ReductionStep(i, current.nodes[i], current, after))
        current = after


def match_conclusion(chain: Chain, conclusion: Proposition) -> bool:
    """Exact match against the conclusion's diagram, node for node."""
    return chain == diagram(conclusion)


def premisses_of(s: Syllogism) -> tuple[Proposition, Proposition]:
    """The two premiss propositions determined by mood and figure."""
    (s1, p1), (s2, p2) = _FIGURE_LAYOUT[s.figure]
    return (
        Proposition(s.mood.first, s1, p1),
        Proposition(s.mood.second, s2, p2),
    )


def conclusion_of(s: Syllogism) -> Proposition:
    return Proposition(s.mood.conclusion, MINOR, MAJOR)


def assumption_proposition(s: Syllogism) -> Proposition | None:
    """The existential-import premiss ``Some X is X``, if any."""
    term = s.assumption.term
    if term is None:
        return None
    return Proposition(PropKind.I, term, term)


def premiss_chain(s: Syllogism) -> Chain:
    """Join the premiss diagrams into one chain running from S to P.

    A premiss whose written order does not already run toward the S..M..P
    spine is replaced by its dual: the first premiss must read M..P and
    the second S..M before they meet at the single M node.
    """
    first, second = premisses_of(s)
    d1 = diagram(first)
    if first.subject != MIDDLE:
        d1 = d1.dual()
    d2 = diagram(second)
    if second.predicate != MIDDLE:
        d2 = d2.dual()
    return concat(d2, d1)


def decide(s: Syllogism) -> Verdict:
    """Decide a syllogism by reduction.

    The bare premiss chain is tried first; an exact match of its normal
    form against the conclusion diagram is an unconditional validity even
    when an assumption was supplied.  Otherwise, if the syllogism carries
    an assumption, the existence diagram is spliced at every occurrence of
    the assumed term and each candidate is reduced in turn.
    """
    chain = premiss_chain(s)
    goal = conclusion_of(s)
    trace = normalize(chain)
    if match_conclusion(trace.normal_form, goal):
        return Verdict.valid(trace)
    term = s.assumption.term
    if term is not None:
        for occurrence in range(len(chain.occurrences(term))):
            candidate = normalize(splice_existence(chain, term, occurrence))
            if match_conclusion(candidate.normal_form, goal):
                return Verdict.under_assumption(s.assumption, candidate)
    return Verdict.invalid()
