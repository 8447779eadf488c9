"""Exhaustive tables, classical rules, opposition laws, and n-term counts.

Everything here is derived by running the calculus and the region oracle
side by side: the mood/figure tables come out of enumeration rather than
being keyed in, the five classical rules of syllogism are checked as
necessary conditions on validity, and the square-of-opposition laws are
obtained by reducing their premiss chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .chains import (
    Arrow,
    Chain,
    PropKind,
    Proposition,
    TermId,
    diagram,
    is_bullet,
    join_premisses,
)
from .inference import (
    Assumption,
    Figure,
    Mood,
    Syllogism,
    Trace,
    Verdict,
    decide,
    match_conclusion,
    normalize,
    reducible_positions,
)
from .regions import semantic_verdict, space_for


class TermNotInChain(ValueError):
    """The queried term does not occur in the chain."""


class UnsupportedN(ValueError):
    """n-term counting is only meaningful below the enumeration cap."""


# ---------------------------------------------------------------------------
# Full enumeration: calculus versus oracle


@dataclass(frozen=True)
class TableRow:
    """One syllogism with both verdicts side by side."""

    syllogism: Syllogism
    calculus: Verdict
    oracle: Verdict

    @property
    def agree(self) -> bool:
        return self.calculus.summary() == self.oracle.summary()


def all_moods() -> list[Mood]:
    return [Mood(a, b, c) for a, b, c in product(PropKind, repeat=3)]


def all_syllogisms(assumptions: tuple[Assumption, ...] = tuple(Assumption)) -> list[Syllogism]:
    return [
        Syllogism(mood, figure, assumption)
        for assumption in assumptions
        for figure in Figure
        for mood in all_moods()
    ]


def enumerate_all(assumptions: tuple[Assumption, ...] = tuple(Assumption)) -> list[TableRow]:
    """Decide every mood/figure pair under the given assumption settings.

    The default covers all four settings: 1024 rows, of which the first
    256 are the bare syllogisms.
    """
    return [
        TableRow(s, decide(s), semantic_verdict(s))
        for s in all_syllogisms(assumptions)
    ]


# ---------------------------------------------------------------------------
# The five classical rules of syllogism

RULES = {
    1: "two negative premisses",
    2: "two particular premisses",
    3: "particular first premiss with negative second premiss",
    4: "particular premiss without a particular conclusion",
    5: "negative conclusion not paired with a negative premiss",
}


def check_rules(s: Syllogism) -> list[int]:
    """Numbers of the rules the syllogism breaks.

    The rules are necessary conditions on validity, not sufficient ones:
    every valid syllogism passes all five, but so do some invalid ones.
    """
    first, second = s.mood.first, s.mood.second
    conclusion = s.mood.conclusion
    violations = []
    if first.negative and second.negative:
        violations.append(1)
    if first.particular and second.particular:
        violations.append(2)
    if first.particular and second.negative:
        violations.append(3)
    if (first.particular or second.particular) and not conclusion.particular:
        violations.append(4)
    if conclusion.negative != (first.negative or second.negative):
        violations.append(5)
    return violations


# ---------------------------------------------------------------------------
# Square-of-opposition laws


@dataclass(frozen=True)
class LawResult:
    """One named inference: its premiss chain and whether it worked out.

    ``expected`` is the conclusion the chain must reduce to; ``None``
    marks the chains that must not reduce at all.
    """

    name: str
    chain: Chain
    expected: Proposition | None
    trace: Trace
    ok: bool


def _law(name: str, first: Chain, second: Chain, expected: Proposition | None) -> LawResult:
    chain = join_premisses(first, second)
    trace = normalize(chain)
    if expected is None:
        ok = not reducible_positions(chain)
    else:
        ok = match_conclusion(trace.normal_form, expected)
    return LawResult(name, chain, expected, trace, ok)


def opposition_laws() -> list[LawResult]:
    """The named two-premiss inferences over a pair of terms.

    Ten derivations: the two emptiness inferences (a proposition against
    its converse universal concludes No A is A), the four laws of
    subalternation, the laws of contrariety and subcontrariety, and the
    two laws of contradiction (concluding Some A is not A).  Plus the two
    concatenations that must stay stuck, witnessing that I and O do not
    follow from A and E unaided.
    """

    def d(kind: PropKind, subject: TermId, predicate: TermId) -> Chain:
        return diagram(Proposition(kind, subject, predicate))

    A, E, I, O = PropKind.A, PropKind.E, PropKind.I, PropKind.O
    e_aa = Proposition(E, "A", "A")
    o_aa = Proposition(O, "A", "A")
    i_ab = Proposition(I, "A", "B")
    o_ab = Proposition(O, "A", "B")
    e_ab = Proposition(E, "A", "B")

    return [
        _law("emptiness (converse A first)", d(A, "A", "B").dual(), d(E, "A", "B"), e_aa),
        _law("emptiness (converse E first)", d(E, "A", "B").dual(), d(A, "A", "B"), e_aa),
        _law("subalternation: I from A", d(A, "A", "B"), d(I, "A", "A"), i_ab),
        _law("subalternation: I from converse A", d(I, "B", "B"), d(A, "B", "A").dual(), i_ab),
        _law("subalternation: O from E", d(E, "A", "B"), d(I, "A", "A"), o_ab),
        _law("subalternation: O from converse E", d(E, "B", "A").dual(), d(I, "A", "A"), o_ab),
        _law("contrariety", d(E, "B", "B"), d(A, "A", "B"), e_ab),
        _law("subcontrariety", d(E, "B", "B"), d(I, "A", "B"), o_ab),
        _law("contradiction: A against O", d(A, "A", "B").dual(), d(O, "A", "B"), o_aa),
        _law("contradiction: E against I", d(E, "A", "B").dual(), d(I, "A", "B"), o_aa),
        _law("no I from A alone", d(E, "A", "B"), d(A, "A", "B").dual(), None),
        _law("no O from E alone", d(A, "A", "B"), d(E, "A", "B").dual(), None),
    ]


# ---------------------------------------------------------------------------
# Mutual exclusion (the blocked-overlap pattern)


def _blocked_pair(chain: Chain) -> bool:
    # exactly one bullet, both its arrows converging on it, and every
    # outer arrow pointing away from it toward the endpoints
    bullets = [i for i, node in enumerate(chain.nodes) if is_bullet(node)]
    if len(bullets) != 1:
        return False
    b = bullets[0]
    if b == 0 or b == len(chain.nodes) - 1:
        return False
    if not (chain.arrows[b - 1] is Arrow.RIGHT and chain.arrows[b] is Arrow.LEFT):
        return False
    return all(a is Arrow.LEFT for a in chain.arrows[: b - 1]) and all(
        a is Arrow.RIGHT for a in chain.arrows[b + 1 :]
    )


def mutually_excluded(chain: Chain, x: TermId, y: TermId) -> bool:
    """Whether x and y can share no element, as witnessed by the chain.

    The stretch of chain between an occurrence of x and one of y must
    reduce to the pattern of a single bullet fenced off by converging
    arrows, with everything outside it flowing outward to x and y.  The
    3-node instance of the pattern is exactly the diagram of No x is y.
    """
    xs = chain.occurrences(x)
    if not xs:
        raise TermNotInChain(f"term {x!r} does not occur in {chain}")
    px = xs[0]
    ys = [i for i in chain.occurrences(y) if i != px]
    if not ys:
        raise TermNotInChain(f"term {y!r} has no occurrence in {chain} apart from {x!r}")
    py = ys[0]
    lo, hi = min(px, py), max(px, py)
    between = Chain(chain.nodes[lo : hi + 1], chain.arrows[lo:hi])
    return _blocked_pair(normalize(between).normal_form)


# ---------------------------------------------------------------------------
# Experimental: counting valid n-term syllogisms

# An n-term syllogism here is a linear arrangement: n - 1 premisses, the
# i-th relating T_i and T_(i+1) in either subject/predicate order, with
# the conclusion over (T_1, T_n).  Premiss sequences that differ only in
# the order they are written are the same syllogism, so candidates are
# counted as (premiss set, conclusion) pairs.  A candidate counts as
# valid when it holds bare or under a single existence assumption.


def count_valid_nterm(n: int, with_assumptions: bool = True) -> int:
    """Count semantically valid n-term syllogisms (n = 3 or 4).

    ``with_assumptions=False`` restricts the count to unconditionally
    valid candidates.
    """
    if n not in (3, 4):
        raise UnsupportedN(f"n-term counting supports n in {{3, 4}}, got {n!r}")
    terms = tuple(f"T{i}" for i in range(1, n + 1))
    space = space_for(terms)
    existence = [Proposition(PropKind.I, t, t) for t in terms]
    slot_choices = list(product(PropKind, (False, True)))
    count = 0
    seen = set()
    for combo in product(slot_choices, repeat=n - 1):
        premisses = []
        for i, (kind, swapped) in enumerate(combo):
            subject, predicate = terms[i], terms[i + 1]
            if swapped:
                subject, predicate = predicate, subject
            premisses.append(Proposition(kind, subject, predicate))
        for conclusion_kind in PropKind:
            conclusion = Proposition(conclusion_kind, terms[0], terms[-1])
            key = (frozenset(premisses), conclusion)
            if key in seen:
                continue
            seen.add(key)
            ok = space.entails(premisses, conclusion)
            if not ok and with_assumptions:
                ok = any(
                    space.entails(premisses, conclusion, (some,))
                    for some in existence
                )
            if ok:
                count += 1
    return count
