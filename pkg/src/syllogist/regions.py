"""Region-model semantics: the independent ground truth.

A model over k terms assigns inhabited-or-empty to each of the 2^k atomic
Venn regions.  The truth of a categorical proposition depends only on
which atoms are inhabited, so quantifying over every inhabitation pattern
(all 2^(2^k) of them) decides entailment over all universes.  The empty
universe is one of the models; no existential import is built in.

This module never looks at chains or reductions.  It exists so that the
chain calculus can be checked against plain set semantics by exhaustive
enumeration, which is kept deliberately simple: every model is evaluated,
with numpy sweeping the model space in bulk.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from .chains import PropKind, Proposition, TermId
from .inference import (
    MAJOR,
    MIDDLE,
    MINOR,
    Syllogism,
    Verdict,
    assumption_proposition,
    conclusion_of,
    premisses_of,
)

MAX_TERMS = 4  # 2^(2^4) = 65 536 models; beyond that enumeration stops being a tool


class UnknownTerm(ValueError):
    """A proposition mentions a term outside the model's term list."""


class TooManyTerms(ValueError):
    """More terms than the enumeration cap allows."""


def _check_terms(terms: tuple[TermId, ...]) -> None:
    if len(terms) > MAX_TERMS:
        raise TooManyTerms(f"at most {MAX_TERMS} terms, got {len(terms)}")
    if len(set(terms)) != len(terms):
        raise ValueError(f"duplicate terms in {terms!r}")


def _term_index(terms: tuple[TermId, ...], name: TermId) -> int:
    try:
        return terms.index(name)
    except ValueError:
        raise UnknownTerm(f"term {name!r} is not among {terms!r}") from None


def region_atoms(p: Proposition, terms: tuple[TermId, ...]) -> list[int]:
    """Atoms of the region a proposition talks about.

    A and O quantify over subject-minus-predicate, E and I over the
    intersection.  Atom ``a`` lies inside term ``j`` exactly when bit j of
    ``a`` is set.
    """
    x = _term_index(terms, p.subject)
    y = _term_index(terms, p.predicate)
    inside_y = p.kind in (PropKind.E, PropKind.I)
    return [
        a
        for a in range(1 << len(terms))
        if (a >> x) & 1 and bool((a >> y) & 1) == inside_y
    ]


@dataclass(frozen=True)
class RegionModel:
    """One inhabitation pattern: bit a of ``inhabited`` marks atom a."""

    terms: tuple[TermId, ...]
    inhabited: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))
        _check_terms(self.terms)
        n_atoms = 1 << len(self.terms)
        if not 0 <= self.inhabited < (1 << n_atoms):
            raise ValueError(f"inhabitation mask out of range for {n_atoms} atoms")

    def is_inhabited(self, atom: int) -> bool:
        return bool((self.inhabited >> atom) & 1)


def eval_proposition(p: Proposition, model: RegionModel) -> bool:
    """Truth of one proposition in one model."""
    hit = any(model.is_inhabited(a) for a in region_atoms(p, model.terms))
    return hit if p.kind.particular else not hit


class ModelSpace:
    """Every inhabitation pattern over the atoms of a fixed term list.

    Proposition truth is evaluated across the whole space at once and
    cached, so repeated entailment queries over the same terms are cheap.
    """

    def __init__(self, terms: Sequence[TermId]):
        self.terms = tuple(terms)
        _check_terms(self.terms)
        n_atoms = 1 << len(self.terms)
        self.masks = np.arange(1 << n_atoms, dtype=np.uint32)
        self._truth: dict[Proposition, np.ndarray] = {}

    def __len__(self) -> int:
        return len(self.masks)

    def model(self, mask: int) -> RegionModel:
        return RegionModel(self.terms, int(mask))

    def truth(self, p: Proposition) -> np.ndarray:
        """Boolean truth vector of ``p`` across all models."""
        cached = self._truth.get(p)
        if cached is not None:
            return cached
        bits = np.uint32(0)
        for atom in region_atoms(p, self.terms):
            bits |= np.uint32(1 << atom)
        hits = (self.masks & bits) != 0
        result = hits if p.kind.particular else ~hits
        self._truth[p] = result
        return result

    def entails(
        self,
        premisses: Iterable[Proposition],
        conclusion: Proposition,
        assumptions: Iterable[Proposition] = (),
    ) -> bool:
        """True when every model of the premisses and assumptions is a
        model of the conclusion."""
        antecedent = np.ones(len(self.masks), dtype=bool)
        for q in premisses:
            antecedent &= self.truth(q)
        for q in assumptions:
            antecedent &= self.truth(q)
        return not bool(np.any(antecedent & ~self.truth(conclusion)))


@lru_cache(maxsize=None)
def space_for(terms: tuple[TermId, ...]) -> ModelSpace:
    return ModelSpace(terms)


def semantic_decide(
    premisses: Sequence[Proposition],
    assumptions: Sequence[Proposition],
    conclusion: Proposition,
    terms: Sequence[TermId],
) -> bool:
    """Entailment by exhaustive enumeration of all region models."""
    return space_for(tuple(terms)).entails(premisses, conclusion, assumptions)


def semantic_verdict(s: Syllogism) -> Verdict:
    """Classify a syllogism semantically, mirroring the calculus verdicts.

    Valid means valid with no assumption at all; a conditional verdict is
    returned only when the bare syllogism fails but the stated assumption
    rescues it.
    """
    premisses = premisses_of(s)
    goal = conclusion_of(s)
    space = space_for((MINOR, MIDDLE, MAJOR))
    if space.entails(premisses, goal):
        return Verdict.valid()
    existence = assumption_proposition(s)
    if existence is not None and space.entails(premisses, goal, (existence,)):
        return Verdict.under_assumption(s.assumption)
    return Verdict.invalid()
