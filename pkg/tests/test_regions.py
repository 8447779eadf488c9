"""Region models: single-model truth, exhaustive entailment, verdicts."""

from itertools import product

import pytest

from syllogist import (
    Assumption,
    Figure,
    Mood,
    ModelSpace,
    PropKind,
    RegionModel,
    Syllogism,
    TooManyTerms,
    UnknownTerm,
    Validity,
    eval_proposition,
    semantic_decide,
    semantic_verdict,
    space_for,
)

from test_chains import prop
from test_inference import syl

AB = ("A", "B")
SMP = ("S", "M", "P")


def atom(model_terms, *inside):
    """Index of the atom lying inside exactly the given terms."""
    return sum(1 << model_terms.index(t) for t in inside)


def test_empty_universe_verifies_universals_only():
    empty = RegionModel(AB, 0)
    assert eval_proposition(prop("A", "A", "B"), empty)
    assert eval_proposition(prop("E", "A", "B"), empty)
    assert not eval_proposition(prop("I", "A", "B"), empty)
    assert not eval_proposition(prop("O", "A", "B"), empty)


def test_lone_a_element():
    m = RegionModel(AB, 1 << atom(AB, "A"))
    assert eval_proposition(prop("O", "A", "B"), m)
    assert not eval_proposition(prop("A", "A", "B"), m)


def test_existence_proposition_reads_inhabitation():
    for mask in range(16):
        m = RegionModel(AB, mask)
        some_a = any(
            m.is_inhabited(a) for a in range(4) if a & (1 << AB.index("A"))
        )
        assert eval_proposition(prop("I", "A", "A"), m) == some_a


def test_contradictory_pairs_in_every_model():
    for mask in range(1 << 8):
        m = RegionModel(SMP, mask)
        a, e = eval_proposition(prop("A", "S", "M"), m), eval_proposition(prop("E", "S", "M"), m)
        i, o = eval_proposition(prop("I", "S", "M"), m), eval_proposition(prop("O", "S", "M"), m)
        assert a != o
        assert e != i


def test_model_space_sizes():
    assert len(space_for(SMP)) == 256
    assert len(space_for(("T1", "T2", "T3", "T4"))) == 65536


def test_model_space_caps_terms():
    with pytest.raises(TooManyTerms):
        ModelSpace(("A", "B", "C", "D", "E"))


def test_unknown_term():
    with pytest.raises(UnknownTerm):
        eval_proposition(prop("A", "A", "Z"), RegionModel(AB, 0))
    with pytest.raises(UnknownTerm):
        semantic_decide([prop("A", "Q", "B")], [], prop("A", "A", "B"), AB)


def test_duplicate_terms_rejected():
    with pytest.raises(ValueError):
        ModelSpace(("A", "A"))


# --- entailment -------------------------------------------------------------

def test_first_figure_entailment():
    assert semantic_decide(
        [prop("A", "M", "P"), prop("A", "S", "M")], [], prop("A", "S", "P"), SMP
    )


def test_two_particular_premisses_fail():
    assert not semantic_decide(
        [prop("O", "P", "M"), prop("E", "M", "S")], [], prop("I", "S", "P"), SMP
    )


def test_existence_assumption_rescues_the_import_case():
    premisses = [prop("E", "P", "M"), prop("A", "M", "S")]
    conclusion = prop("O", "S", "P")
    assert not semantic_decide(premisses, [], conclusion, SMP)
    assert semantic_decide(premisses, [prop("I", "M", "M")], conclusion, SMP)


def test_subalternation_needs_import():
    assert not semantic_decide([prop("A", "A", "B")], [], prop("I", "A", "B"), AB)
    assert semantic_decide(
        [prop("A", "A", "B")], [prop("I", "A", "A")], prop("I", "A", "B"), AB
    )
    assert not semantic_decide([prop("E", "A", "B")], [], prop("O", "A", "B"), AB)
    assert semantic_decide(
        [prop("E", "A", "B")], [prop("I", "A", "A")], prop("O", "A", "B"), AB
    )


def test_assumptions_are_monotone():
    # an assumption can only shrink the set of countermodels
    from syllogist import conclusion_of, premisses_of

    existence = [prop("I", t, t) for t in SMP]
    for fig in Figure:
        for mood in (Mood(a, b, c) for a in PropKind for b in PropKind for c in PropKind):
            s = Syllogism(mood, fig)
            if semantic_verdict(s).is_valid:
                for some in existence:
                    assert semantic_decide(
                        list(premisses_of(s)), [some], conclusion_of(s), SMP
                    )


def test_vectorized_sweep_agrees_with_per_model_loop():
    # certify the bulk evaluator against the one-model evaluator
    space = space_for(AB)
    kinds = list(PropKind)
    for k1, k2 in product(kinds, repeat=2):
        for s1, p1 in (("A", "B"), ("B", "A"), ("A", "A")):
            premiss = prop(k1.value, s1, p1)
            conclusion = prop(k2.value, "A", "B")
            expected = all(
                eval_proposition(conclusion, RegionModel(AB, mask))
                for mask in range(16)
                if eval_proposition(premiss, RegionModel(AB, mask))
            )
            assert space.entails([premiss], conclusion) == expected


# --- verdict adapter --------------------------------------------------------

def test_semantic_verdicts():
    assert semantic_verdict(syl("AAA-1")).validity is Validity.VALID
    assert semantic_verdict(syl("AAI-4 +P")).validity is Validity.VALID_WITH_ASSUMPTION
    assert semantic_verdict(syl("AAI-4 +P")).assumption is Assumption.SOME_P
    assert semantic_verdict(syl("AAI-4")).validity is Validity.INVALID


def test_semantic_verdict_carries_no_trace():
    assert semantic_verdict(syl("AAA-1")).trace is None


def test_two_particular_premisses_are_invalid_in_every_figure():
    for fig in (1, 2, 3, 4):
        verdict = semantic_verdict(syl(f"IOA-{fig}"))
        assert verdict.validity is Validity.INVALID


def test_bare_validity_dominates_in_the_oracle_too():
    verdict = semantic_verdict(syl("AAA-1 +S"))
    assert verdict.validity is Validity.VALID
    assert verdict.assumption is Assumption.NONE
