"""Enumeration rows, classical rules, opposition laws, n-term counts."""

import pytest

from syllogist import (
    Assumption,
    PropKind,
    Proposition,
    TermNotInChain,
    UnsupportedN,
    Validity,
    all_moods,
    check_rules,
    count_valid_nterm,
    diagram,
    enumerate_all,
    mutually_excluded,
    opposition_laws,
)

from test_chains import ch, prop
from test_inference import syl


def test_all_moods_covers_the_cube():
    moods = all_moods()
    assert len(moods) == 64
    assert len(set(moods)) == 64


def test_enumeration_row_counts():
    bare = enumerate_all(assumptions=(Assumption.NONE,))
    assert len(bare) == 256
    assert sum(1 for r in bare if r.calculus.validity is Validity.VALID) == 15
    assert all(r.agree for r in bare)


def test_full_enumeration_has_1024_rows():
    rows = enumerate_all()
    assert len(rows) == 1024
    assert sum(1 for r in rows if r.calculus.validity is Validity.VALID_WITH_ASSUMPTION) == 9


# --- classical rules --------------------------------------------------------

def test_two_negative_premisses():
    assert 1 in check_rules(syl("EEE-1"))


def test_two_particular_premisses():
    assert check_rules(syl("III-1")) == [2]


def test_particular_first_negative_second():
    assert 3 in check_rules(syl("IEO-1"))


def test_particular_premiss_needs_particular_conclusion():
    assert 4 in check_rules(syl("IAA-1"))


def test_negative_conclusion_pairs_with_a_negative_premiss():
    assert 5 in check_rules(syl("AAE-1"))
    assert 5 in check_rules(syl("AEA-1"))
    assert check_rules(syl("AEE-2")) == []


def test_rules_hold_for_every_valid_syllogism():
    for row in enumerate_all():
        if row.calculus.is_valid:
            assert check_rules(row.syllogism) == []


def test_rules_are_not_sufficient():
    witnesses = [
        row.syllogism
        for row in enumerate_all(assumptions=(Assumption.NONE,))
        if not row.calculus.is_valid and not check_rules(row.syllogism)
    ]
    assert witnesses  # e.g. AAA outside the first figure
    assert any(str(s.mood) == "AAA" and s.figure.value != 1 for s in witnesses)


# --- opposition laws --------------------------------------------------------

def test_all_laws_hold():
    results = opposition_laws()
    assert len(results) == 12
    assert all(r.ok for r in results)


def test_law_counts_by_kind():
    results = opposition_laws()
    assert sum(1 for r in results if r.expected is not None) == 10
    assert sum(1 for r in results if r.expected is None) == 2


def test_subalternation_law_shape():
    (law,) = [r for r in opposition_laws() if r.name == "subalternation: I from A"]
    assert str(law.chain) == "A <- * -> A -> B"
    assert str(law.trace.normal_form) == "A <- * -> B"


def test_contradiction_law_concludes_self_exclusion():
    (law,) = [r for r in opposition_laws() if r.name == "contradiction: E against I"]
    assert law.expected == Proposition(PropKind.O, "A", "A")
    assert str(law.trace.normal_form) == "A <- * -> * <- A"


def test_non_reducing_chains_are_stuck():
    stuck = [r for r in opposition_laws() if r.expected is None]
    for r in stuck:
        assert r.trace.steps == ()
        assert r.trace.normal_form == r.chain


# --- mutual exclusion -------------------------------------------------------

def test_mutual_exclusion_through_a_longer_chain():
    assert mutually_excluded(ch("C <- A -> * <- B -> D"), "C", "D")


def test_e_diagram_is_the_minimal_exclusion():
    assert mutually_excluded(diagram(prop("E", "A", "B")), "A", "B")


def test_i_diagram_is_not_an_exclusion():
    assert not mutually_excluded(diagram(prop("I", "A", "B")), "A", "B")


def test_two_bullets_are_not_an_exclusion():
    assert not mutually_excluded(diagram(prop("O", "A", "B")), "A", "B")


def test_exclusion_reduces_interior_runs():
    assert mutually_excluded(ch("C <- X <- A -> * <- B -> Y -> D"), "C", "D")
    assert not mutually_excluded(ch("C <- X <- A -> * -> B -> Y -> D"), "C", "D")


def test_exclusion_of_a_term_from_itself():
    assert mutually_excluded(diagram(prop("E", "A", "A")), "A", "A")


def test_exclusion_requires_both_terms():
    with pytest.raises(TermNotInChain):
        mutually_excluded(ch("A -> * <- B"), "A", "Q")
    with pytest.raises(TermNotInChain):
        mutually_excluded(ch("A -> B"), "A", "A")


def test_exclusion_between_interior_occurrences():
    # only the stretch between the chosen terms matters
    assert mutually_excluded(ch("Q -> A -> * <- B <- R"), "A", "B")


# --- n-term counting --------------------------------------------------------

def test_three_term_count_matches_the_formula():
    assert count_valid_nterm(3) == 24


def test_three_term_bare_count():
    assert count_valid_nterm(3, with_assumptions=False) == 15


def test_unsupported_n():
    for n in (1, 2, 5, 0, -3):
        with pytest.raises(UnsupportedN):
            count_valid_nterm(n)
