"""Perfect discrimination: separating inputs, POVM construction, completeness."""

import itertools

import pytest

from boxworld import catalog
from boxworld.dyadic import Dyadic, dy
from boxworld.errors import NonDeterministicParityError, NoSeparatingInputError
from boxworld.fiducial import (
    CLOSED_FORM_CONVENTION,
    DEFAULT_CONVENTION,
    table_to_state,
    tripartite_class_state,
    valid_conventions,
)
from boxworld.discrimination import (
    closed_form_nonlocal_effect,
    discriminating_povm,
    find_separating_input,
    output_parity,
    product_effect,
    search_product_effect_sums,
    verify_perfect_discrimination,
)
from boxworld.tables import uniform_table
from boxworld.tensors import add_effects, is_valid_effect, pair


def test_output_parity():
    p000 = catalog.box_table_nonlocal(0, 0, 0)
    assert output_parity(p000, (0, 0)) == 0
    assert output_parity(p000, (1, 1)) == 1
    with pytest.raises(NonDeterministicParityError):
        output_parity(uniform_table(2), (0, 0))


def test_separating_input_examples():
    p000 = catalog.box_table_nonlocal(0, 0, 0)
    p001 = catalog.box_table_nonlocal(0, 0, 1)
    assert find_separating_input(p000, p001) == ((0, 0), (0, 1))
    assert find_separating_input(p000, p000) is None
    # the marked tripartite input separates the two class rules
    t44 = catalog.tripartite_class_table(44)
    t45 = catalog.tripartite_class_table(45)
    assert output_parity(t44, (1, 1, 0)) == 0
    assert output_parity(t45, (1, 1, 0)) == 1
    x, parities = find_separating_input(t44, t45)
    assert parities[0] != parities[1]


def test_single_site_discrimination():
    w0, w1 = catalog.pure_state(0), catalog.pure_state(1)
    povm = discriminating_povm(w0, w1)
    assert pair(povm.a, w0) == 1
    assert pair(povm.a, w1) == 0
    assert verify_perfect_discrimination(povm, w0, w1)


def test_two_term_structure_for_nonlocal_pairs():
    s1 = table_to_state(catalog.box_table_nonlocal(0, 0, 0))
    s2 = table_to_state(catalog.box_table_nonlocal(0, 0, 1))
    povm = discriminating_povm(s1, s2)
    assert len(povm.terms) == 2
    assert verify_perfect_discrimination(povm, s1, s2)


def test_identical_states_rejected():
    with pytest.raises(NoSeparatingInputError):
        discriminating_povm(catalog.pure_state(0), catalog.pure_state(0))


def test_verify_rejects_mismatched_povm():
    s1, s2 = catalog.bipartite_state(16), catalog.bipartite_state(17)
    povm = discriminating_povm(s1, s2)
    # identical states: both pairings hit 1
    assert not verify_perfect_discrimination(povm, s1, s1)
    mu2 = catalog.maximally_mixed(2)
    assert not verify_perfect_discrimination(povm, mu2, mu2)
    # a parity-class effect answers 1/2 on the mixed state, so neither slot fits
    assert pair(povm.a, mu2) == Dyadic(1, 1)
    assert not verify_perfect_discrimination(povm, s1, mu2)


def test_completeness_all_bipartite_pairs():
    states = [catalog.bipartite_state(i) for i in range(24)]
    for i in range(24):
        for j in range(i + 1, 24):
            povm = discriminating_povm(states[i], states[j])
            assert verify_perfect_discrimination(povm, states[i], states[j])


def test_constructed_effect_in_range_on_every_vertex():
    states = [catalog.bipartite_state(i) for i in range(24)]
    povm = discriminating_povm(states[16], states[17])
    for s in states:
        assert dy(0) <= pair(povm.a, s) <= dy(1)
    assert is_valid_effect(povm.a)
    assert is_valid_effect(povm.complement)


def test_convention_covariance():
    for conv in valid_conventions():
        s1 = catalog.bipartite_state(16)
        s2 = catalog.bipartite_state(20)
        povm = discriminating_povm(s1, s2, conv)
        assert verify_perfect_discrimination(povm, s1, s2)
        assert povm.convention_id == conv.id


def test_tripartite_class_discrimination_four_terms():
    c44 = tripartite_class_state(44)
    c45 = tripartite_class_state(45)
    povm = discriminating_povm(c44, c45)
    assert len(povm.terms) == 4
    assert pair(povm.a, c44) == 1
    assert pair(povm.a, c45) == 0


def test_four_term_literal_under_its_convention():
    # the fixed four-term product sum discriminates the class tensors built
    # with the convention it encodes
    a = add_effects(
        product_effect((0, 3, 0)),
        product_effect((0, 1, 2)),
        product_effect((2, 1, 0)),
        product_effect((2, 3, 2)),
    )
    c44 = tripartite_class_state(44, CLOSED_FORM_CONVENTION)
    c45 = tripartite_class_state(45, CLOSED_FORM_CONVENTION)
    assert pair(a, c44) == 1
    assert pair(a, c45) == 0


def test_closed_form_matches_construction_under_its_convention():
    tables = catalog.all_nonlocal_tables()
    for params1, params2 in itertools.combinations(sorted(tables), 2):
        t1, t2 = tables[params1], tables[params2]
        x, (p1, _) = find_separating_input(t1, t2)
        s1 = table_to_state(t1, CLOSED_FORM_CONVENTION)
        s2 = table_to_state(t2, CLOSED_FORM_CONVENTION)
        povm = discriminating_povm(s1, s2, CLOSED_FORM_CONVENTION)
        if p1 == 0:
            assert povm.a == closed_form_nonlocal_effect(*x)


def test_exhaustive_probe_finds_the_construction():
    s1, s2 = catalog.bipartite_state(16), catalog.bipartite_state(17)
    povm = discriminating_povm(s1, s2)
    found = search_product_effect_sums(s1, s2)
    assert found  # at least the constructive answer shows up
    assert tuple(sorted(povm.terms)) in [tuple(sorted(f)) for f in found]


def test_complement_is_the_opposite_parity_sum():
    # e - a is itself an explicit sum of product effects: the outcomes of the
    # other parity at the same input (so both POVM members are valid by
    # construction even where the N=2 vertex check cannot run)
    c44, c46 = tripartite_class_state(44), tripartite_class_state(46)
    povm = discriminating_povm(c44, c46)
    x = povm.separating_input
    conv = DEFAULT_CONVENTION
    other_terms = []
    for a_bits in itertools.product((0, 1), repeat=3):
        if sum(a_bits) % 2 != povm.parity:
            summand = product_effect(
                tuple(conv.effect_index(xk, ak) for xk, ak in zip(x, a_bits))
            )
            other_terms.append(summand)
    assert povm.complement == add_effects(*other_terms)
