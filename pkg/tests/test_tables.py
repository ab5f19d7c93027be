"""Box tables: invariants, no-signalling, marginals, CHSH anchors."""

import itertools

import pytest

from boxworld import catalog
from boxworld.dyadic import Dyadic, dy
from boxworld.errors import InvalidTableError, ShapeMismatchError
from boxworld.tables import (
    BoxTable,
    all_bitstrings,
    chsh_max_over_relabellings,
    chsh_value,
    is_no_signalling,
    uniform_table,
)

H = Dyadic(1, 1)
Q = Dyadic(1, 2)


def brute_marginal(table, party, x, out):
    """Independent summation oracle for single-party output marginals."""
    total = dy(0)
    for a in all_bitstrings(table.n_parties):
        if a[party - 1] == out:
            total = total + table.prob(x, a)
    return total


def test_construction_guards():
    with pytest.raises(InvalidTableError):
        BoxTable(2, {((0, 0), (0, 0)): dy(-1), ((0, 0), (1, 1)): dy(2)})
    with pytest.raises(InvalidTableError):
        BoxTable(1, {((0,), (0,)): H})  # row sums to 1/2


def test_local_tables_pass_no_signalling():
    for params in itertools.product((0, 1), repeat=4):
        assert is_no_signalling(catalog.box_table_local(*params))


def test_nonlocal_tables_no_signalling_with_uniform_marginals():
    for params in itertools.product((0, 1), repeat=3):
        t = catalog.box_table_nonlocal(*params)
        assert is_no_signalling(t)
        for x in all_bitstrings(2):
            for party in (1, 2):
                for out in (0, 1):
                    assert brute_marginal(t, party, x, out) == H


def test_tripartite_marginals_uniform():
    for cls in (44, 45, 46):
        t = catalog.tripartite_class_table(cls)
        assert is_no_signalling(t)
        for x in all_bitstrings(3):
            for party in (1, 2, 3):
                assert brute_marginal(t, party, x, 0) == H


def test_signalling_table_detected():
    # b copies x: Bob's output distribution depends on Alice's input
    probs = {}
    for x, y in all_bitstrings(2):
        probs[((x, y), (0, x))] = dy(1)
    t = BoxTable(2, probs)
    assert not is_no_signalling(t)


def test_chsh_anchors():
    # fixed-form values distinguish the vertices: 4 for (0,0,0), 0 for the
    # anti-correlated box, 2 for the rest
    assert chsh_value(catalog.box_table_nonlocal(0, 0, 0)) == 4
    assert chsh_value(catalog.box_table_nonlocal(0, 0, 1)) == 0
    for params in itertools.product((0, 1), repeat=3):
        if params not in ((0, 0, 0), (0, 0, 1)):
            assert chsh_value(catalog.box_table_nonlocal(*params)) == 2
        # every non-local vertex saturates 4 on its own sign convention
        assert chsh_max_over_relabellings(catalog.box_table_nonlocal(*params)) == 4
    assert chsh_value(catalog.box_table_local(0, 0, 0, 0)) == 3
    assert chsh_value(uniform_table(2)) == 2
    local_values = [
        chsh_value(catalog.box_table_local(*p)) for p in itertools.product((0, 1), repeat=4)
    ]
    assert max(local_values) == 3
    assert min(local_values) == 1
    with pytest.raises(ShapeMismatchError):
        chsh_value(uniform_table(1))


def test_chsh_range_over_catalog_tables():
    from boxworld.fiducial import state_to_table

    for i in range(24):
        v = chsh_value(state_to_table(catalog.bipartite_state(i)))
        assert dy(0) <= v <= dy(4)
        if i < 16:
            assert dy(1) <= v <= dy(3)


def test_group_level_signalling_detected():
    # every single-party output marginal is uniform, but the pair (1,2)
    # correlates or anti-correlates with party 3's input: still signalling
    probs = {}
    for x in all_bitstrings(3):
        for a in all_bitstrings(3):
            pair_parity = a[0] ^ a[1]
            if pair_parity == x[2]:
                # two (a0, a1) pairs and two a2 values: four outcomes at 1/4
                probs[(x, a)] = Dyadic(1, 2)
    t = BoxTable(3, probs)
    for party in (1, 2, 3):
        for x in all_bitstrings(3):
            for out in (0, 1):
                assert brute_marginal(t, party, x, out) == H
    assert not is_no_signalling(t)
