"""Catalog entries: pinned vectors and matrices, index errors, validity."""

import pytest

from boxworld import catalog
from boxworld.dyadic import Dyadic, dy
from boxworld.errors import CatalogIndexError, InvalidTensorError
from boxworld.tensors import (
    affine_combination,
    is_valid_effect,
    is_valid_state,
    pair,
    tensor_product,
)

H = Dyadic(1, 1)


def entries(t):
    return tuple(t.entries)


def test_pure_state_vectors():
    assert entries(catalog.pure_state(0)) == (dy(1), dy(0), dy(1))
    assert entries(catalog.pure_state(1)) == (dy(0), dy(-1), dy(1))
    assert entries(catalog.pure_state(2)) == (dy(-1), dy(0), dy(1))
    assert entries(catalog.pure_state(3)) == (dy(0), dy(1), dy(1))


def test_pure_state_index_errors():
    with pytest.raises(CatalogIndexError):
        catalog.pure_state(4)
    with pytest.raises(CatalogIndexError):
        catalog.pure_state(-1)


def test_extremal_effect_vectors():
    assert entries(catalog.extremal_effect(0)) == (H, H, H)
    assert entries(catalog.extremal_effect(1)) == (-H, H, H)
    assert entries(catalog.extremal_effect(2)) == (-H, -H, H)
    assert entries(catalog.extremal_effect(3)) == (H, -H, H)
    with pytest.raises(CatalogIndexError):
        catalog.extremal_effect(5)


def test_effect_pairs_sum_to_deterministic():
    e = catalog.deterministic_effect(1)
    for i, j in ((0, 2), (1, 3)):
        summed = tuple(
            catalog.extremal_effect(i).entries[k] + catalog.extremal_effect(j).entries[k]
            for k in range(3)
        )
        assert summed == e.entries


def test_deterministic_effect():
    assert entries(catalog.deterministic_effect(1)) == (dy(0), dy(0), dy(1))
    e2 = catalog.deterministic_effect(2)
    assert e2.n_parties == 2
    assert e2[(2, 2)] == 1
    assert sum(v != 0 for v in e2.entries) == 1
    with pytest.raises(InvalidTensorError):
        catalog.deterministic_effect(0)
    # pairing with any normalized state is 1
    assert pair(catalog.deterministic_effect(1), catalog.pure_state(1)) == 1


def test_maximally_mixed():
    mu = catalog.maximally_mixed(1)
    assert entries(mu) == (dy(0), dy(0), dy(1))
    # equal-weight mixture of the four pure states
    mix = affine_combination([(Dyadic(1, 2), catalog.pure_state(i)) for i in range(4)])
    assert mix == mu
    assert pair(catalog.extremal_effect(0), mu) == H
    assert catalog.maximally_mixed(2) == tensor_product(mu, mu)


def test_bipartite_products():
    assert catalog.bipartite_state(0) == tensor_product(
        catalog.pure_state(0), catalog.pure_state(0)
    )
    assert catalog.bipartite_state(7) == tensor_product(
        catalog.pure_state(1), catalog.pure_state(3)
    )


def test_bipartite_nonlocal_matrices():
    o16 = catalog.bipartite_state(16)
    assert entries(o16) == (-H, H, dy(0), H, H, dy(0), dy(0), dy(0), dy(1))
    # indices 19/23 follow the orbit rule, not the printed display order
    o19 = catalog.bipartite_state(19)
    assert entries(o19) == (H, H, dy(0), H, -H, dy(0), dy(0), dy(0), dy(1))
    o23 = catalog.bipartite_state(23)
    assert entries(o23) == (-H, H, dy(0), -H, -H, dy(0), dy(0), dy(0), dy(1))
    with pytest.raises(CatalogIndexError):
        catalog.bipartite_state(24)


def test_box_table_local_examples():
    t = catalog.box_table_local(0, 0, 0, 0)
    for x in ((0, 0), (0, 1), (1, 0), (1, 1)):
        assert t.prob(x, (0, 0)) == 1
    t = catalog.box_table_local(1, 0, 1, 0)
    for x, y in ((0, 0), (0, 1), (1, 0), (1, 1)):
        assert t.prob((x, y), (x, y)) == 1  # a = x, b = y


def test_box_table_nonlocal_examples():
    t = catalog.box_table_nonlocal(0, 0, 0)
    assert t.prob((1, 1), (0, 1)) == H
    assert t.prob((1, 1), (0, 0)) == 0
    assert t.prob((0, 0), (1, 1)) == H
    t = catalog.box_table_nonlocal(1, 1, 1)
    # parity is x*y + x + y + 1
    for x in ((0, 0), (0, 1), (1, 0), (1, 1)):
        parity = (x[0] * x[1]) ^ x[0] ^ x[1] ^ 1
        for a in ((0, 0), (0, 1), (1, 0), (1, 1)):
            expected = H if (a[0] ^ a[1]) == parity else dy(0)
            assert t.prob(x, a) == expected


def test_tripartite_class_tables():
    t44 = catalog.tripartite_class_table(44)
    # at input (1,1,1) the parity-1 triples each get 1/4
    support = t44.support((1, 1, 1))
    assert len(support) == 4
    assert all(sum(a) % 2 == 1 for a in support)
    assert all(t44.prob((1, 1, 1), a) == Dyadic(1, 2) for a in support)
    # at input (0,0,0) the parity-0 triples get 1/4
    support0 = t44.support((0, 0, 0))
    assert all(sum(a) % 2 == 0 for a in support0)
    with pytest.raises(CatalogIndexError):
        catalog.tripartite_class_table(43)


def test_catalog_states_are_valid():
    for i in range(4):
        assert is_valid_state(catalog.pure_state(i))
    for i in range(24):
        assert is_valid_state(catalog.bipartite_state(i))


def test_factorized_effects_are_valid():
    for i in range(4):
        assert is_valid_effect(catalog.extremal_effect(i))
        for j in range(4):
            prod = tensor_product(catalog.extremal_effect(i), catalog.extremal_effect(j))
            assert is_valid_effect(prod)
