"""JSON round trips and canonical bytes."""

import json

import pytest

from boxworld import catalog, serialize
from boxworld.errors import BoxworldError
from boxworld.commitment import TRANSFORM_CHEAT, run_buhrman
from boxworld.fiducial import tripartite_class_state
from boxworld.purification import tripartite_uniqueness_counterexample
from boxworld.discrimination import discriminating_povm
from boxworld.transforms import ReversibleTransform, SingleSiteTransform


def test_tensor_round_trip():
    for t in (
        catalog.pure_state(2),
        catalog.bipartite_state(19),
        catalog.extremal_effect(1),
        catalog.deterministic_effect(3),
        tripartite_class_state(46),
    ):
        doc = serialize.tensor_to_dict(t)
        assert serialize.tensor_from_dict(json.loads(json.dumps(doc))) == t


def test_table_round_trip_omits_zeros():
    table = catalog.box_table_nonlocal(1, 0, 1)
    doc = serialize.table_to_dict(table)
    assert len(doc["entries"]) == 8  # half of the 16 cells carry weight
    assert all(row["p"] == "1/2" for row in doc["entries"])
    assert serialize.table_from_dict(doc) == table
    t44 = catalog.tripartite_class_table(44)
    assert serialize.table_from_dict(serialize.table_to_dict(t44)) == t44


def test_malformed_documents_rejected():
    with pytest.raises(BoxworldError):
        serialize.tensor_from_dict({"n_parties": 1, "entries": ["1", "0", "1"]})
    with pytest.raises(BoxworldError):
        serialize.table_from_dict({"n_parties": 2, "entries": [{"x": "00"}]})


def test_transform_round_trip():
    t = ReversibleTransform(
        (SingleSiteTransform(2, -1), SingleSiteTransform(1, 1)), (1, 0)
    )
    doc = serialize.transform_to_dict(t)
    assert doc["perm"] == [2, 1]
    assert serialize.transform_from_dict(doc) == t


def test_povm_document_shape():
    povm = discriminating_povm(catalog.bipartite_state(16), catalog.bipartite_state(17))
    doc = serialize.povm_to_dict(povm)
    assert doc["convention"] == "02:31"
    assert all(len(term["sites"]) == 2 for term in doc["terms"])


def test_transcript_document():
    t = run_buhrman(1, 0, TRANSFORM_CHEAT, seed=5)
    doc = serialize.transcript_to_dict(t)
    assert doc["verdict"] == "accept"
    assert doc["cheat"] == {"alpha": 0, "beta": 1, "gamma": 0}
    assert len(doc["records"]) == 3
    json.dumps(doc)  # serializable


def test_purification_report_document():
    report = tripartite_uniqueness_counterexample()
    doc = serialize.purification_report_to_dict(report)
    assert doc["unique_up_to_local"] is False
    assert doc["failing_pair"] == [0, 1]
    json.dumps(doc)


def test_dumps_is_canonical():
    doc = {"b": 1, "a": [3, 2]}
    assert serialize.dumps(doc) == serialize.dumps({"a": [3, 2], "b": 1})
    assert serialize.dumps(doc).endswith("\n")
