import os

import pytest

import catcolim

FIXTURES = os.path.join(os.path.dirname(__file__), "..", "..", "fixtures")


def load(name):
    with open(os.path.join(FIXTURES, name)) as f:
        return catcolim.Document(f.read())


def test_parse_and_names():
    doc = load("twoarrow.cat")
    kinds = dict(doc.names())
    assert kinds["I"] == "index2"
    assert kinds["repx"] == "weight"
    assert doc.weight_sizes("repx") == [(1, 1), (1, 1)]


def test_emit_round_trip_is_stable():
    doc = load("parpair.cat")
    once = doc.emit()
    twice = catcolim.Document(once).emit()
    assert once == twice


def test_nerve_reconstruction():
    doc = load("twoarrow.cat")
    assert catcolim.nerve_reconstruction_holds(doc, "Two")


def test_flexibility_verdicts():
    two = load("twoarrow.cat")
    assert catcolim.flexible(two, "repx")["status"] == "flexible"
    par = load("parpair.cat")
    assert catcolim.flexible(par, "Delta1")["status"] == "not-flexible"


def test_weighted_colimit_evaluates_the_diagram():
    par = load("parpair.cat")
    out = catcolim.weighted_colimit_sizes(par, "Delta1", "Collapse")
    assert out["materialized"]
    # the coequalizer of the two collapse maps is a single point
    assert out["objects"] == 1


def test_sifted_counterexample_has_a_failing_pair():
    par = load("parpair.cat")
    out = catcolim.sifted(par, "Delta1")
    assert out["status"] == "counterexample"
    assert "counterexample" in out


def test_decompose_verify_round_trip():
    doc = load("twoarrow.cat")
    cert = catcolim.decompose(doc, "repx", refine=True, arity_bound=1)
    report = catcolim.verify(doc, "repx", cert, spot_checks=False)
    assert report["ok"]
    assert report["depth"] == 4


def test_errors_are_typed():
    with pytest.raises(catcolim.ParseError):
        catcolim.Document("nonsense 1 2 3")
    doc = load("twoarrow.cat")
    with pytest.raises(catcolim.InvalidInput):
        catcolim.flexible(doc, "missing")
