import glob
import io
import json
import os
from fractions import Fraction

import pytest
from hypothesis import given

from fracweyl.serialize import (FormatError, chain_from_obj, direction_from_obj,
                                dumps_element, load_element, loads_element, parse_fraction,
                                save_element)
from fracweyl.valuation import Direction
from helpers import elements

ELEMS = os.path.join(os.path.dirname(__file__), "fixtures", "elements")
CANONICAL = sorted(p for p in glob.glob(os.path.join(ELEMS, "*.json"))
                   if not p.endswith("unsorted.json"))


@pytest.mark.parametrize("path", CANONICAL, ids=os.path.basename)
def test_corpus_round_trip_bytes(path):
    with open(path) as fh:
        text = fh.read()
    assert dumps_element(loads_element(text)) == text


def test_unsorted_loads_and_saves_sorted():
    P = load_element(os.path.join(ELEMS, "unsorted.json"))
    buf = io.StringIO()
    save_element(P, buf)
    keys = [(t["y"], Fraction(t["xnum"], 2)) for t in json.loads(buf.getvalue())["terms"]]
    assert keys == sorted(keys, reverse=True)


@given(elements(), )
def test_random_round_trip(P):
    assert loads_element(dumps_element(P)) == P
    assert dumps_element(loads_element(dumps_element(P))) == dumps_element(P)


@pytest.mark.parametrize("bad", ["2/0", "2/4", "1/1", "0.5", "1/-2", "abc", "", " 1/3/4"])
def test_bad_fractions(bad):
    with pytest.raises(FormatError):
        parse_fraction(bad)


@pytest.mark.parametrize("good,value", [("3", 3), ("-7/2", Fraction(-7, 2)), ("0", 0)])
def test_good_fractions(good, value):
    assert parse_fraction(good) == value


@pytest.mark.parametrize("doc", [
    '{"level": 1, "commutative": false, "terms": [{"xnum": 0, "y": 0, "c": "0"}]}',
    '{"level": 0, "commutative": false, "terms": []}',
    '{"level": 1, "commutative": "no", "terms": []}',
    '{"level": 1, "commutative": false, "terms": [{"xnum": 0, "y": -1, "c": "1"}]}',
    '{"level": 1, "commutative": false, "terms": [{"xnum": 0, "y": 0, "c": "1"},'
    ' {"xnum": 0, "y": 0, "c": "2"}]}',
    '{"level": 1, "commutative": false, "terms": [{"xnum": 0.5, "y": 0, "c": "1"}]}',
    '{"level": 1, "commutative": false',
    '[1, 2]',
])
def test_malformed_elements(doc):
    with pytest.raises(FormatError):
        loads_element(doc)


def test_direction_json():
    assert direction_from_obj([3, -1]) == Direction(3, -1)
    for bad in ([2, 4], [1], "3,-1", [True, 0]):
        with pytest.raises(FormatError):
            direction_from_obj(bad)


def test_chain_field_types():
    with pytest.raises(FormatError):
        chain_from_obj({"nodes": [{"A_xnum": "9", "A_y": 21, "rho": 3, "sigma": -1, "level": 1}]})
    with pytest.raises(FormatError):
        chain_from_obj({"nodes": []})
