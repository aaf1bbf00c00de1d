"""Session documents: naming, referential integrity, lossless JSON."""

import json
from fractions import Fraction

import pytest

from nlfield.algebra import monomial
from nlfield.coeffs import GaussRat
from nlfield.errors import SessionError
from nlfield.galois import group_from_family
from nlfield.numberfield import cyclotomic_field, quadratic_field, rationals
from nlfield.parser import parse_algebra
from nlfield.session import Session


def make_session():
    s = Session()
    s.add_field("K", quadratic_field(2))
    s.add_field("Q", rationals())
    s.add_field("Ki", cyclotomic_field(4))
    s.add_element("u", s.get_field("K").element([1, 1]))
    s.add_algebra("f", parse_algebra("2*z^{0}+z^{3}", s.get_field("Q")))
    s.add_algebra("g", parse_algebra("(1+1i)*z^{a}", s.get_field("Ki")))
    s.add_group("G", group_from_family(s.get_field("K"), "quadratic"))
    return s


def test_round_trip_is_bit_exact():
    s = make_session()
    text = s.dumps()
    text2 = Session.loads(text).dumps()
    assert text == text2


def test_round_trip_preserves_objects():
    s = make_session()
    s2 = Session.loads(s.dumps())
    assert s2.get_field("K") == s.get_field("K")
    assert s2.elements["u"][1] == s.elements["u"][1]
    assert s2.algebra["f"][1] == s.algebra["f"][1]
    assert s2.algebra["g"][1] == s.algebra["g"][1]
    assert s2.groups["G"][1].order == 2


def test_save_load_file(tmp_path):
    p = tmp_path / "sess.json"
    s = make_session()
    s.save(p)
    assert Session.load(p).dumps() == s.dumps()


def test_duplicate_names_rejected():
    s = make_session()
    with pytest.raises(SessionError):
        s.add_field("K", rationals())
    with pytest.raises(SessionError):
        s.add_element("u", s.get_field("K").element([0, 2]))


def test_unregistered_field_rejected():
    s = Session()
    with pytest.raises(SessionError):
        s.add_element("x", quadratic_field(3).gen)


def test_remove_field_with_dependents_refused():
    s = make_session()
    with pytest.raises(SessionError):
        s.remove_field("K")  # element "u" and group "G" point at it
    with pytest.raises(SessionError):
        s.remove_field("Ki")  # algebra "g" still points at it


def test_broken_reference_on_load():
    doc = {
        "fields": {},
        "elements": {"x": {"field": "missing", "coords": ["1"]}},
    }
    with pytest.raises(SessionError):
        Session.from_json(doc)


def test_inconsistent_signature_rejected():
    doc = {
        "fields": {"K": {"minpoly": ["-2", "0", "1"], "signature": [0, 1]}},
    }
    with pytest.raises(SessionError):
        Session.from_json(doc)


def test_malformed_text_rejected():
    with pytest.raises(SessionError):
        Session.loads("{not json")
    with pytest.raises(SessionError):
        Session.loads(json.dumps([1, 2, 3]))


def test_terms_serialized_sorted_by_index():
    s = Session()
    Q = rationals()
    s.add_field("Q", Q)
    f = monomial(Q.from_rational(5)) + monomial(Q.from_rational(2)).scale(
        GaussRat(Fraction(1, 3))
    )
    s.add_algebra("f", f)
    doc = s.to_json()
    idx = [t["index"] for t in doc["algebra"]["f"]["terms"]]
    assert idx == [["2"], ["5"]]
