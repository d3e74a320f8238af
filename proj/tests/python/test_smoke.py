"""Smoke tests for the python bindings."""

import eo6v


def test_bundle_known_values():
    b = eo6v.bundle("1", 6)
    q = b["Q(t)"]
    assert q["valuation"] == 1
    assert q["coeffs"][0] == "4"
    assert q["coeffs"][1] == "35"
    t = b["t(q)"]
    assert t["coeffs"][:2] == ["1", "-12"]


def test_symbolic_bundle():
    b = eo6v.bundle("symbolic", 5)
    t = b["t(q)"]
    assert t["coeffs"][0] == ["1"]
    assert t["coeffs"][1] == ["-6", "-6"]  # -6 - 6*gamma at q^2
    q = b["Q(t)"]
    assert q["coeffs"][0] == ["2", "2"]


def test_golden_ratio_bundle():
    b = eo6v.bundle("golden-ratio", 5)
    assert b["R(q)"]["coeffs"][0] == "1"
    # -(7 gamma + 8) at gamma=(1+sqrt5)/2 is -23/2-7/2*sqrt5
    assert b["R(q)"]["coeffs"][1] == "-23/2-7/2*sqrt5"


def test_enumeration_matches_series():
    poly = eo6v.enumerate_eo(2)
    assert poly == ["10", "16", "9"]
    assert eo6v.map_count(1) == 2
    assert eo6v.map_count(1, genus=1) == 1


def test_tutte_oracle():
    # row k is omega_to_gamma of [t^k]C; [t^1]C = 2*gamma + 2
    rows = eo6v.tutte_series(3)
    assert rows[0] == ["1"]
    assert rows[1] == ["2", "2"]
    assert rows[2] == ["10", "16", "9"]


def test_verify_case_passes():
    rep = eo6v.verify_case(3, 16)
    assert rep["all_pass"]
    names = {c["identity_name"] for c in rep["checks"]}
    assert "R_of_h" in names


def test_relation_case6():
    rel = eo6v.find_relation(6, 40)
    monos = {(r, s): c for r, s, c in rel["monomials"]}
    assert monos[(4, 2)] == "256"
    assert monos[(0, 0)] == "16"
