import pytest

import iterlab


def test_maybe_elgot_suite_passes():
    reports = iterlab.check("maybe", "elgot", sizes="2,2,1")
    assert reports
    assert all(r["status"] == "pass" for r in reports)
    fix = next(r for r in reports if r["law"] == "EL-Fix")
    assert fix["cases"] == 25


def test_plotkin_bottom_witness():
    (report,) = iterlab.check("plotkin-candidate", "KA-Neut", sizes="1")
    assert report["status"] == "fail"
    assert report["failures"][0]["witnesses"][0]["literal"] == "0 -> {0}"


def test_inapplicable_suite():
    reports = iterlab.check("maybe", "kleene", sizes="1")
    assert {r["status"] for r in reports} == {"inapplicable"}


def test_usage_errors():
    with pytest.raises(ValueError):
        iterlab.check("bogus")
    with pytest.raises(ValueError, match="not enumerable"):
        iterlab.check("subdist", "EL-Fix")


def test_sampled_is_deterministic():
    a = iterlab.check("subdist", "EL-Fix", sizes="2", mode="sampled", seed=3, samples=50)
    b = iterlab.check("subdist", "EL-Fix", sizes="2", mode="sampled", seed=3, samples=50, jobs=4)
    assert a == b


def test_closure():
    assert iterlab.closure("0 -> {1} ; 1 -> {2} ; 2 -> {}") == ["{0,1,2}", "{1,2}", "{2}"]


def test_catalog_and_fixtures():
    ids = {law["id"] for law in iterlab.laws()}
    assert {"EL-Fix", "KA-Neut", "W-Fix", "T-WIW"} <= ids
    assert "uniformity" in iterlab.fixture_names()
    records = iterlab.counterexamples("fixpoint")
    assert records[-1]["ok"] is True
