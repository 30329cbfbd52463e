import json

import pytest

from quatcalc import verify


def test_report_summary_and_order():
    r = verify.Report("demo", 3)
    r.cases += [verify.case("b", True, {"x": 1.0}, 1e-3, "line"),
                verify.case("a", False, {"x": float("nan")}, 1e-3, "line", "note")]
    data = r.to_json()
    assert data["schema_version"] == 1
    assert data["summary"] == {"pass": 1, "fail": 1, "skip": 0, "total": 2}
    assert [c["name"] for c in data["cases"]] == ["a", "b"]
    assert data["cases"][0]["measured"]["x"] is None
    assert data["cases"][0]["detail"].startswith("[int_a^b")
    assert not r.ok
    json.dumps(data, allow_nan=False)


def test_every_tag_has_text():
    assert all(isinstance(v, str) and v for v in verify.TAGS.values())


@pytest.mark.parametrize("suite", ["commutator", "exp-quadrature", "leibnitz", "symmetric-integral"])
def test_small_suites_pass_and_are_deterministic(suite):
    a = verify.run_suite(suite, seed=5, cases=20).to_json()
    b = verify.run_suite(suite, seed=5, cases=20).to_json()
    assert a == b
    assert a["summary"]["fail"] == 0, [c for c in a["cases"] if c["status"] == "fail"]
    assert all(c["detail"].startswith("[") for c in a["cases"])


def test_seeds_are_per_suite():
    a = verify.rng_for("integral", 1).uniform()
    b = verify.rng_for("fueter", 1).uniform()
    assert a != b and a == verify.rng_for("integral", 1).uniform()


def test_unknown_suite():
    with pytest.raises(KeyError):
        verify.run_suite("nosuch")


def test_loop_check_on_square():
    from quatcalc import analytic as af
    from quatcalc.quaternion import I, Quaternion
    val, e_open, ratio = verify.loop_check(af.exp(), (I, Quaternion(1, 1), Quaternion(1, 2), Quaternion(0, 2), I), 500)
    assert val <= 3 * e_open and (ratio is None or ratio >= 1.7)
