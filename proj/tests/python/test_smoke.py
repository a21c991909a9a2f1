import json
import os

import pytest

import dopgb

SIX = ["x1*D4 + 1", "x2*D5", "(x1+x2)*D6", "D5*D6"]
FIXTURE = os.path.join(os.environ.get("DOPGB_DATA_DIR", "data"), "six_vars.dop")


def test_commutator():
    assert dopgb.multiply("D1", "x1*x2", 2) == "x1*x2*D1 + x2"


def test_fixture_counts():
    new = dopgb.groebner(SIX, 6)
    ip = dopgb.groebner(SIX, 6, method="ip")
    assert new["basis"] == ip["basis"] == ["x1*D4 + 1", "x2*D5", "(x1 + x2)*D6", "D5*D6"]
    assert (new["spoly_count"], ip["spoly_count"]) == (5, 12)
    assert dopgb.compare(SIX, 6) == {"new": 5, "ip": 12, "same_ideal": True}
    assert dopgb.is_groebner(SIX, 6) and dopgb.is_groebner(SIX, 6, method="ip")
    assert len(dopgb.syzygies(SIX, 6)) == 5


def test_completion_and_reduce():
    r = dopgb.groebner(["x1*D1 + 1", "D1"], 1)
    assert r["additions"] == ["1"]
    quotients, remainder = dopgb.reduce("D1^2", ["x1*D1 + 1", "D1"], 1)
    assert remainder == "0" and quotients == ["0", "D1"]
    assert dopgb.groebner(["x1*D1 + 1", "D1"], 1, interreduce=True)["basis"] == ["1"]


def test_errors():
    with pytest.raises(dopgb.ParseError):
        dopgb.groebner(["x7*D1"], 6)
    with pytest.raises(ValueError):
        dopgb.multiply("D1^", "1", 1)


def test_cli_entry():
    code, out, _ = dopgb.run(["gb", "--stats", "json", FIXTURE])
    assert code == 0
    stats = json.loads(out)
    assert set(stats) == {"method", "basis", "spoly_count", "zero_reductions", "additions", "elapsed_ms"}
    code, _, err = dopgb.run(["gb", "-"], "vars = 1\nD2\n")
    assert code == 2 and "parse error" in err
