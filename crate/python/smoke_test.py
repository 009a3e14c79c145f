"""Smoke test for the wps extension module. Run after `pip install --no-build-isolation -e crates/py`."""

import json
from fractions import Fraction
from pathlib import Path

import wps

FIXTURES = Path(__file__).resolve().parent.parent / "crates" / "core" / "fixtures"


def main():
    doc = (FIXTURES / "example211.json").read_text()
    dim, deg = wps.degree(doc)
    assert (dim, Fraction(deg)) == (1, Fraction(11, 30)), (dim, deg)

    assert Fraction(wps.minimal_degree([1, 1, 2, 2], 1)) == 2

    rows = json.loads(wps.scrolls([1, 1, 3, 3, 6, 6, 6]))
    assert len(rows) == 15
    assert sum(r["minimal"] for r in rows) == 4

    entries = json.loads(wps.parameterize((FIXTURES / "intro_c1_blocks.json").read_text()))
    assert list(entries.values()) == ["s*t", "t^2", "s^6", "s^5*t", "s^4*t^2"], entries

    report = json.loads(wps.threefold_conjecture(3, 4))
    assert Fraction(report["proven_bound"]) == Fraction(5, 4)

    assert json.loads(wps.run(["bound", "--weights", "1,1,2,2", "--dim", "1"])) == "2"
    try:
        wps.run(["bound", "--weights", "1,x", "--dim", "1"])
    except ValueError:
        pass
    else:
        raise AssertionError("malformed weights should raise ValueError")
    print("smoke test passed")


if __name__ == "__main__":
    main()
