"""Smoke tests for the Python package: import, built-ins, verdicts,
predicates, JSON round-trip, and error mapping. Runs as a plain script."""

import json
import sys

import lgroups


def test_builtins():
    names = lgroups.builtin_names()
    assert set(names) == {"ex_5_2_1", "ex_5_2_2", "ex_5_3_2", "ex_5_4"}, names
    p = lgroups.builtin("ex_5_3_2")
    assert p.name() == "ex_5_3_2"
    assert p.space() == "alphaN"
    assert p.generators() == ["a", "b"]
    fin = lgroups.builtin("finite(3)")
    assert fin.space() == "finite"
    assert fin.generators() == ["e1", "e2", "e3"]


def test_predicates():
    assert lgroups.predicate("ex_5_3_2", "in-principal", "b", "a") == 1
    assert lgroups.predicate("ex_5_3_2", "in-principal", "a", "b") is None
    assert lgroups.predicate("ex_5_2_1", "strong-unit", "v") is False
    assert lgroups.predicate("ex_5_2_1", "weak-unit", "v") is True
    assert lgroups.predicate("ex_5_2_1", "in-zkernel", "v + v", "v") is True
    coz = lgroups.predicate("ex_5_2_1", "coz", "v")
    assert isinstance(coz, str) and coz, coz
    assert lgroups.normalize_term("(v + v)") == "v + v"


def test_class_verdicts():
    verdict = lgroups.check("ex_5_3_2", "Y", budget=300)
    assert verdict["class"] == "Y"
    assert verdict["status"] == "Fails"
    assert verdict["witness"]["f"]["term"] == "a"
    assert verdict["witness"]["g"]["term"] == "b"

    result = lgroups.analyze("finite(2)", budget=300)
    assert result["subject"] == "finite(2)"
    assert [v["status"] for v in result["classes"]] == ["HoldsExact"] * 5
    assert result["cross"]["all_ok"] is True


def test_user_presentation_roundtrip():
    text = json.dumps(
        {
            "space": "finite",
            "finite_size": 2,
            "generators": {"u": ["1", "0"], "w": ["0", "1"]},
        }
    )
    p = lgroups.presentation(text)
    assert p.space() == "finite"
    reparsed = lgroups.load(p.to_json())
    assert reparsed.generators() == p.generators()
    assert lgroups.predicate(p, "in-perp", "u", "w") is True


def test_verify_paper():
    report = lgroups.verify_paper(budget=120)
    assert report["all_ok"] is True
    assert len(report["checks"]) == 104
    text = lgroups.verify_paper_text(budget=120)
    assert "result: ALL CHECKS MATCH (104/104)" in text


def test_errors():
    for bad_call in (
        lambda: lgroups.builtin("nope"),
        lambda: lgroups.load("{ not json"),
        lambda: lgroups.load('{"space": "torus", "generators": {}}'),
        lambda: lgroups.predicate("ex_5_2_1", "coz", "v +"),
        lambda: lgroups.predicate("ex_5_2_1", "coz", "missing_gen"),
        lambda: lgroups.predicate("ex_5_2_1", "frobnicate", "v"),
        lambda: lgroups.check("ex_5_2_1", "Q"),
    ):
        try:
            bad_call()
        except ValueError:
            pass
        else:
            raise AssertionError(f"expected ValueError from {bad_call}")


def main():
    tests = [
        test_builtins,
        test_predicates,
        test_class_verdicts,
        test_user_presentation_roundtrip,
        test_verify_paper,
        test_errors,
    ]
    for test in tests:
        test()
        print(f"ok: {test.__name__}")
    print(f"result: {len(tests)}/{len(tests)} smoke tests pass")
    return 0


if __name__ == "__main__":
    sys.exit(main())
