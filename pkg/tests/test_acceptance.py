"""One test per acceptance criterion.

Each test records a PASS/FAIL line; the lines are printed in the pytest
terminal summary (see conftest.py) and when this file is run directly:

    python3 tests/test_acceptance.py
"""

from prymrank import acceptance

LINES: list[str] = []

def _record(res: acceptance.CheckResult) -> acceptance.CheckResult:
    LINES.append(res.line())
    return res

def _assert(res: acceptance.CheckResult) -> None:
    failed = [k for k, v in res.parts.items() if not v]
    assert res.passed, f"{res.name}: failed sub-checks {failed}"

def test_criterion_1_table_replay():
    res = _record(acceptance.table_replay())
    assert len(res.details["rows"]) == 30
    _assert(res)

def test_criterion_2_symbolic_hz():
    res = _record(acceptance.symbolic_hz(samples=500))
    assert res.details["samples"] == 1500
    _assert(res)

def test_criterion_3_degree_in_b():
    _assert(_record(acceptance.degree_in_b_check((5, 11, 17))))

def test_criterion_4_p3_family():
    _assert(_record(acceptance.p3_family()))

def test_criterion_5_superspecial():
    _assert(_record(acceptance.superspecial((5, 11, 17), budget=10_000)))

def test_criterion_6_kummer_counting():
    _assert(_record(acceptance.kummer_counting(per_field=20)))

def test_criterion_7_property_suites():
    res = _record(acceptance.property_suites(cases=100))
    assert len(res.parts) == 5
    _assert(res)

if __name__ == "__main__":
    import sys

    results = acceptance.run_all()
    for r in results:
        print(r.line())
    sys.exit(0 if all(r.passed for r in results) else 1)
