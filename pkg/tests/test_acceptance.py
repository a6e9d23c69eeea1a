"""The eleven acceptance criteria, each run at its stated tolerance and time budget.

One PASS/FAIL line per criterion is printed at the end of the pytest session
(and by ``python3 tests/test_acceptance.py``). Failing checks are listed with
the observed values; nothing here is relaxed to make a criterion pass.
"""
import sys

import pytest

from rankmono.claims import CLAIMS, run_claim

CRITERIA = [
    (1, "closeness"),
    (2, "harmonic"),
    (3, "betweenness"),
    (4, "eigen-small"),
    (5, "eigen-family"),
    (6, "eigen-table2"),
    (7, "seeley"),
    (8, "katz"),
    (9, "pagerank"),
    (10, "scanner"),
    (11, "fibration"),
]

RESULTS: dict[int, object] = {}


def summary_lines() -> list[str]:
    return [f"criterion {n:2d} {RESULTS[n].summary_line()}" for n, _ in CRITERIA if n in RESULTS]


@pytest.mark.slow
@pytest.mark.parametrize("number,claim_id", CRITERIA, ids=[c for _, c in CRITERIA])
def test_criterion(number, claim_id):
    res = run_claim(claim_id)
    RESULTS[number] = res
    print(res.report())
    failed = [f"{name}: {detail}" for name, ok, detail in res.checks if not ok]
    assert not failed, "\n".join(failed)
    assert res.within_budget, f"took {res.elapsed:.1f}s, budget {res.budget:.0f}s"


def test_every_claim_is_a_criterion():
    assert sorted(CLAIMS) == sorted(c for _, c in CRITERIA)


if __name__ == "__main__":
    ok = True
    for number, claim_id in CRITERIA:
        res = run_claim(claim_id)
        RESULTS[number] = res
        print(f"criterion {number:2d} {res.summary_line()}", flush=True)
        ok &= res.passed
    sys.exit(0 if ok else 1)
