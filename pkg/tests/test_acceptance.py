"""The ten acceptance criteria, each run as one seeded identity suite.

Every suite is exact (zero tolerance) except the numeric positivity spot
check inside the Haar suite, which uses ``1e-20`` at ``q = 1/2``.
"""

import pytest

from suqconn.verify import run_suite

from conftest import ACCEPTANCE_LINES

CRITERIA = [
    (1, "coassociativity", "coassoc"),
    (2, "PBW kernel soundness", "pbw"),
    (3, "framing axioms", "framings"),
    (4, "commutation-relation ledger", "ledger"),
    (5, "inductive consistency", "consistency"),
    (6, "Haar state", "haar"),
    (7, "representation", "representation"),
    (8, "isomorphisms", "isomorphisms"),
    (9, "framed space", "framed"),
    (10, "q=1 classical limit", "classical"),
]


@pytest.mark.parametrize("number,title,suite", CRITERIA, ids=[c[2] for c in CRITERIA])
def test_criterion(number, title, suite):
    result = run_suite(suite, seed=0)
    status = "PASS" if result.passed else "FAIL"
    line = f"{status} criterion {number:2d} {title} ({result.checks} checks)"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert result.checks > 0
    assert result.passed, "\n".join(result.failures)
