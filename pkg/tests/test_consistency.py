import json

import pytest

from opflab.consistency import CONSTRAINTS, corrupted_star, verify_constraints
from opflab.designs import NotPrime


def test_qubit_pair_passes():
    report = verify_constraints(2, 2, trials=100, seed=0)
    assert report.all_pass
    assert report.max_residual < 1e-10
    assert all(r.trials == 100 for r in report.results.values())


def test_qutrit_qubit_passes():
    report = verify_constraints(3, 2, trials=50, seed=1)
    assert report.all_pass and report.max_residual < 1e-10


def test_negative_control_fails_unit_normalization():
    report = verify_constraints(2, 2, trials=10, seed=0, star_product=corrupted_star)
    assert not report.results["C3"].passed
    assert report.results["C3"].max_residual > 0.1
    assert not report.all_pass


def test_report_json_schema():
    report = verify_constraints(2, 3, trials=3, seed=5)
    data = json.loads(json.dumps(report.to_json()))
    assert [c["constraint"] for c in data["constraints"]] == list(CONSTRAINTS)
    for c in data["constraints"]:
        assert set(c) == {"constraint", "pass", "max_residual", "trials"}
        assert isinstance(c["pass"], bool) and isinstance(c["max_residual"], float)


def test_seeded_runs_are_reproducible():
    a = verify_constraints(2, 2, trials=5, seed=11).to_json()
    b = verify_constraints(2, 2, trials=5, seed=11).to_json()
    assert a == b


def test_non_prime_dimension_rejected():
    with pytest.raises(NotPrime):
        verify_constraints(4, 2, trials=1)
