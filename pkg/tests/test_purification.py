import csv
import io

import numpy as np
import pytest

from opflab.purification import (figure_data, is_reduced_state, project,
                                 reduced_distance_lower_bound, reduced_image_distance,
                                 write_figure_csv)
from opflab.tensor import projector, random_density, random_pure_state
from opflab.toy import ToyState, doubled, normalized_sym, reduced_from_density, reduced_state

E0, E1 = np.eye(2, dtype=complex)
WITNESS = ToyState(2, 0.5 * (projector(doubled(E0)) + projector(doubled(E1))))


def phi_coefficient(a, b):
    """<Phi| R(rho) |Phi> for rho = [[a, b], [b*, 1 - a]], derived by hand."""
    return 4 / 3 * a * (1 - a) + 2 / 3 * abs(b) ** 2


def test_phi_coefficient_formula_matches_numerics():
    rng = np.random.default_rng(0)
    for _ in range(50):
        rho = random_density(2, rng)
        x, y = project(reduced_from_density(rho))
        assert abs(y - phi_coefficient(rho[0, 0].real, rho[0, 1])) < 1e-12
        assert abs(x - (2 * rho[0, 0].real - 1)) < 1e-12


def test_witness_obstruction_is_exact():
    # y = 0 forces a(1 - a) = 0 and b = 0, i.e. a pure product, whose image is not the witness
    assert project(WITNESS.matrix) == pytest.approx((0.0, 0.0), abs=1e-15)
    for a in (0.0, 1.0):
        rho = np.diag([a, 1 - a]).astype(complex)
        assert np.linalg.norm(reduced_from_density(rho) - WITNESS.matrix) > 0.5


def test_witness_rejected():
    member, dist = is_reduced_state(WITNESS, 2)
    assert not member
    assert dist == pytest.approx(1 / np.sqrt(6), abs=1e-6)
    assert reduced_distance_lower_bound(WITNESS) >= 0.02


def test_reductions_accepted():
    rng = np.random.default_rng(1)
    for _ in range(3):
        omega = reduced_state(random_pure_state(4, rng), 2, 2)
        member, dist = is_reduced_state(omega, 2)
        assert member and dist < 1e-8


def test_normalized_sym_accepted():
    member, dist = is_reduced_state(ToyState(2, normalized_sym(2)), 2)
    assert member and dist < 1e-8


def test_ancilla_of_dimension_one_only_reaches_pure_states():
    omega = reduced_state(random_pure_state(4, 2), 2, 2)
    assert not is_reduced_state(omega, 1)[0]
    pure = ToyState(2, projector(doubled(random_pure_state(2, 3))))
    assert is_reduced_state(pure, 1)[0]


def test_qutrit_reduction_found_by_refinement():
    omega = reduced_state(random_pure_state(9, 4), 3, 3)
    dist, rho = reduced_image_distance(omega.matrix, 3)
    assert dist < 1e-6
    assert np.linalg.norm(reduced_from_density(rho) - omega.matrix) < 1e-6


def test_lower_bound_is_below_true_distance():
    omega = reduced_state(random_pure_state(4, 5), 2, 2)
    assert reduced_distance_lower_bound(omega) <= 1e-12
    with pytest.raises(ValueError):
        reduced_distance_lower_bound(ToyState(3, normalized_sym(3)))


def test_projection_examples():
    assert project(projector(doubled(E0))) == pytest.approx((1, 0), abs=1e-15)
    assert project(projector(doubled(E1))) == pytest.approx((-1, 0), abs=1e-15)


@pytest.fixture(scope="module")
def fig():
    return figure_data(2000, seed=0)


def test_figure_geometry(fig):
    x, y = fig["pure"].T
    assert np.max(np.abs(y - (1 - x ** 2) / 2)) < 1e-12
    assert fig["mixed"][0] == pytest.approx((0, 0), abs=1e-15)
    rx, ry = fig["reduced"].T
    assert np.all(ry[np.abs(rx) <= 0.05] >= 4 / 3 * 0.475 * 0.525 - 1e-12)
    for cloud in fig.values():
        assert cloud.shape == (2000, 2)
        assert np.all(np.abs(cloud[:, 0]) <= 1 + 1e-12)


def test_figure_deterministic():
    a, b = figure_data(50, seed=3), figure_data(50, seed=3)
    assert all(np.array_equal(a[k], b[k]) for k in a)


def test_figure_csv(fig, tmp_path):
    path = tmp_path / "fig.csv"
    write_figure_csv(fig, path)
    rows = list(csv.reader(path.open()))
    assert rows[0] == ["kind", "x", "y"]
    assert {r[0] for r in rows[1:]} == {"pure", "mixed", "reduced"}
    assert len(rows) == 1 + 3 * 2000
    buf = io.StringIO()
    write_figure_csv(fig, buf)
    assert buf.getvalue() == path.read_text()
