"""Acceptance criteria, one test each.

Every test prints a single ``[criterion N] PASS|FAIL ...`` line (visible with
``pytest -s`` or in the terminal summary) and then asserts.  Run directly with
``python tests/test_acceptance.py``.
"""
import io
import sys
import time
from contextlib import redirect_stdout

import numpy as np
import pytest

from opflab import characters as chars
from opflab.branching import (QuantumCase, branch_decompose, certify_holistic,
                              semigroup_trials)
from opflab.cli import run
from opflab.consistency import corrupted_star, verify_constraints
from opflab.designs import NotPrime
from opflab.partitions import (born_rep_partition, class_size, dim_Dj, partitions, su_dim,
                               sym_dim)
from opflab.purification import (figure_data, is_reduced_state, project,
                                 reduced_distance_lower_bound)
from opflab.tensor import exchange_projectors, projector
from opflab.toy import ToyState, canonical_measurement, convex_decomposition, doubled

# Lower edge of the reduced cloud over |x| <= 0.05, frozen from a dense grid over
# Bloch vectors (min 0.3325 = 4/3 * 0.475 * 0.525) before these tests were written.
FIGURE_DELTA = 0.33

LINES = []
_terminal = None


@pytest.fixture(autouse=True)
def _terminal_writer(request):
    global _terminal
    _terminal = request.config.pluginmanager.get_plugin("terminalreporter")


def report(n, ok, detail):
    line = f"[criterion {n:2d}] {'PASS' if ok else 'FAIL'}  {detail}"
    LINES.append(line)
    if _terminal is not None:
        _terminal.write_line("")
        _terminal.write_line(line)
    else:
        print(line)
    return ok


def timed(fn, *args, **kwargs):
    t0 = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - t0


@pytest.fixture
def cold_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("OPFLAB_CACHE_DIR", str(tmp_path / "cache"))
    chars.clear_memo()
    yield tmp_path / "cache"
    chars.clear_memo()


def test_criterion_01_k_values():
    buf = io.StringIO()
    t0 = time.perf_counter()
    with redirect_stdout(buf):
        code = run(["k-values", "--d", "2", "--limit", "14"])
    dt = time.perf_counter() - t0
    got = buf.getvalue().strip()
    ok = code == 0 and got == "3, 7, 8, 10, 11, 12, 14" and dt < 1
    assert report(1, ok, f"K_2 up to 14 = {got}  ({dt:.3f} s)")


def test_criterion_02_dimension_formula():
    t0 = time.perf_counter()
    quantum = all(dim_Dj(1, d) == d * d - 1 for d in range(2, 10))
    weyl = all(dim_Dj(j, d) == su_dim(born_rep_partition(j, d), d)
               for j in range(0, 5) for d in range(2, 10))
    dt = time.perf_counter() - t0
    ok = quantum and weyl and dt < 1
    assert report(2, ok, f"d^2-1 for j=1: {quantum}; Weyl agreement j<=4, d<=9: {weyl}  ({dt:.3f} s)")


def test_criterion_03_su9_certificates(cold_cache):
    g2, t2 = timed(chars.kronecker, (4,) + (2,) * 7, (6, 6, 6), (6, 6, 6))
    g1, _ = timed(chars.kronecker, (2,) + (1,) * 7, (3, 3, 3), (3, 3, 3))
    lam3 = (6,) + (3,) * 7
    g3, t3 = timed(chars.kronecker, lam3, (9, 9, 9), (9, 9, 9))
    chars.get_cache(27).save()
    # warm run: drop the in-process memo, reload the table from disk
    chars.clear_memo()
    warm = chars.CharacterCache(27).load()
    g3w, t3w = timed(chars.kronecker, lam3, (9, 9, 9), (9, 9, 9), warm)
    ok = g2 >= 1 and t2 < 60 and g1 == 0 and g3 >= 1 and g3 == g3w and t3 < 1800 and t3w < 300
    assert report(3, ok, f"g((4,2^7),(6^3),(6^3)) = {g2} ({t2:.2f} s cold); "
                         f"g((6,3^7),(9^3),(9^3)) = {g3} ({t3:.2f} s cold, {t3w:.2f} s warm); "
                         f"quantum control g((2,1^7),(3^3),(3^3)) = {g1}")


def test_criterion_04_character_tables():
    t0 = time.perf_counter()
    ortho = True
    for n in range(1, 13):
        table = chars.character_table(n)
        ps = partitions(n)
        fact = sum(class_size(c) for c in ps)
        for a in ps:
            if table[a][(1,) * n] != sym_dim(a):
                ortho = False
            for b in ps:
                if chars.inner_product(table[a], table[b]) != (fact if a == b else 0):
                    ortho = False
    sums = all(sum(class_size(c) for c in partitions(n)) == np.prod(range(1, n + 1), dtype=object)
               for n in range(1, 21))
    dt = time.perf_counter() - t0
    ok = ortho and sums and dt < 120
    assert report(4, ok, f"orthogonality + dimensions n<=12: {ortho}; class sums n<=20: {sums}  ({dt:.1f} s)")


def test_criterion_05_branching_dimensions():
    t0 = time.perf_counter()
    checked, bad = 0, []
    for m, n in [(2, 2), (2, 3), (3, 3)]:
        for f in range(1, 9):
            for lam in partitions(f, max_rows=m * n):
                total = sum(t.multiplicity * su_dim(t.mu, m) * su_dim(t.nu, n)
                            for t in branch_decompose(lam, m, n))
                checked += 1
                if total != su_dim(lam, m * n):
                    bad.append((lam, m, n))
    dt = time.perf_counter() - t0
    ok = not bad and dt < 300
    assert report(5, ok, f"{checked} restrictions checked, {len(bad)} violations  ({dt:.1f} s)")


def test_criterion_06_consistency_suite():
    t0 = time.perf_counter()
    worst, all_pass = 0.0, True
    for d_a, d_b in [(2, 2), (2, 3), (3, 3)]:
        rep = verify_constraints(d_a, d_b, trials=200, seed=0)
        all_pass &= rep.all_pass
        worst = max(worst, rep.max_residual)
    neg = verify_constraints(2, 2, trials=20, seed=0, star_product=corrupted_star)
    control_fails = not neg.results["C3"].passed
    dt = time.perf_counter() - t0
    ok = all_pass and worst < 1e-10 and control_fails and dt < 120
    assert report(6, ok, f"C1-C5 + no-signalling all pass: {all_pass}, max residual {worst:.2e}; "
                         f"negative control fails C3: {control_fails}  ({dt:.1f} s)")


def test_criterion_07_purification_violation():
    t0 = time.perf_counter()
    e0, e1 = np.eye(2)
    omega = ToyState(2, 0.5 * (projector(doubled(e0)) + projector(doubled(e1))))
    ens = convex_decomposition(omega)
    residual = float(np.linalg.norm(ens.matrix() - omega.matrix))
    member, dist = is_reduced_state(omega, 2)
    bound = reduced_distance_lower_bound(omega)
    dt = time.perf_counter() - t0
    ok = len(ens) == 2 and residual < 1e-12 and not member and bound >= 0.02 and dt < 60
    assert report(7, ok, f"two-term ensemble residual {residual:.1e}; reduced: {member}; "
                         f"distance {dist:.4f}, certified >= {bound:.4f}  ({dt:.1f} s)")


def test_criterion_08_figure_geometry():
    t0 = time.perf_counter()
    data = figure_data(10_000, seed=0)
    dt = time.perf_counter() - t0
    x, y = data["pure"].T
    on_curve = float(np.max(np.abs(y - (1 - x ** 2) / 2)))
    e0, e1 = np.eye(2)
    corners = (project(projector(doubled(e0))), project(projector(doubled(e1))))
    corners_ok = np.allclose(corners, [(1, 0), (-1, 0)], atol=1e-12)
    mx, my = data["mixed"].T
    mixed_origin = bool(np.any((np.abs(mx) < 1e-12) & (np.abs(my) < 1e-12)))
    rx, ry = data["reduced"].T
    near = np.abs(rx) <= 0.05
    edge = float(ry[near].min())
    ok = (on_curve < 1e-12 and corners_ok and mixed_origin and near.any()
          and edge >= FIGURE_DELTA >= 0.05 and dt < 60)
    assert report(8, ok, f"pure curve residual {on_curve:.1e}; corners {corners_ok}; mixed hits (0,0): "
                         f"{mixed_origin}; reduced min y at |x|<=0.05 = {edge:.4f} >= {FIGURE_DELTA}"
                         f"  ({dt:.1f} s)")


def test_criterion_09_mub_design():
    t0 = time.perf_counter()
    residuals = {}
    for d in (2, 3, 5, 7):
        total = sum(f.matrix for f in canonical_measurement(d).effects)
        residuals[d] = float(np.linalg.norm(total - exchange_projectors(d)[0]))
    rejected = []
    for d in (4, 6):
        try:
            canonical_measurement(d)
        except NotPrime:
            rejected.append(d)
    dt = time.perf_counter() - t0
    ok = max(residuals.values()) < 1e-12 and rejected == [4, 6] and dt < 5
    assert report(9, ok, f"max |sum - S| = {max(residuals.values()):.1e}; NotPrime for {rejected}  ({dt:.2f} s)")


def test_criterion_10_semigroup_and_induction():
    t0 = time.perf_counter()
    bad = [t for t in semigroup_trials(200, seed=0) if t[3] <= 0]
    certs = {j: certify_holistic(j, 3, 3) for j in (2, 3, 4, 5)}
    methods_ok = [certs[j].method for j in (2, 3, 4, 5)] == ["direct", "direct", "inductive", "inductive"]
    holistic = all(c.holistic for c in certs.values())
    try:
        certify_holistic(1, 3, 3)
        quantum = False
    except QuantumCase:
        quantum = True
    dt = time.perf_counter() - t0
    ok = not bad and holistic and methods_ok and quantum and dt < 35 * 60
    assert report(10, ok, f"semigroup counterexamples {len(bad)}/200; j=2..5 holistic: {holistic} "
                          f"(methods ok: {methods_ok}); j=1 quantum: {quantum}  ({dt:.1f} s)")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
