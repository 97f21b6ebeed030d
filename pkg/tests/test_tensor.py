import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from opflab.tensor import (exchange_projectors, hermitian_spectrum, kron, partial_trace,
                           permute_factors, projector, random_density, random_hermitian,
                           random_pure_state, random_unitary, rel_close, swap_operator)


def basis(d, i):
    v = np.zeros(d, dtype=complex)
    v[i] = 1
    return v


def test_kron_examples():
    assert np.array_equal(kron(np.eye(2), np.eye(2)), np.eye(4))
    assert np.array_equal(kron(np.diag([1, 2]), np.diag([3, 4])), np.diag([3, 4, 6, 8]))
    p0, p1 = projector(basis(2, 0)), projector(basis(2, 1))
    assert np.array_equal(kron(p0, p1), projector(basis(4, 1)))


def test_permute_examples():
    m = random_hermitian(6, 0)
    assert np.array_equal(permute_factors(m, (2, 3), (0, 1)), m)
    p01 = projector(basis(4, 1))
    assert np.array_equal(permute_factors(p01, (2, 2), (1, 0)), projector(basis(4, 2)))
    # |0>|a>|1>|b> on (2,3,2,3) -> |0>|1>|a>|b> on (2,2,3,3)
    a, b = 2, 1
    v = kron(basis(2, 0), basis(3, a), basis(2, 1), basis(3, b))
    w = kron(basis(2, 0), basis(2, 1), basis(3, a), basis(3, b))
    assert np.array_equal(permute_factors(v, (2, 3, 2, 3), (0, 2, 1, 3)), w)
    assert np.array_equal(permute_factors(projector(v), (2, 3, 2, 3), (0, 2, 1, 3)), projector(w))


def test_permute_rejects_bad_input():
    with pytest.raises(ValueError):
        permute_factors(np.eye(4), (2, 2), (0, 0))
    with pytest.raises(ValueError):
        permute_factors(np.eye(5), (2, 2), (1, 0))


def test_copy_reorder_is_involution():
    m = random_hermitian(36, 1)
    once = permute_factors(m, (2, 3, 2, 3), (0, 2, 1, 3))
    assert np.array_equal(permute_factors(once, (2, 2, 3, 3), (0, 2, 1, 3)), m)


def test_partial_trace_examples():
    ra, rb = random_density(2, 0), random_density(3, 1)
    assert rel_close(partial_trace(kron(ra, rb), (2, 3), [0]), ra, 1e-12)
    assert rel_close(partial_trace(kron(ra, rb), (2, 3), [1]), rb, 1e-12)
    phi = (basis(4, 0) + basis(4, 3)) / np.sqrt(2)
    assert rel_close(partial_trace(projector(phi), (2, 2), [0]), np.eye(2) / 2, 1e-15)
    m = random_hermitian(12, 2)
    assert np.array_equal(partial_trace(m, (2, 3, 2), [0, 1, 2]), m)
    with pytest.raises(ValueError):
        partial_trace(m, (2, 3, 2), [3])


def test_partial_trace_middle_factor():
    a, b, c = random_hermitian(2, 3), random_hermitian(3, 4), random_hermitian(2, 5)
    out = partial_trace(kron(a, b, c), (2, 3, 2), [0, 2])
    assert rel_close(out, kron(a, c) * np.trace(b), 1e-12)


@pytest.mark.parametrize("d", [1, 2, 3, 4, 9])
def test_exchange_projectors(d):
    s, a = exchange_projectors(d)
    assert np.array_equal(s + a, np.eye(d * d))
    assert abs(np.trace(s) - d * (d + 1) / 2) < 1e-13
    assert np.linalg.norm(s @ s - s) < 1e-13
    assert np.linalg.norm(a @ a - a) < 1e-13
    assert np.linalg.norm(s @ a) < 1e-13


def test_exchange_projector_examples():
    s, a = exchange_projectors(2)
    assert np.trace(s) == 3 and np.trace(a) == 1
    v01 = basis(4, 1)
    assert np.allclose(s @ v01, (basis(4, 1) + basis(4, 2)) / 2)
    with pytest.raises(ValueError):
        s[0, 0] = 2  # cached projectors are read-only
    sw = swap_operator(2)
    sw[0, 0] = 5  # copies are writable
    assert exchange_projectors(2)[0][0, 0] == 1


def test_spectrum_examples():
    vals, _ = hermitian_spectrum(np.diag([1.0, 3.0]))
    assert np.allclose(vals, [3, 1])
    vals, _ = hermitian_spectrum(np.array([[0, 1], [1, 0]]))
    assert np.allclose(vals, [1, -1])
    vals, _ = hermitian_spectrum(projector(random_pure_state(5, 0)))
    assert np.allclose(vals, [1, 0, 0, 0, 0])
    with pytest.raises(ValueError):
        hermitian_spectrum(np.array([[0, 1], [0, 0]]))


@pytest.mark.parametrize("d", [2, 9, 27, 81])
def test_spectrum_reconstruction(d):
    m = random_hermitian(d, d)
    vals, vecs = hermitian_spectrum(m)
    assert np.all(np.diff(vals) <= 0)
    assert np.linalg.norm(vecs @ np.diag(vals) @ vecs.conj().T - m) < 1e-10


def test_random_pure_state():
    assert np.array_equal(random_pure_state(1, 123), [1])
    assert np.array_equal(random_pure_state(3, 7), random_pure_state(3, 7))
    assert abs(np.linalg.norm(random_pure_state(5, 1)) - 1) < 1e-12


def test_haar_first_moment_monte_carlo():
    rng = np.random.default_rng(2024)
    vals = [abs(random_pure_state(2, rng)[0]) ** 2 for _ in range(10_000)]
    assert abs(np.mean(vals) - 0.5) < 0.02


def test_random_unitary_is_unitary():
    u = random_unitary(4, 0)
    assert np.linalg.norm(u @ u.conj().T - np.eye(4)) < 1e-12


mats = st.integers(0, 10_000).map(lambda s: np.random.default_rng(s))


@settings(max_examples=30)
@given(mats)
def test_kron_associative(rng):
    a, b, c = (rng.integers(-9, 10, (k, k)) for k in (2, 3, 2))  # exact arithmetic
    assert np.array_equal(kron(kron(a, b), c), kron(a, kron(b, c)))


@settings(max_examples=30)
@given(mats)
def test_partial_trace_of_product(rng):
    a, b = random_hermitian(3, rng), random_hermitian(2, rng)
    assert np.linalg.norm(partial_trace(kron(a, b), (3, 2), [0]) - a * np.trace(b)) < 1e-12


@settings(max_examples=30)
@given(mats, st.permutations(range(3)), st.permutations(range(3)))
def test_permute_composition(rng, p1, p2):
    shape = (2, 3, 2)
    m = random_hermitian(12, rng)
    step = permute_factors(m, shape, p1)
    shape1 = tuple(shape[i] for i in p1)
    sequential = permute_factors(step, shape1, p2)
    composed = permute_factors(m, shape, [p1[i] for i in p2])
    assert np.array_equal(sequential, composed)
