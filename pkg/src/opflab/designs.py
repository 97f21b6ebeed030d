"""Finite weighted ensembles whose second tensor moments are exactly known.

Each function returns ``(weights, vectors)`` with ``vectors`` of shape
``(k, d)`` such that  sum_i w_i |v_i><v_i|^(x)2  equals a known operator.
"""
from __future__ import annotations

from itertools import product

import numpy as np


class NotPrime(ValueError):
    pass


def is_prime(d: int) -> bool:
    if d < 2:
        return False
    return all(d % p for p in range(2, int(d ** 0.5) + 1))


def mub_vectors(d: int) -> np.ndarray:
    """The d + 1 mutually unbiased bases for prime d, shape ``(d + 1, d, d)``.

    ``out[j, i]`` is the i-th vector of basis j.  Basis 0 is computational.
    """
    if not is_prime(d):
        raise NotPrime(f"{d} is not prime")
    if d == 2:
        s = 1 / np.sqrt(2)
        return np.array([
            [[1, 0], [0, 1]],
            [[s, s], [s, -s]],
            [[s, 1j * s], [s, -1j * s]],
        ], dtype=complex)
    omega = np.exp(2j * np.pi / d)
    k = np.arange(d)
    bases = [np.eye(d, dtype=complex)]
    for b in range(d):
        bases.append(np.array([omega ** ((b * k * k + i * k) % d) for i in range(d)]) / np.sqrt(d))
    return np.array(bases)


def mub_design(d: int):
    """Canonical measurement ensemble: weight 1/2 on every MUB vector; moment = S."""
    vecs = mub_vectors(d).reshape(-1, d)
    return np.full(len(vecs), 0.5), vecs


def phase_vectors(amplitudes: np.ndarray, q: int) -> np.ndarray:
    """All vectors  sum_j e^{2 pi i k_j / q} a_j |j>  with k_0 = 0."""
    amplitudes = np.asarray(amplitudes, dtype=complex)
    d = len(amplitudes)
    ks = np.array(list(product(range(q), repeat=d - 1)), dtype=float).reshape(-1, d - 1)
    phases = np.exp(2j * np.pi * np.hstack([np.zeros((len(ks), 1)), ks]) / q)
    return phases * amplitudes


def symmetric_design(d: int, q: int = 3):
    """Ensemble with second moment equal to the symmetric projector S, for any d.

    Uniform-modulus vectors with phases in Z_q (q >= 3 kills every cross term
    whose phase exponent lies in [-2, 2]) plus the computational basis.
    """
    if q < 3:
        raise ValueError("q must be at least 3")
    flat = phase_vectors(np.full(d, 1 / np.sqrt(d)), q)
    w_flat = np.full(len(flat), d * d / 2 / len(flat))
    basis = np.eye(d, dtype=complex)
    return np.concatenate([w_flat, np.full(d, 0.5)]), np.vstack([flat, basis])


def unit_design(d: int):
    """Smallest exact decomposition of S used in this package."""
    return mub_design(d) if is_prime(d) else symmetric_design(d, q=3)


def maximally_mixed_ensemble(d: int, q: int = 5):
    """Probability ensemble with second moment S / tr S."""
    w, v = symmetric_design(d, q)
    return w * 2 / (d * (d + 1)), v
