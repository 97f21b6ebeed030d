"""Dense complex linear algebra on small tensor-product spaces."""
from __future__ import annotations

from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

HERMITIAN_TOL = 1e-12
DEFAULT_TOL = 1e-10


def kron(*mats: np.ndarray) -> np.ndarray:
    out = np.asarray(mats[0])
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


def _check_shape(m: np.ndarray, shape: Sequence[int]) -> None:
    dim = int(np.prod(shape))
    if m.shape != (dim, dim):
        raise ValueError(f"matrix of shape {m.shape} does not match factors {tuple(shape)}")


def permute_factors(m: np.ndarray, shape: Sequence[int], perm: Sequence[int]) -> np.ndarray:
    """Reorder tensor factors: factor ``perm[k]`` of the input becomes factor ``k``.

    Works for vectors as well as square matrices.
    """
    shape = tuple(shape)
    perm = tuple(perm)
    if sorted(perm) != list(range(len(shape))):
        raise ValueError(f"{perm} is not a permutation of {len(shape)} factors")
    new_shape = tuple(shape[p] for p in perm)
    if m.ndim == 1:
        if m.shape[0] != int(np.prod(shape)):
            raise ValueError("vector does not match factor shape")
        return m.reshape(shape).transpose(perm).reshape(-1)
    _check_shape(m, shape)
    k = len(shape)
    t = m.reshape(shape + shape).transpose(perm + tuple(p + k for p in perm))
    dim = int(np.prod(new_shape))
    return t.reshape(dim, dim)


def partial_trace(m: np.ndarray, shape: Sequence[int], keep: Sequence[int]) -> np.ndarray:
    """Trace out every factor not listed in ``keep`` (kept factors stay in order)."""
    shape = tuple(shape)
    _check_shape(m, shape)
    keep = sorted(set(keep))
    if any(k < 0 or k >= len(shape) for k in keep):
        raise ValueError(f"invalid factor indices {keep}")
    k = len(shape)
    letters = "abcdefghijklmnopqrstuvwxyz"
    rows = list(letters[:k])
    cols = list(letters[k:2 * k])
    for i in range(k):
        if i not in keep:
            cols[i] = rows[i]
    out = "".join(rows[i] for i in keep) + "".join(cols[i] for i in keep)
    res = np.einsum("".join(rows) + "".join(cols) + "->" + out, m.reshape(shape + shape))
    dim = int(np.prod([shape[i] for i in keep]))
    return res.reshape(dim, dim)


def swap_operator(d: int) -> np.ndarray:
    """Writable copy of the factor swap on C^d (x) C^d."""
    return _swap(d).copy()


@lru_cache(maxsize=None)
def _swap(d: int) -> np.ndarray:
    sw = np.zeros((d * d, d * d))
    for i in range(d):
        for j in range(d):
            sw[j * d + i, i * d + j] = 1.0
    sw.setflags(write=False)
    return sw


@lru_cache(maxsize=None)
def _projectors(d: int) -> Tuple[np.ndarray, np.ndarray]:
    eye = np.eye(d * d)
    sw = _swap(d)
    s, a = (eye + sw) / 2, (eye - sw) / 2
    s.setflags(write=False)
    a.setflags(write=False)
    return s, a


def exchange_projectors(d: int) -> Tuple[np.ndarray, np.ndarray]:
    """Projectors onto the symmetric and antisymmetric subspaces of C^d (x) C^d."""
    if d < 1:
        raise ValueError("d must be positive")
    return _projectors(d)


def is_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOL) -> bool:
    scale = max(1.0, float(np.linalg.norm(m)))
    return m.shape[0] == m.shape[1] and np.linalg.norm(m - m.conj().T) <= tol * scale


def hermitian_spectrum(m: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """Eigenvalues in descending order and matching eigenvectors as columns."""
    m = np.asarray(m)
    if not is_hermitian(m):
        raise ValueError("matrix is not Hermitian")
    vals, vecs = np.linalg.eigh((m + m.conj().T) / 2)
    order = np.argsort(vals)[::-1]
    return vals[order], vecs[:, order]


def rel_close(a: np.ndarray, b: np.ndarray, tol: float = DEFAULT_TOL) -> bool:
    """Relative Frobenius closeness (absolute for matrices of norm below 1)."""
    scale = max(1.0, float(np.linalg.norm(a)), float(np.linalg.norm(b)))
    return float(np.linalg.norm(a - b)) <= tol * scale


def projector(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v)
    return np.outer(v, v.conj())


def random_pure_state(d: int, seed=None) -> np.ndarray:
    """Haar-random unit vector; ``seed`` may be an int or a numpy Generator."""
    if d < 1:
        raise ValueError("d must be positive")
    rng = np.random.default_rng(seed)
    if d == 1:
        return np.ones(1, dtype=complex)
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def random_unitary(d: int, seed=None) -> np.ndarray:
    rng = np.random.default_rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    ph = np.diag(r) / np.abs(np.diag(r))
    return q * ph


def random_density(d: int, seed=None, rank=None) -> np.ndarray:
    rng = np.random.default_rng(seed)
    k = d if rank is None else rank
    g = rng.standard_normal((d, k)) + 1j * rng.standard_normal((d, k))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def random_hermitian(d: int, seed=None) -> np.ndarray:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    return (g + g.conj().T) / 2
