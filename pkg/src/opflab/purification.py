"""Which local states are reductions of bipartite pure states, and the qubit state-space picture."""
from __future__ import annotations

import csv
from typing import Dict, Tuple

import numpy as np
from scipy.optimize import minimize
from scipy.stats import qmc

from .tensor import exchange_projectors, random_pure_state
from .toy import ToyState, reduced_state

PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)
# Lipschitz constant of r -> R((I + r.sigma)/2) in Frobenius norm on the cube [-1, 1]^3:
# 2 |rho|_F |d rho|_F <= 2 * sqrt(2) / sqrt(2) from the product term, plus
# (|r| / 2) |S~|_F <= (sqrt(3) / 2) / sqrt(3) from the trace term.
BLOCH_LIPSCHITZ = 2.5


def _image_batch(rhos: np.ndarray) -> np.ndarray:
    """S(rho(x)rho)S + (1 - tr) S~ for a stack of density matrices, shape (k, d^2, d^2)."""
    k, d, _ = rhos.shape
    s, _ = exchange_projectors(d)
    rr = np.einsum("kab,kcd->kacbd", rhos, rhos).reshape(k, d * d, d * d)
    p = s @ rr @ s
    tr = np.einsum("kii->k", p).real
    return p + (1 - tr)[:, None, None] * (s / np.trace(s))


def _bloch_rhos(points: np.ndarray) -> np.ndarray:
    return (np.eye(2) + np.einsum("ka,aij->kij", points, np.array(PAULI))) / 2


def _distances(omega: np.ndarray, rhos: np.ndarray) -> np.ndarray:
    return np.linalg.norm(_image_batch(rhos) - omega, axis=(1, 2))


def _rho_from_params(x: np.ndarray, d: int, r: int) -> np.ndarray:
    g = (x[: d * r] + 1j * x[d * r:]).reshape(d, r)
    rho = g @ g.conj().T
    return rho / max(np.trace(rho).real, 1e-300)


def _params_from_rho(rho: np.ndarray, r: int) -> np.ndarray:
    vals, vecs = np.linalg.eigh(rho)
    vals, vecs = vals[::-1][:r], vecs[:, ::-1][:, :r]
    g = vecs * np.sqrt(np.clip(vals, 0, None))
    return np.concatenate([g.real.ravel(), g.imag.ravel()])


def reduced_image_distance(omega: np.ndarray, d_b: int, grid: int = 40,
                           starts: int = 8, seed: int = 0) -> Tuple[float, np.ndarray]:
    """Minimal Frobenius distance from ``omega`` to reductions with an ancilla C^d_b.

    Coarse search (Bloch-ball grid for qubits, scrambled Sobol points
    otherwise) followed by local refinement from the best few candidates.
    Returns the distance and the minimizing density matrix.
    """
    d = int(round(np.sqrt(len(omega))))
    r = min(d, d_b)
    if d == 2 and r == 2:
        g = np.linspace(-1, 1, grid)
        pts = np.stack(np.meshgrid(g, g, g, indexing="ij"), -1).reshape(-1, 3)
        pts = pts[np.einsum("ka,ka->k", pts, pts) <= 1]
        rhos = _bloch_rhos(pts)
    else:
        m = 2 * d * r
        raw = qmc.Sobol(m, scramble=True, seed=seed).random(4096) * 2 - 1
        rhos = np.array([_rho_from_params(x, d, r) for x in raw])
    dist = np.concatenate([_distances(omega, rhos[i:i + 8192])
                           for i in range(0, len(rhos), 8192)])
    best_val, best_rho = np.inf, None
    f = lambda x: np.linalg.norm(_image_batch(_rho_from_params(x, d, r)[None])[0] - omega)  # noqa: E731
    for i in np.argsort(dist)[:starts]:
        x0 = _params_from_rho(rhos[i], r)
        res = minimize(f, x0, method="Powell", options={"xtol": 1e-10, "ftol": 1e-14, "maxfev": 20000})
        if res.fun < best_val:
            best_val, best_rho = float(res.fun), _rho_from_params(res.x, d, r)
    return best_val, best_rho


def is_reduced_state(omega: ToyState, d_b: int, tol: float = 1e-3) -> Tuple[bool, float]:
    """Numerically decide whether ``omega`` is a reduction of some pure state on C^d (x) C^d_b."""
    dist, _ = reduced_image_distance(omega.matrix, d_b)
    return dist < tol, dist


def reduced_distance_lower_bound(omega: ToyState, grid: int = 81) -> float:
    """Rigorous lower bound on the qubit reduced-image distance.

    Evaluates the distance on a uniform grid of the cube containing the Bloch
    ball and subtracts Lipschitz constant times the grid covering radius.
    """
    if omega.d != 2:
        raise ValueError("certified bound implemented for qubits only")
    g = np.linspace(-1, 1, grid)
    pts = np.stack(np.meshgrid(g, g, g, indexing="ij"), -1).reshape(-1, 3)
    dist = np.concatenate([_distances(omega.matrix, _bloch_rhos(pts[i:i + 8192]))
                           for i in range(0, len(pts), 8192)])
    covering = np.sqrt(3) * (g[1] - g[0]) / 2
    return float(dist.min() - BLOCH_LIPSCHITZ * covering)


# ---------------------------------------------------------------- state-space picture

_ZZ = (np.kron(PAULI[2], np.eye(2)) + np.kron(np.eye(2), PAULI[2])) / 2
_PHI = np.array([0, 1, 1, 0], dtype=complex) / np.sqrt(2)
_PHI_PROJ = np.outer(_PHI, _PHI.conj())


def project(omega: np.ndarray) -> Tuple[float, float]:
    """Figure axes: x = tr(w (Z(x)I + I(x)Z))/2, y = <Phi|w|Phi> with Phi = (|01>+|10>)/sqrt2."""
    return float(np.trace(omega @ _ZZ).real), float(np.trace(omega @ _PHI_PROJ).real)


def _project_pure(vecs: np.ndarray) -> np.ndarray:
    pp = np.einsum("ki,kj->kij", vecs, vecs).reshape(len(vecs), -1)
    x = np.einsum("ki,ij,kj->k", pp.conj(), _ZZ, pp).real
    y = np.abs(pp @ _PHI.conj()) ** 2
    return np.stack([x, y], 1)


def figure_data(samples: int = 10_000, seed: int = 0) -> Dict[str, np.ndarray]:
    """Point clouds (pure, mixed, reduced) of the qubit state space, each of shape (samples, 2)."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((samples, 2)) + 1j * rng.standard_normal((samples, 2))
    pure_vecs = g / np.linalg.norm(g, axis=1, keepdims=True)
    pure = _project_pure(pure_vecs)

    # random mixtures of a few pure states; a quarter mix the two corners only
    mixed = np.empty((samples, 2))
    corners = np.array([[1.0, 0.0], [-1.0, 0.0]])
    n_corner = samples // 4
    p = rng.uniform(size=n_corner)
    p[0] = 0.5
    mixed[:n_corner] = p[:, None] * corners[0] + (1 - p[:, None]) * corners[1]
    k = 3
    rest = samples - n_corner
    idx = rng.integers(0, samples, size=(rest, k))
    w = rng.dirichlet(np.ones(k), size=rest)
    mixed[n_corner:] = np.einsum("rk,rka->ra", w, pure[idx])

    reduced = np.empty((samples, 2))
    for i in range(samples):
        psi = random_pure_state(4, rng)
        reduced[i] = project(reduced_state(psi, 2, 2).matrix)
    return {"pure": pure, "mixed": mixed, "reduced": reduced}


def write_figure_csv(data: Dict[str, np.ndarray], target, precision: int = 12) -> None:
    """Write ``kind,x,y`` rows to a path or an open text stream."""
    if hasattr(target, "write"):
        _write_rows(data, target, precision)
        return
    with open(target, "w", newline="") as fh:
        _write_rows(data, fh, precision)


def _write_rows(data, fh, precision):
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["kind", "x", "y"])
    for kind in ("pure", "mixed", "reduced"):
        for x, y in data[kind]:
            w.writerow([kind, f"{x:.{precision}g}", f"{y:.{precision}g}"])
