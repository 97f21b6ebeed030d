"""Toy theory whose outcome probabilities are quadratic in the state.

A pure state psi of C^d is represented by |psi><psi|^(x)2 on C^d (x) C^d, and an
effect by a Hermitian F with 0 <= F <= S such that both F and S - F are
nonnegative mixtures of symmetric products |phi><phi|^(x)2.

Bipartite vectors live on C^dA (x) C^dB.  Their doubled copies are ordered
A1, B1, A2, B2; anything that needs S_A (x) S_B style algebra first reorders to
A1, A2, B1, B2 with :data:`COPY_ORDER` (an involution).
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import brentq, nnls

from .designs import (NotPrime, is_prime, maximally_mixed_ensemble, mub_design,
                      mub_vectors, phase_vectors, unit_design)
from .tensor import (DEFAULT_TOL, exchange_projectors, hermitian_spectrum,
                     is_hermitian, partial_trace, permute_factors, projector,
                     random_unitary)

COPY_ORDER = (0, 2, 1, 3)
DECOMP_TOL = 1e-9


class NotAnEffect(ValueError):
    def __init__(self, reason: str, detail: str = ""):
        super().__init__(f"{reason}: {detail}" if detail else reason)
        self.reason = reason


class ZeroProbabilityBranch(ValueError):
    pass


class DecompositionFailed(ValueError):
    pass


def doubled(v: np.ndarray) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    return np.kron(v, v)


def sym_mixture(weights: np.ndarray, vectors: np.ndarray) -> np.ndarray:
    """sum_i w_i |v_i><v_i|^(x)2 for row vectors ``vectors``."""
    vectors = np.asarray(vectors, dtype=complex)
    d = vectors.shape[1] if vectors.ndim == 2 else 0
    if len(weights) == 0:
        return np.zeros((d * d, d * d), dtype=complex)
    v2 = np.einsum("ki,kj->kij", vectors, vectors).reshape(len(vectors), -1)
    return (v2.T * np.asarray(weights)) @ v2.conj()


def _as_terms(weights, vectors, d):
    w = np.asarray(weights, dtype=float).reshape(-1)
    v = np.asarray(vectors, dtype=complex).reshape(len(w), d) if len(w) else np.zeros((0, d), complex)
    return w, v


@dataclass(eq=False)
class ToyEffect:
    """Effect with explicit decompositions of itself and of its complement S - F."""

    d: int
    weights: np.ndarray
    vectors: np.ndarray
    comp_weights: np.ndarray
    comp_vectors: np.ndarray
    matrix: np.ndarray = field(repr=False)

    def __call__(self, psi: np.ndarray) -> float:
        return opf_eval(self, psi)

    @property
    def complement_matrix(self) -> np.ndarray:
        return exchange_projectors(self.d)[0] - self.matrix

    def complement(self) -> "ToyEffect":
        return ToyEffect(self.d, self.comp_weights, self.comp_vectors,
                         self.weights, self.vectors, self.complement_matrix)

    def rotated(self, u: np.ndarray) -> "ToyEffect":
        """Effect psi -> F(U psi)."""
        ud = np.asarray(u).conj().T
        uu = np.kron(ud, ud)
        return ToyEffect(self.d, self.weights, self.vectors @ ud.T,
                         self.comp_weights, self.comp_vectors @ ud.T,
                         uu @ self.matrix @ uu.conj().T)

    def scaled(self, t: float) -> "ToyEffect":
        """t * F for 0 <= t <= 1; the complement gains (1 - t) F."""
        if not 0 <= t <= 1:
            raise ValueError("scale must lie in [0, 1]")
        return ToyEffect(self.d, t * self.weights, self.vectors,
                         np.concatenate([self.comp_weights, (1 - t) * self.weights]),
                         np.vstack([self.comp_vectors, self.vectors]),
                         t * self.matrix)


def opf_eval(f: ToyEffect, psi: np.ndarray) -> float:
    psi = np.asarray(psi)
    if psi.shape != (f.d,):
        raise ValueError(f"state of dimension {psi.shape} for effect on C^{f.d}")
    pp = doubled(psi)
    return float(np.real(pp.conj() @ f.matrix @ pp))


def effect_from_design(weights: np.ndarray, vectors: np.ndarray, t: np.ndarray) -> ToyEffect:
    """Effect sum_k t_k w_k |v_k><v_k|^2 carved out of an exact decomposition of S."""
    t = np.asarray(t, dtype=float)
    d = vectors.shape[1]
    keep, ckeep = t > 0, t < 1
    return ToyEffect(d, (t * weights)[keep], vectors[keep],
                     ((1 - t) * weights)[ckeep], vectors[ckeep],
                     sym_mixture(t * weights, vectors))


def unit_effect(d: int) -> ToyEffect:
    w, v = unit_design(d)
    return effect_from_design(w, v, np.ones(len(w)))


def zero_effect(d: int) -> ToyEffect:
    return unit_effect(d).complement()


def random_effect(d: int, rng: np.random.Generator) -> ToyEffect:
    """Random effect: random sub-weights of a decomposition of S, then a random rotation."""
    w, v = unit_design(d)
    t = rng.uniform(size=len(w))
    t[rng.uniform(size=len(w)) < 0.3] = 0.0
    return effect_from_design(w, v, t).rotated(random_unitary(d, rng))


# ---------------------------------------------------------------- validation

def _frame(d: int, matrix: np.ndarray, size: int, rng: np.random.Generator) -> np.ndarray:
    vecs = [np.eye(d, dtype=complex)]
    if is_prime(d):
        vecs.append(mub_vectors(d).reshape(-1, d))
    # eigenvectors of the one-copy marginal are natural candidates
    _, ev = hermitian_spectrum(partial_trace(matrix, (d, d), [0]))
    vecs.append(ev.T)
    have = sum(len(v) for v in vecs)
    if size > have:
        g = rng.standard_normal((size - have, d)) + 1j * rng.standard_normal((size - have, d))
        vecs.append(g / np.linalg.norm(g, axis=1, keepdims=True))
    return np.vstack(vecs)


def find_sym_decomposition(matrix: np.ndarray, d: int, frame_size: int = 200,
                           seed: int = 0, tol: float = DECOMP_TOL):
    """Search for  matrix = sum_i w_i |v_i><v_i|^2  with w_i > 0 over a finite frame.

    Nonnegative least squares over the frame.  Success is a certificate;
    failure only means no decomposition was found over this frame.
    Returns ``(weights, vectors)`` or ``None``.
    """
    scale = max(1.0, float(np.linalg.norm(matrix)))
    if np.linalg.norm(matrix) <= tol:
        return np.zeros(0), np.zeros((0, d), complex)
    frame = _frame(d, matrix, frame_size, np.random.default_rng(seed))
    cols = np.einsum("ki,kj->kij", frame, frame).reshape(len(frame), -1)
    atoms = np.einsum("ka,kb->kab", cols, cols.conj()).reshape(len(frame), -1)
    a = np.vstack([atoms.real.T, atoms.imag.T])
    b = np.concatenate([matrix.reshape(-1).real, matrix.reshape(-1).imag])
    w, res = nnls(a, b, maxiter=50 * a.shape[1])
    if res > tol * scale:
        return None
    keep = w > 1e-14
    return w[keep], frame[keep]


def validate_effect(matrix: Optional[np.ndarray] = None, *, d: Optional[int] = None,
                    terms=None, complement=None, frame_size: int = 200,
                    seed: int = 0, tol: float = DEFAULT_TOL) -> ToyEffect:
    """Build a :class:`ToyEffect`, checking every defining condition.

    ``terms`` / ``complement`` are optional ``(weights, vectors)`` pairs; when
    missing, a decomposition search is run (a semidecision: failure is
    reported as indecomposable).
    """
    if matrix is None and terms is None:
        raise ValueError("need a matrix or a term list")
    if d is None:
        d = np.asarray(terms[1]).shape[1] if matrix is None else int(round(np.sqrt(len(matrix))))
    s, _ = exchange_projectors(d)
    if terms is not None:
        w, v = _as_terms(*terms, d)
        if np.any(w <= 0):
            raise NotAnEffect("indecomposable effect", "term weights must be positive")
        from_terms = sym_mixture(w, v)
        if matrix is None:
            matrix = from_terms
        elif np.linalg.norm(from_terms - matrix) > tol * max(1.0, np.linalg.norm(matrix)):
            raise NotAnEffect("indecomposable effect", "term list does not reproduce the matrix")
    matrix = np.asarray(matrix, dtype=complex)
    if matrix.shape != (d * d, d * d) or not is_hermitian(matrix, 1e-10):
        raise NotAnEffect("spectral violation", "not a Hermitian operator on C^d (x) C^d")
    if np.linalg.norm(s @ matrix @ s - matrix) > tol * max(1.0, np.linalg.norm(matrix)):
        raise NotAnEffect("spectral violation", "support leaves the symmetric subspace")
    lo = np.linalg.eigvalsh(matrix).min()
    hi = np.linalg.eigvalsh(s - matrix).min()
    if lo < -tol or hi < -tol:
        raise NotAnEffect("spectral violation", f"min eigenvalues {lo:.3g}, {hi:.3g}")
    if terms is None:
        found = find_sym_decomposition(matrix, d, frame_size, seed)
        if found is None:
            raise NotAnEffect("indecomposable effect")
        w, v = found
    comp = s - matrix
    if complement is not None:
        cw, cv = _as_terms(*complement, d)
        if np.any(cw <= 0):
            raise NotAnEffect("indecomposable complement", "term weights must be positive")
        if np.linalg.norm(sym_mixture(cw, cv) - comp) > tol * max(1.0, np.linalg.norm(comp)):
            raise NotAnEffect("indecomposable complement", "term list does not reproduce S - F")
    else:
        found = find_sym_decomposition(comp, d, frame_size, seed + 1)
        if found is None:
            raise NotAnEffect("indecomposable complement")
        cw, cv = found
    return ToyEffect(d, w, v, cw, cv, matrix)


# ---------------------------------------------------------------- measurements

@dataclass(eq=False)
class ToyMeasurement:
    effects: List[ToyEffect]

    def __post_init__(self):
        ds = {f.d for f in self.effects}
        if len(ds) != 1:
            raise ValueError("effects act on different dimensions")
        d = ds.pop()
        s, _ = exchange_projectors(d)
        total = sum(f.matrix for f in self.effects)
        if np.linalg.norm(total - s) > DEFAULT_TOL * np.linalg.norm(s):
            raise ValueError("effects do not sum to the unit effect")

    @property
    def d(self) -> int:
        return self.effects[0].d

    def probabilities(self, psi: np.ndarray) -> np.ndarray:
        return np.array([opf_eval(f, psi) for f in self.effects])

    def rotated(self, u: np.ndarray) -> "ToyMeasurement":
        return ToyMeasurement([f.rotated(u) for f in self.effects])


def canonical_measurement(d: int) -> ToyMeasurement:
    """d(d+1) effects  |phi|^2 / 2  over the d + 1 mutually unbiased bases."""
    if not is_prime(d):
        raise NotPrime(f"{d} is not prime")
    w, v = mub_design(d)
    effects = []
    for k in range(len(w)):
        others = np.arange(len(w)) != k
        effects.append(ToyEffect(d, w[k:k + 1], v[k:k + 1], w[others], v[others],
                                 sym_mixture(w[k:k + 1], v[k:k + 1])))
    return ToyMeasurement(effects)


# ---------------------------------------------------------------- composites

@dataclass(eq=False)
class GlobalEffect:
    """Effect on the composite, stored as a convex combination of generators.

    Each component is ``(p, "product", (fa, fb))`` or ``(p, "intrinsic", f)``
    with ``f`` a :class:`ToyEffect` on C^(dA dB).  Weights may sum to less than
    one; the deficit is the zero effect.
    """

    d_a: int
    d_b: int
    components: list
    matrix: np.ndarray = field(repr=False)

    def __call__(self, psi_ab: np.ndarray) -> float:
        pp = doubled(psi_ab)
        return float(np.real(pp.conj() @ self.matrix @ pp))

    @property
    def provenance(self) -> str:
        kinds = {c[1] for c in self.components}
        if len(self.components) == 1 and self.components[0][0] == 1:
            return kinds.pop()
        return "mixture"


def star_matrix(fa: ToyEffect, fb: ToyEffect, antisymmetric_term: bool = True) -> np.ndarray:
    """Matrix of fa * fb in A1, B1, A2, B2 order."""
    sa, aa = exchange_projectors(fa.d)
    sb, ab = exchange_projectors(fb.d)
    m = np.kron(fa.matrix, fb.matrix)
    if antisymmetric_term:
        ca = np.trace(fa.matrix).real / np.trace(sa)
        cb = np.trace(fb.matrix).real / np.trace(sb)
        m = m + ca * cb * np.kron(aa, ab)
    return permute_factors(m, (fa.d, fa.d, fb.d, fb.d), COPY_ORDER)


def star(fa: ToyEffect, fb: ToyEffect) -> GlobalEffect:
    return GlobalEffect(fa.d, fb.d, [(1.0, "product", (fa, fb))], star_matrix(fa, fb))


def intrinsic(f: ToyEffect, d_a: int, d_b: int) -> GlobalEffect:
    if f.d != d_a * d_b:
        raise ValueError("intrinsic effect dimension must equal d_a * d_b")
    return GlobalEffect(d_a, d_b, [(1.0, "intrinsic", f)], f.matrix)


def mix(parts: Sequence[Tuple[float, GlobalEffect]]) -> GlobalEffect:
    ps = [p for p, _ in parts]
    if any(p < 0 for p in ps) or sum(ps) > 1 + 1e-12:
        raise ValueError("mixture weights must be nonnegative and sum to at most 1")
    g0 = parts[0][1]
    comps = [(p * q, kind, data) for p, g in parts for q, kind, data in g.components]
    return GlobalEffect(g0.d_a, g0.d_b, comps, sum(p * g.matrix for p, g in parts))


def joint_prob(fa: ToyEffect, fb: ToyEffect, psi_ab: np.ndarray) -> float:
    if len(psi_ab) != fa.d * fb.d:
        raise ValueError("state dimension does not match the effects")
    return star(fa, fb)(psi_ab)


# ---------------------------------------------------------------- states

@dataclass(eq=False)
class ToyState:
    """Normalized state; ``ensemble`` optionally certifies membership in conv(|psi><psi|^2)."""

    d: int
    matrix: np.ndarray = field(repr=False)
    ensemble: Optional["Ensemble"] = None


@dataclass(eq=False)
class Ensemble:
    probs: np.ndarray
    vectors: np.ndarray

    def __post_init__(self):
        self.probs = np.asarray(self.probs, dtype=float)
        self.vectors = np.asarray(self.vectors, dtype=complex)
        if np.any(self.probs < -1e-15) or abs(self.probs.sum() - 1) > 1e-12:
            raise ValueError("ensemble weights must be a probability vector")

    def __len__(self) -> int:
        return len(self.probs)

    def matrix(self) -> np.ndarray:
        return sym_mixture(self.probs, self.vectors)


def pure_state(psi: np.ndarray) -> ToyState:
    psi = np.asarray(psi, dtype=complex)
    return ToyState(len(psi), projector(doubled(psi)), Ensemble([1.0], [psi]))


def _doubled_ab(psi_ab: np.ndarray, d_a: int, d_b: int) -> np.ndarray:
    """|psi><psi|^(x)2 reordered to A1, A2, B1, B2."""
    if len(psi_ab) != d_a * d_b:
        raise ValueError("state dimension does not match d_a * d_b")
    return permute_factors(projector(doubled(psi_ab)), (d_a, d_b, d_a, d_b), COPY_ORDER)


def _antisym_weight(x: np.ndarray, d_a: int, d_b: int) -> float:
    _, aa = exchange_projectors(d_a)
    _, ab = exchange_projectors(d_b)
    return float(np.real(np.trace(np.kron(aa, ab) @ x)))


def normalized_sym(d: int) -> np.ndarray:
    s, _ = exchange_projectors(d)
    return s / np.trace(s)


def reduced_state(psi_ab: np.ndarray, d_a: int, d_b: int) -> ToyState:
    """Alice's state: tr_B(S_B X) + S~_A tr(A_A A_B X) with X = |psi><psi|^2."""
    x = _doubled_ab(psi_ab, d_a, d_b)
    sb, _ = exchange_projectors(d_b)
    part = partial_trace(np.kron(np.eye(d_a * d_a), sb) @ x, (d_a * d_a, d_b * d_b), [0])
    omega = part + _antisym_weight(x, d_a, d_b) * normalized_sym(d_a)
    omega = (omega + omega.conj().T) / 2
    return ToyState(d_a, omega, _conditional_witness(psi_ab, d_a, d_b, unit_effect(d_b))[1])


def reduced_from_density(rho: np.ndarray) -> np.ndarray:
    """S (rho (x) rho) S + (1 - tr S (rho (x) rho) S) S~  (closed form of the reduction)."""
    d = len(rho)
    s, _ = exchange_projectors(d)
    p = s @ np.kron(rho, rho) @ s
    return p + (1 - np.trace(p).real) * normalized_sym(d)


def _conditional_witness(psi_ab, d_a, d_b, fb: ToyEffect):
    """Unnormalized conditional state as explicit pure terms plus a multiple of S~."""
    m = np.asarray(psi_ab, dtype=complex).reshape(d_a, d_b)
    x = _doubled_ab(psi_ab, d_a, d_b)
    sb = exchange_projectors(d_b)[0]
    c = _antisym_weight(x, d_a, d_b) * np.trace(fb.matrix).real / np.trace(sb)
    vs = fb.vectors.conj() @ m.T  # row i: (I (x) <phi_i|) psi
    norms = np.linalg.norm(vs, axis=1)
    keep = norms > 1e-15
    w_pure = fb.weights[keep] * norms[keep] ** 4
    v_pure = vs[keep] / norms[keep, None]
    mw, mv = maximally_mixed_ensemble(d_a)
    weights = np.concatenate([w_pure, c * mw])
    total = weights.sum()
    if total < 1e-14:
        return total, None
    return total, Ensemble(weights / total, np.vstack([v_pure, mv]))


def conditional_state(psi_ab: np.ndarray, fb: ToyEffect) -> Tuple[float, ToyState]:
    """Weight (u_A * F_B)(psi) and Alice's normalized state given Bob's outcome F_B."""
    d_b = fb.d
    d_a, rem = divmod(len(psi_ab), d_b)
    if rem:
        raise ValueError("state dimension is not a multiple of Bob's dimension")
    x = _doubled_ab(psi_ab, d_a, d_b)
    sa = exchange_projectors(d_a)[0]
    part = partial_trace(np.kron(np.eye(d_a * d_a), fb.matrix) @ x, (d_a * d_a, d_b * d_b), [0])
    c = _antisym_weight(x, d_a, d_b) * np.trace(fb.matrix).real / np.trace(exchange_projectors(d_b)[0])
    omega = sa @ part @ sa + c * normalized_sym(d_a)
    omega = (omega + omega.conj().T) / 2
    weight = float(np.trace(omega).real)
    if weight < 1e-14:
        raise ZeroProbabilityBranch(f"outcome has probability {weight:.3g}")
    _, ens = _conditional_witness(psi_ab, d_a, d_b, fb)
    return weight, ToyState(d_a, omega / weight, ens)


# ---------------------------------------------------------------- decompositions

def density_from_state(omega: np.ndarray) -> np.ndarray:
    """Recover rho from  omega = S(rho(x)rho)S + c S~.

    The one-copy marginal is  (rho + rho^2)/2 + (c/d) I  with
    c = (1 - tr rho^2)/2, so rho shares its eigenbasis; the eigenvalues follow
    from a one-dimensional root find on c.
    """
    d = int(round(np.sqrt(len(omega))))
    marg = partial_trace(omega, (d, d), [0])
    m, vecs = hermitian_spectrum(marg)

    def eig(c):
        return (-1 + np.sqrt(np.maximum(1 + 8 * (m - c / d), 0))) / 2

    lo, hi = 0.0, 0.5
    f = lambda c: eig(c).sum() - 1  # noqa: E731
    if f(lo) * f(hi) > 0:
        c = lo if abs(f(lo)) < abs(f(hi)) else hi
    else:
        c = brentq(f, lo, hi, xtol=1e-15)
    a = np.clip(eig(c), 0, None)
    a = a / a.sum()
    return (vecs * a) @ vecs.conj().T


def ensemble_for_density(rho: np.ndarray, q: int = 5) -> Ensemble:
    """Explicit ensemble for S(rho(x)rho)S + c S~ by phase averaging in rho's eigenbasis."""
    d = len(rho)
    a, vecs = hermitian_spectrum(rho)
    a = np.clip(a, 0, None)
    a = a / a.sum()
    if a[0] > 1 - 1e-12:
        return Ensemble([1.0], [vecs[:, 0]])
    # half: uniform phase average of sum_j e^{i theta_j} sqrt(a_j) |j>
    flat = phase_vectors(np.sqrt(a), q) @ vecs.T
    probs = [np.full(len(flat), 0.5 / len(flat))]
    vectors = [flat]
    # other half: sum_i a_i^2 |ii> + (1 - sum a_i^2) S~
    probs.append(0.5 * a ** 2)
    vectors.append(vecs.T)
    mw, mv = maximally_mixed_ensemble(d, q)
    probs.append(0.5 * (1 - np.sum(a ** 2)) * mw)
    vectors.append(mv)
    p = np.concatenate(probs)
    v = np.vstack(vectors)
    keep = p > 0
    return Ensemble(p[keep] / p[keep].sum(), v[keep])


def convex_decomposition(omega: ToyState, tol: float = DECOMP_TOL,
                         frame_size: int = 200, seed: int = 0) -> Ensemble:
    """Explicit ensemble of pure states reproducing ``omega``.

    Tries, in order: the state's own witness, the phase-averaging construction
    for the S(rho(x)rho)S + c S~ family, and a frame search.
    """
    target = omega.matrix
    scale = max(1.0, float(np.linalg.norm(target)))
    if omega.ensemble is not None:
        if np.linalg.norm(omega.ensemble.matrix() - target) <= tol * scale:
            return omega.ensemble
    rho = density_from_state(target)
    if np.linalg.norm(reduced_from_density(rho) - target) <= tol * scale:
        ens = ensemble_for_density(rho)
        if np.linalg.norm(ens.matrix() - target) <= tol * scale:
            return ens
    found = find_sym_decomposition(target, omega.d, frame_size, seed, tol)
    if found is not None:
        w, v = found
        return Ensemble(w / w.sum(), v)
    raise DecompositionFailed("no ensemble found for this state")


def induced_local_effect(f_ab: GlobalEffect, phi_b: np.ndarray) -> ToyEffect:
    """Effect psi -> F_AB(psi (x) phi) on Alice's system, with explicit decompositions."""
    d_a, d_b = f_ab.d_a, f_ab.d_b
    phi_b = np.asarray(phi_b, dtype=complex)
    ws, vs, cws, cvs = [], [], [], []

    def add(target_w, target_v, weights, vectors):
        target_w.append(np.asarray(weights, float))
        target_v.append(np.asarray(vectors, complex).reshape(-1, d_a))

    def project(weights, vectors):
        """(I (x) <phi|) x for each term; weights pick up |.|^4."""
        if len(weights) == 0:
            return np.zeros(0), np.zeros((0, d_a), complex)
        raw = np.asarray(vectors).reshape(-1, d_a, d_b) @ phi_b.conj()
        n = np.linalg.norm(raw, axis=1)
        keep = n > 1e-15
        return np.asarray(weights)[keep] * n[keep] ** 4, raw[keep] / n[keep, None]

    total_p = 0.0
    for p, kind, data in f_ab.components:
        total_p += p
        if kind == "product":
            fa, fb = data
            t = opf_eval(fb, phi_b)
            # fa*fb + (u-fa)*u + fa*(u-fb) = u*u
            add(ws, vs, p * t * fa.weights, fa.vectors)
            add(cws, cvs, p * fa.comp_weights, fa.comp_vectors)
            add(cws, cvs, p * (1 - t) * fa.weights, fa.vectors)
        else:
            w, v = project(p * data.weights, data.vectors)
            add(ws, vs, w, v)
            w, v = project(p * data.comp_weights, data.comp_vectors)
            add(cws, cvs, w, v)
    if total_p < 1:
        u = unit_effect(d_a)
        add(cws, cvs, (1 - total_p) * u.weights, u.vectors)
    x = np.kron(np.eye(d_a * d_a), projector(doubled(phi_b)))
    gm = permute_factors(f_ab.matrix, (d_a, d_b, d_a, d_b), COPY_ORDER)
    matrix = partial_trace(x @ gm, (d_a * d_a, d_b * d_b), [0])
    w, v = np.concatenate(ws), np.vstack(vs)
    cw, cv = np.concatenate(cws), np.vstack(cvs)
    pos, cpos = w > 0, cw > 0
    return validate_effect((matrix + matrix.conj().T) / 2, d=d_a,
                           terms=(w[pos], v[pos]), complement=(cw[cpos], cv[cpos]))


# ---------------------------------------------------------------- hyper-decoherence

def decoherence_map(x: np.ndarray, d: int) -> np.ndarray:
    """X -> tr_2(X) (x) |0><0| on C^d (x) C^d."""
    e0 = np.zeros((d, d))
    e0[0, 0] = 1.0
    return np.kron(partial_trace(x, (d, d), [0]), e0)


def hyper_decohere(psi) -> np.ndarray:
    """|psi><psi| (x) |0><0|; accepts a vector or an :class:`Ensemble`."""
    if isinstance(psi, Ensemble):
        d = psi.vectors.shape[1]
        return decoherence_map(psi.matrix(), d)
    psi = np.asarray(psi, dtype=complex)
    return decoherence_map(projector(doubled(psi)), len(psi))
