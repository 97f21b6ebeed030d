"""Randomized checks of the consistency constraints C1-C5 and no-signalling."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Dict, List

import numpy as np

from .designs import symmetric_design
from .tensor import exchange_projectors, random_pure_state, random_unitary
from .toy import (GlobalEffect, NotAnEffect, ToyEffect, canonical_measurement,
                  conditional_state, convex_decomposition, effect_from_design,
                  induced_local_effect, intrinsic, mix, opf_eval, random_effect,
                  reduced_state, star, star_matrix, unit_effect, validate_effect,
                  ZeroProbabilityBranch)

CONSTRAINTS = ("C1", "C2", "C3", "C4", "C5", "no-signalling")


@dataclass
class ConstraintResult:
    constraint: str
    passed: bool = True
    max_residual: float = 0.0
    trials: int = 0
    failures: List[str] = field(default_factory=list)

    def record(self, residual: float, ok: bool = True, note: str = "") -> None:
        self.trials += 1
        self.max_residual = max(self.max_residual, float(residual))
        if not ok:
            self.passed = False
            if note and len(self.failures) < 5:
                self.failures.append(note)

    def to_json(self) -> dict:
        return {"constraint": self.constraint, "pass": self.passed,
                "max_residual": self.max_residual, "trials": self.trials}


@dataclass
class ConstraintReport:
    d_a: int
    d_b: int
    seed: int
    results: Dict[str, ConstraintResult]

    @property
    def all_pass(self) -> bool:
        return all(r.passed for r in self.results.values())

    @property
    def max_residual(self) -> float:
        return max(r.max_residual for r in self.results.values())

    def to_json(self) -> dict:
        return {"d_a": self.d_a, "d_b": self.d_b, "seed": self.seed,
                "all_pass": self.all_pass,
                "constraints": [self.results[c].to_json() for c in CONSTRAINTS]}


def corrupted_star(fa: ToyEffect, fb: ToyEffect) -> GlobalEffect:
    """Product without the antisymmetric correction (negative control)."""
    return GlobalEffect(fa.d, fb.d, [(1.0, "product", (fa, fb))],
                        star_matrix(fa, fb, antisymmetric_term=False))


_intrinsic_designs: dict = {}


def random_intrinsic_effect(d: int, rng: np.random.Generator) -> ToyEffect:
    if d not in _intrinsic_designs:
        _intrinsic_designs[d] = symmetric_design(d, q=3)
    w, v = _intrinsic_designs[d]
    t = rng.uniform(size=len(w)) * (rng.uniform(size=len(w)) < 0.5)
    return effect_from_design(w, v, t).rotated(random_unitary(d, rng))


def random_global_effect(d_a: int, d_b: int, rng: np.random.Generator,
                         star_product=star) -> GlobalEffect:
    prod = star_product(random_effect(d_a, rng), random_effect(d_b, rng))
    intr = intrinsic(random_intrinsic_effect(d_a * d_b, rng), d_a, d_b)
    p = rng.uniform()
    return mix([(p, prod), (1 - p, intr)])


def _rel(a, b) -> float:
    return float(np.linalg.norm(a - b) / max(1.0, np.linalg.norm(b)))


def _trial(d_a, d_b, rng, results, star_product, tol):
    fa, fb = random_effect(d_a, rng), random_effect(d_b, rng)
    psi_a, phi_b = random_pure_state(d_a, rng), random_pure_state(d_b, rng)
    psi_ab = random_pure_state(d_a * d_b, rng)

    # C1: psi -> F(U psi) is again an effect
    u = random_unitary(d_a, rng)
    try:
        rot = fa.rotated(u)
        checked = validate_effect(rot.matrix, d=d_a, terms=(rot.weights, rot.vectors),
                                  complement=(rot.comp_weights, rot.comp_vectors))
        res = abs(opf_eval(checked, psi_a) - opf_eval(fa, u @ psi_a))
        results["C1"].record(res, res < tol)
    except NotAnEffect as exc:
        results["C1"].record(np.inf, False, str(exc))

    # C2: distinct rays are separated by some canonical effect
    cm = canonical_measurement(d_a)
    other = random_pure_state(d_a, rng)
    pa, po = cm.probabilities(psi_a), cm.probabilities(other)
    res = max(abs(pa.sum() - 1), abs(po.sum() - 1))
    results["C2"].record(res, res < tol and np.abs(pa - po).max() > 1e-6)

    # C3: u*u = u and factorization on product states
    unit = star_product(unit_effect(d_a), unit_effect(d_b))
    s_ab = exchange_projectors(d_a * d_b)[0]
    res_unit = _rel(unit.matrix, s_ab)
    g = star_product(fa, fb)
    res_fac = abs(g(np.kron(psi_a, phi_b)) - opf_eval(fa, psi_a) * opf_eval(fb, phi_b))
    results["C3"].record(max(res_unit, res_fac), res_unit < tol and res_fac < tol,
                         f"u*u residual {res_unit:.3g}")

    # C4: conditional states are ensembles and reproduce the normalized joint statistics
    try:
        weight, state = conditional_state(psi_ab, fb)
        ens = convex_decomposition(state)
        res_dec = _rel(ens.matrix(), state.matrix)
        probe = random_effect(d_a, rng)
        lhs = star_product(probe, fb)(psi_ab) / star_product(unit_effect(d_a), fb)(psi_ab)
        rhs = float(np.sum(ens.probs * [opf_eval(probe, v) for v in ens.vectors]))
        res = max(res_dec, abs(lhs - rhs), abs(weight - star_product(unit_effect(d_a), fb)(psi_ab)))
        psd = np.linalg.eigvalsh(state.matrix).min() > -tol
        results["C4"].record(res, res < tol and psd)
    except Exception as exc:  # noqa: BLE001  any failure is a failed trial
        results["C4"].record(np.inf, False, repr(exc))

    # C5: ancilla-assisted effects induce valid local effects
    f_ab = random_global_effect(d_a, d_b, rng, star_product)
    try:
        spec = np.linalg.eigvalsh(f_ab.matrix).min(), np.linalg.eigvalsh(s_ab - f_ab.matrix).min()
        induced = induced_local_effect(f_ab, phi_b)
        res = abs(opf_eval(induced, psi_a) - f_ab(np.kron(psi_a, phi_b)))
        results["C5"].record(res, res < tol and min(spec) > -tol)
    except NotAnEffect as exc:
        results["C5"].record(np.inf, False, str(exc))

    # no-signalling: Bob's choice of measurement leaves Alice's state unchanged
    red = reduced_state(psi_ab, d_a, d_b).matrix
    res = 0.0
    for _ in range(2):
        meas = canonical_measurement(d_b).rotated(random_unitary(d_b, rng))
        total = np.zeros_like(red)
        for eff in meas.effects:
            try:
                w, st = conditional_state(psi_ab, eff)
                total = total + w * st.matrix
            except ZeroProbabilityBranch:
                pass
        res = max(res, _rel(total, red))
    results["no-signalling"].record(res, res < tol)


def verify_constraints(d_a: int, d_b: int, trials: int = 100, seed: int = 0,
                       star_product: Callable = star, tol: float = 1e-10) -> ConstraintReport:
    """Run ``trials`` randomized rounds; trial ``t`` draws from the stream (seed, t)."""
    for d in (d_a, d_b):
        canonical_measurement(d)  # raises NotPrime early
    results = {c: ConstraintResult(c) for c in CONSTRAINTS}
    for t in range(trials):
        _trial(d_a, d_b, np.random.default_rng([seed, t]), results, star_product, tol)
    return ConstraintReport(d_a, d_b, seed, results)
