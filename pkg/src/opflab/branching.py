"""SU(mn) -> SU(m) x SU(n) branching and local-tomography certificates."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import List, Optional, Sequence

from .characters import kronecker
from .partitions import (NonIntegerPadding, Partition, add, born_rep_partition,
                         dim_Dj, pad, partition, partitions, strip_columns)


class QuantumCase(ValueError):
    """j = 1 is the quantum measurement rule; its restriction has no trivial x trivial term."""


@dataclass(frozen=True)
class BranchTerm:
    """One block of a restriction; ``mu`` and ``nu`` are the |lam|-box representatives."""

    mu: Partition
    nu: Partition
    multiplicity: int

    def canonical(self, m: int, n: int) -> tuple:
        return strip_columns(self.mu, m), strip_columns(self.nu, n)


def branching_multiplicity(lam: Sequence[int], m: int, n: int,
                           mu: Sequence[int], nu: Sequence[int]) -> int:
    """Multiplicity of Gamma_mu^m (x) Gamma_nu^n in Gamma_lam^{mn} restricted."""
    lam = partition(lam)
    f = sum(lam)
    if len(lam) > m * n:
        raise ValueError(f"{lam} has more than {m * n} rows")
    try:
        mu_f = pad(mu, m, f)
        nu_f = pad(nu, n, f)
    except NonIntegerPadding:
        return 0
    return kronecker(lam, mu_f, nu_f)


def branch_decompose(lam: Sequence[int], m: int, n: int) -> List[BranchTerm]:
    """All terms of the restriction of Gamma_lam^{mn} to SU(m) x SU(n)."""
    lam = partition(lam)
    f = sum(lam)
    left = partitions(f, max_rows=m)
    right = partitions(f, max_rows=n)
    out = []
    for mu_f in left:
        for nu_f in right:
            g = kronecker(lam, mu_f, nu_f)
            if g:
                out.append(BranchTerm(mu_f, nu_f, g))
    return out


@dataclass(frozen=True)
class HolismCertificate:
    j: int
    d_a: int
    d_b: int
    method: str  # "direct" | "inductive"
    multiplicity: Optional[int]
    holistic: bool
    chain: tuple = ()

    def to_json(self) -> dict:
        return {
            "j": self.j,
            "d_a": self.d_a,
            "d_b": self.d_b,
            "method": self.method,
            "multiplicity": None if self.multiplicity is None else str(self.multiplicity),
            "holistic": self.holistic,
        }


def trivial_multiplicity(j: int, d_a: int, d_b: int) -> int:
    """Multiplicity of trivial (x) trivial in D_j^{d_a d_b} restricted to SU(d_a) x SU(d_b)."""
    lam = born_rep_partition(j, d_a * d_b)
    return branching_multiplicity(lam, d_a, d_b, (), ())


def certify_holistic(j: int, d_a: int, d_b: int, direct: bool = False) -> HolismCertificate:
    """Certify that D_j restricted to the local subgroup contains trivial (x) trivial.

    For j in {2, 3} (or when ``direct``) the Kronecker coefficient is computed.
    Larger j are reduced to a base case by repeatedly peeling off D_2, which is
    licensed by positivity being preserved under row-wise addition of diagrams.
    Raises :class:`QuantumCase` for j = 1.
    """
    if j < 1:
        raise ValueError("j must be positive")
    if j == 1:
        raise QuantumCase("j = 1 is the quantum case: multiplicity "
                          f"{trivial_multiplicity(1, d_a, d_b)}, locally tomographic")
    if direct or j <= 3:
        g = trivial_multiplicity(j, d_a, d_b)
        return HolismCertificate(j, d_a, d_b, "direct", g, g > 0)
    base = 2 if j % 2 == 0 else 3
    step = certify_holistic(2, d_a, d_b)
    start = certify_holistic(base, d_a, d_b)
    ok = step.holistic and start.holistic
    d = d_a * d_b
    chain = []
    lam = born_rep_partition(base, d)
    for k in range(base + 2, j + 1, 2):
        lam = add(lam, born_rep_partition(2, d))
        assert lam == born_rep_partition(k, d)
        chain.append(k)
    return HolismCertificate(j, d_a, d_b, "inductive", None, ok, (base, *chain))


def enumerate_K_values(d: int, limit: int) -> List[int]:
    """Achievable numbers of state parameters K_d up to ``limit``.

    K is a sum of dim D_j^d over a finite set J of positive integers.  For
    d = 2 the set must contain an odd j.  For d >= 3 any nonempty J is accepted
    (experimental: the admissible sets there are not pinned down).
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    dims = []
    j = 1
    while True:
        dim = dim_Dj(j, d)
        if dim > limit:
            break
        dims.append((j, dim))
        j += 1
    # reachable[k] = set of flags "contains an odd j" over subsets summing to k
    reachable = {0: {False}}
    for jj, dim in dims:
        for k, flags in sorted(reachable.items(), reverse=True):
            if k + dim <= limit:
                reachable.setdefault(k + dim, set()).update(f or jj % 2 == 1 for f in flags)
    found = set()
    for k, flags in reachable.items():
        if k == 0 or k < 2 * d - 2:
            continue
        if d == 2 and True not in flags:
            continue
        found.add(k)
    return sorted(found)


def semigroup_trials(trials: int, seed: int, max_size: int = 6):
    """Random positive pairs checked for positivity of the row-wise sum.

    Yields ``(triple, triple', summed_triple, g_sum)`` for each trial.
    """
    rng = random.Random(seed)
    pools = {n: partitions(n) for n in range(1, max_size + 1)}
    done = 0
    while done < trials:
        t1 = _positive_triple(rng, pools)
        t2 = _positive_triple(rng, pools)
        summed = tuple(add(a, b) for a, b in zip(t1, t2))
        yield t1, t2, summed, kronecker(*summed)
        done += 1


def _positive_triple(rng: random.Random, pools) -> tuple:
    while True:
        n = rng.randint(1, max(pools))
        lam, mu, nu = (rng.choice(pools[n]) for _ in range(3))
        if kronecker(lam, mu, nu) > 0:
            return lam, mu, nu
