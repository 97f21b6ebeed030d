"""Command-line front end: ``opflab <subcommand> ...`` (also ``python -m opflab``)."""
from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import List, Optional

import numpy as np

from . import characters as chars
from .branching import (QuantumCase, branch_decompose, certify_holistic,
                        enumerate_K_values, trivial_multiplicity)
from .consistency import corrupted_star, verify_constraints
from .designs import NotPrime
from .partitions import (born_rep_partition, dim_Dj, format_partition,
                         parse_partition, su_dim)
from .purification import (figure_data, is_reduced_state, reduced_distance_lower_bound,
                           write_figure_csv)
from .tensor import exchange_projectors, partial_trace, projector, random_pure_state
from .toy import (ToyState, canonical_measurement, convex_decomposition, doubled,
                  reduced_from_density, reduced_state)

CHECK_FAILED = 1
USAGE = 2


DEFAULT_FORMAT = {"cmd_dim": "text", "cmd_kvalues": "text", "cmd_figure": "csv"}


class CheckFailed(Exception):
    pass


def _emit(args, payload: dict, text: str, csv_writer=None) -> None:
    fmt = args.format
    if fmt == "csv" and csv_writer is not None:
        if args.out:
            csv_writer(args.out)
        else:
            csv_writer(sys.stdout)
        return
    out = json.dumps(payload, indent=2, sort_keys=True) + "\n" if fmt == "json" else text + "\n"
    if args.out:
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def cmd_dim(args):
    val = dim_Dj(args.j, args.d)
    lam = born_rep_partition(args.j, args.d)
    weyl = su_dim(lam, args.d)
    if weyl != val:
        raise CheckFailed(f"closed form {val} disagrees with Weyl dimension {weyl}")
    _emit(args, {"j": args.j, "d": args.d, "partition": format_partition(lam),
                 "dimension": str(val)}, str(val))


def cmd_kron(args):
    lam, mu, nu = (parse_partition(x) for x in (args.lam, args.mu, args.nu))
    t0 = time.perf_counter()
    g = chars.kronecker(lam, mu, nu)
    _save_cache(sum(lam))
    payload = {"lambda": format_partition(lam), "mu": format_partition(mu),
               "nu": format_partition(nu), "g": str(g)}
    text = str(g)
    if args.timing:
        payload["seconds"] = round(time.perf_counter() - t0, 3)
        text += f" ({payload['seconds']} s)"
    _emit(args, payload, text)


def cmd_branch(args):
    lam = parse_partition(args.lam)
    terms = branch_decompose(lam, args.m, args.n)
    total = sum(t.multiplicity * su_dim(t.mu, args.m) * su_dim(t.nu, args.n) for t in terms)
    expected = su_dim(lam, args.m * args.n)
    payload = {"lambda": format_partition(lam), "m": args.m, "n": args.n,
               "terms": [{"mu": format_partition(t.mu), "nu": format_partition(t.nu),
                          "multiplicity": str(t.multiplicity)} for t in terms],
               "dimension_sum": str(total), "su_dim": str(expected)}
    text = "\n".join(f"{format_partition(t.mu)} x {format_partition(t.nu)} : {t.multiplicity}"
                     for t in terms) + f"\ndimension check {total} = {expected}"
    _emit(args, payload, text)
    if total != expected:
        raise CheckFailed("dimension identity violated")


def cmd_certify(args):
    try:
        cert = certify_holistic(args.j, args.da, args.db, direct=args.direct)
    except QuantumCase:
        g = trivial_multiplicity(1, args.da, args.db)
        payload = {"j": 1, "d_a": args.da, "d_b": args.db, "method": "direct",
                   "multiplicity": str(g), "holistic": g > 0,
                   "verdict": "locally tomographic (quantum)"}
        _emit(args, payload, f"multiplicity {g}: locally tomographic (quantum)")
        if g != 0:
            raise CheckFailed("quantum case should have multiplicity 0")
        return
    _save_cache(args.j * args.da * args.db)
    mult = "n/a" if cert.multiplicity is None else cert.multiplicity
    payload = cert.to_json()
    payload["verdict"] = "holistic (violates local tomography)" if cert.holistic else "not certified"
    _emit(args, payload,
          f"j={cert.j} method={cert.method} multiplicity={mult} "
          + payload["verdict"])
    if not cert.holistic:
        raise CheckFailed("expected a positive certificate")


def cmd_kvalues(args):
    ks = enumerate_K_values(args.d, args.limit)
    _emit(args, {"d": args.d, "limit": args.limit, "K": ks,
                 "experimental": args.d != 2}, ", ".join(map(str, ks)))


def cmd_verify(args):
    star_product = corrupted_star if args.negative_control else None
    kwargs = {} if star_product is None else {"star_product": star_product}
    report = verify_constraints(args.da, args.db, args.trials, args.seed, **kwargs)
    payload = report.to_json()
    payload["negative_control"] = args.negative_control
    lines = [f"{r['constraint']:14s} {'PASS' if r['pass'] else 'FAIL'}  "
             f"max residual {r['max_residual']:.3e}" for r in payload["constraints"]]
    _emit(args, payload, "\n".join(lines))
    if args.negative_control:
        if report.results["C3"].passed:
            raise CheckFailed("negative control unexpectedly passed C3")
    elif not report.all_pass:
        raise CheckFailed("consistency check failed")


def cmd_reduce(args):
    psi = random_pure_state(args.da * args.db, args.seed)
    omega = reduced_state(psi, args.da, args.db).matrix
    rho = partial_trace(projector(psi), (args.da, args.db), [0])
    res = float(np.linalg.norm(omega - reduced_from_density(rho)))
    payload = {"d_a": args.da, "d_b": args.db, "seed": args.seed,
               "trace": float(np.trace(omega).real), "closed_form_residual": res,
               "matrix_real": np.round(omega.real, 12).tolist(),
               "matrix_imag": np.round(omega.imag, 12).tolist()}
    _emit(args, payload, np.array2string(omega, precision=6) + f"\nclosed-form residual {res:.3e}")
    if res > 1e-12:
        raise CheckFailed("reduced-state forms disagree")


def cmd_witness(args):
    e0, e1 = np.eye(2)
    omega = ToyState(2, 0.5 * (projector(doubled(e0)) + projector(doubled(e1))))
    ens = convex_decomposition(omega)
    member, dist = is_reduced_state(omega, args.db)
    bound = reduced_distance_lower_bound(omega)
    payload = {"terms": len(ens.probs), "probabilities": ens.probs.tolist(), "ensemble_residual": float(np.linalg.norm(ens.matrix() - omega.matrix)),
               "is_reduced": bool(member), "distance": dist,
               "certified_lower_bound": bound}
    _emit(args, payload, f"ensemble terms {len(ens.probs)}; reduced: {member}; "
          f"distance {dist:.6f}; certified >= {bound:.6f}")
    if member or bound < 0.02:
        raise CheckFailed("witness not certified")


def cmd_figure(args):
    data = figure_data(args.samples, args.seed)
    if args.format == "csv":
        _emit(args, {}, "", lambda target: write_figure_csv(data, target))
    else:
        _emit(args, {k: v.tolist() for k, v in data.items()},
              "\n".join(f"{k}: {len(v)} points" for k, v in data.items()))


def cmd_mub(args):
    meas = canonical_measurement(args.d)
    s, _ = exchange_projectors(args.d)
    res = float(np.linalg.norm(sum(f.matrix for f in meas.effects) - s))
    _emit(args, {"d": args.d, "effects": len(meas.effects), "sum_residual": res},
          f"{len(meas.effects)} effects, |sum - S| = {res:.3e}")
    if res > 1e-12:
        raise CheckFailed("MUB effects do not sum to S")


def cmd_cache(args):
    cache = chars.CharacterCache(args.n).load()
    if args.action == "warm":
        for lam in chars.rows_needed(args.n):
            cache.row(lam)
        cache.save()
    elif args.action == "clear":
        cache.clear()
    _emit(args, {"action": args.action, "n": args.n, "entries": len(cache),
                 "path": str(cache.path)}, f"{len(cache)} entries ({cache.path})")


def _save_cache(n: int) -> None:
    chars.get_cache(n).save()


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="RNG seed (default 0)")
    common.add_argument("--out", help="write the artifact here instead of stdout")
    common.add_argument("--format", choices=["json", "csv", "text"], default=None,
                        help="output format (default depends on the subcommand)")

    p = argparse.ArgumentParser(prog="opflab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("dim", parents=[common], help="dimension of D_j^d")
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_dim)

    s = sub.add_parser("kron", parents=[common], help="Kronecker coefficient g(lam, mu, nu)")
    s.add_argument("--lam", required=True, help="e.g. 4,2^7")
    s.add_argument("--mu", required=True)
    s.add_argument("--nu", required=True)
    s.add_argument("--timing", action="store_true")
    s.set_defaults(func=cmd_kron)

    s = sub.add_parser("branch", parents=[common], help="SU(mn) -> SU(m) x SU(n) branching")
    s.add_argument("--lam", required=True)
    s.add_argument("--m", type=int, required=True)
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_branch)

    s = sub.add_parser("certify-lt", parents=[common], help="local-tomography violation certificate")
    s.add_argument("--j", type=int, required=True)
    s.add_argument("--da", type=int, default=3)
    s.add_argument("--db", type=int, default=3)
    s.add_argument("--direct", action="store_true", help="compute directly instead of by induction")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("k-values", parents=[common], help="admissible numbers of state parameters")
    s.add_argument("--d", type=int, default=2)
    s.add_argument("--limit", type=int, required=True)
    s.set_defaults(func=cmd_kvalues)

    toy = sub.add_parser("toy", help="toy-theory experiments")
    tsub = toy.add_subparsers(dest="toy_command", required=True)

    s = tsub.add_parser("verify", parents=[common], help="consistency suite C1-C5")
    s.add_argument("--da", type=int, default=2)
    s.add_argument("--db", type=int, default=2)
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--negative-control", action="store_true",
                   help="use the product without the antisymmetric term")
    s.set_defaults(func=cmd_verify)

    s = tsub.add_parser("reduce", parents=[common], help="reduced state of a random pure state")
    s.add_argument("--da", type=int, default=2)
    s.add_argument("--db", type=int, default=2)
    s.set_defaults(func=cmd_reduce)

    s = tsub.add_parser("witness", parents=[common], help="purification-violation witness")
    s.add_argument("--db", type=int, default=2)
    s.set_defaults(func=cmd_witness)

    s = tsub.add_parser("figure", parents=[common], help="qubit state-space projection (CSV)")
    s.add_argument("--samples", type=int, default=10_000)
    s.set_defaults(func=cmd_figure)

    s = tsub.add_parser("mub", parents=[common], help="canonical MUB measurement")
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_mub)

    s = sub.add_parser("cache", parents=[common], help="character cache administration")
    s.add_argument("action", choices=["warm", "clear", "stat"])
    s.add_argument("--n", type=int, required=True)
    s.set_defaults(func=cmd_cache)
    return p


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else 0
    if args.format is None:
        args.format = DEFAULT_FORMAT.get(args.func.__name__, "json")
    try:
        args.func(args)
    except CheckFailed as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return CHECK_FAILED
    except (NotPrime, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return CHECK_FAILED
    return 0


def main() -> None:
    sys.exit(run())
