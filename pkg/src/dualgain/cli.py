"""Command-line front door.

Subcommands: spectrum, balance, radius, interlace, charpoly, mdet, cycle,
path, check, generate, convert.  Exit codes: 0 success, 1 a check suite
found a property violation, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from . import char_poly, graph_io, linalg, sampling, spectra
from .errors import BadParameterError, DualGainError
from .gain_graph import GainGraph
from .scalars import (
    DualNumber,
    DualScalar,
    RING_COMPLEX,
    RING_QUATERNION,
    RING_REAL,
    RINGS,
    parse_dual_scalar,
    render_dual_scalar,
)

CHECK_SUITES = ("interlacing", "switching-invariance", "radius-bounds",
                "mdet-product", "coefficient", "dq2dc", "closed-forms")


def _fmt_dual(v: DualNumber) -> str:
    sign = "+" if v.dual >= 0 else "-"
    return f"{v.std:.12g} {sign} {abs(v.dual):.12g}·eps"


def _fmt_scalar(a: DualScalar) -> str:
    return render_dual_scalar(a)


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _emit_report(args, payload: dict, table: str) -> None:
    if args.format == "json":
        _emit(args, json.dumps(payload, indent=2))
    else:
        _emit(args, table)


def _load(args) -> GainGraph:
    return graph_io.load(args.file, tol=args.tol)


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_spectrum(args) -> int:
    phi = _load(args)
    spec = spectra.spectrum(phi, args.matrix, with_vectors=False)
    lines = [f"{args.matrix} spectrum ({len(spec)} eigenvalues, descending):"]
    lines += [f"  {_fmt_dual(v)}" for v in spec.values]
    _emit_report(args, spec.to_dict(), "\n".join(lines))
    return 0


def _cmd_balance(args) -> int:
    phi = _load(args)
    cert = phi.balance_certificate(args.tol)
    if cert.balanced:
        payload = {"balanced": True,
                   "theta": [_fmt_scalar(t) for t in cert.theta]}
        lines = ["balanced"]
        lines += [f"  theta[{i}] = {_fmt_scalar(t)}" for i, t in enumerate(cert.theta)]
    else:
        payload = {"balanced": False, "witness_cycle": list(cert.witness_cycle)}
        lines = ["unbalanced",
                 f"  witness cycle: {' -> '.join(str(v) for v in cert.witness_cycle)}"]
    _emit_report(args, payload, "\n".join(lines))
    return 0


def _cmd_radius(args) -> int:
    phi = _load(args)
    report = spectra.radius_report(phi, args.matrix)
    lines = [
        f"{args.matrix} radius report:",
        f"  rho(gain graph)   = {_fmt_dual(report.rho_gain)}",
        f"  rho(underlying)   = {report.rho_graph:.12g}",
        f"  degree bound      = {report.delta_bound:.12g}",
        f"  bound holds       = {report.bound_holds}",
        f"  delta bound holds = {report.delta_bound_holds}",
        f"  equality          = {report.equality}",
        f"  connected         = {report.connected}",
        f"  balanced          = {report.balanced}",
        f"  antibalanced      = {report.antibalanced}",
        f"  equality predicted= {report.equality_predicted}",
        f"  consistent        = {report.consistent}",
    ]
    _emit_report(args, report.to_dict(), "\n".join(lines))
    return 0


def _cmd_interlace(args) -> int:
    phi = _load(args)
    if args.keep:
        subset = [int(x) for x in args.keep.split(",") if x.strip() != ""]
    elif args.drop:
        dropped = {int(x) for x in args.drop.split(",") if x.strip() != ""}
        subset = [v for v in range(phi.n) if v not in dropped]
    else:
        subset = list(range(phi.n - 1))
    report = spectra.check_interlacing(phi, subset, args.matrix)
    lines = [f"{args.matrix} interlacing on subset {list(report.subset)}: "
             f"{'holds' if report.holds else 'VIOLATED'}"]
    for i, mu in enumerate(report.values_sub):
        lines.append(
            f"  lambda_{i + 1} >= mu_{i + 1} >= lambda_{len(report.values_full) - len(report.values_sub) + i + 1}: "
            f"{report.upper_ok[i]} / {report.lower_ok[i]}   (mu = {_fmt_dual(mu)})")
    _emit_report(args, report.to_dict(), "\n".join(lines))
    return 0


def _cmd_charpoly(args) -> int:
    phi = _load(args)
    coeffs = char_poly.coefficients(phi)
    eig = spectra.spectrum(phi, spectra.KIND_ADJACENCY, with_vectors=False).values
    from_eigs = char_poly.char_poly_from_eigenvalues(eig)
    max_err = max((abs(c.std - e.std) + abs(c.dual - e.dual)
                   for c, e in zip(coeffs, from_eigs)), default=0.0)
    payload = {
        "coefficients": [{"std": c.std, "dual": c.dual} for c in coeffs],
        "from_eigenvalues": [{"std": c.std, "dual": c.dual} for c in from_eigs],
        "max_error": max_err,
    }
    lines = ["characteristic polynomial coefficients c_1..c_n:"]
    lines += [f"  c_{i + 1} = {_fmt_dual(c)}" for i, c in enumerate(coeffs)]
    lines.append(f"eigenvalue cross-check max error: {max_err:.3e}")
    _emit_report(args, payload, "\n".join(lines))
    return 0


def _cmd_mdet(args) -> int:
    phi = _load(args)
    direct = linalg.moore_determinant(spectra.adjacency_matrix(phi))
    via = char_poly.mdet_via_subgraphs(phi)
    payload = {
        "moore_determinant": {"std": list(direct.components()[0]),
                              "dual": list(direct.components()[1])},
        "via_subgraphs": {"std": list(via.components()[0]),
                          "dual": list(via.components()[1])},
    }
    lines = [f"Moore determinant (permutation sum): {_fmt_scalar(direct)}",
             f"Moore determinant (basic subgraphs): {_fmt_scalar(via)}"]
    _emit_report(args, payload, "\n".join(lines))
    return 0


def _cmd_cycle(args) -> int:
    gain = parse_dual_scalar(args.gain, args.ring)
    spec = spectra.cycle_spectrum_closed_form(args.n, gain, args.matrix, tol=args.tol)
    lines = [f"closed-form {args.matrix} spectrum of the {args.n}-cycle "
             f"with gain {_fmt_scalar(gain)}:"]
    lines += [f"  {_fmt_dual(v)}" for v in spec.values]
    _emit_report(args, spec.to_dict(), "\n".join(lines))
    return 0


def _cmd_path(args) -> int:
    spec = spectra.path_spectrum_closed_form(args.n, args.matrix)
    lines = [f"closed-form {args.matrix} spectrum of the {args.n}-path:"]
    lines += [f"  {_fmt_dual(v)}" for v in spec.values]
    _emit_report(args, spec.to_dict(), "\n".join(lines))
    return 0


def _cmd_generate(args) -> int:
    gain = None
    if args.gain is not None:
        gain = parse_dual_scalar(args.gain, args.ring)
    phi = graph_io.generate(args.family, n=args.n, ring=args.ring, gain=gain,
                            p=args.p, seed=args.seed)
    text = graph_io.serialize(phi)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_convert(args) -> int:
    phi = _load(args)
    if args.ring:
        order = {RING_REAL: 0, RING_COMPLEX: 1, RING_QUATERNION: 2}
        if order[args.ring] < order[phi.ring]:
            raise BadParameterError(f"cannot narrow {phi.ring} to {args.ring}")
        gains = {(u, v): g.widen(args.ring) for u, v, g in phi.gains()}
        phi = GainGraph(phi.graph, args.ring, gains)
    text = graph_io.serialize(phi)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# ---------------------------------------------------------------------------
# property-check suites


def _spectra_close(a, b, tol):
    return len(a) == len(b) and all(
        abs(x.std - y.std) <= tol and abs(x.dual - y.dual) <= tol
        for x, y in zip(a, b))


def _trial_rng(seed, trial):
    return np.random.default_rng([seed, trial])


def _ring_for_trial(trial):
    return RINGS[trial % 3]


def _suite_interlacing(trials, seed):
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        ring = _ring_for_trial(trial)
        n = int(rng.integers(3, 9))
        phi = sampling.random_gain_graph(
            rng, sampling.random_connected_graph(rng, n, int(rng.integers(0, 3))), ring)
        k = int(rng.integers(1, n))
        subset = sorted(rng.choice(n, size=k, replace=False).tolist())
        for kind in (spectra.KIND_ADJACENCY, spectra.KIND_LAPLACIAN):
            if not spectra.check_interlacing(phi, subset, kind).holds:
                return trial, phi, f"{kind} interlacing violated on subset {subset}"
    return None


def _suite_switching(trials, seed):
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        ring = _ring_for_trial(trial)
        n = int(rng.integers(3, 9))
        phi = sampling.random_gain_graph(
            rng, sampling.random_connected_graph(rng, n, int(rng.integers(0, 3))), ring)
        switched = phi.switch(sampling.random_switching(rng, ring, n))
        for kind in (spectra.KIND_ADJACENCY, spectra.KIND_LAPLACIAN):
            before = spectra.spectrum(phi, kind, with_vectors=False).values
            after = spectra.spectrum(switched, kind, with_vectors=False).values
            if not _spectra_close(before, after, 1e-9):
                return trial, phi, f"{kind} spectrum changed under switching"
    return None


def _suite_radius_bounds(trials, seed):
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        ring = _ring_for_trial(trial)
        n = int(rng.integers(3, 9))
        phi = sampling.random_gain_graph(
            rng, sampling.random_connected_graph(rng, n, int(rng.integers(0, 3))), ring)
        for kind in (spectra.KIND_ADJACENCY, spectra.KIND_LAPLACIAN):
            report = spectra.radius_report(phi, kind)
            if not (report.bound_holds and report.delta_bound_holds):
                return trial, phi, f"{kind} radius bound violated"
            if report.rho_graph > report.delta_bound + 1e-12:
                return trial, phi, f"{kind} underlying radius exceeds degree bound"
            if report.consistent is False:
                return trial, phi, f"{kind} equality and balance disagree"
    return None


def _suite_mdet_product(trials, seed):
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        ring = _ring_for_trial(trial)
        n = int(rng.integers(2, 7))
        phi = sampling.random_gain_graph(
            rng, sampling.random_connected_graph(rng, n, int(rng.integers(0, 3))), ring)
        a = spectra.adjacency_matrix(phi)
        direct = linalg.moore_determinant(a).real_part()
        via = char_poly.mdet_via_subgraphs(phi).real_part()
        prod = DualNumber.one()
        for v in spectra.spectrum(phi, with_vectors=False).values:
            prod = prod * v
        if not (direct.allclose(via, 1e-8) and direct.allclose(prod, 1e-8)):
            return trial, phi, "Moore determinant disagreement"
    return None


def _suite_coefficient(trials, seed):
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        ring = _ring_for_trial(trial)
        n = int(rng.integers(2, 8))
        phi = sampling.random_gain_graph(
            rng, sampling.random_connected_graph(rng, n, int(rng.integers(0, 3))), ring)
        coeffs = char_poly.coefficients(phi)
        eig = spectra.spectrum(phi, with_vectors=False).values
        expected = char_poly.char_poly_from_eigenvalues(eig)
        if not all(c.allclose(e, 1e-8) for c, e in zip(coeffs, expected)):
            return trial, phi, "coefficient theorem disagreement"
    return None


def _suite_dq2dc(trials, seed):
    from .transcendental import reduce_to_complex

    kinds = ("generic", "real_std", "complex_form", "dual_real", "negative_i_axis")
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        q = sampling.random_dual_quaternion(rng, kinds[trial % len(kinds)])
        a, u = reduce_to_complex(q)
        residual = a.widen(RING_QUATERNION) - u.conjugate() * q * u
        ok = (max(abs(c) for part in residual.components() for c in part) <= 1e-12
              and u.is_unit(1e-12)
              and a.real_part().allclose(q.real_part(), 1e-12)
              and _imag_magnitude(a).allclose(_imag_magnitude(q), 1e-12))
        if not ok:
            return trial, None, f"reduction failed for {render_dual_scalar(q)}"
    return None


def _imag_magnitude(x: DualScalar) -> DualNumber:
    re = x.real_part()
    return (x - re.to_scalar(x.ring)).magnitude()


def _suite_closed_forms(trials, seed):
    for trial in range(trials):
        rng = _trial_rng(seed, trial)
        ring = _ring_for_trial(trial)
        n = int(rng.integers(3, 11))
        cyc = sampling.random_gain_graph(
            rng, graph_io.cycle_graph(n, DualScalar.one(ring)).graph, ring)
        q = cyc.gain_of_walk(list(range(n)) + [0])
        tol = 1e-8 if ring == RING_QUATERNION else 1e-9
        for kind in (spectra.KIND_ADJACENCY, spectra.KIND_LAPLACIAN):
            closed = spectra.cycle_spectrum_closed_form(n, q, kind).values
            dense = spectra.spectrum(cyc, kind, with_vectors=False).values
            if not _spectra_close(closed, dense, tol):
                return trial, cyc, f"cycle {kind} closed form disagrees"
        pat = sampling.random_gain_graph(rng, graph_io.path_graph(n, ring).graph, ring)
        for kind in (spectra.KIND_ADJACENCY, spectra.KIND_LAPLACIAN):
            closed = spectra.path_spectrum_closed_form(n, kind).values
            dense = spectra.spectrum(pat, kind, with_vectors=False).values
            if not _spectra_close(closed, dense, 1e-9):
                return trial, pat, f"path {kind} closed form disagrees"
    return None


_SUITES = {
    "interlacing": _suite_interlacing,
    "switching-invariance": _suite_switching,
    "radius-bounds": _suite_radius_bounds,
    "mdet-product": _suite_mdet_product,
    "coefficient": _suite_coefficient,
    "dq2dc": _suite_dq2dc,
    "closed-forms": _suite_closed_forms,
}


def _cmd_check(args) -> int:
    failure = _SUITES[args.suite](args.trials, args.seed)
    if failure is None:
        payload = {"suite": args.suite, "trials": args.trials,
                   "passes": args.trials, "failures": 0}
        _emit_report(args, payload, f"check {args.suite}: {args.trials}/{args.trials} trials passed")
        return 0
    trial, phi, message = failure
    counterexample = graph_io.serialize(phi) if phi is not None else None
    payload = {"suite": args.suite, "trials": args.trials, "passes": trial,
               "failures": 1, "failed_trial": trial, "message": message,
               "counterexample": counterexample}
    table = (f"check {args.suite}: FAILED at trial {trial} ({message})\n"
             + (f"counterexample:\n{counterexample}" if counterexample else ""))
    _emit_report(args, payload, table)
    return 1


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dualgain",
        description="Spectra, balance and determinants of dual unit gain graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p, with_file=True, with_matrix=True):
        if with_file:
            p.add_argument("file", help="gain graph file (.ggf)")
        if with_matrix:
            p.add_argument("--matrix", choices=("adjacency", "laplacian"),
                           default="adjacency")
        p.add_argument("--tol", type=float, default=1e-9,
                       help="unit/balance tolerance (default 1e-9)")
        p.add_argument("--format", choices=("table", "json"), default="table")
        p.add_argument("--out", default=None, help="write output to a file")

    add_common(sub.add_parser("spectrum", help="sorted dual eigenvalues"))
    add_common(sub.add_parser("balance", help="balance certificate or witness cycle"),
               with_matrix=False)
    add_common(sub.add_parser("radius", help="spectral radius bounds report"))
    p = sub.add_parser("interlace", help="induced-subgraph interlacing check")
    add_common(p)
    p.add_argument("--keep", default=None, help="comma-separated vertices to keep")
    p.add_argument("--drop", default=None, help="comma-separated vertices to drop")
    add_common(sub.add_parser("charpoly", help="coefficient-theorem coefficients"),
               with_matrix=False)
    add_common(sub.add_parser("mdet", help="Moore determinant, both routes"),
               with_matrix=False)

    p = sub.add_parser("cycle", help="closed-form cycle spectrum")
    add_common(p, with_file=False)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ring", choices=RINGS, default=RING_COMPLEX)
    p.add_argument("--gain", required=True,
                   help="total cycle gain, e.g. \"(0+1i) + (0+0i)*eps\"")

    p = sub.add_parser("path", help="closed-form path spectrum")
    add_common(p, with_file=False)
    p.add_argument("--n", type=int, required=True)

    p = sub.add_parser("check", help="run a named property suite")
    add_common(p, with_file=False, with_matrix=False)
    p.add_argument("suite", choices=CHECK_SUITES)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("generate", help="write a named family to a file")
    p.add_argument("family", choices=("path", "cycle", "complete", "random"))
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ring", choices=RINGS, default=RING_COMPLEX)
    p.add_argument("--gain", default=None, help="cycle gain (cycle family only)")
    p.add_argument("--p", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)

    p = sub.add_parser("convert", help="re-serialize a file, optionally widening the ring")
    p.add_argument("file")
    p.add_argument("--ring", choices=RINGS, default=None)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--out", default=None)
    return parser


_HANDLERS = {
    "spectrum": _cmd_spectrum,
    "balance": _cmd_balance,
    "radius": _cmd_radius,
    "interlace": _cmd_interlace,
    "charpoly": _cmd_charpoly,
    "mdet": _cmd_mdet,
    "cycle": _cmd_cycle,
    "path": _cmd_path,
    "check": _cmd_check,
    "generate": _cmd_generate,
    "convert": _cmd_convert,
}


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (DualGainError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
