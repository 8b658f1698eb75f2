"""Command-line interface.

Subcommands: analyze, search, bounds, extremal, curve, verify, lattice.
Numeric output defaults to exact rational strings; --decimal renders
decimals at --precision digits.  Exit codes: 0 success, 2 parse error,
3 mathematical inconsistency, 4 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, distill, gf4, invariants, oracle
from .enumerators import Enumerator, MacWilliamsError, macwilliams, signed_eval
from .exact import Q, decimal_str, q_to_str

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_MATH = 3
EXIT_BUDGET = 4

BASELINE_THRESHOLD = None  # 5-qubit reference, computed lazily


class _Output:
    def __init__(self, args):
        self.decimal = getattr(args, "decimal", False)
        self.precision = getattr(args, "precision", 12)
        self.path = getattr(args, "out", None)

    def num(self, x):
        if x is None:
            return ""
        if self.decimal:
            return decimal_str(Q(x), self.precision)
        return q_to_str(x)

    def emit(self, text):
        if self.path:
            with open(self.path, "w") as fh:
                fh.write(text)
        else:
            sys.stdout.write(text)


def _load_code(path):
    with open(path) as fh:
        text = fh.read()
    return gf4.parse_code(text)


def _threshold_blob(rep: distill.ThresholdReport, out: _Output):
    if rep.status != "ok":
        return {"status": rep.status}
    return {
        "status": "ok",
        "interval": [q_to_str(rep.low), q_to_str(rep.high)],
        "decimal": rep.decimal(out.precision),
        "stable": rep.stable,
    }


def _analyze_report(code: gf4.Gf4Code, budget: int, out: _Output):
    if not gf4.is_self_orthogonal(code):
        raise gf4.NotM3CodeError("code is not Hermitian self-orthogonal")
    A = gf4.weight_enumerator(code, budget)
    report = {
        "n": code.n,
        "k_gf4": code.k,
        "logical_qubits": code.n - 2 * code.k,
        "self_dual": gf4.is_self_dual(code),
        "A": json.loads(A.to_json()),
    }
    B = macwilliams(A, A.total())
    report["B"] = json.loads(B.to_json())
    C = B - A
    report["C"] = json.loads(C.to_json())
    if report["self_dual"]:
        val = signed_eval(A, Q(1, 3))
        ok_interval = bounds.quantum_filter_selfdual_enumerator(A)
        report["state_check"] = {
            "signed_eval_pure": out.num(val),
            "nonneg_pure": val >= 0,
            "nonneg_interval": ok_interval,
        }
    if code.n % 2 and code.k == (code.n - 1) // 2 and code.n % 6 in (1, 5):
        dmap = distill.build_map(A)
        ne = distill.noise_exponent(dmap)
        other = distill.build_map(A, lam=-dmap.lam)
        verdict = distill.quantum_verdict(A)
        thr_nat = distill.threshold(dmap)
        thr_other = distill.threshold(other)
        best = _better_threshold(thr_nat, thr_other)
        report["distill"] = {
            "class": "5" if code.n % 6 == 5 else "1",
            "nu": ne.nu,
            "nu_status": ne.status,
            "leading_coefficient": out.num(ne.leading) if ne.leading is not None else None,
            "threshold_natural_sign": _threshold_blob(thr_nat, out),
            "threshold_other_sign": _threshold_blob(thr_other, out),
            "threshold_best": _threshold_blob(best, out),
            "quantum_constraints": {
                "success_nonneg": verdict.success_nonneg,
                "threshold_ok_plus": verdict.threshold_ok_plus,
                "threshold_ok_minus": verdict.threshold_ok_minus,
                "success_witness": out.num(verdict.success_witness)
                if verdict.success_witness is not None
                else None,
            },
        }
    return report


def _better_threshold(a, b):
    if a.status != "ok":
        return b
    if b.status != "ok":
        return a
    return a if a.low >= b.low else b


def cmd_analyze(args) -> int:
    out = _Output(args)
    code = _load_code(args.file)
    report = _analyze_report(code, 4**args.budget, out)
    out.emit(json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def _baseline_interval():
    global BASELINE_THRESHOLD
    if BASELINE_THRESHOLD is None:
        A = Enumerator.from_pairs(5, {0: 1, 4: 15})
        BASELINE_THRESHOLD = distill.threshold(distill.build_map(A))
    return BASELINE_THRESHOLD


def cmd_search(args) -> int:
    out = _Output(args)
    budget = 4**args.budget
    with open(args.file) as fh:
        codes = gf4.parse_database(fh.read())
    baseline = _baseline_interval()
    seen = {}
    rows = []
    for idx, code in enumerate(codes):
        for coord in range(code.n):
            short = gf4.shorten(code, coord)
            A = gf4.weight_enumerator(short, budget)
            key = A.canonical_key()
            if key in seen:
                continue
            seen[key] = True
            entry = {
                "n": short.n,
                "enumerator": key,
                "source": "%d:%d" % (idx, coord),
            }
            if short.n % 6 in (1, 5) and short.k == (short.n - 1) // 2 and A.is_even_only():
                dmap = distill.build_map(A)
                ne = distill.noise_exponent(dmap)
                rep = distill.threshold(dmap)
                other = distill.threshold(distill.build_map(A, lam=-dmap.lam))
                rep = _better_threshold(rep, other)
                entry["nu"] = ne.nu
                entry["threshold"] = rep
            rows.append(entry)

    def sort_key(e):
        rep = e.get("threshold")
        if rep is None or rep.status != "ok":
            return (1, Q(0))
        return (0, -rep.low)

    rows.sort(key=sort_key)
    lines = ["n,enumerator_hash,threshold,nu,beats_baseline"]
    import hashlib

    for e in rows:
        rep = e.get("threshold")
        if rep is not None and rep.status == "ok":
            dec = rep.decimal(out.precision)
            beats = rep.low > baseline.high
        else:
            dec, beats = "", False
        h = hashlib.sha256(e["enumerator"].encode()).hexdigest()[:16]
        nu = e.get("nu")
        lines.append("%d,%s,%s,%s,%s" % (e["n"], h, dec, "" if nu is None else nu, str(beats).lower()))
    out.emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_bounds(args) -> int:
    out = _Output(args)
    driver = {
        "nu": bounds.max_nu_bound,
        "distance": bounds.max_distance_bound,
        "classical-distance": bounds.classical_distance_bound_selfdual,
    }[args.target]
    lines = ["n,bound_classical,bound_quantum,witness"]
    for n in range(args.start, args.stop + 1):
        if args.target == "nu" and n % 6 not in (1, 5):
            continue
        if args.target == "distance" and (n % 2 == 0 or n < 5):
            continue
        if args.target == "classical-distance" and (n % 2 or n < 6):
            continue
        classical, witness, fam = driver(n, False, with_witness=True)
        quantum = "" if args.classical_only else driver(n, True)
        wit_str = ""
        if witness is not None:
            wit_str = ";".join(
                "%s=%s" % (name, q_to_str(v)) for name, v in zip(fam.names, witness)
            )
        lines.append("%d,%s,%s,%s" % (n, classical, quantum, wit_str))
    out.emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_extremal(args) -> int:
    out = _Output(args)
    n = args.n
    if args.family == "distill":
        A = invariants.extremal_distillation_enumerator(n)
        report = {
            "n": n,
            "family": "distill",
            "A": json.loads(A.to_json()),
            "A2": invariants.extremal_A2(n),
            "negative_degrees": [j for j, a in enumerate(A.coeffs) if a < 0],
            "realizable": all(a >= 0 for a in A.coeffs),
        }
    else:
        A = invariants.selfdual_extremal_enumerator(n)
        val = signed_eval(A, Q(1, 3))
        report = {
            "n": n,
            "family": "selfdual",
            "A": json.loads(A.to_json()),
            "signed_eval_pure": out.num(val),
            "nonneg_pure": val >= 0,
            "negative_degrees": [j for j, a in enumerate(A.coeffs) if a < 0],
        }
    out.emit(json.dumps(report, indent=2) + "\n")
    return EXIT_OK


def cmd_curve(args) -> int:
    out = _Output(args)
    with open(args.file) as fh:
        A = Enumerator.from_json(fh.read())
    if not A.is_even_only():
        raise MacWilliamsError("curve needs an even-only enumerator")
    if A.n % 6 not in (1, 5):
        raise MacWilliamsError("n must be congruent to +-1 mod 6")
    dmap = distill.build_map(A)
    rep = distill.threshold(dmap)
    lines = ["epsilon,epsilon_out"]
    for eps, val in distill.curve_rows(dmap, args.grid):
        lines.append("%s,%s" % (out.num(eps), out.num(val) if val is not None else ""))
    if rep.status == "ok":
        lines.append("threshold,%s" % rep.decimal(out.precision))
    else:
        lines.append("threshold,%s" % rep.status)
    out.emit("\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    out = _Output(args)
    import random

    budget = 4**args.budget
    code = _load_code(args.file)
    if code.n > oracle.DIM_LIMIT:
        raise MacWilliamsError("verify supports n <= %d" % oracle.DIM_LIMIT)
    rng = random.Random(args.seed)
    A = gf4.weight_enumerator(code, budget)
    signed = gf4.rall_signs(code, budget)
    proj = oracle.build_projector(signed, code.n, code.n - 2 * code.k)
    k = code.n - 2 * code.k
    checks = {"projector_valid": True, "mode": proj.mode}
    trials = []
    exact_mode = proj.mode == "exact"
    for _ in range(args.trials):
        rbar = Q(rng.randint(-5, 5), rng.randint(9, 18))
        eta = oracle.projection_prob(proj, oracle.t_direction(rbar), code.n)
        expect = signed_eval(A, rbar * rbar) / 2 ** (code.n - k)
        if exact_mode:
            ok = eta == expect
        else:
            ok = abs(eta - float(expect)) < 1e-10
        trials.append({"rbar2": q_to_str(rbar * rbar), "match": ok})
        if not ok:
            checks["projector_valid"] = False
    checks["trials"] = trials
    checks["all_match"] = all(t["match"] for t in trials)
    out.emit(json.dumps(checks, indent=2) + "\n")
    return EXIT_OK if checks["all_match"] else EXIT_MATH


def cmd_lattice(args) -> int:
    out = _Output(args)
    count, points, fam = bounds.lattice_search(args.n, use_quantum=args.quantum)
    lines = ["count,%d" % count, ",".join(fam.names)]
    for p in points:
        lines.append(",".join(q_to_str(v) for v in p))
    out.emit("\n".join(lines) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gf4msd", description=__doc__)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, with_grid=False):
        p.add_argument("--out", help="write output to this path instead of stdout")
        p.add_argument("--decimal", action="store_true", help="render decimals")
        p.add_argument("--precision", type=int, default=12, help="decimal digits")
        p.add_argument("--budget", type=int, default=18, help="max generator count k (4^k words)")
        if with_grid:
            p.add_argument("--grid", type=int, default=512, help="curve grid points")

    p = sub.add_parser("analyze", help="full report for one generator file")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("search", help="shorten every code in a database and rank thresholds")
    p.add_argument("file")
    common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="bound sweeps over a range of lengths")
    p.add_argument("--target", choices=("nu", "distance", "classical-distance"), required=True)
    p.add_argument("--start", type=int, required=True)
    p.add_argument("--stop", type=int, required=True)
    p.add_argument("--quantum", action="store_true", help="include quantum cuts (default)")
    p.add_argument("--classical-only", action="store_true")
    common(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("extremal", help="extremal enumerator of a family")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--family", choices=("distill", "selfdual"), required=True)
    common(p)
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("curve", help="distillation curve CSV from an enumerator JSON file")
    p.add_argument("file")
    common(p, with_grid=True)
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("verify", help="dense-oracle cross-check of a generator file")
    p.add_argument("file")
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=2024)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("lattice", help="count integral enumerators for one length")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--quantum", action="store_true")
    common(p)
    p.set_defaults(func=cmd_lattice)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except gf4.ParseError as exc:
        print("parse error: %s" % exc, file=sys.stderr)
        return EXIT_PARSE
    except gf4.BudgetExceededError as exc:
        print("budget exceeded: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except (MacWilliamsError, gf4.NotM3CodeError, distill.DegenerateMapError, ValueError) as exc:
        print("inconsistency: %s" % exc, file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
