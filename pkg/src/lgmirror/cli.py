"""Command-line interface: print-w, verify, critical.

Reports are deterministic: identical configuration (including seed) gives
byte-identical JSON.  Random exact sample points are drawn through
splitmix64 with numerators in [-9, 9] \\ {0} and denominators in [1, 9];
points hitting a divisor are redrawn and the redraw count is reported.
Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from lgmirror import jacobi as jb
from lgmirror import qchevalley as qc
from lgmirror import superpotential as sp
from lgmirror.scalars import EXACT

SCHEMA = "lg-mirror/1"


@dataclass
class RunConfig:
    m: int
    q: Fraction
    seed: int
    trials: int
    fmt: str
    tolerance: float
    out: str | None


def rational_stream(seed: int):
    """Small random rationals: numerator in [-9,9]\\{0}, denominator in [1,9]."""
    gen = jb.splitmix64(seed)
    while True:
        num = next(gen) % 18 - 9
        if num >= 0:
            num += 1
        den = next(gen) % 9 + 1
        yield Fraction(num, den)


def sample_b(m: int, stream) -> list[Fraction]:
    n = m * (m + 1) // 2
    while True:
        b = [next(stream) for _ in range(n)]
        if all(b):
            return b


def _emit(payload: dict, out: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2)
    if out:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- print-w ------------------------------------------------------------------


def cmd_print_w(config: RunConfig) -> int:
    terms = sp.symbolic_W(config.m)
    if config.fmt in ("text", "latex"):
        output = sp.render_text(terms) if config.fmt == "text" else sp.render_latex(terms)
        if config.out:
            with open(config.out, "w") as fh:
                fh.write(output + "\n")
        else:
            print(output)
    else:
        _emit({"schema": SCHEMA, "m": config.m, "terms": sp.render_json_terms(terms)}, config.out)
    return 0


# -- verify -------------------------------------------------------------------


def _suite_records(suite: str, m: int, q: Fraction, trials: int, seed: int) -> tuple[list[dict], int]:
    """Run one identity suite at `trials` random exact points; returns
    (records, redraw count)."""
    ring = EXACT
    stream = rational_stream(seed)
    records: list[dict] = []
    redraws = 0

    def draw():
        nonlocal redraws
        while True:
            b = sample_b(m, stream)
            bring = sp.ring_vector(b, ring)
            try:
                p = sp.plucker_vector(bring, m, ring)
                sp.eval_W(ring.from_fraction(q), p, m, ring)
            except sp.DivisorError:
                redraws += 1
                continue
            return b, bring

    if suite == "theorem-w":
        for k in range(trials):
            b, bring = draw()
            rep = sp.verify_theorem_w(m, ring.from_fraction(q), bring, ring)
            records.append({"instance": k, "b": [str(x) for x in b], "ok": rep.ok, "detail": rep.detail})
    elif suite == "minors":
        for k in range(trials):
            b, bring = draw()
            for j in range(2, m + 1):
                rep = sp.verify_sym_to_minor(m, j, bring, ring)
                records.append({"instance": k, "j": j, "b": [str(x) for x in b], "ok": rep.ok, "detail": rep.detail})
    elif suite == "em":
        for k in range(trials):
            b, bring = draw()
            rep = sp.verify_em_formula(m, bring, ring)
            records.append({"instance": k, "b": [str(x) for x in b], "ok": rep.ok, "detail": rep.detail})
    elif suite == "subword":
        from lgmirror import partitions as pt

        for k in range(trials):
            b, bring = draw()
            ok = True
            detail = ""
            for lam in pt.all_strict_partitions(m):
                lhs = sp.plucker_spin(lam, bring, m, ring)
                rhs = sp.plucker_subword(lam, bring, m, ring)
                if lhs != rhs:
                    ok = False
                    detail = f"p_{lam.render()}: spin {lhs} != subword {rhs}"
                    break
            records.append({"instance": k, "b": [str(x) for x in b], "ok": ok, "detail": detail})
    elif suite == "fj":
        for k in range(trials):
            b, bring = draw()
            for j in range(1, m):
                rep = sp.verify_fj_minors(m, j, bring, ring)
                records.append({"instance": k, "j": j, "b": [str(x) for x in b], "ok": rep.ok, "detail": rep.detail})
    elif suite == "pi-map":
        from lgmirror import clifford as cl

        for j in range(2, m + 1):
            okD = cl.pi_map(cl.build_D(j, m)) == cl.wedge_v(j, m)
            okN = cl.pi_map(cl.build_N(j, m)) == cl.wedge_v_plus(j, m)
            records.append({"j": j, "ok": okD and okN, "detail": "" if okD and okN else f"pi image wrong (D ok: {okD}, N ok: {okN})"})
    elif suite == "chevalley":
        ok = qc.verify_relation_l1(m)
        records.append({"relation": "l=1", "ok": ok, "detail": "" if ok else "sigma_1*sigma_m != sigma_{m,1} + q"})
        bad = qc.grading_violations(m)
        records.append({"relation": "grading+positivity", "ok": not bad, "detail": "; ".join(bad)})
    else:
        raise ValueError(f"unknown suite {suite}")
    return records, redraws


def _suite_extras(suite: str, m: int) -> dict:
    if suite == "chevalley":
        return {
            "sigma1_table": qc.multiplication_table(m),
            "conventions": "quantum terms use n_alpha = (m+1) alpha^vee(omega_m), "
            "the pairing of the curve degree with the anti-canonical class",
        }
    return {}


def cmd_verify(config: RunConfig, suite: str) -> int:
    records, redraws = _suite_records(suite, config.m, config.q, config.trials, config.seed)
    ok = all(r["ok"] for r in records)
    payload = {
        "schema": SCHEMA,
        "suite": suite,
        "m": config.m,
        "q": str(config.q),
        "trials": config.trials,
        "seed": config.seed,
        "divisor_redraws": redraws,
        "ok": ok,
        "records": records,
    }
    payload.update(_suite_extras(suite, config.m))
    if not ok:
        first_bad = next(r for r in records if not r["ok"])
        payload["counterexample"] = first_bad
    _emit(payload, config.out)
    return 0 if ok else 1


# -- critical -----------------------------------------------------------------


def cmd_critical(config: RunConfig) -> int:
    if config.q == 0:
        print("error: critical point search needs q != 0", file=sys.stderr)
        return 2
    report = jb.critical_report(config.m, complex(config.q), trials=config.trials, seed=config.seed)
    report["tolerance"] = config.tolerance
    ok = (
        report["spectrum_match"]["count"] == report["spectrum_match"]["expected_count"]
        and report["spectrum_match"]["max_rel_err"] < config.tolerance
    )
    report["ok"] = ok
    _emit(report, config.out)
    return 0 if ok else 1


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lgmirror",
        description="Landau-Ginzburg superpotential of LG(m): construction and exact verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, with_q=True):
        p.add_argument("--m", type=int, required=True, help="rank of the Lagrangian Grassmannian, m >= 2")
        if with_q:
            q_group = p.add_mutually_exclusive_group()
            q_group.add_argument("--q", type=_fraction, default=Fraction(1), help="quantum parameter (rational)")
            q_group.add_argument("--t", type=float, default=None, help="use q = exp(t)")
        p.add_argument("--trials", type=int, default=25)
        p.add_argument("--seed", type=int, default=1)
        p.add_argument("--tolerance", type=float, default=1e-6)
        p.add_argument("--out", type=str, default=None, help="write the report to FILE")

    p_print = sub.add_parser("print-w", help="emit the symbolic superpotential")
    p_print.add_argument("--m", type=int, required=True)
    p_print.add_argument("--format", choices=("text", "latex", "json"), default="text")
    p_print.add_argument("--out", type=str, default=None)

    p_verify = sub.add_parser("verify", help="run an exact identity suite")
    p_verify.add_argument(
        "suite", choices=("minors", "theorem-w", "pi-map", "subword", "chevalley", "em", "fj")
    )
    common(p_verify)

    p_crit = sub.add_parser("critical", help="critical points and spectrum comparison")
    common(p_crit)
    return parser


def config_from_args(args) -> RunConfig:
    q = getattr(args, "q", Fraction(1))
    if getattr(args, "t", None) is not None:
        import math

        q = Fraction(math.exp(args.t)).limit_denominator(10**12)
    return RunConfig(
        m=args.m,
        q=q,
        seed=getattr(args, "seed", 1),
        trials=getattr(args, "trials", 25),
        fmt=getattr(args, "format", "text"),
        tolerance=getattr(args, "tolerance", 1e-6),
        out=args.out,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "print-w" and args.m < 2:
        print("error: need m >= 2", file=sys.stderr)
        return 2
    config = config_from_args(args)
    try:
        if args.command == "print-w":
            return cmd_print_w(config)
        if args.command == "verify":
            return cmd_verify(config, args.suite)
        return cmd_critical(config)
    except (ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
