"""Command-line front end.

Every subcommand prints one JSON report

    {"command", "inputs", "verdicts": [{"name", "value", "pass"}], "result", "timing"}

and exits 0 iff every verdict passes, 1 on a failed verdict or a computation
error (reported under "error"), 2 on a usage error.  Apart from "timing" the
output is a deterministic function of the arguments.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .cayley import (CAYLEY_CUBIC, CayleyParams, cayley_solution, cubic_residual, evaluate_cubic,
                     trace_field)
from .convolution import CoverCharacter, convolution_dimensions, induced_pushforward, middle_convolve
from .elliptic import LegendreCurve, flow_check, is_torsion_x, scalar_mul_x, torsion_x_poly
from .exactalg import QQ, CycNum
from .finitefield import GF
from .mcg import DEFAULT_BOUND, orbit
from .monodromy import (MonodromyTuple, finite_image, is_irreducible, star_check, trace_coordinates)
from .pipeline import roundtrip
from .poly import roots_in_field


@dataclass
class CommandReport:
    command: str
    inputs: dict
    verdicts: list = field(default_factory=list)
    result: dict = field(default_factory=dict)
    error: dict | None = None
    seconds: float = 0.0

    def verdict(self, name: str, value, passed: bool | None = None):
        if passed is None:
            passed = bool(value)
        self.verdicts.append({"name": name, "value": value, "pass": bool(passed)})

    @property
    def ok(self) -> bool:
        return self.error is None and all(v["pass"] for v in self.verdicts)

    def to_json(self) -> dict:
        out = {"command": self.command, "inputs": self.inputs, "verdicts": self.verdicts,
               "result": self.result}
        if self.error is not None:
            out["error"] = self.error
        out["timing"] = {"seconds": round(self.seconds, 6)}
        return out


def _load_tuple(path: str) -> MonodromyTuple:
    obj = json.loads(Path(path).read_text())
    if "tuple" in obj:
        obj = obj["tuple"]
    elif "result" in obj and "tuple" in obj["result"]:
        obj = obj["result"]["tuple"]
    return MonodromyTuple.from_json(obj)


def _tuple_summary(T: MonodromyTuple, rep: CommandReport):
    rep.result["tuple"] = T.to_json()
    if T.rank == 2:
        tc = trace_coordinates(T)
        rep.result["traces"] = {k: v.descend().to_json() for k, v in zip(tc.NAMES, tc.as_tuple())}


# subcommands -----------------------------------------------------------------


def cmd_cayley(args, rep: CommandReport):
    p = CayleyParams(Fraction(args.alpha), Fraction(args.beta))
    T = cayley_solution(p)
    _tuple_summary(T, rep)
    tf = trace_field(T)
    rep.result["trace_field"] = tf.to_json()
    rep.verdict("star", star_check(T))
    rep.verdict("irreducible", is_irreducible(T))
    rep.verdict("cubic_residual_zero", not cubic_residual(trace_coordinates(T)))


def cmd_pushforward(args, rep: CommandReport):
    chi = CoverCharacter(args.m, args.a, args.b)
    T = induced_pushforward(chi)
    _tuple_summary(T, rep)
    rep.result["exact_order"] = chi.exact_order
    img = finite_image(T, args.bound)
    rep.result["image"] = img.to_json()
    rep.verdict("rank", T.rank, T.rank == 2)
    rep.verdict("finite_image", not img.exceeded)


def cmd_convolve(args, rep: CommandReport):
    T = _load_tuple(args.tuple)
    c = CycNum.coerce(Fraction(args.c))
    rep.result["dimensions"] = convolution_dimensions(T, c)
    V = middle_convolve(T, c)
    _tuple_summary(V, rep)
    rep.verdict("rank", V.rank, V.rank > 0)


def cmd_star_check(args, rep: CommandReport):
    T = _load_tuple(args.tuple)
    _tuple_summary(T, rep)
    rep.verdict("star", star_check(T))


def cmd_trace_field(args, rep: CommandReport):
    T = _load_tuple(args.tuple)
    tf = trace_field(T)
    rep.result["trace_field"] = tf.to_json()
    rep.verdict("degree", tf.degree, True)


def cmd_orbit(args, rep: CommandReport):
    T = _load_tuple(args.seed)
    r = orbit(T, args.bound)
    rep.result["orbit"] = r.to_json(with_points=args.points)
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            csv.writer(fh).writerows(r.to_csv_rows())
    rep.verdict("closed_within_bound", not r.exceeded)


def _parse_point(text: str) -> tuple[CycNum, ...]:
    parts = [s.strip() for s in text.split(",")]
    if len(parts) != 3:
        raise argparse.ArgumentTypeError("point must be three comma-separated rationals")
    return tuple(CycNum.rational(Fraction(s)) for s in parts)


def cmd_cubic(args, rep: CommandReport):
    if args.tuple:
        T = _load_tuple(args.tuple)
        value = cubic_residual(trace_coordinates(T))
    else:
        value = evaluate_cubic(CAYLEY_CUBIC, *args.point)
    rep.result["residual"] = value.descend().to_json()
    rep.verdict("on_cubic", not value)


def cmd_flow_check(args, rep: CommandReport):
    r = flow_check(Fraction(args.lam), args.p, args.field, args.samples, args.seed)
    rep.result["flow"] = r.to_json()
    rep.verdict("diagram", f"{r.diagram_ok}/{r.samples}", r.diagram_ok == r.samples)
    rep.verdict("fixes_branch_points", r.fixes_branch_points)
    rep.verdict("degree", r.degree, r.degree == args.p**2)
    if r.reduction_agrees is not None:
        rep.verdict("reduction_agrees", r.reduction_agrees)


def cmd_torsion_x(args, rep: CommandReport):
    E = LegendreCurve(QQ, Fraction(args.lam))
    T = torsion_x_poly(E, args.m)
    rep.result["poly"] = [str(c) for c in T.c]
    rep.result["degree"] = T.degree
    if args.field:
        F2 = GF(args.field, 2)
        E2 = E.over(F2)
        roots = roots_in_field(T.map_coeffs(F2), seed=args.seed)
        killed = sum(scalar_mul_x(E2, args.m, r) is None for r in roots)
        on_curve = sum(E2.lift_x(r) is not None for r in roots)
        orders = sorted({is_torsion_x(E2, r, args.m).order for r in roots}, key=lambda o: (o is None, o))
        rep.result["field"] = {"q": args.field, "roots": len(roots), "points_over_Fq2": on_curve,
                               "killed": killed, "orders": orders}
        rep.verdict("roots_tested", len(roots), len(roots) > 0)
        rep.verdict("killed", f"{killed}/{len(roots)}", killed == len(roots))
    rep.verdict("squarefree_degree", T.degree, T.degree > 0)


def cmd_roundtrip(args, rep: CommandReport):
    r = roundtrip(CoverCharacter(args.m, args.a, args.b), args.bound)
    _tuple_summary(r.convolved, rep)
    rep.result["character"] = r.character.to_json()
    rep.result["match"] = None if r.match is None else r.match.to_json()
    rep.result["trace_field"] = r.trace_field.to_json()
    rep.verdict("rank", r.convolved.rank, r.convolved.rank == 2)
    rep.verdict("star", r.star)
    rep.verdict("irreducible", r.irreducible)
    rep.verdict("matched", r.match is not None)
    rep.verdict("trace_field_degree", r.trace_field.degree, r.trace_field.degree == r.expected_degree)


COMMANDS = {
    "cayley": cmd_cayley,
    "pushforward": cmd_pushforward,
    "convolve": cmd_convolve,
    "star-check": cmd_star_check,
    "trace-field": cmd_trace_field,
    "orbit": cmd_orbit,
    "cubic": cmd_cubic,
    "flow-check": cmd_flow_check,
    "torsion-x": cmd_torsion_x,
    "roundtrip": cmd_roundtrip,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cayleymc", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cayley", help="Cayley tuple for rational (alpha, beta)")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)

    for name, helptext in (("pushforward", "induced tuple of a character of H_1(E)"),
                           ("roundtrip", "pushforward, convolve, star-check, match, trace-field")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--a", type=int, required=True)
        p.add_argument("--b", type=int, required=True)
        p.add_argument("--bound", type=int, default=1000 if name == "pushforward" else 30,
                       help="image-size bound (pushforward) or match denominator bound (roundtrip)")

    p = sub.add_parser("convolve", help="middle convolution of a tuple file")
    p.add_argument("--tuple", required=True)
    p.add_argument("--c", default="-1")

    for name in ("star-check", "trace-field"):
        p = sub.add_parser(name)
        p.add_argument("--tuple", required=True)

    p = sub.add_parser("orbit", help="pure mapping class orbit on trace coordinates")
    p.add_argument("--seed", required=True)
    p.add_argument("--bound", type=int, default=DEFAULT_BOUND)
    p.add_argument("--csv", help="write orbit points to this CSV file")
    p.add_argument("--points", action="store_true", help="include orbit points in the JSON")

    p = sub.add_parser("cubic", help="evaluate the Cayley cubic")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--tuple")
    g.add_argument("--point", type=_parse_point, help="x,y,z as rationals")

    p = sub.add_parser("flow-check", help="g(x(P)) = x([p]P) on sampled points of E(F_{q^2})")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--field", type=int, required=True)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("torsion-x", help="torsion x-polynomial over Q, optionally tested mod q")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--field", type=int)
    p.add_argument("--seed", type=int, default=0)
    return ap


def run(argv=None) -> tuple[CommandReport, int]:
    args = build_parser().parse_args(argv)
    inputs = {k: (v if isinstance(v, (int, str, bool, type(None))) else [str(x) for x in v])
              for k, v in sorted(vars(args).items()) if k != "command"}
    rep = CommandReport(args.command, inputs)
    t0 = time.perf_counter()
    try:
        COMMANDS[args.command](args, rep)
    except (ArithmeticError, ValueError, TypeError, OSError, KeyError) as exc:
        rep.error = {"type": type(exc).__name__, "message": str(exc)}
    rep.seconds = time.perf_counter() - t0
    return rep, 0 if rep.ok else 1


def main(argv=None) -> int:
    rep, code = run(argv)
    json.dump(rep.to_json(), sys.stdout, indent=2)
    sys.stdout.write("\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
