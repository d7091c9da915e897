"""Command-line front end: ``python -m inose {compute,verify-paper,check-isogeny}``.

Exit codes: 0 success, 2 parse error, 3 isogeny invalid, 4 pipeline error,
5 height mismatch.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from dataclasses import dataclass
from pathlib import Path

from .algebra import RatFunc, UniPoly, rational, rational_str
from .catalog import EXAMPLES, WorkedExample, example
from .core import (InoseData, PipelineRun, build_cubic, inose_coefficients, origin_bar,
                   run_pipeline, split_divisor)
from .elliptic import ECPoint, EllipticCurve, RationalMap, verify_isogeny
from .errors import HeightMismatch, InoseError, IsogenyInvalid
from .plane import ProjPoint, TriPoly

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_ISOGENY = 3
EXIT_PIPELINE = 4
EXIT_HEIGHT = 5

log = logging.getLogger("inose")


class ParseError(ValueError):
    pass


@dataclass(frozen=True)
class JobSpec:
    e1: EllipticCurve
    e2: EllipticCurve
    phi: RationalMap


def _coeff_list(obj, where):
    if not isinstance(obj, list) or not obj:
        raise ParseError(f"{where}: expected a non-empty array of coefficients")
    out = []
    for i, c in enumerate(obj):
        if isinstance(c, bool) or not isinstance(c, (int, str)):
            raise ParseError(f"{where}[{i}]: coefficients must be integers or 'p/q' strings")
        try:
            out.append(rational(c))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where}[{i}]: cannot read {c!r} as a rational ({exc})") from None
    return out


def _curve(obj, where) -> EllipticCurve:
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object with a2, a4, a6")
    try:
        vals = [obj[k] for k in ("a2", "a4", "a6")]
    except KeyError as exc:
        raise ParseError(f"{where}: missing field {exc}") from None
    return EllipticCurve(*(_coeff_list([v], f"{where}.{k}")[0] for k, v in zip(("a2", "a4", "a6"), vals)))


def parse_job(document: dict) -> JobSpec:
    """Read the input document ``{E1, E2, phi}`` (coefficient arrays ascending)."""
    if not isinstance(document, dict):
        raise ParseError("input must be a JSON object")
    for key in ("E1", "E2", "phi"):
        if key not in document:
            raise ParseError(f"missing field {key!r}")
    phi = document["phi"]
    if not isinstance(phi, dict):
        raise ParseError("phi: expected an object")
    fields = {}
    for key in ("x_num", "x_den", "y_num", "y_den"):
        if key not in phi:
            raise ParseError(f"phi: missing field {key!r}")
        fields[key] = UniPoly(_coeff_list(phi[key], f"phi.{key}"), "x1")
    degree = phi.get("degree")
    if isinstance(degree, bool) or not isinstance(degree, int) or degree < 1:
        raise ParseError("phi.degree: expected a positive integer")
    return JobSpec(_curve(document["E1"], "E1"), _curve(document["E2"], "E2"),
                   RationalMap(degree=degree, **fields))


def load_job(path) -> JobSpec:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    try:
        document = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc})") from None
    return parse_job(document)


def job_document(e1: EllipticCurve, e2: EllipticCurve, phi: RationalMap) -> dict:
    """Inverse of :func:`parse_job`."""
    def curve(e):
        return {k: rational_str(v) for k, v in zip(("a2", "a4", "a6"), e.coefficients())}
    return {
        "E1": curve(e1), "E2": curve(e2),
        "phi": {"x_num": poly_json(phi.x_num), "x_den": poly_json(phi.x_den),
                "y_num": poly_json(phi.y_num), "y_den": poly_json(phi.y_den),
                "degree": phi.degree},
    }


# ---------------------------------------------------------------------------
# serialization


def poly_json(p: UniPoly):
    """Ascending coefficients; nested polynomials become nested arrays."""
    return [poly_json(c) if isinstance(c, UniPoly) else rational_str(c) for c in p.coeffs]


def ratfunc_json(f: RatFunc) -> dict:
    return {"num": poly_json(f.num), "den": poly_json(f.den), "text": str(f)}


def ratfunc_from_json(obj, var: str = "s") -> RatFunc:
    return RatFunc(UniPoly(_coeff_list(obj["num"], "num"), var),
                   UniPoly(_coeff_list(obj["den"], "den"), var))


def point_json(p: ProjPoint) -> dict:
    return {name: poly_json(c) for name, c in zip(("x1", "x2", "z"), p.coords)}


def tripoly_json(q: TriPoly) -> dict:
    terms = {f"{i},{j},{k}": poly_json(c) for (i, j, k), c in sorted(q.poly_coefficients().items())}
    return {"degree": q.degree, "terms": terms, "text": str(q)}


def ecpoint_json(p: ECPoint) -> dict:
    if p.is_infinity:
        return {"infinity": True}
    return {"X": ratfunc_json(p.x), "Y": ratfunc_json(p.y)}


def model_json(data: InoseData) -> dict:
    return {"A": rational_str(data.A), "B": rational_str(data.B),
            "delta1": rational_str(data.delta1), "delta2": rational_str(data.delta2)}


def result_document(run: PipelineRun) -> dict:
    s = run.section
    return {
        "model": model_json(run.data),
        "section": {"X": ratfunc_json(s.X), "Y": ratfunc_json(s.Y)},
        "height": rational_str(s.height),
        "intersection_with_zero": s.intersection,
        "degree": run.phi.degree,
    }


def write_intermediates(run: PipelineRun, directory) -> None:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    stages = {
        "01_model": model_json(run.data),
        "02_cubic": tripoly_json(run.cubic),
        "03_origin": {"O": point_json(run.origin), "O_bar": point_json(run.origin_bar)},
        "04_split": {"r": run.pair.r, "p_plus": poly_json(run.pair.p_plus),
                     "p_minus": poly_json(run.pair.p_minus)},
        "05_fitted": {"plus": tripoly_json(run.fitted[1]), "minus": tripoly_json(run.fitted[-1])},
        "06_ninth": {"plus": point_json(run.ninth[1]), "minus": point_json(run.ninth[-1])},
        "07_lifted": {"plus": ecpoint_json(run.lifted[1]), "minus": ecpoint_json(run.lifted[-1])},
        "08_section": result_document(run),
    }
    for name, doc in stages.items():
        (out / f"{name}.json").write_text(json.dumps(doc, indent=1) + "\n")


# ---------------------------------------------------------------------------
# commands


def _fail(code: int, exc: Exception) -> int:
    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    return code


def cmd_compute(args) -> int:
    try:
        job = load_job(args.input)
    except ParseError as exc:
        return _fail(EXIT_PARSE, exc)
    try:
        run = run_pipeline(job.e1, job.e2, job.phi)
    except IsogenyInvalid as exc:
        return _fail(EXIT_ISOGENY, exc)
    except InoseError as exc:
        return _fail(EXIT_PIPELINE, exc)
    if args.emit_intermediates:
        write_intermediates(run, args.emit_intermediates)
    text = json.dumps(result_document(run), indent=1) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    if run.section.height != 2 * job.phi.degree:
        return _fail(EXIT_HEIGHT, HeightMismatch(
            f"height {run.section.height} != 2 * {job.phi.degree}"))
    return EXIT_OK


def verify_example(ex: WorkedExample) -> list:
    """Run the pipeline on an embedded example; one ``(stage, ok, detail)`` per stage."""
    report = []

    def stage(name, ok, detail=""):
        report.append((name, bool(ok), detail))

    ok = verify_isogeny(ex.e1, ex.e2, ex.phi).passed
    stage("isogeny", ok)
    data = inose_coefficients(ex.e1, ex.e2)
    stage("coefficients", data == InoseData(ex.A, ex.B, ex.delta1, ex.delta2), str(data))
    try:
        pair = split_divisor(ex.e1, ex.e2, ex.phi)
        stage("p+", _proportional(pair.p_plus, ex.p_plus))
        stage("p-", _proportional(pair.p_minus, ex.p_plus.map_coeffs(lambda c: c.negate_var())))
        if ex.origin_bar is not None:
            stage("O_bar", origin_bar(build_cubic(ex.e1, ex.e2)) == ex.origin_bar)
        run = run_pipeline(ex.e1, ex.e2, ex.phi)
    except InoseError as exc:
        stage("pipeline", False, f"{type(exc).__name__}: {exc}")
        return report
    stage("Q+", run.ninth[1] == ex.ninth_plus)
    stage("Q-", run.ninth[-1] == ex.ninth_plus.negate_var())
    stage("X", run.section.X == ex.section_x)
    stage("Y", run.section.Y == ex.section_y)
    stage("height", run.section.height == ex.height, str(run.section.height))
    return report


def _proportional(a: UniPoly, b: UniPoly) -> bool:
    if a.degree != b.degree or not a:
        return False
    ratio = RatFunc(a.lc) / RatFunc(b.lc)
    if not ratio.is_constant():
        return False
    return all(RatFunc(x) == RatFunc(y) * ratio for x, y in zip(a.coeffs, b.coeffs))


def cmd_verify_paper(args) -> int:
    report = verify_example(example(args.example))
    width = max(len(name) for name, _, _ in report)
    for name, ok, detail in report:
        line = f"{name:<{width}}  {'pass' if ok else 'FAIL'}"
        print(f"{line}  {detail}" if detail and not ok else line)
    return EXIT_OK if all(ok for _, ok, _ in report) else EXIT_PIPELINE


def cmd_check_isogeny(args) -> int:
    try:
        job = load_job(args.input)
    except ParseError as exc:
        return _fail(EXIT_PARSE, exc)
    report = verify_isogeny(job.e1, job.e2, job.phi)
    try:
        j1, j2 = job.e1.j_invariant, job.e2.j_invariant
        distinct = j1 != j2
        jline = f"j(E1) = {rational_str(j1)}, j(E2) = {rational_str(j2)}"
    except ZeroDivisionError:
        distinct, jline = False, "singular input curve"
    print(f"identity      {'pass' if report.identity_holds else 'FAIL'}")
    print(f"degree        {'pass' if report.degree_matches else 'FAIL'}")
    print(f"distinct j    {'pass' if distinct else 'FAIL'}  {jline}")
    for problem in report.shape_problems:
        print(f"note: {problem}")
    return EXIT_OK if report.passed and distinct else EXIT_ISOGENY


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="python -m inose",
                                     description="Sections of Inose surfaces from isogenies.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute the section attached to an isogeny")
    p.add_argument("--input", required=True)
    p.add_argument("--output")
    p.add_argument("--emit-intermediates", metavar="DIR")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify-paper", help="rerun an embedded worked example")
    p.add_argument("--example", required=True, choices=EXAMPLES)
    p.set_defaults(func=cmd_verify_paper)

    p = sub.add_parser("check-isogeny", help="verify the isogeny identity and j-invariants")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_check_isogeny)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(message)s")
    return args.func(args)
