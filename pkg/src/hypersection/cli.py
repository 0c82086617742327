"""Command line driver: ``hypersection classify|fermat|enumerate``.

Exit codes: 0 classified, 2 hypothesis failed, 3 input or validation error,
4 resource cap hit or oracle disagreement.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from .classifier import LABEL_WORDING, ClassificationReport, ForcingDatum, Label, OracleDisagreementError, classify
from .cone import ConeError, ConeSurface, build_cone
from .groebner import NonHomogeneousError, ResourceLimitError
from .parse import PolynomialSyntaxError, parse_polynomial
from .polycore import DEFAULT_ORDER, MonomialOrder, format_polynomial

EXIT_OK = 0
EXIT_HYPOTHESIS_FAILED = 2
EXIT_INPUT_ERROR = 3
EXIT_INTERNAL = 4

SCHEMA_VERSION = 1
SCHEMA_PATH = Path(__file__).with_name("report.schema.json")

REQUIRED_KEYS = ("h", "f1", "f2", "f0")


class ProblemFileError(ValueError):
    pass


class MissingKeyError(ProblemFileError):
    def __init__(self, key: str):
        self.key = key
        super().__init__(f"missing key: {key}")


@dataclass
class ProblemOptions:
    order: MonomialOrder = DEFAULT_ORDER
    oracle: bool = False


def _parse_bool(text: str) -> bool:
    v = text.strip().lower()
    if v in ("1", "true", "yes", "on"):
        return True
    if v in ("0", "false", "no", "off"):
        return False
    raise ProblemFileError(f"not a boolean: {text!r}")


def read_problem_text(text: str) -> tuple[dict[str, str], ProblemOptions]:
    polys: dict[str, str] = {}
    options = ProblemOptions()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if "=" not in line:
            raise ProblemFileError(f"line {lineno}: expected 'key = value'")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in REQUIRED_KEYS:
            if key in polys:
                raise ProblemFileError(f"line {lineno}: duplicate key {key}")
            polys[key] = value
        elif key == "order":
            options.order = MonomialOrder.parse(value)
        elif key == "oracle":
            options.oracle = _parse_bool(value)
        else:
            raise ProblemFileError(f"line {lineno}: unknown key {key!r}")
    for key in REQUIRED_KEYS:
        if key not in polys:
            raise MissingKeyError(key)
    return polys, options


def load_problem(path, order: MonomialOrder | None = None) -> tuple[ConeSurface, ForcingDatum, ProblemOptions]:
    """Parse a problem file, validate the cone and compute the datum degrees.

    ``order`` overrides the file's ``order`` setting.
    """
    text = Path(path).read_text(encoding="utf-8")
    sources, options = read_problem_text(text)
    if order is not None:
        options.order = order
    polys = {k: parse_polynomial(v, order=options.order) for k, v in sources.items()}
    cone = build_cone(polys["h"], options.order)
    datum = ForcingDatum.from_polynomials(polys["f1"], polys["f2"], polys["f0"])
    return cone, datum, options


def fermat_problem(r: int, s: int, order: MonomialOrder = DEFAULT_ORDER) -> tuple[ConeSurface, ForcingDatum]:
    """Cone x^r + y^r + z^r with forcing data (x, y, z^s)."""
    if r < 4 or not 3 <= s < r:
        raise ValueError(f"need r >= 4 and 3 <= s < r, got r={r}, s={s}")
    h = parse_polynomial(f"x^{r} + y^{r} + z^{r}", order=order)
    cone = build_cone(h, order)
    datum = ForcingDatum.from_polynomials(
        parse_polynomial("x", order=order), parse_polynomial("y", order=order), parse_polynomial(f"z^{s}", order=order)
    )
    return cone, datum


def fermat_instances(max_r: int) -> list[tuple[int, int]]:
    if max_r < 4:
        raise ValueError(f"max r must be at least 4, got {max_r}")
    return [(r, s) for r in range(4, max_r + 1) for s in range(3, r)]


# ---------------------------------------------------------------------------
# report rendering
# ---------------------------------------------------------------------------


def report_to_dict(report: ClassificationReport) -> dict:
    c = report.cone.z_lead_coefficient
    return {
        "schema": SCHEMA_VERSION,
        "label": report.label.value,
        "failed_condition": report.failed_condition,
        "conditions": {"c1": report.condition1, "c2": report.condition2},
        "delta": report.delta,
        "self_intersection": report.self_intersection,
        "deg_hy": report.deg_hy,
        "normal_bundle_exponent": report.normal_bundle_exponent,
        "det_exponent_at_m": {"m": report.m, "k": report.det_exponent},
        "forcing_equation": report.forcing_equation,
        "cone": {
            "h": format_polynomial(report.cone.h),
            "r": report.cone.r,
            "c": str(c),
            "smooth": report.cone.smooth_away_from_vertex,
        },
    }


def render_text(report: ClassificationReport) -> str:
    label = LABEL_WORDING[report.label]
    if report.label is Label.HYPOTHESIS_FAILED:
        label = f"{label}({report.failed_condition})"
    lines = [
        f"cone: h = {format_polynomial(report.cone.h)}  (r = {report.cone.r}, c = {report.cone.z_lead_coefficient}, "
        f"smooth = {str(report.cone.smooth_away_from_vertex).lower()})",
        f"forcing equation: {report.forcing_equation}",
        f"degrees: d1 = {report.datum.d1}, d2 = {report.datum.d2}, d0 = {report.datum.d0}",
        f"condition 1 (V(f1, f2) = P): {'holds' if report.condition1 else 'fails'}",
        f"condition 2 (f0 not in (f1, f2) at P): {'holds' if report.condition2 else 'fails'}",
        f"delta = {report.delta}",
        f"deg H_Y = {report.deg_hy}",
        f"self-intersection = {report.self_intersection}",
        f"normal bundle exponent = {report.normal_bundle_exponent}",
        f"kernel bundle exponent (m = {report.m}) = {report.kernel_exponent}",
        f"det exponent (m = {report.m}) = {report.det_exponent}",
        f"label: {label}",
    ]
    lines.extend(f"note: {n}" for n in report.notes)
    return "\n".join(lines) + "\n"


def emit_report(report: ClassificationReport, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(report_to_dict(report), indent=2, sort_keys=True) + "\n"
    if fmt == "text":
        return render_text(report)
    raise ValueError(f"unknown format {fmt!r}")


def exit_code_for(report: ClassificationReport) -> int:
    return EXIT_HYPOTHESIS_FAILED if report.label is Label.HYPOTHESIS_FAILED else EXIT_OK


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_classify(args, out) -> int:
    order = MonomialOrder.parse(args.order) if args.order else None
    cone, datum, options = load_problem(args.file, order)
    report = classify(cone, datum, oracle_check=args.oracle or options.oracle, order=options.order)
    out.write(emit_report(report, "json" if args.json else "text"))
    return exit_code_for(report)


def cmd_fermat(args, out) -> int:
    cone, datum = fermat_problem(args.r, args.s)
    report = classify(cone, datum)
    out.write(emit_report(report, "json" if args.json else "text"))
    return exit_code_for(report)


def enumerate_fermat(max_r: int) -> list[tuple[int, int, ClassificationReport]]:
    results = []
    for r, s in fermat_instances(max_r):
        cone, datum = fermat_problem(r, s)
        results.append((r, s, classify(cone, datum)))
    return results


def cmd_enumerate(args, out) -> int:
    results = enumerate_fermat(args.max_r)
    if args.json:
        payload = [{"r": r, "s": s, "report": report_to_dict(rep)} for r, s, rep in results]
        out.write(json.dumps(payload, indent=2, sort_keys=True) + "\n")
    else:
        for r, s, rep in results:
            out.write(f"r={r} s={s} delta={rep.delta} self_intersection={rep.self_intersection} label={rep.label.value}\n")
        out.write(f"{len(results)} instances\n")
    return max((exit_code_for(rep) for _, _, rep in results), default=EXIT_OK)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypersection", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify the forcing datum in a problem file")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--oracle", action="store_true", help="cross-check membership with the linear-algebra oracle")
    p.add_argument("--order", choices=["grevlex", "grlex", "lex"])
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("fermat", help="classify x^r+y^r+z^r with (x, y, z^s)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_fermat)

    p = sub.add_parser("enumerate", help="classify every Fermat instance with 4 <= r <= max-r, 3 <= s < r")
    p.add_argument("--max-r", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_enumerate)
    return parser


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (ResourceLimitError, OracleDisagreementError) as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INTERNAL
    except (
        OSError,
        ProblemFileError,
        PolynomialSyntaxError,
        ConeError,
        NonHomogeneousError,
        ValueError,
    ) as exc:
        err.write(f"error: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
