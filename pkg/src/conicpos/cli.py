"""Command-line front end.

Conics are given as the six numbers of ``Ax^2 + Bxy + Cy^2 + Dx + Ey + F = 0``
in that order (the matrix halves B, D and E). Rationals may be written
``p/q`` or as decimals; both are read exactly unless ``--float`` is given.

Exit codes: 0 success, 2 parse error, 3 degenerate input, 4 indeterminate
sign (float mode), 5 role mismatch, 6 oracle disagreement, 7 no case
matched, 8 I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Optional

from . import classify_hyperbola, classify_parabola
from .conic import Conic, ConicClass, classify_type, conic_from_equation, normalize
from .errors import (
    ConicError, DegenerateInput, IndeterminateSign, NoCaseMatched, NotFinite, ParseError,
    PatternUnmatched, RoleMismatch,
)
from .numeric import Sign, resolve_tol

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_DEGENERATE = 3
EXIT_INDETERMINATE = 4
EXIT_ROLE = 5
EXIT_ORACLE = 6
EXIT_NOCASE = 7
EXIT_IO = 8

MODES = ("auto", "parabola-ellipse", "hyperbola-ellipse")


@dataclass
class Request:
    conic_a: tuple
    conic_b: tuple
    mode: str = "auto"
    arithmetic: str = "exact"
    tol: Optional[float] = None
    verify: bool = False
    svg_path: Optional[str] = None
    sweep_to: Optional[tuple] = None  # (conic_a, conic_b) at t = 1
    steps: int = 10
    counterexample_log: Optional[str] = None
    timing: bool = False


@dataclass
class Report:
    caseNumber: Optional[int]
    caseName: Optional[str]
    mode: str = ""
    arithmetic: str = ""
    branch: Optional[str] = None
    signTrace: list = field(default_factory=list)
    unknown: list = field(default_factory=list)
    reason: str = ""
    oracleVerdict: Optional[dict] = None
    timingMicros: Optional[int] = None
    t: Optional[str] = None
    error: Optional[str] = None

    def to_json(self) -> str:
        return json.dumps({"kind": "report", **asdict(self)}, sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "Report":
        d = json.loads(line)
        if d.pop("kind", None) != "report":
            raise ParseError("not a report line")
        return cls(**d)

    def human(self) -> str:
        head = f"t={self.t}: " if self.t is not None else ""
        if self.error:
            return f"{head}{self.error}: {self.reason}"
        if self.caseNumber == 0:
            return f"{head}Indeterminate: {self.reason}"
        lines = [f"{head}case {self.caseNumber}: {self.caseName} (conditions {self.branch})"]
        if self.signTrace:
            lines.append("  signs: " + " ".join(f"{k}={v}" for k, v in self.signTrace))
        if self.oracleVerdict is not None:
            lines.append("  oracle: " + json.dumps(self.oracleVerdict, sort_keys=True))
        if self.timingMicros is not None:
            lines.append(f"  time: {self.timingMicros} us")
        return "\n".join(lines)


def parse_reports(text: str) -> list:
    """Read back ``--json`` output: reports plus the optional sweep summary dict."""
    out = []
    for line in text.splitlines():
        if not line.strip():
            continue
        d = json.loads(line)
        out.append(Report.from_json(line) if d.get("kind") == "report" else d)
    return out


# -- parsing ---------------------------------------------------------------

def parse_scalar(text: str, arithmetic: str):
    try:
        q = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a number: {text!r}") from exc
    return float(q) if arithmetic == "float" else q


def parse_conic(text: str, arithmetic: str = "exact") -> tuple:
    parts = text.split()
    if len(parts) != 6:
        raise ParseError(f"expected six coefficients, got {len(parts)}: {text!r}")
    return tuple(parse_scalar(p, arithmetic) for p in parts)


def read_pair(path: str, arithmetic: str) -> tuple:
    """Two conics from a file, one per line; blank lines and ``#`` comments skipped."""
    try:
        with open(path, encoding="utf-8") as fh:
            lines = [ln.split("#")[0] for ln in fh]
    except OSError as exc:
        raise OSError(f"cannot read {path}: {exc}") from exc
    lines = [ln for ln in lines if ln.strip()]
    if len(lines) != 2:
        raise ParseError(f"{path}: expected two conic lines, got {len(lines)}")
    return parse_conic(lines[0], arithmetic), parse_conic(lines[1], arithmetic)


# -- classification --------------------------------------------------------

def order_pair(A: Conic, B: Conic, mode: str, tol: float):
    """Return ``(other, ellipse, kind)`` with kind ``"parabola"`` or ``"hyperbola"``."""
    ta, tb = classify_type(A, tol), classify_type(B, tol)
    if ConicClass.DEGENERATE in (ta, tb):
        raise DegenerateInput("degenerate conic in the pair")
    if mode == "auto":
        ell = [c for c, t in ((A, ta), (B, tb)) if t is ConicClass.REAL_ELLIPSE]
        rest = [(c, t) for c, t in ((A, ta), (B, tb)) if t is not ConicClass.REAL_ELLIPSE]
        if len(ell) != 1 or rest[0][1] not in (ConicClass.PARABOLA, ConicClass.HYPERBOLA):
            raise RoleMismatch(f"need one real ellipse and one parabola or hyperbola, got {ta}, {tb}")
        other, kind = rest[0][0], rest[0][1]
        return other, ell[0], "parabola" if kind is ConicClass.PARABOLA else "hyperbola"
    kind = "parabola" if mode == "parabola-ellipse" else "hyperbola"
    return A, B, kind


def _trace(verdict):
    names = verdict.consulted or tuple(verdict.signs)
    out = []
    for n in names:
        v = verdict.signs[n]
        out.append([n, str(v) if isinstance(v, Sign) else v])
    return out


def _run_oracle(other: Conic, ellipse: Conic, kind: str, case: int) -> dict:
    from .conic import ConicClass as CC
    from .oracle import coarse_agrees, coarse_class, root_pattern_classify_pair

    # floats convert exactly, so the oracle sees the very same conics
    o = Conic(*(Fraction(v) for v in other.entries))
    e = Conic(*(Fraction(v) for v in ellipse.entries))
    role = CC.PARABOLA if kind == "parabola" else CC.HYPERBOLA
    o, e = normalize(o, role), normalize(e, CC.REAL_ELLIPSE)
    out = {}
    try:
        out["rootPattern"] = root_pattern_classify_pair(o, e)
    except PatternUnmatched as exc:
        out["rootPattern"] = None
        out["patternError"] = str(exc)
    cc = coarse_class(o, e)
    out["realPoints"] = list(cc.multiplicities)
    out["centerSign"] = cc.center_sign
    out["tangencies"] = list(cc.tangencies)
    out["coarseAgrees"] = bool(case) and coarse_agrees(kind, case, cc)
    out["agrees"] = out["rootPattern"] == case and out["coarseAgrees"]
    return out


def classify_pair(ca: tuple, cb: tuple, req: Request) -> Report:
    """Classify one pair; raises the library errors for the caller to map."""
    A, B = conic_from_equation(*ca), conic_from_equation(*cb)
    tol = resolve_tol(req.tol)
    other, ellipse, kind = order_pair(A, B, req.mode, tol)
    mod = classify_parabola if kind == "parabola" else classify_hyperbola
    t0 = time.perf_counter()
    verdict = mod.classify_general(other, ellipse, arithmetic=req.arithmetic, tol=tol)
    micros = int((time.perf_counter() - t0) * 1e6)
    rep = Report(
        caseNumber=verdict.case,
        caseName=verdict.name,
        mode=f"{kind}-ellipse",
        arithmetic=req.arithmetic,
        branch=verdict.branch,
        signTrace=_trace(verdict),
        unknown=list(verdict.unknown),
        reason=verdict.reason,
        timingMicros=micros if req.timing else None,
    )
    if req.verify and verdict.case:
        rep.oracleVerdict = _run_oracle(other, ellipse, kind, verdict.case)
        if not rep.oracleVerdict["agrees"] and req.counterexample_log:
            from .oracle import log_counterexample

            log_counterexample(req.counterexample_log, {
                "conicA": [str(v) for v in ca], "conicB": [str(v) for v in cb],
                "mode": rep.mode, "classifier": verdict.case, "oracle": rep.oracleVerdict,
            })
    if req.svg_path:
        from .svg import render_svg

        label = f"{verdict.case}: {verdict.name}"
        render_svg(other, ellipse, label, req.svg_path)
    return rep


def run(req: Request):
    """Single report, or ``(reports, case_changes)`` in sweep mode."""
    if req.sweep_to is None:
        rep = classify_pair(req.conic_a, req.conic_b, req)
        if rep.caseNumber == 0:
            raise IndeterminateSign(rep.reason, rep.unknown)
        return rep
    return sweep(req)


def _lerp(c0, c1, t):
    return tuple((1 - t) * a + t * b for a, b in zip(c0, c1))


def sweep(req: Request):
    """Entrywise linear interpolation between the two pairs at ``steps + 1`` samples."""
    if req.steps < 1:
        raise ParseError("--steps must be at least 1")
    (a1, b1) = req.sweep_to
    reports = []
    sub = Request(**{**req.__dict__, "sweep_to": None, "svg_path": None})
    for i in range(req.steps + 1):
        t = Fraction(i, req.steps)
        tv = float(t) if req.arithmetic == "float" else t
        ca, cb = _lerp(req.conic_a, a1, tv), _lerp(req.conic_b, b1, tv)
        try:
            rep = classify_pair(ca, cb, sub)
        except (RoleMismatch, NoCaseMatched) as exc:
            rep = Report(None, None, arithmetic=req.arithmetic, error=type(exc).__name__,
                         reason=str(exc))
        rep.t = str(t)
        reports.append(rep)
    changes = []
    for r0, r1 in zip(reports, reports[1:]):
        if r0.caseNumber != r1.caseNumber:
            changes.append({"from": r0.t, "to": r1.t, "caseFrom": r0.caseNumber,
                            "caseTo": r1.caseNumber})
    return reports, changes


# -- entry point -----------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="conicpos",
        description="Relative position of a parabola or hyperbola and an ellipse.",
        epilog="Coefficients are A B C D E F of Ax^2+Bxy+Cy^2+Dx+Ey+F=0. "
               "Exit codes: 0 ok, 2 parse, 3 degenerate, 4 indeterminate, 5 role mismatch, "
               "6 oracle disagreement, 7 no case matched, 8 I/O.",
    )
    p.add_argument("-a", "--conic-a", help='first conic, e.g. "1 0 0 0 -2 0"')
    p.add_argument("-b", "--conic-b", help="second conic")
    p.add_argument("-i", "--input", help="file with the two conics, one per line")
    p.add_argument("--mode", choices=MODES, default="auto")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exact", dest="arithmetic", action="store_const", const="exact")
    g.add_argument("--float", dest="arithmetic", action="store_const", const="float")
    p.set_defaults(arithmetic="exact")
    p.add_argument("--tol", type=float, help="relative float tolerance (default: $CONIC_TOL or 1e-10)")
    p.add_argument("--verify", action="store_true", help="cross-check with the oracles")
    p.add_argument("--svg", metavar="PATH", help="write an SVG picture")
    p.add_argument("--sweep", metavar="FILE", help="second pair; sweep from the first pair to it")
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--json", action="store_true", help="line-delimited JSON output")
    p.add_argument("--counterexample-log", metavar="PATH")
    p.add_argument("--timing", action="store_true", help="report classification time")
    return p


def _request_from_args(ns) -> Request:
    if ns.input:
        ca, cb = read_pair(ns.input, ns.arithmetic)
    elif ns.conic_a and ns.conic_b:
        ca, cb = parse_conic(ns.conic_a, ns.arithmetic), parse_conic(ns.conic_b, ns.arithmetic)
    else:
        raise ParseError("give two conics with -a/-b or --input")
    sweep_to = read_pair(ns.sweep, ns.arithmetic) if ns.sweep else None
    return Request(ca, cb, ns.mode, ns.arithmetic, ns.tol, ns.verify, ns.svg, sweep_to,
                   ns.steps, ns.counterexample_log, ns.timing)


def _emit_error(out, as_json, name, msg, extra=None) -> None:
    if as_json:
        out.write(json.dumps({"kind": "error", "error": name, "message": msg, **(extra or {})},
                             sort_keys=True) + "\n")
    else:
        sys.stderr.write(f"{name}: {msg}\n")


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    try:
        if ns.tol is not None:
            resolve_tol(ns.tol)
        req = _request_from_args(ns)
        result = run(req)
    except (ParseError, NotFinite, ValueError) as exc:
        _emit_error(out, ns.json, "ParseError", str(exc))
        return EXIT_PARSE
    except DegenerateInput as exc:
        _emit_error(out, ns.json, "DegenerateInput", str(exc))
        return EXIT_DEGENERATE
    except RoleMismatch as exc:
        _emit_error(out, ns.json, "RoleMismatch", str(exc))
        return EXIT_ROLE
    except IndeterminateSign as exc:
        _emit_error(out, ns.json, "IndeterminateSign", str(exc), {"unknown": list(exc.quantities)})
        return EXIT_INDETERMINATE
    except NoCaseMatched as exc:
        _emit_error(out, ns.json, type(exc).__name__, str(exc))
        return EXIT_NOCASE
    except OSError as exc:
        _emit_error(out, ns.json, "IoError", str(exc))
        return EXIT_IO
    except ConicError as exc:
        _emit_error(out, ns.json, type(exc).__name__, str(exc))
        return EXIT_PARSE
    if isinstance(result, Report):
        out.write((result.to_json() if ns.json else result.human()) + "\n")
        if result.oracleVerdict is not None and not result.oracleVerdict["agrees"]:
            return EXIT_ORACLE
        return EXIT_OK
    reports, changes = result
    for r in reports:
        out.write((r.to_json() if ns.json else r.human()) + "\n")
    if ns.json:
        out.write(json.dumps({"kind": "sweep", "caseChanges": changes}, sort_keys=True) + "\n")
    else:
        out.write("case changes:\n" if changes else "case changes: none\n")
        for c in changes:
            out.write(f"  t in [{c['from']}, {c['to']}]: {c['caseFrom']} -> {c['caseTo']}\n")
    bad = any(r.oracleVerdict is not None and not r.oracleVerdict["agrees"] for r in reports)
    return EXIT_ORACLE if bad else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
