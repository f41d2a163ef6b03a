"""Command-line front end: every module behind a JSON-in/JSON-out subcommand.

Exit status is 0 on success, 1 when the mathematics rejects the input (a JSON
error object is printed), and 2 on usage or schema errors.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import warnings
from fractions import Fraction

import jsonschema
import mpmath

from . import __version__
from .errors import DomainError
from .exactalg import EXPONENTIAL, ORDINARY, MultiPoly, Series, UniPoly, format_rational
from .grasscalc import class_of, intersection_number, multiply, plucker_degree
from .odeuniv import CauchyData, MonicOperator, fundamental_basis, solve_cauchy
from .partitions import Partition, complement, hooks, pieri_strips, syt_count
from .schur import h_from_e, schur_delta
from .wmap import (
    LinearSystemP1,
    RamificationConfig,
    find_planes_r1_report,
    intermediate_wronskians,
    master_function,
    nondegenerate,
    ramification_profile,
    t_polys,
    wronskian_of_system,
)
from .wronsk import (
    derivative_expansion_residual,
    derivative_expansion_terms,
    gen_wronskian,
    giambelli_residual,
    liouville_residual,
    pieri_residual,
)

__all__ = ["run", "main", "UsageError", "SYSTEM_SCHEMA", "CONFIG_SCHEMA"]

_RATIONAL = r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$"

SYSTEM_SCHEMA = {
    "type": "object",
    "required": ["d", "basis"],
    "properties": {
        "d": {"type": "integer", "minimum": 0},
        "basis": {
            "type": "array",
            "minItems": 1,
            "items": {"type": "array", "items": {"type": "string", "pattern": _RATIONAL}},
        },
    },
}

CONFIG_SCHEMA = {
    "type": "object",
    "required": ["points", "partitions"],
    "properties": {
        "points": {"type": "array", "items": {"type": "string", "pattern": _RATIONAL}},
        "partitions": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
        "infinity": {"type": "array", "items": {"type": "integer", "minimum": 0}},
    },
}


class UsageError(Exception):
    """Malformed command-line arguments or input files (exit status 2)."""


# --------------------------------------------------------------------------
# parsing helpers


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except (ValueError, DomainError) as exc:
        raise UsageError(f"cannot parse partition {text!r}: {exc}") from exc


def _partitions(text: str) -> list[Partition]:
    return [_partition(t) for t in text.split(";")]


def _value(text: str):
    """A rational number, or a polynomial in named generators such as ``e_1``."""
    text = text.strip()
    try:
        return Fraction(text)
    except ValueError:
        pass
    if not re.fullmatch(r"[\w\s^*/+-]+", text):
        raise UsageError(f"cannot parse value {text!r}")
    try:
        return MultiPoly.parse(text)
    except (ValueError, KeyError) as exc:
        raise UsageError(f"cannot parse value {text!r}: {exc}") from exc


def _values(text: str) -> list:
    text = text.strip()
    return [_value(t) for t in text.split(",")] if text else []


def _rationals(text: str) -> list[Fraction]:
    out = []
    for t in text.split(","):
        try:
            out.append(Fraction(t.strip()))
        except ValueError as exc:
            raise UsageError(f"cannot parse rational {t!r}") from exc
    return out


def _load_json(path: str, schema: dict):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path} is not valid JSON: {exc}") from exc
    try:
        jsonschema.validate(data, schema)
    except jsonschema.ValidationError as exc:
        where = "/".join(str(p) for p in exc.absolute_path) or "<root>"
        raise UsageError(f"{path}: schema violation at {where}: {exc.message}") from exc
    return data


def _system(args) -> LinearSystemP1:
    return LinearSystemP1.from_json(_load_json(args.file, SYSTEM_SCHEMA))


def _config(args, V: LinearSystemP1 | None = None) -> RamificationConfig:
    if getattr(args, "config", None):
        return RamificationConfig.from_json(_load_json(args.config, CONFIG_SCHEMA))
    if V is None:
        raise UsageError("--config is required")
    return RamificationConfig.of_system(V)


# --------------------------------------------------------------------------
# output helpers


def _text(c) -> str:
    if isinstance(c, (Fraction, int)) and not isinstance(c, bool):
        return format_rational(c)
    return str(c)


def _series(s: Series) -> dict:
    return {"convention": s.convention, "order": s.N, "coefficients": [_text(c) for c in s]}


def _residual(s: Series) -> dict:
    n = s.first_nonzero()
    if n is None:
        return {"residual": "0", "order": s.N}
    return {"residual": "nonzero", "order": s.N, "first_nonzero_index": n, "coefficient": _text(s[n])}


def _poly(p: UniPoly) -> list[str]:
    return [_text(c) for c in p.coeffs]


def _operator(args) -> MonicOperator:
    if args.coeffs is not None:
        return MonicOperator(_values(args.coeffs))
    if args.r is None:
        raise UsageError("give --coeffs or --r")
    return MonicOperator.universal(args.r)


def _order(args, minimum: int) -> int:
    return max(args.order, minimum)


# --------------------------------------------------------------------------
# commands


def cmd_schur_delta(args):
    lam = _partition(args.lambda_)
    top = (lam[0] if lam else 0) + args.r
    if args.a is not None:
        a = [Fraction(1)] + _values(args.a)
        return {"lambda": list(lam), "value": _text(schur_delta(lam, a, args.r))}
    return {"lambda": list(lam), "value": _text(schur_delta(lam, h_from_e(args.r, top), args.r))}


def cmd_schur_h(args):
    h = h_from_e(args.r, args.n)
    return {"r": args.r, "h": [_text(h[n]) for n in range(args.n + 1)]}


def cmd_grass_degree(args):
    return {"r": args.r, "d": args.d, "degree": plucker_degree(args.r, args.d)}


def cmd_grass_intersect(args):
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        count = intersection_number(_partitions(args.partitions), args.r, args.d)
    out = {"count": count}
    if caught:
        out["warnings"] = [str(w.message) for w in caught]
    return out


def cmd_grass_class(args):
    lams = _partitions(args.lambda_)
    c = class_of(lams[0], args.r, args.d)
    for lam in lams[1:]:
        c = multiply(c, class_of(lam, args.r, args.d))
    return {
        "class": str(c),
        "terms": [{"partition": list(lam), "coefficient": _text(v)} for lam, v in c.by_partition().items()],
    }


def cmd_ode_solve(args):
    op = _operator(args)
    init = _values(args.init)
    N = _order(args, op.order)
    forcing = None
    if args.forcing is not None:
        fs = _values(args.forcing)
        fs += [0] * (N - op.order + 1 - len(fs))
        forcing = Series(fs, EXPONENTIAL)
    s = solve_cauchy(CauchyData(op, init, forcing, N))
    return {"operator": str(op), **_series(s)}


def cmd_ode_basis(args):
    op = _operator(args)
    u = fundamental_basis(op, _order(args, op.order))
    return {"operator": str(op), "basis": [_series(s) for s in u]}


def cmd_wronsk_general(args):
    rows = [r for r in args.series.split(";")]
    conv = EXPONENTIAL if args.convention == "exponential" else ORDINARY
    cols = [_values(r) for r in rows]
    N = max(len(c) for c in cols) - 1
    v = [Series(c + [0] * (N + 1 - len(c)), conv) for c in cols]
    w = gen_wronskian(_partition(args.lambda_), v)
    return {"lambda": list(_partition(args.lambda_)), "wronskian": _series(w)}


def cmd_wronsk_giambelli(args):
    lam = _partition(args.lambda_)
    op = MonicOperator.universal(args.r)
    return {"lambda": list(lam), **_residual(giambelli_residual(lam, op, _order(args, args.r + 1 + lam.weight)))}


def cmd_wronsk_pieri(args):
    lam = _partition(args.lambda_)
    op = MonicOperator.universal(args.r)
    need = args.r + 1 + lam.weight + args.i
    return {"lambda": list(lam), "i": args.i, **_residual(pieri_residual(args.i, lam, op, _order(args, need)))}


def cmd_wronsk_liouville(args):
    op = MonicOperator.universal(args.r)
    return {"k": args.k, **_residual(liouville_residual(op, args.k, _order(args, args.r + 2)))}


def cmd_wronsk_expand(args):
    r = args.r
    out = {
        "h": args.h,
        "terms": [{"partition": list(lam), "coefficient": c} for lam, c in derivative_expansion_terms(args.h, r)],
    }
    if args.series is not None:
        cols = [_values(row) for row in args.series.split(";")]
        if len(cols) != r + 1:
            raise UsageError(f"--series must list {r + 1} series for r = {r}")
        N = max(len(c) for c in cols) - 1
        v = [Series(c + [0] * (N + 1 - len(c)), ORDINARY) for c in cols]
        out.update(_residual(derivative_expansion_residual(v, args.h)))
    return out


def cmd_wmap_wronskian(args):
    V = _system(args)
    return {"system": V.to_json(), "wronskian": _poly(wronskian_of_system(V))}


def cmd_wmap_profile(args):
    return ramification_profile(_system(args)).to_json()


def cmd_wmap_flag(args):
    V = _system(args)
    out = {"flag": intermediate_wronskians(V).to_json()}
    if args.config:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            out["t_polys"] = t_polys(V, _config(args)).to_json()
    return out


def cmd_wmap_phi(args):
    config = _config(args)
    t_list = [UniPoly(_rationals(row)) for row in args.t.split(";")] if args.t else []
    value = master_function(config, t_list, full=args.full)
    return {"phi": _text(value), "full": args.full}


def cmd_wmap_nondeg(args):
    V = _system(args)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return nondegenerate(V, _config(args, V)).to_json()


def _approx(z) -> list[str]:
    z = mpmath.chop(mpmath.mpc(z), tol=1e-12)
    z = mpmath.mpc(z)
    return [mpmath.nstr(z.real, 15), mpmath.nstr(z.imag, 15)]


def cmd_wmap_solve(args):
    roots = _rationals(args.roots)
    report = find_planes_r1_report(roots, args.d, starts=args.starts, seed=args.seed)
    return {
        "target_roots": [format_rational(z) for z in roots],
        "d": args.d,
        "expected": report.expected,
        "planes": [V.to_json() for V in report.planes],
        "approximate": {
            "note": "floating-point roots of w_0 used to locate the planes; the planes above are exact",
            "w0_roots": [[_approx(t) for t in pt] for pt in report.approx_roots],
            "starts": report.starts,
            "converged": report.converged,
        },
    }


def cmd_partition_syt(args):
    lam = _partition(args.lambda_)
    return {"partition": list(lam), "syt": syt_count(lam)}


def cmd_partition_hooks(args):
    lam = _partition(args.lambda_)
    return {"partition": list(lam), "hooks": hooks(lam)}


def cmd_partition_strips(args):
    lam = _partition(args.lambda_)
    rect = tuple(int(x) for x in args.rect.split("x")) if args.rect else None
    out = {"partition": list(lam), "i": args.i, "strips": [list(m) for m in pieri_strips(lam, args.i, rect)]}
    if rect:
        out["complement"] = list(complement(lam, rect))
    return out


# --------------------------------------------------------------------------
# argument parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _globals() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json-indent", type=int, default=argparse.SUPPRESS, help="indent JSON output")
    p.add_argument("--order", type=int, default=argparse.SUPPRESS, help="series truncation order (default 12)")
    return p


def build_parser() -> argparse.ArgumentParser:
    g = _globals()
    parser = _Parser(prog="wronski-schubert", description=__doc__.splitlines()[0], parents=[g])
    parser.add_argument("--version", action="version", version=__version__)
    groups = parser.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def sub(group, name, fn, help_):
        p = group.add_parser(name, help=help_, parents=[g])
        p.set_defaults(func=fn)
        return p

    schur = groups.add_parser("schur", help="Schur determinants").add_subparsers(dest="cmd", required=True)
    p = sub(schur, "delta", cmd_schur_delta, "Delta_lambda on the complete homogeneous sequence")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--lambda", dest="lambda_", required=True)
    p.add_argument("--a", help="a_1,a_2,... (a_0 = 1); default h_n in e_1..e_{r+1}")
    p = sub(schur, "h", cmd_schur_h, "h_0..h_n as polynomials in e_1..e_{r+1}")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)

    grass = groups.add_parser("grass", help="Grassmannian Schubert calculus").add_subparsers(dest="cmd", required=True)
    p = sub(grass, "degree", cmd_grass_degree, "Plucker degree of G(r+1, d+1)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p = sub(grass, "intersect", cmd_grass_intersect, "intersection number of Schubert classes")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--partitions", required=True, help='e.g. "1;1;1;1"')
    p = sub(grass, "class", cmd_grass_class, "product of Schubert classes in the Schur basis")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--lambda", dest="lambda_", required=True, help='one partition, or several separated by ";"')

    ode = groups.add_parser("ode", help="constant-coefficient linear ODEs").add_subparsers(dest="cmd", required=True)
    p = sub(ode, "solve", cmd_ode_solve, "solve the Cauchy problem")
    p.add_argument("--coeffs", help="e_1,...,e_{r+1}")
    p.add_argument("--r", type=int)
    p.add_argument("--init", required=True, help="D^i y(0) for i = 0..r")
    p.add_argument("--forcing", help="exponential coefficients of the forcing term")
    p = sub(ode, "basis", cmd_ode_basis, "fundamental solutions u_0..u_r")
    p.add_argument("--coeffs")
    p.add_argument("--r", type=int)

    wr = groups.add_parser("wronsk", help="generalized Wronskians").add_subparsers(dest="cmd", required=True)
    p = sub(wr, "general", cmd_wronsk_general, "W_lambda of a series tuple")
    p.add_argument("--lambda", dest="lambda_", default="")
    p.add_argument("--series", required=True, help='coefficient lists separated by ";"')
    p.add_argument("--convention", choices=["ordinary", "exponential"], default="ordinary")
    p = sub(wr, "giambelli", cmd_wronsk_giambelli, "W_lambda(u) - Delta_lambda(h) W_0(u)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--lambda", dest="lambda_", required=True)
    p = sub(wr, "pieri", cmd_wronsk_pieri, "h_i W_lambda(u) - sum over horizontal strips")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--lambda", dest="lambda_", required=True)
    p = sub(wr, "liouville", cmd_wronsk_liouville, "W_{1^k}(u) - e_k W_0(u)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p = sub(wr, "expand", cmd_wronsk_expand, "D^h W_0 in terms of W_lambda")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--series", help="optional ordinary coefficient lists to check the identity on")

    wm = groups.add_parser("wmap", help="the Wronski map on P^1").add_subparsers(dest="cmd", required=True)
    p = sub(wm, "wronskian", cmd_wmap_wronskian, "Wronskian of a linear system")
    p.add_argument("--file", required=True)
    p = sub(wm, "profile", cmd_wmap_profile, "ramification profile")
    p.add_argument("--file", required=True)
    p = sub(wm, "flag", cmd_wmap_flag, "intermediate Wronskians (and T polynomials with --config)")
    p.add_argument("--file", required=True)
    p.add_argument("--config")
    p = sub(wm, "phi", cmd_wmap_phi, "master function value")
    p.add_argument("--config", required=True)
    p.add_argument("--t", default="", help='T_1..T_r as ascending coefficient lists separated by ";"')
    p.add_argument("--full", action="store_true", help="include the Res_z(W_0, W_1) factor")
    p = sub(wm, "nondeg", cmd_wmap_nondeg, "non-degeneracy of a system for a configuration")
    p.add_argument("--file", required=True)
    p.add_argument("--config")
    p = sub(wm, "solve", cmd_wmap_solve, "all pencils with a prescribed Wronskian (r = 1)")
    p.add_argument("--roots", required=True, help="distinct rational roots of the target")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--starts", type=int, default=64)
    p.add_argument("--seed", type=int, default=0)

    part = groups.add_parser("partition", help="partitions and tableaux").add_subparsers(dest="cmd", required=True)
    p = sub(part, "syt", cmd_partition_syt, "number of standard Young tableaux")
    p.add_argument("--lambda", dest="lambda_", required=True)
    p = sub(part, "hooks", cmd_partition_hooks, "hook lengths, row by row")
    p.add_argument("--lambda", dest="lambda_", required=True)
    p = sub(part, "strips", cmd_partition_strips, "horizontal strips of size i")
    p.add_argument("--lambda", dest="lambda_", required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--rect", help="bounding rectangle ROWSxCOLS")
    return parser


def _dump(obj, indent) -> str:
    return json.dumps(obj, indent=indent, sort_keys=True, ensure_ascii=False)


def run(argv: list[str], out=None, err=None) -> int:
    """Execute one command; JSON goes to ``out`` and diagnostics to ``err``."""
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    indent = None
    try:
        try:
            args = build_parser().parse_args(argv)
        except SystemExit as exc:  # --help and --version
            return int(exc.code or 0)
        indent = getattr(args, "json_indent", None)
        args.order = getattr(args, "order", 12)
        if args.order < 0:
            raise UsageError("--order must be nonnegative")
        result = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=err)
        return 2
    except DomainError as exc:
        print(_dump({"error": {"type": type(exc).__name__, "message": str(exc)}}, indent), file=out)
        return 1
    print(_dump(result, indent), file=out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
