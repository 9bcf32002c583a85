"""``conecalc`` command-line interface.

Exit status: 0 on success, 1 when a verified identity or inequality fails,
2 on usage errors (bad arguments, unparsable forms).
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import cone, harmonic, power, sphere
from .errors import ConecalcError
from .poly import format_form, parse_form
from .suite import SuiteConfig, run_suite


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--n", type=_ints, help="number of variables (comma list for suite)")
    p.add_argument("--k", type=_ints, help="half degree (comma list for suite)")
    p.add_argument("--m", type=int, help="power-operator degree parameter")
    p.add_argument("--d", type=int, help="degree (legendre, dualpoint)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--form", action="append", default=[], help="form in the text grammar")
    p.add_argument("--file", action="append", default=[], help="file holding one form")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="conecalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("integrate", "inner", "decompose", "legendre", "dualpoint", "apply-t", "john",
                 "loewner", "lf-ellipsoid", "maxform"):
        sub.add_parser(name, parents=[common])
    s = sub.add_parser("symmetry", parents=[common])
    s.add_argument("--cone", default="nonneg", choices=["nonneg", "powers"])
    c = sub.add_parser("certify", parents=[common])
    c.add_argument("cone", choices=["nonneg", "powers"])
    v = sub.add_parser("volume-bound", parents=[common])
    v.add_argument("--eps", type=Fraction, help="pick m for a target 1 - eps instead of --m")
    for name in ("legendre", "dualpoint"):
        sub.choices[name].add_argument("--axis", help="exact unit vector, e.g. 3/5,4/5")
    suite = sub.add_parser("suite", parents=[common])
    suite.add_argument("--trials", type=int, default=200)
    suite.add_argument("--jobs", type=int, default=1)
    return parser


def _one(values, name: str) -> int:
    if not values:
        raise UsageError(f"--{name} is required")
    if len(values) != 1:
        raise UsageError(f"--{name} takes a single value here")
    return values[0]


def _forms(args, count: int | None = None) -> list:
    texts = list(args.form)
    for path in args.file:
        texts.append(Path(path).read_text().strip())
    if not texts:
        raise UsageError("pass a form with --form or --file")
    if count is not None and len(texts) != count:
        raise UsageError(f"expected {count} form(s), got {len(texts)}")
    if args.n:
        n = _one(args.n, "n")
    else:
        raise UsageError("--n is required to read forms")
    return [parse_form(t, n) for t in texts]


def _axis(args):
    if not getattr(args, "axis", None):
        return None
    return tuple(Fraction(a) for a in args.axis.split(","))


def _q(x) -> str:
    return str(x)


def run(args) -> tuple[dict, int]:
    cmd = args.command
    if cmd == "integrate":
        (f,) = _forms(args, 1)
        return {"integral": _q(sphere.integral(f))}, 0
    if cmd == "inner":
        f, g = _forms(args, 2)
        return {"inner": _q(sphere.inner_product(f, g))}, 0
    if cmd == "decompose":
        (f,) = _forms(args, 1)
        parts = harmonic.harmonic_decompose(f)
        return {"levels": {str(j): format_form(h) for j, h in parts.levels().items()}}, 0
    if cmd == "legendre":
        n = _one(args.n, "n")
        if args.d is None:
            raise UsageError("--d is required")
        L = harmonic.legendre_harmonic(n, args.d, _axis(args))
        return {"form": format_form(L), "norm_squared": _q(sphere.norm_squared(L))}, 0
    if cmd == "dualpoint":
        n = _one(args.n, "n")
        d = args.d if args.d is not None else 2 * _one(args.k, "k")
        p = harmonic.dual_point(n, d, _axis(args))
        return {"form": format_form(p), "norm_squared": _q(sphere.norm_squared(p))}, 0
    if cmd == "apply-t":
        (f,) = _forms(args, 1)
        k = f.d // 2 if not args.k else _one(args.k, "k")
        if args.m is None:
            raise UsageError("--m is required")
        spec = power.t_coefficients(f.n, k, args.m)
        return {"form": format_form(power.apply_t(spec, f)),
                "coefficients": [_q(c) for c in spec.coeffs]}, 0
    if cmd in ("john", "loewner", "lf-ellipsoid"):
        n, k = _one(args.n, "n"), _one(args.k, "k")
        ell = {"john": cone.john_ball_C, "loewner": cone.loewner_ball_Cstar,
               "lf-ellipsoid": cone.lf_loewner}[cmd](n, k)
        out = {"center": format_form(ell.center),
               "weights": {str(j): _q(w) for j, w in ell.weights.items()},
               "bound": _q(ell.bound), "tag": ell.tag}
        if ell.radius_squared is not None:
            out["radius_squared"] = _q(ell.radius_squared)
        if cmd == "lf-ellipsoid":
            out["inscribed_ball_radius_squared"] = _q(cone.powerball_radius_sq(n, k))
        return out, 0
    if cmd == "symmetry":
        n, k = _one(args.n, "n"), _one(args.k, "k")
        alpha = cone.symmetry_coefficient(args.cone, n, k)
        out = {"cone": args.cone, "coefficient": _q(alpha)}
        if alpha == 1:
            out["note"] = "degenerate: the base is centrally symmetric"
        return out, 0
    if cmd == "maxform":
        n, k = _one(args.n, "n"), _one(args.k, "k")
        f = cone.max_extreme_form(n, k)
        e = [0] * (n - 1) + [1]
        return {"form": format_form(f), "integral": _q(sphere.integral(f)),
                "value_at_axis": _q(f(e)), "sup": repr(sphere.sphere_max(f, tol=args.tol).value)}, 0
    if cmd == "certify":
        (f,) = _forms(args, 1)
        if args.k and 2 * _one(args.k, "k") != f.d:
            raise UsageError(f"form has degree {f.d}, not 2k = {2 * args.k[0]}")
        cert = (cone.certify_nonnegative if args.cone == "nonneg" else cone.certify_sum_of_powers)(f)
        return {"verdict": cert.verdict.value, "distance": _q(cert.distance), "inner": _q(cert.inner),
                "outer": _q(cert.outer), "boundary": cert.boundary, "scale": _q(cert.scale),
                "tag": cert.basis}, 0
    if cmd == "volume-bound":
        n, k = _one(args.n, "n"), _one(args.k, "k")
        if args.eps is not None:
            m = power.degree_for_epsilon(n, k, args.eps)
        elif args.m is not None:
            m = args.m
        else:
            raise UsageError("pass --m or --eps")
        return {"m": m, "bound": _q(power.volume_ratio_bound(n, k, m))}, 0
    if cmd == "suite":
        cfg = SuiteConfig(
            n_values=tuple(args.n or (2, 3)), k_values=tuple(args.k or (1, 2)), trials=args.trials,
            seed=args.seed, tol=args.tol, jobs=args.jobs,
        )
        report = run_suite(cfg)
        return {"report": report}, 0 if report.ok else 1
    raise UsageError(f"unknown command {cmd}")


def _render(result: dict, as_json: bool) -> str:
    report = result.get("report")
    if report is not None:
        return report.to_json() if as_json else report.to_text()
    if as_json:
        return json.dumps(result, sort_keys=True)
    lines = []
    for key, val in result.items():
        if isinstance(val, dict):
            lines.append(f"{key}:")
            lines.extend(f"  {k}: {v}" for k, v in val.items())
        elif isinstance(val, list):
            lines.append(f"{key}: {', '.join(map(str, val))}")
        else:
            lines.append(f"{key}: {val}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result, status = run(args)
    except (UsageError, ConecalcError, OSError) as exc:
        print(f"conecalc: error: {exc}", file=sys.stderr)
        return 2
    print(_render(result, args.json))
    return status


if __name__ == "__main__":
    sys.exit(main())
