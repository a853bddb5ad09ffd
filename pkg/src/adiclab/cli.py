"""``adic-lab`` command line front end.

Every subcommand reads sequence specs from JSON files (or inline JSON) and
prints either ``key: value`` lines or, with ``--json``, one JSON document.
Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import classify as cls_
from .arithmetic import add, embed, eq_mod, weight
from .duality import (SHARP, STAR, FLAVOR_SHIFT, annihilator_level, pair_rational,
                      verify_annihilator)
from .dynamics import (AffineElement, HSubgroup, act, check_element, contraction_witness,
                       fixed_point_in_N, haar_index, orbit_witness)
from .errors import AdicError, InvalidSpec
from .lattice import FracIdeal
from .sequence import SequenceSpec, describe, prime_sets, shift, spec_from_json, spec_to_json
from .supernatural import canonical_pair_form, lambda_rho


def load_spec(source: str) -> SequenceSpec:
    """Read a spec from a file path, or from inline JSON starting with ``{``."""
    text = source if source.lstrip().startswith("{") else None
    if text is None:
        try:
            text = Path(source).read_text()
        except OSError as exc:
            raise InvalidSpec(f"cannot read spec {source!r}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"spec {source!r} is not valid JSON: {exc.msg}") from exc
    return spec_from_json(data)


def _frac(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}")


def _need(args, name: str):
    value = getattr(args, name)
    if value is None:
        raise _Usage(f"--{name.replace('_', '-')} is required for {args.verb}")
    return value


class _Usage(Exception):
    pass


def _spec(args) -> SequenceSpec:
    return load_spec(_need(args, "spec"))


# Commands ---------------------------------------------------------------------

def cmd_invariants(args) -> dict:
    spec = _spec(args)
    lam, rho = lambda_rho(spec)
    P, Q = prime_sets(spec)
    return {
        "sequence": describe(spec),
        "lambda": lam.to_json(),
        "rho": rho.to_json(),
        "P": P.to_json(),
        "Q": Q.to_json(),
        "canonical_pair": canonical_pair_form(lam, rho).to_json(),
    }


def cmd_classify(args) -> dict:
    sources = list(args.files)
    if args.spec:
        sources.insert(0, args.spec)
    if args.spec2:
        sources.append(args.spec2)
    if len(sources) == 1:
        return cls_.report(load_spec(sources[0])).to_json()
    if len(sources) != 2:
        raise _Usage("classify takes one or two specs")
    a, b = (load_spec(s) for s in sources)
    return cls_.compare(a, b).to_json()


def cmd_selfdual(args) -> dict:
    w = cls_.self_dual(_spec(args))
    return {"self_dual": w is not None, "witness": None if w is None else list(w)}


def cmd_ring(args) -> dict:
    spec = _spec(args)
    dom = cls_.is_integral_domain(spec)
    out = {
        "is_ring": cls_.is_ring(spec),
        "is_integral_domain": dom is not None,
        "integral_domain_prime": dom,
        "maximal_open_ring": cls_.maximal_open_ring(spec).to_json(),
    }
    if not prime_sets(spec)[0].is_empty():
        out["ring_companion"] = spec_to_json(cls_.ring_companion(spec))
    return out


def _approx_json(x) -> dict:
    return {"digits": str(x), "representative": str(x.representative())}


def cmd_embed(args) -> dict:
    x = embed(_spec(args), _need(args, "q"), args.precision)
    return {"q": str(args.q), **_approx_json(x)}


def cmd_add(args) -> dict:
    spec = _spec(args)
    x, y = _need(args, "x"), _need(args, "y")
    s = add(embed(spec, x, args.precision), embed(spec, y, args.precision))
    return {"x": str(x), "y": str(y), "sum": str(s),
            "matches_embed": eq_mod(s, embed(spec, x + y, args.precision), args.precision)}


def cmd_act(args) -> dict:
    spec = _spec(args)
    g = AffineElement(args.r, args.h)
    check_element(spec, g)
    out = act(g, embed(spec, _need(args, "q"), args.precision))
    return {"element": g.to_json(), "q": str(args.q), "image": str(out),
            "image_precision": out.precision}


def cmd_pair(args) -> dict:
    spec = _spec(args)
    n = FLAVOR_SHIFT[args.flavor] if args.n is None else args.n
    x, y = _need(args, "x"), _need(args, "y")
    angle = pair_rational(spec, n, x, y)
    return {"n": n, "x": str(x), "y": str(y), "angle": str(angle)}


def cmd_witness(args) -> dict:
    spec = _spec(args)
    kind = args.kind
    if kind == "contract":
        gens = [_frac(t) for t in _need(args, "H").split(",") if t.strip()]
        g = contraction_witness(spec, HSubgroup(gens), _need(args, "q"),
                                FracIdeal.parse(_need(args, "ideal")))
        return {"kind": kind, "element": g.to_json()}
    if kind == "orbit":
        g = orbit_witness(spec, (_need(args, "q"), args.precision))
        return {"kind": kind, "element": g.to_json()}
    g = AffineElement(args.r, args.h)
    check_element(spec, g)
    return {"kind": kind, "element": g.to_json(), "fixed_points": fixed_point_in_N(spec, g).to_json()}


def cmd_haar(args) -> dict:
    h = _need(args, "h")
    return {"h": str(h), "delta": str(haar_index(_spec(args), h))}


def _parse_op(text: str) -> tuple[str, list[int]]:
    name, *rest = text.split(":")
    try:
        return name, [int(t) for t in rest]
    except ValueError:
        raise _Usage(f"surgery arguments must be integers: {text!r}")


def cmd_surgery(args) -> dict:
    spec = _spec(args)
    name, params = _parse_op(_need(args, "op"))
    try:
        out, kept = cls_.sequence_surgery(spec, name, *params)
    except (ValueError, TypeError) as exc:
        if isinstance(exc, InvalidSpec):
            raise
        raise _Usage(str(exc))
    w = cls_.omega_isomorphic(spec, out)
    return {"op": args.op, "before": describe(spec), "after": describe(out),
            "result": spec_to_json(out), "omega_isomorphic": kept,
            "witness": None if w is None else list(w)}


def _sample_N(spec: SequenceSpec, rng: random.Random) -> Fraction:
    den = weight(spec, -rng.randrange(0, 4)).denominator
    return Fraction(rng.randrange(-200, 201), den)


def cmd_verify(args) -> dict:
    spec = _spec(args)
    jmax = args.jmax
    rng = random.Random(args.seed)
    checks: list[tuple[str, bool]] = []
    if args.suite == "annihilator":
        for flavor in (STAR, SHARP):
            for j in range(-(jmax - 1), jmax + 1):
                ok = verify_annihilator(spec, j, flavor)
                wrong = annihilator_level(j, flavor) - 1
                control = not verify_annihilator(spec, j, flavor, level=wrong)
                checks.append((f"{flavor} j={j}", ok and control))
    elif args.suite == "homomorphism":
        for k in range(args.samples):
            q, r = _sample_N(spec, rng), _sample_N(spec, rng)
            ok = all(eq_mod(add(embed(spec, q, j), embed(spec, r, j)), embed(spec, q + r, j), j)
                     for j in range(1, jmax + 1))
            checks.append((f"{q} + {r}", ok))
    else:
        for flavor in (STAR, SHARP):
            n = FLAVOR_SHIFT[flavor]
            dual = shift(spec, n)
            for k in range(args.samples):
                x, y = _sample_N(spec, rng), _sample_N(dual, rng)
                base = pair_rational(spec, n, x, y)
                later = pair_rational(spec, n, x, y, extra=8)
                checks.append((f"{flavor} <{x}, {y}>", base == later))
    failed = [name for name, ok in checks if not ok]
    return {"suite": args.suite, "total": len(checks), "passed": len(checks) - len(failed),
            "failed": failed, "all_pass": not failed}


COMMANDS = {
    "invariants": cmd_invariants, "classify": cmd_classify, "selfdual": cmd_selfdual,
    "ring": cmd_ring, "embed": cmd_embed, "add": cmd_add, "act": cmd_act, "pair": cmd_pair,
    "witness": cmd_witness, "haar": cmd_haar, "surgery": cmd_surgery, "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", help="sequence spec (JSON file or inline JSON)")
    common.add_argument("--spec2", help="second sequence spec")
    common.add_argument("--precision", type=int, default=8, help="digit precision j (default 8)")
    common.add_argument("--jmax", type=int, default=4, help="range bound for verify suites")
    common.add_argument("--json", action="store_true", help="emit JSON")

    parser = argparse.ArgumentParser(prog="adic-lab", description="Exact a-adic arithmetic and classification.")
    sub = parser.add_subparsers(dest="verb", required=True)
    for name in ("invariants", "selfdual", "ring", "haar"):
        p = sub.add_parser(name, parents=[common])
        if name == "haar":
            p.add_argument("--h", type=_frac)
    p = sub.add_parser("classify", parents=[common])
    p.add_argument("files", nargs="*", help="one or two spec files")
    p = sub.add_parser("embed", parents=[common])
    p.add_argument("--q", type=_frac)
    p = sub.add_parser("add", parents=[common])
    p.add_argument("--x", type=_frac)
    p.add_argument("--y", type=_frac)
    p = sub.add_parser("act", parents=[common])
    p.add_argument("--r", type=_frac, default=Fraction(0))
    p.add_argument("--h", type=_frac, default=Fraction(1))
    p.add_argument("--q", type=_frac)
    p = sub.add_parser("pair", parents=[common])
    p.add_argument("--x", type=_frac)
    p.add_argument("--y", type=_frac)
    p.add_argument("--flavor", choices=[STAR, SHARP], default=STAR)
    p.add_argument("--n", type=int, help="general reflection index (overrides --flavor)")
    p = sub.add_parser("witness", parents=[common])
    p.add_argument("kind", choices=["contract", "orbit", "fixed"])
    p.add_argument("--q", type=_frac)
    p.add_argument("--r", type=_frac, default=Fraction(0))
    p.add_argument("--h", help="for contract: comma separated generators of H; for fixed: the multiplier")
    p.add_argument("--ideal", help='lattice ideal "m/n"')
    p = sub.add_parser("surgery", parents=[common])
    p.add_argument("--op", help='operation such as "merge:0" or "factor:1:2:3"')
    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--suite", choices=["annihilator", "homomorphism", "stabilization"], required=True)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    return parser


def _fix_args(args) -> None:
    # witness fixed takes --h as a single rational
    if args.verb == "witness" and args.kind == "fixed":
        args.h = _frac(args.h) if args.h is not None else Fraction(1)
    if args.verb == "witness":
        args.H = args.h if args.kind == "contract" else None


def _render_text(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict) and not value:
            lines.append(f"{pad}{key}: {{}}")
        elif isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines += _render_text(value, indent + 1)
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: [{', '.join(map(str, value))}]")
        else:
            lines.append(f"{pad}{key}: {value}")
    return lines


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        _fix_args(args)
    except SystemExit as exc:
        return int(exc.code or 0)
    except argparse.ArgumentTypeError as exc:
        print(f"adic-lab: error: {exc}", file=sys.stderr)
        return 2
    try:
        result = COMMANDS[args.verb](args)
    except (_Usage, InvalidSpec) as exc:
        print(f"adic-lab {args.verb}: error: {exc}", file=sys.stderr)
        return 2
    except AdicError as exc:
        print(f"adic-lab {args.verb}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(result, indent=2))
    else:
        print("\n".join(_render_text(result)))
    if args.verb == "verify" and not result["all_pass"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
