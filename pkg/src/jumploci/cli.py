"""Command-line front end.

Exit codes: 0 on success, 2 on input errors, 3 when a size guard trips.
"""

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from importlib import resources
from pathlib import Path

from . import admiss, charvar, ringlow
from .errors import JumpLociError, SizeLimitExceeded
from .exactnum import character_order, format_rational
from .fox import first_betti, parse_presentation

MAX_GENERATORS = 16
MAX_RELATORS = 24

SHIPPED = ("f2.grp", "t2.grp", "genus2.grp", "xy2.grp", "f8.grp",
           "gamma.trs", "gamma-sub.trs", "f2-full.trs", "t2-full.trs",
           "genus2-full.trs", "xy2-full.trs", "genus2-sub.trs", "t2-sub.trs",
           "t2-sub-translated.trs", "xy2-sub.trs", "xy2-translated.trs")


def shipped_text(name):
    return resources.files("jumploci").joinpath("data", name).read_text()


def _read(path):
    p = Path(path)
    if p.exists():
        return p.read_text()
    if p.name in SHIPPED and str(p) == p.name:
        return shipped_text(p.name)
    raise JumpLociError(f"no such file: {path}")


def load_group(path):
    p = parse_presentation(_read(path))
    if p.n > MAX_GENERATORS or p.m > MAX_RELATORS:
        raise SizeLimitExceeded(
            f"{p.name}: {p.n} generators / {p.m} relators exceeds the limits "
            f"{MAX_GENERATORS} / {MAX_RELATORS}")
    return p


def load_torus(path, group):
    w = charvar.parse_torus(_read(path))
    w.validate_for(group)
    return w


# -- JSON conversion ---------------------------------------------------------------

def q(x):
    return format_rational(x)


def vec(v):
    return ",".join(q(x) for x in v)


def _jump_point(pt):
    out = {"param": q(pt.param), "param_order": pt.param_order}
    if pt.character is not None:
        out.update(character=vec(pt.character), character_order=pt.character_order,
                   h1=pt.h1, trivial=pt.trivial)
    return out


def jump_json(report):
    return {
        "generic_rank": report.generic_rank,
        "generic_h1": report.generic_h1,
        "minor_gcd": str(report.minor_gcd),
        "norm": str(report.norm),
        "cyclotomic_factors": [[n, k] for n, k in report.cyclotomic_factors],
        "torsion_points": [_jump_point(p) for p in report.torsion_points],
        "non_torsion_factor": None if report.non_torsion_factor is None else str(report.non_torsion_factor),
        "trivial_char_params": [_jump_point(p) for p in report.trivial_char_params],
    }


def admissibility_json(r):
    return {
        "character": vec(r.character),
        "lhs": r.lhs,
        "lifts": [{"alpha": vec(a), "rhs": rhs} for a, rhs in r.lifts],
        "admissible": r.admissible,
        "witness": None if r.witness is None else vec(r.witness),
        "formal": r.formal,
        "box": r.box,
    }


# -- per-character work (module level so it pickles for --jobs) ------------------

def _twisted(group, rho, k):
    rho = charvar.make_character(group, rho)
    out = {"character": vec(rho), "order": character_order(rho),
           "h0": charvar.twisted_h0_dim(group, rho), "h1": charvar.twisted_h1_dim(group, rho)}
    if k is not None:
        out["k"] = k
        out["in_V_k"] = out["h1"] >= k
    return out


def _symmetry(group, rho, _k):
    rho = charvar.make_character(group, rho)
    a, b, eq = charvar.symmetry_check(group, rho)
    return {"character": vec(rho), "inverse": vec(charvar.inverse_character(rho)),
            "h1": a, "h1_inverse": b, "equal": eq}


def _admissible(group, rho, box):
    return admissibility_json(admiss.is_admissible(group, rho, box))


def _lifts(group, rho, box):
    rho = charvar.make_character(group, rho)
    return {"character": vec(rho), "box": box,
            "lifts": [vec(a) for a in admiss.exp_lift_candidates(group, rho, box)]}


def _per_character(fn, args, extra):
    group = load_group(args.group)
    if args.chars:
        lines = [ln.split("#", 1)[0].strip() for ln in _read(args.chars).splitlines()]
        chars = [charvar.parse_character(ln) for ln in lines if ln]
        for rho in chars:
            charvar.make_character(group, rho)
        if args.jobs > 1:
            with ProcessPoolExecutor(args.jobs) as pool:
                results = list(pool.map(fn, [group] * len(chars), chars, [extra] * len(chars)))
        else:
            results = [fn(group, rho, extra) for rho in chars]
        return {"group": group.name, "results": results}
    if not args.char:
        raise JumpLociError("--char or --chars is required")
    out = fn(group, charvar.parse_character(args.char), extra)
    out["group"] = group.name
    return out


# -- commands --------------------------------------------------------------------

def cmd_twisted(args):
    return _per_character(_twisted, args, args.k)


def cmd_symmetry(args):
    return _per_character(_symmetry, args, None)


def cmd_admissible(args):
    return _per_character(_admissible, args, args.box)


def cmd_lifts(args):
    return _per_character(_lifts, args, args.box)


def cmd_aomoto(args):
    group = load_group(args.group)
    alpha = ringlow.one_form(group, ringlow.parse_one_form(args.alpha))
    dim = ringlow.aomoto_h1_dim(group, alpha)
    out = {"group": group.name, "alpha": vec(alpha), "dim": dim,
           "b1": first_betti(group), "model": ringlow.MODEL}
    if args.k is not None:
        out["k"] = args.k
        out["in_R_k"] = dim >= args.k
    return out


def cmd_generic(args):
    group = load_group(args.group)
    w = load_torus(args.torus, group)
    return {"group": group.name, "torus": w.name, "params": w.d,
            "translated": w.is_translated(),
            "generic_h1": charvar.generic_h1_dim_along(group, w)}


def cmd_jump(args):
    group = load_group(args.group)
    w = load_torus(args.torus, group)
    out = jump_json(charvar.jumping_points_1d(group, w))
    out.update(group=group.name, torus=w.name, quasi_projective=group.quasi_projective)
    return out


def cmd_curve(args):
    if args.proper and args.punctures:
        raise JumpLociError("--proper requires --punctures 0")
    s = charvar.CurveDescriptor(args.genus, args.punctures)
    out = {"genus": s.genus, "punctures": s.punctures, "proper": s.proper,
           "chi": s.chi, "b1": s.b1, "h1_trivial": charvar.curve_h1_dim(s, True)}
    try:
        out["h1_nontrivial"] = charvar.curve_h1_dim(s, False)
    except JumpLociError:
        out["h1_nontrivial"] = None
    try:
        out["dim_W"], out["generic_dim"] = charvar.component_dims(s)
    except JumpLociError:
        out["dim_W"] = out["generic_dim"] = None
    return out


def _add_group(p, torus=False):
    p.add_argument("--group", required=True, metavar="PATH")
    if torus:
        p.add_argument("--torus", required=True, metavar="PATH")


def _add_chars(p):
    p.add_argument("--char", metavar="Q,...")
    p.add_argument("--chars", metavar="PATH", help="one character per line")
    p.add_argument("--jobs", type=int, default=1)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="jumploci",
        description="Cohomology jumping loci of rank-one local systems from group presentations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("twisted", help="dim H^0 and H^1 with twisted coefficients")
    _add_group(p)
    _add_chars(p)
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_twisted)

    p = sub.add_parser("aomoto", help="dim H^1 of the Aomoto complex")
    _add_group(p)
    p.add_argument("--alpha", required=True, metavar="Q,...")
    p.add_argument("--k", type=int)
    p.set_defaults(func=cmd_aomoto)

    p = sub.add_parser("generic", help="generic twisted dim H^1 along a torus")
    _add_group(p, torus=True)
    p.set_defaults(func=cmd_generic)

    p = sub.add_parser("jump", help="jumping points along a one-parameter torus")
    _add_group(p, torus=True)
    p.set_defaults(func=cmd_jump)

    p = sub.add_parser("admissible", help="1-admissibility audit over lifts in a box")
    _add_group(p)
    _add_chars(p)
    p.add_argument("--box", type=int, default=admiss.DEFAULT_BOX)
    p.set_defaults(func=cmd_admissible)

    p = sub.add_parser("symmetry", help="compare dim H^1 at a character and its inverse")
    _add_group(p)
    _add_chars(p)
    p.set_defaults(func=cmd_symmetry)

    p = sub.add_parser("curve", help="dimension formulas for a punctured curve")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--punctures", type=int, default=0)
    p.add_argument("--proper", action="store_true")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("lifts", help="list exponential lifts of a character in a box")
    _add_group(p)
    _add_chars(p)
    p.add_argument("--box", type=int, default=admiss.DEFAULT_BOX)
    p.set_defaults(func=cmd_lifts)

    for p in sub.choices.values():
        p.add_argument("--format", choices=("json", "table"), default="table")
    return parser


def _table(obj, indent=""):
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict):
            lines.append(f"{indent}{key}:")
            lines.extend(_table(value, indent + "  "))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{indent}{key}:")
            for i, item in enumerate(value):
                lines.append(f"{indent}  [{i}]")
                lines.extend(_table(item, indent + "    "))
        else:
            if isinstance(value, list):
                value = "[" + "; ".join(map(str, value)) + "]"
            lines.append(f"{indent}{key}: {value}")
    return lines


def render(result, fmt):
    if fmt == "json":
        return json.dumps(result, sort_keys=True, indent=2)
    return "\n".join(_table(result))


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "box", 0) < 0:
        parser.error("--box must be nonnegative")
    try:
        result = args.func(args)
    except SizeLimitExceeded as exc:
        print(f"jumploci: size limit: {exc}", file=sys.stderr)
        return 3
    except (JumpLociError, ValueError, ZeroDivisionError) as exc:
        print(f"jumploci: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    result = {"command": args.command, **result}
    print(render(result, args.format))
    return 0


if __name__ == "__main__":
    sys.exit(main())
