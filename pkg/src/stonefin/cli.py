"""Command-line interface: ``stonefin <command> ...``; every command prints JSON."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import compactify, funcalg, topo, ufspace, verify
from .io import FormatError, load_function, load_space, load_tensor, parse_field
from .valfield import AbsValue


def _emit(obj, out=None):
    text = json.dumps(obj, indent=2, default=str)
    if out:
        Path(out).write_text(text + "\n")
    else:
        print(text)


def cmd_space(args):
    space = load_space(args.space)
    if args.action == "check":
        return {"valid": True, "points": len(space), "opens": len(space.opens)}
    comps = topo.components(space)
    return {
        **space.to_json(),
        "components": comps,
        "clopens": [space.names(m) for m in space.clopen_masks],
        "discrete": space.is_discrete(),
        "connected": len(comps) == 1,
    }


def cmd_clopen(args):
    space = load_space(args.space)
    alg = topo.clopens(space)
    return {
        "atoms": [space.names(a) for a in alg.atoms],
        "elements": [space.names(topo.clopen_points(alg, a)) for a in alg.elements()],
        "size": alg.size,
    }


def cmd_uf(args):
    return ufspace.uf_to_json(ufspace.build_uf(load_space(args.space)))


def cmd_seminorm(args):
    f = load_function(args.function)
    ufx = ufspace.build_uf(f.space)
    return {
        "function": f.to_json(),
        "sup_norm": str(funcalg.sup_norm(f)),
        "algebraic_norm": str(funcalg.algebraic_norm(f)),
        "ultrafilter_seminorms": {
            ufx.point_name(i): str(funcalg.uf_seminorm(f, uf)) for i, uf in enumerate(ufx.ultrafilters)
        },
    }


def _ideal_json(space, m, f=None):
    out = {
        "zero_set": space.names(m.zero_points),
        "maximal": m.is_maximal,
        "ultrafilter": sorted(
            (space.names(topo.clopen_points(topo.clopens(space), a)) for a in funcalg.uf_from_ideal(m).members),
            key=lambda s: (len(s), s),
        ),
    }
    if f is not None:
        out["contains_function"] = f in m
        out["quotient_norm"] = str(funcalg.quotient_norm(f, m))
        out["residue"] = str(funcalg.residue(f, m))
    return out


def _space_and_field(args):
    if args.function:
        f = load_function(args.function)
        return f.space, f.field, f
    if not args.space:
        raise FormatError("give --function or --space with --field")
    return load_space(args.space), parse_field(args.field), None


def cmd_ideal(args):
    space, fld, f = _space_and_field(args)
    if args.point:
        ideals = [funcalg.IdealDescriptor.at_point(space, fld, args.point)]
    else:
        ideals = funcalg.enumerate_max_ideals(space, fld)
    return {"field": str(fld), "maximal_ideals": [_ideal_json(space, m, f) for m in ideals]}


def cmd_spectrum(args):
    space, fld, f = _space_and_field(args)
    ufx = ufspace.build_uf(space)
    pts = []
    for x in funcalg.spectrum(space, fld):
        entry = {
            "ultrafilter": ufx.point_name(ufx.index_of(x.ultrafilter)),
            "support_zero_set": space.names(x.support().zero_points),
        }
        if f is not None:
            entry["value"] = str(x(f))
        pts.append(entry)
    return {
        "field": str(fld),
        "points": pts,
        "homeomorphic_to_uf": funcalg.spectrum_matches_uf(space, fld),
    }


def cmd_gelfand(args):
    space = load_space(args.space)
    blocks = topo.parse_partition(args.partition)
    fld = parse_field(args.field)
    ok = compactify.gelfand_roundtrip(space, blocks, fld)
    masks = topo.validate_partition(space, blocks)
    alg = compactify.SubalgebraDescriptor.of_partition(space, fld, masks)
    recovered, q, _ = compactify.separation_quotient(space, alg)
    return {"partition": blocks, "recovered": recovered, "quotient": q.to_json(), "roundtrip": ok}


def cmd_approx(args):
    f = load_function(args.function)
    eps = AbsValue.parse(args.epsilon)
    g, blocks = compactify.locally_constant_approx(f, eps)
    return {
        "blocks": [f.space.names(b) for b in blocks],
        "approximation": g.to_json(),
        "error": str(funcalg.sup_norm(f - g)),
        "epsilon": str(eps),
        "within_epsilon": funcalg.sup_norm(f - g) <= eps,
        "norm_bound": funcalg.sup_norm(g) <= funcalg.sup_norm(f),
    }


def cmd_tensor(args):
    t, space = load_tensor(args.element, args.extension)
    image = compactify.apply_extension(t, space)
    return {
        "extension": t.extension.name,
        "image": image.to_json(),
        "tensor_norm": str(compactify.tensor_norm(t, space)),
        "sup_norm": str(funcalg.sup_norm(image)),
        "isometry": compactify.isometry_check(t, space),
    }


def cmd_verify(args):
    report = verify.run_suite(args.suite, seed=args.seed, max_points=args.max_points, samples=args.samples)
    return report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stonefin", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("space", help="validate or describe a space")
    p.add_argument("action", choices=["check", "describe"])
    p.add_argument("space")
    p.set_defaults(run=cmd_space)

    p = sub.add_parser("clopen", help="the clopen Boolean algebra")
    p.add_argument("space")
    p.set_defaults(run=cmd_clopen)

    p = sub.add_parser("uf", help="ultrafilter space")
    p.add_argument("action", choices=["build"])
    p.add_argument("space")
    p.set_defaults(run=cmd_uf)

    p = sub.add_parser("seminorm", help="sup norm and ultrafilter seminorms of a function")
    p.add_argument("--function", required=True)
    p.set_defaults(run=cmd_seminorm)

    for name, run in (("ideal", cmd_ideal), ("spectrum", cmd_spectrum)):
        p = sub.add_parser(name)
        p.add_argument("--function")
        p.add_argument("--space")
        p.add_argument("--field", default="trivial-fq:2")
        if name == "ideal":
            p.add_argument("--point", help="only the maximal ideal of this point")
        p.set_defaults(run=run)

    p = sub.add_parser("gelfand", help="partition <-> subalgebra roundtrip")
    p.add_argument("--space", required=True)
    p.add_argument("--partition", required=True, help='blocks separated by "|", e.g. "1,2|3"')
    p.add_argument("--field", default="trivial-q")
    p.set_defaults(run=cmd_gelfand)

    p = sub.add_parser("approx", help="locally constant approximation")
    p.add_argument("--function", required=True)
    p.add_argument("--epsilon", required=True, help='magnitude such as "2^0" or "3^-2"')
    p.set_defaults(run=cmd_approx)

    p = sub.add_parser("tensor-check", help="ground field extension isometry")
    p.add_argument("--extension", help="F4/F2 or Q(i)/Q")
    p.add_argument("--element", required=True)
    p.set_defaults(run=cmd_tensor)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-points", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--out")
    p.set_defaults(run=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.run(args)
    except (OSError, ValueError) as exc:
        # FieldError, TopologyError etc. are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if isinstance(result, verify.VerificationReport):
        _emit(result.to_json(), args.out)
        if args.out:
            print(f"{result.suite}: {'pass' if result.ok else 'FAIL'} ({len(result.checks)} checks)")
        return 0 if result.ok else 1
    _emit(result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
