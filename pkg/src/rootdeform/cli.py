"""Command-line front end.

Exit status: 0 on success, 1 when a verification or invariance check
fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import deform, export, notation, reduced, weyl
from .deform import AnsatzError
from .scan import scan as run_scan
from .scan import summary_table, to_jsonl

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _float_list(text: str) -> list[float]:
    try:
        return [float(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--system", default="E8", help="catalog name (A<n>, D<n>, E6-8, B2, G2, ...)")
    p.add_argument("--cartan-file", help='JSON file {"cartan": [[...]], "minus": [...]}')
    p.add_argument("--minus", type=_int_list, help="minus-colored vertices of the element")
    p.add_argument("--plus", type=_int_list, help="plus-colored vertices of the element")
    p.add_argument("--word", type=_int_list, help="generator word, e.g. 3,5,7,2,4,6,8")
    p.add_argument("--epsilon", type=float, help="deformation parameter for numeric output")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--out", help="write output to this file")
    p.add_argument("--variant", choices=deform.VARIANTS, default=deform.CONSISTENT,
                   help="exponent assignment of the deformation ansatz")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="rootdeform",
        description="Antilinearly invariant deformations of root systems from factorized "
                    "Weyl group elements.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("show-element", parents=[common], help="matrix, factors and order")
    sub.add_parser("order", parents=[common], help="order of the element")
    p = sub.add_parser("theta", parents=[common], help="deformation matrix")
    p.add_argument("--roots", action="store_true", help="also list the deformed simple roots")
    sub.add_parser("verify", parents=[common], help="check the five constraints exactly")
    p = sub.add_parser("orbits", parents=[common], help="reduced orbit table")
    p.add_argument("--pretty", action="store_true", help="Unicode superscripts")
    p.add_argument("--gamma", action="store_true", help="seed orbits with c_i alpha_i")
    sub.add_parser("invariance", parents=[common], help="action of the factors on the root space")
    p = sub.add_parser("scan", parents=[common], help="classify all bicolored candidates")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--allow-large", action="store_true")
    p = sub.add_parser("export", parents=[common], help="numeric root data for model studies")
    p.add_argument("--model", choices=export.MODELS, default=export.CALOGERO)
    p.add_argument("--omega", type=float, default=1.0)
    p.add_argument("--coupling", type=float, default=1.0)
    p.add_argument("--sample-q", type=_float_list,
                   help="sample point as pairings with the simple roots")
    return parser


def _root_system(args) -> weyl.RootSystem:
    if args.cartan_file:
        return weyl.load_root_system(args.cartan_file)
    return weyl.build_root_system(args.system)


def _factorized(args, rs) -> deform.FactorizedElement:
    if args.word is not None:
        if args.minus is not None or args.plus is not None:
            raise UsageError("give either --word or --minus/--plus, not both")
        return deform.factorize_word(rs, args.word)
    if args.minus is None and args.plus is None:
        raise UsageError("specify the element with --minus/--plus or --word")
    return deform.factorize(rs, args.minus or [], args.plus or [])


def _element(args, rs) -> tuple[weyl.WeylElement, deform.FactorizedElement | None]:
    """Any word is accepted here; the factorized form is attached when it exists."""
    if args.word is not None and args.minus is None and args.plus is None:
        w = weyl.compose(args.word, rs)
        try:
            return w, deform.factorize_word(rs, args.word)
        except weyl.RootSystemError:
            return w, None
    fe = _factorized(args, rs)
    return fe.sigma, fe


def _matrix_text(m) -> str:
    cells = [[str(x) for x in row] for row in m]
    width = max(len(c) for row in cells for c in row)
    return "\n".join("  ".join(c.rjust(width) for c in row) for row in cells) + "\n"


def _complex_text(m) -> str:
    return "\n".join("  ".join(f"{z.real:+.6f}{z.imag:+.6f}i" for z in row) for row in m) + "\n"


def cmd_show_element(args, rs):
    w, fe = _element(args, rs)
    order = weyl.element_order(w)
    if args.json:
        data = {"system": rs.name, "word": list(w.word), "matrix": w.to_json()["matrix"],
                "order": order}
        if fe is not None:
            data.update(fe.to_json())
        return json.dumps(data, indent=1) + "\n", EXIT_OK
    text = f"system: {rs.name}\nword: {list(w.word)}\norder: {order}\n"
    if fe is not None:
        text += f"minus factor: {list(fe.v_minus)}\nplus factor: {list(fe.v_plus)}\n"
    return text + "matrix (row i = image of alpha_i):\n" + _matrix_text(w.matrix), EXIT_OK


def cmd_order(args, rs):
    w, _ = _element(args, rs)
    order = weyl.element_order(w)
    if args.json:
        return json.dumps({"order": order}) + "\n", EXIT_OK
    return f"{order}\n", EXIT_OK


def cmd_theta(args, rs):
    fe = _factorized(args, rs)
    theta = deform.build_theta(fe, args.variant)
    roots = deform.deform_simple_roots(theta, rs) if args.roots else None
    if args.json:
        data = {"theta": theta.to_json()}
        if args.epsilon is not None:
            data["epsilon"] = args.epsilon
            data["numeric"] = theta.numeric_json(args.epsilon)
        if roots is not None:
            data["deformed_simple_roots"] = [[x.to_json() for x in v] for v in roots]
        return json.dumps(data) + "\n", EXIT_OK
    if args.epsilon is not None:
        text = f"theta at eps={args.epsilon}:\n" + _complex_text(theta.evaluate(args.epsilon))
    else:
        text = _matrix_text(theta.entries)
    if roots is not None:
        text += "".join(f"α̃{i} = {deform.format_ring_vector(v)}\n"
                        for i, v in enumerate(roots, 1))
    return text, EXIT_OK


def cmd_verify(args, rs):
    fe = _factorized(args, rs)
    theta = deform.build_theta(fe, args.variant)
    report = deform.verify_constraints(theta, fe)
    status = EXIT_OK if report.passed else EXIT_FAIL
    if args.json:
        return json.dumps(report.to_json()) + "\n", status
    lines = [f"{name:<20} {'PASS' if ok else 'FAIL'}" for name, ok in report.items()]
    lines.append(f"{'det':<20} {report.det_value}")
    lines.append(f"{'trivial':<20} {theta.is_trivial()}")
    return "\n".join(lines) + "\n", status


def cmd_orbits(args, rs):
    w, fe = _element(args, rs)
    if fe is not None:
        space = reduced.reduced_root_space(fe, args.gamma)
    else:
        space = reduced.element_root_space(rs, w, args.gamma)
    if args.json:
        return json.dumps(space.to_json()) + "\n", EXIT_OK
    text = notation.render_orbit_table(space, args.pretty)
    text += (f"\norder {space.order}; {space.multiset_size} roots with multiplicity, "
             f"{len(space.root_set)} distinct\n")
    periods = space.stabilizer_periods()
    if periods:
        text += "orbits closing early (vertex: period): " + ", ".join(
            f"{i}: {p}" for i, p in sorted(periods.items())) + "\n"
    return text, EXIT_OK


def cmd_invariance(args, rs):
    fe = _factorized(args, rs)
    space = reduced.reduced_root_space(fe)
    report = reduced.check_invariance(fe, space)
    data = report.to_json()
    ok = report.invariant
    if args.epsilon is not None and fe.order % 4 == 0:
        theta = deform.build_theta(fe, args.variant)
        dspace = reduced.deformed_space(theta, space)
        numeric = {}
        for action, s in ((report.minus, fe.sigma_minus), (report.plus, fe.sigma_plus)):
            numeric[action.factor] = dspace.antilinear_permutation(args.epsilon, s) is not None
        data["numeric_permutation"] = numeric
        ok = ok and all(numeric.values())
    status = EXIT_OK if ok else EXIT_FAIL
    if args.json:
        return json.dumps(data) + "\n", status
    lines = []
    for action in (report.minus, report.plus):
        sym = "σ̃-" if action.factor == "minus" else "σ̃+"
        for s in action.simple:
            wit = ", ".join(f"σ̃^{n} α{j}" for n, j in s.witnesses) or "not in the space"
            lines.append(f"{sym} α{s.vertex} = {notation.format_root(s.image)}  [{wit}]")
        lines.append(f"{sym} leaves the reduced root space invariant: {action.invariant}")
        if action.offending:
            lines.append("  roots mapped outside: " + " ".join(
                notation.format_root(r) for r in action.offending))
    lines.append(f"distinct roots: {len(space.root_set)}")
    if "numeric_permutation" in data:
        lines.append(f"antilinear permutation at eps={args.epsilon}: {data['numeric_permutation']}")
    return "\n".join(lines) + "\n", status


def cmd_scan(args, rs):
    records = run_scan(rs, workers=args.workers, variant=args.variant,
                        allow_large=args.allow_large)
    jsonl = to_jsonl(records)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(jsonl)
        args.out = None
        return summary_table(records), EXIT_OK
    return (jsonl if args.json else summary_table(records)), EXIT_OK


def cmd_export(args, rs):
    fe = _factorized(args, rs)
    theta = deform.build_theta(fe, args.variant)
    report = deform.verify_constraints(theta, fe)
    if not report.passed:
        return "deformation matrix fails the constraint check\n", EXIT_FAIL
    space = reduced.reduced_root_space(fe)
    eps = 0.0 if args.epsilon is None else args.epsilon
    data = export.export_model(space, theta, eps, args.model, args.omega, args.coupling,
                               args.sample_q)
    if args.out:
        export.write_export(data, args.out)
        args.out = None
        return f"wrote {data['metadata']['count']} roots to file\n", EXIT_OK
    return json.dumps(data, sort_keys=True) + "\n", EXIT_OK


COMMANDS = {
    "show-element": cmd_show_element,
    "order": cmd_order,
    "theta": cmd_theta,
    "verify": cmd_verify,
    "orbits": cmd_orbits,
    "invariance": cmd_invariance,
    "scan": cmd_scan,
    "export": cmd_export,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        rs = _root_system(args)
        text, status = COMMANDS[args.command](args, rs)
    except (UsageError, weyl.RootSystemError, AnsatzError, IndexError, ValueError,
            FileNotFoundError) as exc:
        print(f"rootdeform {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
