"""Command-line front end.

One command per invocation: invariant, axioms, integrals, identities,
gauge-test, parse.  Machine mode prints `key = value` lines with scalars in
the canonical cyclotomic rendering; exit codes: 0 success, 1 validation
error, 2 computational failure.

The selector grammars below are the single source of truth: the argument
parser, the validators and the --help text are all generated from them.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .scalar import CycScalar, ScalarError
from .hopf import (HopfData, group_algebra, builtin_group, parse_group_table, taft,
                   dual, opposite, tensor_product, verify_axioms, integrals,
                   identity_suite, loads_hopf, HopfError)
from .twist import (trivial_cocycle, taft_bicharacter_cocycle, group_bicharacter_cocycle,
                    klein_dual_cocycle, loads_cocycle, fn_identity_suite, TwistError)
from .diagram import (parse_diagram, check_admissibility, compile_plan, DiagramError,
                      lens_fR_plan, lens_fL_plan)
from .invariants import InvariantRequest, evaluate_request, gauge_check, IntegralFailure
from .tensor import TensorError

ALGEBRA_FORMS = [
    ("group:<name>", "builtin group algebra over Q: z<n>, z2xz2, s3, q8"),
    ("group:<path>", "group algebra from a Cayley-table file (names line + rows)"),
    ("taft:<n>", "Taft algebra of dimension n^2 over Q(zeta_n)"),
    ("dual:<algebra>", "dual Hopf algebra"),
    ("op:<algebra>", "opposite Hopf algebra"),
    ("tensor:<A>+<B>", "tensor product (split at the first top-level '+')"),
    ("file:<path>", "structure-constant file (see README for the format)"),
]

MANIFOLD_FORMS = [
    ("s3", "the 3-sphere with its standard diagram framing (value 1)"),
    ("s2xs1", "S^2 x S^1 (value Tr(S^2))"),
    ("q8", "the quaternion quotient S^3/Q8, genus-2 diagram"),
    ("lens:<n>:<k>:<fR|fL>", "lens space closed form (fR needs n-k odd, fL needs k odd)"),
    ("nu:<n>", "n-th indicator, any integer n"),
    ("nunk:<n>:<k>", "nu_{n,k} for coprime n > k > 0"),
    ("nuprime:<n>:<k>", "nu'_{n,k} for coprime n > k > 0"),
    ("nutilde:<n>:<k>", "shuffled indicator for coprime n > 1, k"),
    ("seifert:<m>:<n>", "genus-2 Seifert manifold, m, n >= 1"),
    ("planR:<n>:<k> | planL:<n>:<k>", "lens space via the diagram-plan path"),
    ("plan:<path>", "framed-diagram file, compiled and evaluated"),
]

COCYCLE_FORMS = [
    ("trivial", "F = 1 x 1"),
    ("taft-bichar:<m>", "zeta^(m a b) bicharacter on a taft:<n> algebra"),
    ("cyclic-bichar:<m>", "zeta^(m a b) bicharacter on group:z<n>"),
    ("klein-dual", "(-1)^(a1 b2) on dual:group:z2xz2"),
    ("file:<path>", "cocycle file (`F i j = <scalar>` lines), verified on load"),
]


def _forms_text():
    out = ["algebra selectors:"]
    out += [f"  {form:28s} {desc}" for form, desc in ALGEBRA_FORMS]
    out.append("manifold selectors:")
    out += [f"  {form:28s} {desc}" for form, desc in MANIFOLD_FORMS]
    out.append("cocycle selectors:")
    out += [f"  {form:28s} {desc}" for form, desc in COCYCLE_FORMS]
    return "\n".join(out)


class SelectorError(ValueError):
    pass


def parse_algebra(sel: str):
    """Returns (HopfData, description); raises SelectorError on bad syntax."""
    if sel.startswith("group:"):
        arg = sel[len("group:"):]
        if Path(arg).is_file():
            G = parse_group_table(Path(arg).read_text())
        else:
            try:
                G = builtin_group(arg)
            except HopfError:
                raise SelectorError(f"unknown group {arg!r} and no such file") from None
        return group_algebra(G), sel
    if sel.startswith("taft:"):
        arg = sel[len("taft:"):]
        if not arg.isdigit() or int(arg) < 2:
            raise SelectorError("taft:<n> needs an integer n >= 2")
        n = int(arg)
        return taft(n, CycScalar.zeta(n)), sel
    if sel.startswith("dual:"):
        H, desc = parse_algebra(sel[len("dual:"):])
        return dual(H), f"dual:{desc}"
    if sel.startswith("op:"):
        H, desc = parse_algebra(sel[len("op:"):])
        return opposite(H), f"op:{desc}"
    if sel.startswith("tensor:"):
        body = sel[len("tensor:"):]
        depth = 0
        split = None
        for i, ch in enumerate(body):
            if ch == "+" and depth == 0:
                split = i
                break
        if split is None:
            raise SelectorError("tensor:<A>+<B> needs a top-level '+'")
        A, da = parse_algebra(body[:split])
        B, db = parse_algebra(body[split + 1:])
        return tensor_product(A, B), f"tensor:{da}+{db}"
    if sel.startswith("file:"):
        path = Path(sel[len("file:"):])
        if not path.is_file():
            raise SelectorError(f"no such file {path}")
        return loads_hopf(path.read_text()), sel
    raise SelectorError(f"bad algebra selector {sel!r}; forms: "
                        + ", ".join(form for form, _ in ALGEBRA_FORMS))


def parse_manifold(sel: str) -> InvariantRequest:
    parts = sel.split(":")
    kind = parts[0]
    try:
        if kind in ("s3", "s2xs1", "q8") and len(parts) == 1:
            return InvariantRequest(kind)
        if kind == "lens" and len(parts) == 4:
            return InvariantRequest("lens", (int(parts[1]), int(parts[2]), parts[3]))
        if kind == "nu" and len(parts) == 2:
            return InvariantRequest("nu", (int(parts[1]),))
        if kind == "nunk" and len(parts) == 3:
            return InvariantRequest("nu_nk", (int(parts[1]), int(parts[2])))
        if kind == "nuprime" and len(parts) == 3:
            return InvariantRequest("nu_prime", (int(parts[1]), int(parts[2])))
        if kind == "nutilde" and len(parts) == 3:
            return InvariantRequest("nu_tilde", (int(parts[1]), int(parts[2])))
        if kind == "seifert" and len(parts) == 3:
            return InvariantRequest("seifert", (int(parts[1]), int(parts[2])))
        if kind == "planR" and len(parts) == 3:
            return InvariantRequest("plan", plan=lens_fR_plan(int(parts[1]), int(parts[2])))
        if kind == "planL" and len(parts) == 3:
            return InvariantRequest("plan", plan=lens_fL_plan(int(parts[1]), int(parts[2])))
        if kind == "plan" and len(parts) >= 2:
            path = Path(sel[len("plan:"):])
            if not path.is_file():
                raise SelectorError(f"no such diagram file {path}")
            D = parse_diagram(path.read_text())
            return InvariantRequest("plan", plan=compile_plan(D, name=path.name))
    except (ValueError, DiagramError) as exc:
        if isinstance(exc, SelectorError):
            raise
        raise SelectorError(f"bad manifold selector {sel!r}: {exc}") from None
    raise SelectorError(f"bad manifold selector {sel!r}; forms: "
                        + ", ".join(form for form, _ in MANIFOLD_FORMS))


def parse_cocycle(sel: str, H: HopfData, algebra_sel: str):
    if sel == "trivial":
        return trivial_cocycle(H)
    if sel.startswith("taft-bichar:"):
        if not algebra_sel.startswith("taft:"):
            raise SelectorError("taft-bichar needs --algebra taft:<n>")
        n = int(algebra_sel.split(":")[1])
        power = int(sel.split(":")[1])
        return taft_bicharacter_cocycle(H, n, CycScalar.zeta(n), power)
    if sel.startswith("cyclic-bichar:"):
        if not (algebra_sel.startswith("group:z") and algebra_sel[len("group:z"):].isdigit()):
            raise SelectorError("cyclic-bichar needs --algebra group:z<n>")
        n = int(algebra_sel[len("group:z"):])
        power = int(sel.split(":")[1])
        return group_bicharacter_cocycle(H, builtin_group(f"z{n}"), CycScalar.zeta(n), power)
    if sel == "klein-dual":
        if algebra_sel != "dual:group:z2xz2":
            raise SelectorError("klein-dual needs --algebra dual:group:z2xz2")
        return klein_dual_cocycle(H)
    if sel.startswith("file:"):
        path = Path(sel[len("file:"):])
        if not path.is_file():
            raise SelectorError(f"no such cocycle file {path}")
        return loads_cocycle(path.read_text(), H)
    raise SelectorError(f"bad cocycle selector {sel!r}; forms: "
                        + ", ".join(form for form, _ in COCYCLE_FORMS))


# --------------------------------------------------------------------------


def _emit(machine, key, value, human=None):
    if machine:
        print(f"{key} = {value}")
    else:
        print(human if human is not None else value)


def cmd_invariant(args):
    H, _ = parse_algebra(args.algebra)
    req = parse_manifold(args.manifold)
    value = evaluate_request(req, H)
    _emit(args.machine, "invariant", value.render())
    return 0


def cmd_axioms(args):
    H, desc = parse_algebra(args.algebra)
    rep = verify_axioms(H)
    if args.machine:
        for c in rep.checks:
            print(f"{c.name.replace(' ', '_')} = {'pass' if c.ok else 'fail'}")
        print(f"all = {'pass' if rep.ok else 'fail'}")
    else:
        print(f"# {desc}: dim {H.dim} over Q(zeta_{H.field_order})")
        print(rep)
    return 0


def cmd_integrals(args):
    H, desc = parse_algebra(args.algebra)
    I = integrals(H)
    if args.machine:
        for i in sorted(I.Lambda):
            print(f"Lambda {i} = {I.Lambda[i].render()}")
        for i, c in enumerate(I.lam):
            if c:
                print(f"lambda {i} = {c.render()}")
        for i in sorted(I.g):
            print(f"g {i} = {I.g[i].render()}")
        for i, c in enumerate(I.alpha):
            if c:
                print(f"alpha {i} = {c.render()}")
        print(f"alpha_at_g = {I.alpha_at_g.render()}")
    else:
        print(f"# {desc}: normalized integral pair and distinguished grouplikes")
        print(f"Lambda   = {H.render_vec(I.Lambda)}")
        print(f"lambda   = covector [" + ", ".join(c.render() for c in I.lam) + "]")
        print(f"g        = {H.render_vec(I.g)}")
        print(f"alpha    = covector [" + ", ".join(c.render() for c in I.alpha) + "]")
        print(f"alpha(g) = {I.alpha_at_g.render()}")
    return 0


def cmd_identities(args):
    H, desc = parse_algebra(args.algebra)
    reports = [identity_suite(H)]
    if args.cocycle:
        C = parse_cocycle(args.cocycle, H, args.algebra)
    else:
        C = trivial_cocycle(H)
    reports.append(fn_identity_suite(C, max_n=args.max_n))
    all_ok = True
    for rep in reports:
        if not args.machine:
            print(f"# {rep.title}")
        for c in rep.checks:
            all_ok &= c.ok
            status = "pass" if c.ok else "fail"
            if args.machine:
                print(f"{c.name.replace(' ', '_')} = {status}")
            else:
                print(f"{status}  {c.name}")
    _emit(args.machine, "all", "pass" if all_ok else "fail",
          human=f"=> {'all identities hold' if all_ok else 'FAILURES above'}")
    return 0


def cmd_gauge_test(args):
    H, _ = parse_algebra(args.algebra)
    req = parse_manifold(args.manifold)
    C = parse_cocycle(args.cocycle, H, args.algebra)
    rep = gauge_check(req, C)
    if args.machine:
        print(f"value_h = {rep.left.render()}")
        print(f"value_hf = {rep.right.render()}")
        print(f"result = {'EQUAL' if rep.equal else 'DIFFER'}")
    else:
        print(rep)
    return 0


def cmd_parse(args):
    path = Path(args.diagram)
    if not path.is_file():
        raise SelectorError(f"no such diagram file {path}")
    D = parse_diagram(path.read_text())
    adm = check_admissibility(D)
    if args.machine:
        print(f"genus = {D.genus}")
        print(f"points = {D.point_count()}")
        for side, name, ok in adm:
            print(f"admissible_{side}_{name} = {'yes' if ok else 'no'}")
        if all(ok for (_, _, ok) in adm):
            plan = compile_plan(D, name=path.name)
            print(f"sigma = {' '.join(str(x) for x in plan.sigma)}")
            print(f"s = {' '.join(str(x) for x in plan.s)}")
            print(f"t = {' '.join(str(x) for x in plan.t)}")
    else:
        print(f"parsed genus-{D.genus} diagram with {D.point_count()} points")
        for side, name, ok in adm:
            print(f"  {side} {name}: {'admissible' if ok else 'NOT admissible'}")
        if all(ok for (_, _, ok) in adm):
            plan = compile_plan(D, name=path.name)
            print(f"  sigma = {list(plan.sigma)}")
            print(f"  s     = {list(plan.s)}")
            print(f"  t     = {list(plan.t)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hopfinv",
        description="Exact Kuperberg invariants of framed 3-manifolds over "
                    "finite-dimensional Hopf algebras.",
        epilog=_forms_text(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--machine", action="store_true",
                        help="deterministic `key = value` output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariant", help="compute one invariant value")
    p.add_argument("--manifold", required=True)
    p.add_argument("--algebra", required=True)
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("axioms", help="verify the Hopf axioms")
    p.add_argument("--algebra", required=True)
    p.set_defaults(func=cmd_axioms)

    p = sub.add_parser("integrals", help="solve for the normalized integral pair")
    p.add_argument("--algebra", required=True)
    p.set_defaults(func=cmd_integrals)

    p = sub.add_parser("identities", help="run the integral and F_n identity suites")
    p.add_argument("--algebra", required=True)
    p.add_argument("--cocycle", default=None)
    p.add_argument("--max-n", type=int, default=5)
    p.set_defaults(func=cmd_identities)

    p = sub.add_parser("gauge-test", help="compare an invariant on H and on H_F")
    p.add_argument("--manifold", required=True)
    p.add_argument("--algebra", required=True)
    p.add_argument("--cocycle", required=True)
    p.set_defaults(func=cmd_gauge_test)

    p = sub.add_parser("parse", help="parse a diagram file and compile its plan")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_parse)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except (SelectorError, DiagramError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (HopfError, TwistError, ScalarError, TensorError, IntegralFailure) as exc:
        print(f"computation failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
