"""Command-line surface.

    mckoszul check --input sl2
    mckoszul cohomology --input ce-sl2 --weight 3
    mckoszul mc-check --input g2dim --element "x"
    mckoszul gauge --input nil4b --element "x1" --xi "3/2*w"
    mckoszul homotopy --input ut3 --element "q" --xi "1/2*e12"
    mckoszul ce --input sl2 [--weight 3] [--out ce-sl2.alg]
    mckoszul adjoint-check --input g2dim --coeff k-eps-3 --trials 10
    mckoszul comass-check --input dual-numbers --weight 4
    mckoszul pbw --input heisenberg --weight 3
    mckoszul fixtures

Exit codes: 0 all checks pass, 1 a mathematical check fails, 2 usage
error.  Input names resolve against the fixture library first, then the
filesystem.
"""

from __future__ import annotations

import argparse
import random
import sys
from fractions import Fraction
from pathlib import Path

from . import fixtures
from .adjunction import (AssocAdjunction, LieAdjunction, ideal_power_layers,
                         random_gauge_parameter, sample_mc)
from .assoc import (DgAlgebra, GaugeElement, check_axioms, gauge_act,
                    interval_algebra, mc_check, tensor_algebra)
from .duality import (LocalArtinianAlgebra, Presentation, bar, ce, cobar,
                      comass_check, harrison, local_artinian,
                      presentation_d_squared_ok, stable_degrees, truncate)
from .fileformat import ElementSyntaxError, ParseError, parse, parse_element, print_algebra
from .graded import DSquareError, Vec, cohomology
from .lie import (DgLieAlgebra, check_lie_axioms, exp_gauge, gauge_to_sullivan,
                  mc_check_lie, pbw_dims, sullivan_to_gauge,
                  symmetric_power_dims)
from .report import Report


class UsageError(Exception):
    pass


def _load_input(name: str):
    try:
        return fixtures.load(name)
    except fixtures.UnknownFixture:
        pass
    path = Path(name)
    if path.exists():
        try:
            return parse(path.read_text())
        except ParseError as exc:
            raise UsageError(f"{name}: {exc}") from None
    raise UsageError(f"{name!r} is neither a fixture nor a readable file")


def _artinian(obj, name: str) -> LocalArtinianAlgebra:
    if not isinstance(obj, DgAlgebra):
        raise UsageError(f"{name} must be an associative algebra")
    try:
        return local_artinian(obj)
    except ValueError as exc:
        raise UsageError(f"{name}: {exc}") from None


def _echo(report: Report, name: str, obj) -> None:
    report.add_input(name, print_algebra(obj))


def _element(expr: str, space) -> Vec:
    try:
        return parse_element(expr, space)
    except ElementSyntaxError as exc:
        raise UsageError(str(exc)) from None


def _emit(report: Report, args) -> int:
    rendered = report.render(args.format)
    if getattr(args, "out", None) and not getattr(args, "_out_used", False):
        Path(args.out).write_text(rendered)
    else:
        sys.stdout.write(rendered)
    return report.exit_code()


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_check(args) -> int:
    obj = _load_input(args.input)
    report = Report("check")
    _echo(report, args.input, obj)
    if isinstance(obj, DgLieAlgebra):
        axioms = check_lie_axioms(obj)
        for name, ok, witness in axioms.checks:
            report.check(name, ok, witness)
    elif isinstance(obj, DgAlgebra):
        axioms = check_axioms(obj)
        for name, ok, witness in axioms.checks:
            report.check(name, ok, witness)
    else:
        report.check("d-squared-on-generators", presentation_d_squared_ok(obj))
    return _emit(report, args)


def cmd_cohomology(args) -> int:
    obj = _load_input(args.input)
    report = Report("cohomology")
    _echo(report, args.input, obj)
    if isinstance(obj, Presentation):
        weight = args.weight or 3
        report.value("weight", weight)
        stable = stable_degrees(obj, weight)
        if stable is None:
            report.value("stable-degrees", "none (generators in degrees <= 0)")
        else:
            report.value("stable-degrees", f"<= {stable}")
        alg = truncate(obj, weight)
    else:
        alg = obj
    try:
        h = cohomology(alg.complex())
    except DSquareError as exc:
        report.check("d-squared", False, f"degree {exc.degree}")
        return _emit(report, args)
    report.check("d-squared", True)
    rows = []
    for deg in sorted(h):
        dim, reps = h[deg]
        rows.append((f"H^{deg}", dim))
    report.table("cohomology", rows)
    for deg in sorted(h):
        dim, reps = h[deg]
        for i, rep in enumerate(reps):
            report.value(f"representative H^{deg}[{i}]", rep)
    return _emit(report, args)


def cmd_mc_check(args) -> int:
    obj = _load_input(args.input)
    report = Report("mc-check")
    _echo(report, args.input, obj)
    if not args.element:
        raise UsageError("mc-check needs --element")
    if isinstance(obj, Presentation):
        raise UsageError("mc-check expects a dga or dgla input")
    x = _element(args.element, obj.space)
    report.value("element", x)
    try:
        if isinstance(obj, DgLieAlgebra):
            ok = mc_check_lie(obj, x)
            witness = "" if ok else str(obj.d(x) + obj.bracket(x, x).scale(Fraction(1, 2)))
        else:
            ok = mc_check(obj, x)
            witness = "" if ok else str(obj.d(x) + obj.mul(x, x))
    except ValueError as exc:
        report.check("degree", False, str(exc))
        return _emit(report, args)
    report.check("maurer-cartan", ok, witness)
    return _emit(report, args)


def cmd_gauge(args) -> int:
    obj = _load_input(args.input)
    report = Report("gauge")
    _echo(report, args.input, obj)
    if not args.element or not args.xi:
        raise UsageError("gauge needs --element and --xi")
    if isinstance(obj, Presentation):
        raise UsageError("gauge expects a dga or dgla input")
    x = _element(args.element, obj.space)
    xi = _element(args.xi, obj.space)
    report.value("element", x)
    report.value("parameter", xi)
    try:
        if isinstance(obj, DgLieAlgebra):
            result = exp_gauge(obj, xi, x)
            report.check("maurer-cartan outputs", mc_check_lie(obj, result))
        else:
            g = GaugeElement(obj, xi)
            result = gauge_act(obj, g, x)
            report.check("maurer-cartan outputs", mc_check(obj, result))
        report.value("result", result)
    except (ValueError, AssertionError) as exc:
        report.check("gauge-action", False, str(exc))
    return _emit(report, args)


def cmd_homotopy(args) -> int:
    obj = _load_input(args.input)
    report = Report("homotopy")
    _echo(report, args.input, obj)
    if not args.element or not args.xi:
        raise UsageError("homotopy needs --element and --xi")
    if isinstance(obj, DgLieAlgebra):
        x = _element(args.element, obj.space)
        xi = _element(args.xi, obj.space)
        try:
            path, z = gauge_to_sullivan(obj, x, xi, args.tdeg)
        except (ValueError, AssertionError) as exc:
            report.check("sullivan-path", False, str(exc))
            return _emit(report, args)
        report.check("path is MC", path.mc_check(z))
        report.value("endpoint t=0", path.eval0(z))
        report.value("endpoint t=1", path.eval1(z))
        for k, v in enumerate(z.poly):
            if v:
                report.value(f"poly t^{k}", v)
        for k, v in enumerate(z.dtp):
            if v:
                report.value(f"dt t^{k}", v)
        xi2 = sullivan_to_gauge(obj, path, z)
        report.check("integrates back to a gauge parameter",
                     exp_gauge(obj, xi2, path.eval0(z)) == path.eval1(z))
        report.value("integrated parameter", xi2)
    elif isinstance(obj, DgAlgebra):
        x = _element(args.element, obj.space)
        i = _element(args.xi, obj.space)
        tensor = tensor_algebra(obj, interval_algebra())
        try:
            from .assoc import gauge_to_homotopy, homotopy_to_gauge
            g = GaugeElement(obj, i)
            z = gauge_to_homotopy(obj, tensor, x, g)
            report.check("homotopy is MC", mc_check(tensor, z))
            report.value("homotopy", z)
            g2, z1, z2 = homotopy_to_gauge(obj, tensor, z)
            report.check("round trip recovers the gauge element",
                         g2.ideal_part == g.ideal_part)
            report.value("endpoints", f"{z1} ~ {z2}")
        except (ValueError, AssertionError) as exc:
            report.check("homotopy", False, str(exc))
    else:
        raise UsageError("homotopy expects a dga or dgla input")
    return _emit(report, args)


def _functor_command(args, functor_name: str) -> int:
    obj = _load_input(args.input)
    report = Report(functor_name)
    _echo(report, args.input, obj)
    if functor_name == "ce":
        if not isinstance(obj, DgLieAlgebra):
            raise UsageError("ce expects a dg Lie algebra")
        pres = ce(obj)
    elif functor_name == "bar":
        if not isinstance(obj, DgAlgebra) or obj.augmentation is None:
            raise UsageError("bar expects an augmented dg algebra")
        pres = bar(obj)
    elif functor_name == "cobar":
        pres = cobar(_artinian(obj, args.input))
    else:
        artinian = _artinian(obj, args.input)
        try:
            pres = harrison(artinian)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    report.check("d-squared-on-generators", presentation_d_squared_ok(pres))
    payload = print_algebra(pres)
    if args.out:
        Path(args.out).write_text(payload)
        report.value("written", args.out)
        args._out_used = True
    else:
        report.block("presentation", payload)
    if args.weight:
        alg = truncate(pres, args.weight)
        report.value("truncation-weight", args.weight)
        report.value("truncation-dimension", alg.space.total_dim())
        if isinstance(alg, DgLieAlgebra):
            report.check("truncation axioms", check_lie_axioms(alg).ok)
        else:
            report.check("truncation axioms", check_axioms(alg).ok)
    return _emit(report, args)


def cmd_adjoint_check(args) -> int:
    obj = _load_input(args.input)
    if not args.coeff:
        raise UsageError("adjoint-check needs --coeff")
    coeff_obj = _load_input(args.coeff)
    coeff = _artinian(coeff_obj, args.coeff)
    report = Report("adjoint-check")
    _echo(report, args.input, obj)
    _echo(report, args.coeff, coeff.algebra)
    rng = random.Random(args.seed)
    layers = ideal_power_layers(coeff)
    if isinstance(obj, DgLieAlgebra):
        adj = LieAdjunction.build(coeff, obj)
    elif isinstance(obj, DgAlgebra) and obj.augmentation is not None:
        adj = AssocAdjunction.build(coeff, obj)
    else:
        raise UsageError("adjoint-check expects a dgla or an augmented dga")
    trials = args.trials
    found = 0
    failures = 0
    for _ in range(trials):
        x = sample_mc(adj.tensor, layers, rng)
        if x is None:
            continue
        found += 1
        if not adj.correspondence_valid(x):
            failures += 1
    report.value("requested-trials", trials)
    report.value("mc-elements-sampled", found)
    report.check("all correspondences round-trip", failures == 0,
                 f"{failures} failures")
    report.check("sampling produced elements", found > 0)
    return _emit(report, args)


def cmd_comass_check(args) -> int:
    obj = _load_input(args.input)
    report = Report("comass-check")
    _echo(report, args.input, obj)
    weight = args.weight or 3
    report.value("weight", weight)
    ran_any = False
    if isinstance(obj, DgAlgebra):
        from .assoc import is_commutative
        if is_commutative(obj) and obj.augmentation is not None:
            try:
                artinian = local_artinian(obj)
            except ValueError:
                artinian = None
            if artinian is not None:
                for name, ok, witness in comass_check(artinian, weight).checks:
                    report.check(name, ok, witness)
                ran_any = True
        if obj.augmentation is not None:
            for name, ok, witness in comass_check(obj, weight).checks:
                report.check(name, ok, witness)
            ran_any = True
    if not ran_any:
        raise UsageError("comass-check expects a local commutative algebra or "
                         "an augmented dg algebra")
    return _emit(report, args)


def cmd_pbw(args) -> int:
    obj = _load_input(args.input)
    if not isinstance(obj, DgLieAlgebra):
        raise UsageError("pbw expects a dg Lie algebra")
    weight = args.weight or 3
    report = Report("pbw")
    _echo(report, args.input, obj)
    dims = pbw_dims(obj, weight)
    oracle = symmetric_power_dims(obj.space, weight)
    report.table("pbw-dimensions", [(f"weight {w}", d) for w, d in enumerate(dims)])
    report.check("matches graded symmetric powers", dims == oracle,
                 f"{dims} vs {oracle}")
    return _emit(report, args)


def cmd_fixtures(args) -> int:
    report = Report("fixtures")
    for name in sorted(fixtures._SIMPLE):
        report.value(name, fixtures.describe(name))
    report.value("abelian(n[,d1,...])", "abelian dg Lie algebra with chosen degrees")
    for prefix in ("ce-", "bar-", "cobar-", "harr-"):
        report.value(prefix + "<fixture>", "derived presentation")
    return _emit(report, args)


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mckoszul",
        description="Exact-rational Maurer-Cartan theory and Koszul duality")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, needs_input=True):
        if needs_input:
            p.add_argument("--input", required=True, help="fixture name or file path")
        p.add_argument("--weight", type=int, default=None)
        p.add_argument("--tdeg", type=int, default=None)
        p.add_argument("--element", default=None)
        p.add_argument("--xi", default=None)
        p.add_argument("--coeff", default=None)
        p.add_argument("--trials", type=int, default=10)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None)
        p.add_argument("--format", choices=("text", "structured"), default="text")

    for name, fn in [
        ("check", cmd_check), ("cohomology", cmd_cohomology),
        ("mc-check", cmd_mc_check), ("gauge", cmd_gauge),
        ("homotopy", cmd_homotopy),
        ("ce", lambda a: _functor_command(a, "ce")),
        ("bar", lambda a: _functor_command(a, "bar")),
        ("cobar", lambda a: _functor_command(a, "cobar")),
        ("harrison", lambda a: _functor_command(a, "harrison")),
        ("adjoint-check", cmd_adjoint_check),
        ("comass-check", cmd_comass_check), ("pbw", cmd_pbw),
    ]:
        p = sub.add_parser(name)
        common(p)
        p.set_defaults(fn=fn)
    p = sub.add_parser("fixtures")
    common(p, needs_input=False)
    p.set_defaults(fn=cmd_fixtures)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    args._out_used = False
    try:
        return args.fn(args)
    except UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2
    except (ParseError, fixtures.UnknownFixture) as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
