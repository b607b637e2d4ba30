"""Command line interface.

Exit codes: 0 all requested checks pass, 1 a check failed, 2 a precondition
failed, 64 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path
from typing import Optional

from . import __version__
from .errors import (
    Mismatch,
    NotStratified,
    PreconditionFailed,
    QuiverSerreError,
    UnknownEntry,
)
from .serialize import InputError, algebra_from_data, dumps, load_json, order_from_data

EXIT_OK, EXIT_FAIL, EXIT_PRECONDITION, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- inputs ---------------------------------------------------------------


def load_algebra(spec: str):
    """A zoo name or a JSON file holding an algebra, optionally with an ``order``.

    Returns:
        ``(algebra, default order or None)``.
    """
    from .zoo import zoo_get, zoo_list

    if spec in zoo_list():
        entry = zoo_get(spec)
        return entry.algebra, entry.order
    path = Path(spec)
    if not path.exists():
        raise UsageError(f"{spec!r} is neither a zoo entry nor a file")
    data = load_json(str(path))
    if "algebra" in data:
        alg = algebra_from_data(data["algebra"])
        return alg, order_from_data(alg, data["order"]) if "order" in data else None
    return algebra_from_data(data), None


def parse_order(alg, spec: Optional[str], default):
    """``None`` (default order), a JSON file, or inline pairs such as ``"1<2,2<3"``."""
    from .stratification import StratOrder

    if spec is None:
        return default if default is not None else StratOrder.discrete(alg.vertices)
    if Path(spec).exists():
        data = load_json(spec)
        return order_from_data(alg, data.get("order", data))
    if spec == "discrete":
        return StratOrder.discrete(alg.vertices)
    pairs = []
    for part in spec.split(","):
        chain = [x.strip() for x in part.split("<")]
        if len(chain) < 2 or any(x not in alg.vertices for x in chain):
            raise UsageError(f"cannot parse order {spec!r}")
        pairs.extend(zip(chain, chain[1:]))
    return StratOrder(alg.vertices, pairs)


def parse_q(alg, spec: Optional[str]) -> list:
    from .serre import projective_injective_labels

    if spec is None or spec == "auto":
        return projective_injective_labels(alg)
    labels = [x.strip() for x in spec.split(",") if x.strip()]
    bad = [x for x in labels if x not in alg.vertices]
    if bad:
        raise UsageError(f"unknown labels in --q: {bad}")
    return labels


def parse_module(alg, order, spec: str):
    """``P:l``, ``I:l``, ``L:l``, ``Delta:l``, ``DeltaBar:l``, ``Nabla:l``, ``NablaBar:l``, ``T:l`` or a JSON file."""
    from .modules import injective, projective, simple
    from .serialize import representation_from_json
    from .stratification import StratifiedAlgebra

    if ":" in spec and not Path(spec).exists():
        kind, lam = spec.split(":", 1)
        if lam not in alg.vertices:
            raise UsageError(f"unknown label {lam!r}")
        simple_kinds = {"P": projective, "I": injective, "L": simple}
        if kind in simple_kinds:
            return simple_kinds[kind](alg, lam)
        if kind in ("Delta", "DeltaBar", "Nabla", "NablaBar"):
            return StratifiedAlgebra(alg, order).module(kind, lam)
        if kind == "T":
            from .tilting import tilting_data

            return tilting_data(StratifiedAlgebra(alg, order)).modules[lam]
        raise UsageError(f"unknown module kind {kind!r}")
    if Path(spec).exists():
        return representation_from_json(alg, load_json(spec))
    raise UsageError(f"cannot parse module {spec!r}")


def parse_range(spec: str) -> range:
    try:
        lo, hi = spec.split("..")
        return range(int(lo), int(hi) + 1)
    except ValueError:
        raise UsageError(f"range must look like -3..3, got {spec!r}") from None


# -- report ---------------------------------------------------------------


class Report:
    def __init__(self, command: str, algebra=None):
        self.command = command
        self.inputs = {"algebra": algebra.content_hash()} if algebra is not None else {}
        self.checks = []
        self.data = {}
        self.start = time.perf_counter()

    def check(self, name: str, verdict, witnesses=None, provenance: str = "computed"):
        if isinstance(verdict, bool):
            verdict = "pass" if verdict else "fail"
        self.checks.append({"name": name, "verdict": verdict, "witnesses": witnesses or {},
                            "provenance": provenance})

    def exit_code(self) -> int:
        verdicts = {c["verdict"] for c in self.checks}
        if "precondition-failed" in verdicts:
            return EXIT_PRECONDITION
        if "fail" in verdicts:
            return EXIT_FAIL
        return EXIT_OK

    def to_json(self) -> dict:
        return {"tool": {"name": "quiverserre", "version": __version__}, "command": self.command,
                "inputs": self.inputs, "checks": self.checks, "data": self.data,
                "timing": round(time.perf_counter() - self.start, 3)}

    def render_human(self) -> str:
        lines = [f"quiverserre {self.command}"]
        for c in self.checks:
            lines.append(f"  [{c['verdict']}] {c['name']}")
        for k in sorted(self.data):
            lines.append(f"  {k}: {self.data[k]}")
        return "\n".join(lines)


# -- commands -------------------------------------------------------------


def cmd_analyze(args, rep: Report, alg, order):
    from .predicates import Exceeded, centre, global_dimension, is_selfinjective, is_symmetric
    from .serre import projective_injective_labels

    gd = global_dimension(alg, args.cap)
    rep.data.update({
        "algebra": alg.to_json(),
        "dim": alg.dim,
        "basis": [str(p) for p in alg.basis],
        "cartan": alg.cartan_matrix(),
        "globalDimension": "infinite" if isinstance(gd, Exceeded) else gd,
        "centreDim": centre(alg).dim,
        "projectiveInjective": projective_injective_labels(alg),
    })
    si = is_selfinjective(alg)
    sym = is_symmetric(alg)
    rep.data["selfInjective"] = si.ok
    rep.data["symmetric"] = sym.ok
    rep.check("associativity", alg.check_associativity())


def cmd_strat(args, rep: Report, alg, order):
    from .stratification import StratifiedAlgebra, summary

    s = StratifiedAlgebra(alg, order)
    sm = summary(s)
    rep.data["order"] = order.to_json()
    rep.data["summary"] = sm
    wanted = {"ss": "standardlyStratified", "qh": "quasiHereditary", "ps": "properlyStratified"}
    for key in args.require:
        rep.check(wanted[key], sm[wanted[key]], {"witness": sm.get("witness")})


def _flag_json(cert):
    return None if cert is None else cert.to_json()


def cmd_tilt(args, rep: Report, alg, order):
    from .stratification import StratifiedAlgebra
    from .tilting import tilting_data

    s = StratifiedAlgebra(alg, order)
    try:
        td = tilting_data(s)
    except NotStratified as exc:
        rep.check("standardlyStratified", "precondition-failed", {"detail": str(exc)})
        return
    rep.data["tilting"] = {lam: {"dims": td.modules[lam].dim_vector(), "deltaFlag": _flag_json(td.delta_flags[lam]),
                                 "nablaBarFlag": _flag_json(td.nabla_bar_flags[lam])} for lam in s.labels}
    rep.check("tiltingFlags", all(td.delta_flags[x] and td.nabla_bar_flags[x] for x in s.labels))


def cmd_ringel(args, rep: Report, alg, order):
    from .presentation import cartan_equivalent
    from .stratification import StratifiedAlgebra
    from .tilting import ringel_dual

    s = StratifiedAlgebra(alg, order)
    if not s.standardly_stratified():
        rep.check("standardlyStratified", "precondition-failed")
        return
    pres, rs = ringel_dual(s)
    rep.data["ringelDual"] = {"algebra": pres.algebra.to_json(), "dim": pres.algebra.dim,
                              "order": pres.order.to_json(), "cartan": pres.algebra.cartan_matrix()}
    rep.check("presentationMultiplication", pres.check_multiplication())
    if args.double:
        if not rs.standardly_stratified():
            rep.check("ringelDualStratified", False)
            return
        pres2, _ = ringel_dual(rs)
        bij = cartan_equivalent(alg, pres2.algebra)
        rep.check("doubleRingelCartanEquivalent", bij is not None, {"bijection": bij})


def cmd_dc(args, rep: Report, alg, order):
    from .serre import check_double_centraliser, q_module
    from .stratification import StratifiedAlgebra
    from .tilting import dc_tilting

    if args.tilting:
        from .decomposition import module_iso
        from .tilting import tilting_data

        s = StratifiedAlgebra(alg, order)
        if not s.standardly_stratified():
            rep.check("standardlyStratified", "precondition-failed")
            return
        r = dc_tilting(s)
        rep.data["dcTilting"] = {"qLabels": r.q_labels, "yLabels": r.y_labels, "xLabels": r.x_labels,
                                 "cokernelFlag": _flag_json(r.cokernel_flag)}
        rep.data["X"] = r.x_labels
        rep.data["doubleCentraliser"] = r.double_centraliser.ok
        rep.data["XequalsCharacteristicTilting"] = (
            module_iso(r.x, tilting_data(s).characteristic()) is not None)
        rep.data["XinAddQ"] = set(r.x_labels) <= set(r.q_labels)
        rep.check("doubleCentraliserX", r.double_centraliser.ok, r.double_centraliser.witness)
        return
    labels = parse_q(alg, args.q)
    if not labels:
        rep.check("doubleCentraliserWithQ", "precondition-failed", {"detail": "no projective-injective module"})
        return
    v = check_double_centraliser(alg, q_module(alg, labels), opposite_side=True)
    rep.data["q"] = labels
    rep.check("doubleCentraliserWithQ", v.ok, v.witness)


def cmd_serre(args, rep: Report, alg, order):
    from .serre import (
        check_serrecoapprox_equivalence,
        check_theorem_serre_characterisation,
        coapp_power_table,
        identity_table,
        nakayama_table,
        serre_pairing_table,
    )

    labels = parse_q(alg, args.q)
    rep.data["q"] = labels
    try:
        if args.action == "check":
            r = check_serrecoapprox_equivalence(alg, labels, args.cap)
            rep.data["preconditions"] = r["preconditions"]
            for key in ("cond_i", "cond_ii", "cond_iii"):
                rep.check(key, r[key])
            rep.check("allEqual", r["allEqual"])
        else:
            tables = {"nakayama": lambda: nakayama_table(alg), "identity": lambda: identity_table(alg),
                      "coapp2": lambda: coapp_power_table(alg, labels, 2)}
            r = check_theorem_serre_characterisation(alg, tables[args.functor](), args.cap)
            rep.data["preconditions"] = r["preconditions"]
            rep.data["note"] = r["surrogate"]
            for key in ("a", "b", "c"):
                rep.check(f"condition_{key}", r[key])
    except PreconditionFailed as exc:
        for h in exc.failures:
            rep.check(h, "precondition-failed", {"detail": exc.detail})
        return
    rep.data["serrePairing"] = [{"lambda": a, "mu": b, "homToH": x, "homDual": y}
                                for a, b, x, y in serre_pairing_table(alg)]
    rep.check("serrePairing", all(x == y for _, _, x, y in serre_pairing_table(alg)))


def cmd_coapp(args, rep: Report, alg, order):
    from .serre import approx, coapp

    labels = parse_q(alg, args.q)
    m = parse_module(alg, order, args.module)
    fn = approx if args.approx else coapp
    out = fn(labels, m, args.power)
    rep.data["module"] = out.to_json()
    rep.data["dims"] = out.dim_vector()


def cmd_centre(args, rep: Report, alg, order):
    from .predicates import centre
    from .serre import centre_comparison

    z = centre(alg)
    rep.data["centreDim"] = z.dim
    rep.data["centreBasis"] = [[str(x) for x in v] for v in z.basis]
    if args.compare_q is not None:
        labels = parse_q(alg, args.compare_q)
        try:
            r = centre_comparison(alg, labels)
        except PreconditionFailed as exc:
            rep.check(exc.hypothesis, "precondition-failed", {"detail": exc.detail})
            return
        rep.check("centreComparison", r["ok"], r)


def cmd_dbcheck(args, rep: Report, alg, order):
    from .derived import ext_consistency, serre_duality_check
    from .modules import simple

    if args.action == "serre-table":
        degrees = parse_range(args.range)
        table = []
        try:
            for a in alg.vertices:
                for b in alg.vertices:
                    for n, lhs, rhs, eq in serre_duality_check(alg, simple(alg, a), simple(alg, b), degrees, args.cap):
                        table.append({"from": a, "to": b, "n": n, "lhs": lhs, "rhs": rhs, "equal": eq})
        except PreconditionFailed as exc:
            rep.check(exc.hypothesis, "precondition-failed", {"detail": exc.detail})
            return
        rep.data["table"] = table
        rep.check("serreTable", all(r["equal"] for r in table))
    else:
        if not (args.source and args.target):
            raise UsageError("dbcheck ext needs --from and --to")
        m = parse_module(alg, order, args.source)
        n = parse_module(alg, order, args.target)
        rows = ext_consistency(m, n, args.max, args.cap)
        rep.data["ext"] = [{"n": k, "homotopy": h, "ext": e} for k, h, e in rows]
        rep.check("extConsistency", all(h == e for _, h, e in rows))


def cmd_zoo(args, rep: Report):
    from .zoo import zoo_get, zoo_list, zoo_verify

    if args.action == "list":
        rep.data["entries"] = {n: zoo_get(n).description for n in zoo_list()}
    elif args.action == "emit":
        if not args.name:
            raise UsageError("zoo emit needs a name")
        rep.data["entry"] = zoo_get(args.name).to_json()
    else:
        names = zoo_list() if args.all or not args.name else [args.name]
        for n in names:
            try:
                r = zoo_verify(n)
                rep.check(n, True, {"report": r["report"]})
            except Mismatch as exc:
                rep.check(n, False, {"field": exc.field, "expected": exc.expected, "actual": exc.actual})


# -- parser ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="quiverserre", description="Exact computations for bound quiver algebras, "
                                                "stratifications, tilting modules and Serre functors.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="human", action="store_false", help="JSON report (default)")
    fmt.add_argument("--human", dest="human", action="store_true", help="short human-readable summary")
    p.set_defaults(human=False)
    p.add_argument("--cap", type=int, default=20, help="resolution length cap (default 20)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_algebra(name, help_text, order=True):
        sp = sub.add_parser(name, help=help_text)
        sp.add_argument("algebra", help="zoo entry name or algebra JSON file")
        if order:
            sp.add_argument("order", nargs="?", help="order: JSON file, 'discrete' or pairs like '1<2,2<3'")
            sp.add_argument("--order", dest="order_flag", help="same as the positional order")
        return sp

    with_algebra("analyze", "dimension, Cartan matrix and basic predicates", order=False)
    sp = with_algebra("strat", "standard modules and stratification verdicts")
    sp.add_argument("--require", nargs="*", choices=["ss", "qh", "ps"], default=["ss"])
    with_algebra("tilt", "indecomposable tilting modules")
    sp = with_algebra("ringel", "Ringel dual presentation")
    sp.add_argument("--double", action="store_true", help="also check R(R(A)) against A")
    sp = with_algebra("dc", "double centraliser property")
    sp.add_argument("--q", default="auto")
    sp.add_argument("--tilting", action="store_true", help="construct the tilting module X instead")

    sp = sub.add_parser("serre", help="Serre functor characterisations")
    sp.add_argument("action", choices=["check", "theorem"])
    sp.add_argument("algebra")
    sp.add_argument("order", nargs="?")
    sp.add_argument("--order", dest="order_flag")
    sp.add_argument("--q", default="auto")
    sp.add_argument("--functor", choices=["nakayama", "identity", "coapp2"], default="coapp2")

    sp = with_algebra("coapp", "partial (co)approximation of a module")
    sp.add_argument("--q", required=True)
    sp.add_argument("--module", required=True, help="P:l, I:l, L:l, Delta:l, ... or a module JSON file")
    sp.add_argument("--power", type=int, default=1)
    sp.add_argument("--approx", action="store_true", help="apply approximation instead")

    sp = with_algebra("centre", "centre of the algebra", order=False)
    sp.add_argument("--compare-q", dest="compare_q")

    sp = sub.add_parser("dbcheck", help="derived category checks")
    sp.add_argument("action", choices=["serre-table", "ext"])
    sp.add_argument("algebra")
    sp.add_argument("order", nargs="?")
    sp.add_argument("--order", dest="order_flag")
    sp.add_argument("--range", default="-2..2")
    sp.add_argument("--from", dest="source")
    sp.add_argument("--to", dest="target")
    sp.add_argument("--max", type=int, default=4)

    sp = sub.add_parser("zoo", help="built-in example algebras")
    sp.add_argument("action", choices=["list", "emit", "verify"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--all", action="store_true")
    return p


COMMANDS = {
    "analyze": cmd_analyze, "strat": cmd_strat, "tilt": cmd_tilt, "ringel": cmd_ringel, "dc": cmd_dc,
    "serre": cmd_serre, "coapp": cmd_coapp, "centre": cmd_centre, "dbcheck": cmd_dbcheck,
}


# optional verbs: `strat check A`, `tilt compute A`, `ringel dual A`, `dc find A`
ACTION_WORDS = {"strat": "check", "tilt": "compute", "ringel": "dual", "dc": "find"}


def _strip_action_word(argv: list) -> tuple:
    """Drop an optional verb after the command; ``dc find`` also selects the tilting search."""
    for i, tok in enumerate(argv):
        if tok in COMMANDS or tok == "zoo":
            if tok in ACTION_WORDS and i + 1 < len(argv) and argv[i + 1] == ACTION_WORDS[tok]:
                return argv[:i + 1] + argv[i + 2:], tok == "dc"
            break
    return argv, False


def run(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    argv, dc_find = _strip_action_word(argv)
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    if dc_find:
        args.tilting = True
    try:
        if args.command == "zoo":
            rep = Report("zoo " + args.action)
            cmd_zoo(args, rep)
        else:
            alg, default_order = load_algebra(args.algebra)
            order = None
            if hasattr(args, "order"):
                order = parse_order(alg, args.order_flag or args.order, default_order)
            rep = Report(args.command, alg)
            if order is not None:
                rep.inputs["order"] = order.to_json()
            COMMANDS[args.command](args, rep, alg, order)
    except (UsageError, InputError, UnknownEntry) as exc:
        print(f"quiverserre: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except PreconditionFailed as exc:
        print(f"quiverserre: precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    except QuiverSerreError as exc:
        print(f"quiverserre: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    out.write(rep.render_human() + "\n" if args.human else dumps(rep.to_json()) + "\n")
    return rep.exit_code()


def main(argv=None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
