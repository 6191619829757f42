"""Batch command-line front end.

Exit codes: 0 when every check passed, 1 when checks ran and found
violations, 2 on bad input or usage.  Reports go to stdout, diagnostics to
stderr.  JSON is the default report format; ``--text`` gives an audit view.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import linalg as la
from .core import check_axioms, check_morphism, check_multiplicative, is_regular
from .errors import AlgebraError, ParseError, ReportedFailure, UnknownVerb
from .field import field_by_name
from .formats import format_bracket_algebra, format_dialgebra, read_file
from .report import SCHEMA_VERSION, CheckReport, flag_result, scalar_str

VERBS = ("check", "morphism", "twist", "operator", "bracket", "poisson", "action", "cohomology", "derive", "corpus")
OPERATOR_TYPES = ("rota-baxter", "nijenhuis", "averaging", "centroid")

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(f"{self.prog}: {message}")


def _matrix_json(M):
    return [[scalar_str(x) for x in row] for row in M]


class Output:
    """Collects report sections and renders them once at the end."""

    def __init__(self, verb: str, fmt: str):
        self.verb = verb
        self.fmt = fmt
        self.payload: dict = {}
        self.reports: list[CheckReport] = []
        self.text: list[str] = []

    def add_report(self, rep: CheckReport):
        self.reports.append(rep)
        self.text.append(rep.to_text())

    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def render(self) -> str:
        if self.fmt == "json":
            doc = {"schema_version": SCHEMA_VERSION, "command": self.verb, "pass": self.passed()}
            if self.reports:
                doc["reports"] = [r.to_json() for r in self.reports]
            doc.update(self.payload)
            return json.dumps(doc, indent=2) + "\n"
        return "\n".join(self.text) + "\n"


def _field(args):
    try:
        return field_by_name(args.field)
    except ValueError as exc:
        raise _UsageError(str(exc)) from None


def _algebra(path, args, validate=True):
    return read_file(path, "dialgebra", _field(args), validate=validate)


def _operator(path, args):
    return read_file(path, "operator", _field(args))


# ---------------------------------------------------------------------------
# verbs
# ---------------------------------------------------------------------------


def cmd_check(args, out: Output):
    D = _algebra(args.algebra, args, validate=False)
    out.add_report(check_axioms(D))
    mult = check_multiplicative(D)
    out.payload["algebra"] = {"label": D.label, "dim": D.n, "multiplicative": mult.passed, "regular": is_regular(D)}
    out.text.append(f"multiplicative={int(mult.passed)} regular={int(is_regular(D))}")
    if args.multiplicative:
        out.add_report(mult)


def cmd_morphism(args, out: Output):
    src = _algebra(args.source, args)
    tgt = _algebra(args.target, args) if args.target else src
    f = _operator(args.map, args)
    out.add_report(check_morphism(f, src, tgt))


def _emit_algebra(D, out: Output, args):
    out.payload["result"] = format_dialgebra(D)
    out.text.append(format_dialgebra(D).rstrip("\n"))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(format_dialgebra(D))


def cmd_twist(args, out: Output):
    from .constructions import untwist, yau_twist

    D = _algebra(args.algebra, args)
    if args.untwist:
        T = untwist(D)
    else:
        if args.power is not None:
            a2, b2 = D.power(args.power, 0), D.power(0, args.power)
        else:
            I = la.identity(D.n, D.field)
            a2 = _operator(args.alpha, args) if args.alpha else I
            b2 = _operator(args.beta, args) if args.beta else I
        T = yau_twist(D, a2, b2)
    out.add_report(check_axioms(T))
    _emit_algebra(T, out, args)


def _operator_check(kind, t, D, k, l):
    from . import constructions as cs

    if kind == "rota-baxter":
        return cs.check_rota_baxter(t, D)
    if kind == "nijenhuis":
        return cs.check_nijenhuis(t, D)
    if kind == "averaging":
        return cs.check_averaging(t, k, l, D)
    return cs.check_centroid(t, k, l, D)


def _operator_twist(kind, t, D, k, l):
    from . import constructions as cs

    if kind == "rota-baxter":
        return cs.rota_baxter_twist(t, D)
    if kind == "nijenhuis":
        return cs.nijenhuis_twist(t, D)
    if kind == "averaging":
        return cs.averaging_twist(t, k, l, D)
    return cs.centroid_twist_pair(D, t, t)


def cmd_operator(args, out: Output):
    from . import search

    D = _algebra(args.algebra, args)
    if args.search:
        if not hasattr(D.field, "p"):
            raise _UsageError("--search needs --field gf2 or gf3")
        finder = {
            "rota-baxter": lambda: search.rota_baxter_operators(D),
            "nijenhuis": lambda: search.nijenhuis_operators(D),
            "averaging": lambda: search.averaging_operators(D, args.k, args.l),
            "centroid": lambda: search.centroid_operators(D, args.k, args.l),
        }[args.type]
        try:
            found = finder()
        except ValueError as exc:
            raise _UsageError(str(exc)) from None
        out.payload["operators"] = [_matrix_json(M) for M in found]
        out.payload["count"] = len(found)
        out.text.append(f"{len(found)} {args.type} operator(s) over {D.field.name}")
        return
    if not args.op:
        raise _UsageError("operator needs --op FILE or --search")
    t = _operator(args.op, args)
    rep = _operator_check(args.type, t, D, args.k, args.l)
    out.add_report(rep)
    if args.twist and rep.passed:
        T = _operator_twist(args.type, t, D, args.k, args.l)
        out.add_report(check_axioms(T))
        _emit_algebra(T, out, args)


def cmd_bracket(args, out: Output):
    from . import brackets as br

    if args.bracket:
        L = read_file(args.bracket, "bracketalgebra", _field(args))
        out.add_report(br.check_bracket(L))
        return
    if not args.algebra:
        raise _UsageError("bracket needs --algebra FILE or --bracket FILE")
    D = _algebra(args.algebra, args)
    if args.functor == "lr":
        cond = br.check_lr_conditions(D)
        out.add_report(cond)
        L = br.lr_bracket(D, verify=False)
    elif args.functor == "lie":
        L = br.lie_from_associative(D, verify=False)
    else:
        L = br.lb_functor(D, verify=False)
    out.add_report(br.check_bracket(L))
    out.payload["result"] = format_bracket_algebra(L)
    out.text.append(format_bracket_algebra(L).rstrip("\n"))


def cmd_poisson(args, out: Output):
    from .brackets import check_poisson, poisson_functor

    D = _algebra(args.algebra, args)
    P = poisson_functor(D, printed=args.printed, verify=False)
    out.add_report(check_axioms(D))
    out.add_report(check_poisson(P))


def cmd_action(args, out: Output):
    from .actions import check_dialgebra_action, dialgebra_semidirect, functor_commutes

    fld = _field(args)
    a = read_file(args.action, "action", fld, validate=False)
    rep = check_dialgebra_action(a)
    out.add_report(rep)
    out.add_report(check_axioms(dialgebra_semidirect(a)))
    if args.commutes:
        if not (is_regular(a.D) and is_regular(a.L)):
            raise _UsageError("--commutes needs regular algebras")
        res = functor_commutes(a, printed=args.printed)
        w = list(res.comparison.witness) if res.comparison.witness else None
        out.payload["commutes"] = {"equal": res.equal, "witness": w}
        note = f"first differing pair {tuple(w)}" if w else ""
        out.add_report(CheckReport("lb-semidirect", (flag_result("commutes", res.equal, note),)))


def cmd_cohomology(args, out: Output):
    from .cohomology import BiHomModule, central_extension, cohomology_dims, is_cocycle

    fld = _field(args)
    D = _algebra(args.algebra, args, validate=False)
    M = read_file(args.module, "module", fld) if args.module else BiHomModule.trivial(args.m, fld)
    dims = cohomology_dims(D, M)
    out.payload["cohomology"] = {"z2": dims.z2, "b2": dims.b2, "h2": dims.h2, "n": D.n, "m": M.m}
    out.text.append(f"dim Z2 = {dims.z2}, dim B2 = {dims.b2}, dim H2 = {dims.h2}  (n={D.n}, m={M.m})")
    if args.cochain:
        T = read_file(args.cochain, "cochainpair", fld)
        out.add_report(is_cocycle(T, D, M))
        out.add_report(check_axioms(central_extension(D, M, T)))


def cmd_derive(args, out: Output):
    from .derivations import derivation_space

    D = _algebra(args.algebra, args, validate=False)
    S = derivation_space(D, args.k, args.l)
    out.payload.update({"k": args.k, "l": args.l, "dim": S.dim, "basis": [_matrix_json(T) for T in S.basis]})
    out.text.append(f"dim {S.dim}")
    for i, T in enumerate(S.basis, 1):
        out.text.append(f"basis {i}: " + "; ".join(" ".join(scalar_str(x) for x in row) for row in T))


def cmd_corpus(args, out: Output):
    from .corpus import PROFILES, corpus_build, corpus_ids, corpus_verify, report_json, report_text

    if args.action == "list":
        out.payload["entries"] = corpus_ids()
        out.text.extend(corpus_ids())
        return
    if args.action == "export":
        if not args.entry:
            raise _UsageError("corpus export needs an entry id")
        D = corpus_build(args.entry, field=_field(args), profile=args.profile)
        out.raw = format_dialgebra(D)
        return
    if args.profile not in PROFILES:
        raise _UsageError(f"unknown profile {args.profile!r}")
    rep = corpus_verify(args.profile, _field(args))
    out.raw = report_json(rep) if out.fmt == "json" else report_text(rep)
    out.raw_pass = rep["summary"]["table_discrepancy"] == 0


_HANDLERS = {
    "check": cmd_check, "morphism": cmd_morphism, "twist": cmd_twist, "operator": cmd_operator,
    "bracket": cmd_bracket, "poisson": cmd_poisson, "action": cmd_action, "cohomology": cmd_cohomology,
    "derive": cmd_derive, "corpus": cmd_corpus,
}


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", default="q", choices=("q", "gf2", "gf3"), help="scalar field")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON report (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", help="plain text report")
    common.set_defaults(fmt="json")

    p = _Parser(prog="bihomdi", description="Exact checks and constructions for BiHom-associative dialgebras.")
    sub = p.add_subparsers(dest="verb", parser_class=_Parser)

    s = sub.add_parser("check", parents=[common], help="check the dialgebra axioms")
    s.add_argument("--algebra", required=True)
    s.add_argument("--multiplicative", action="store_true", help="also require multiplicative structure maps")

    s = sub.add_parser("morphism", parents=[common], help="check a morphism between two dialgebras")
    s.add_argument("--map", required=True)
    s.add_argument("--source", required=True)
    s.add_argument("--target")

    s = sub.add_parser("twist", parents=[common], help="Yau twist or regular untwist")
    s.add_argument("--algebra", required=True)
    s.add_argument("--alpha", help="operator file for the first twisting map")
    s.add_argument("--beta", help="operator file for the second twisting map")
    s.add_argument("--power", type=int, help="twist by (alpha^p, beta^p)")
    s.add_argument("--untwist", action="store_true")
    s.add_argument("--out", help="write the twisted algebra here")

    s = sub.add_parser("operator", parents=[common], help="operator predicates, twists and GF(p) searches")
    s.add_argument("--algebra", required=True)
    s.add_argument("--type", required=True, choices=OPERATOR_TYPES)
    s.add_argument("--op")
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--l", type=int, default=0)
    s.add_argument("--twist", action="store_true", help="also build and check the induced algebra")
    s.add_argument("--search", action="store_true", help="enumerate all operators (n <= 3, GF(p) only)")
    s.add_argument("--out")

    s = sub.add_parser("bracket", parents=[common], help="bracket functors and bracket-algebra checks")
    s.add_argument("--algebra")
    s.add_argument("--bracket", help="check a bracket algebra file instead")
    s.add_argument("--functor", choices=("lb", "lr", "lie"), default="lb")

    s = sub.add_parser("poisson", parents=[common], help="Poisson functor and Poisson identities")
    s.add_argument("--algebra", required=True)
    s.add_argument("--printed", action="store_true", help="use the untwisted commutator bracket")

    s = sub.add_parser("action", parents=[common], help="action identities and semidirect products")
    s.add_argument("--action", required=True)
    s.add_argument("--commutes", action="store_true", help="compare Lb of the semidirect product")
    s.add_argument("--printed", action="store_true")

    s = sub.add_parser("cohomology", parents=[common], help="second cohomology and central extensions")
    s.add_argument("--algebra", required=True)
    s.add_argument("--module")
    s.add_argument("--m", type=int, default=1, help="dimension of the trivial module")
    s.add_argument("--cochain")

    s = sub.add_parser("derive", parents=[common], help="(alpha^k, beta^l)-derivation spaces")
    s.add_argument("--algebra", required=True)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--l", type=int, default=0)

    s = sub.add_parser("corpus", parents=[common], help="the built-in classification tables")
    s.add_argument("action", choices=("verify", "list", "export"))
    s.add_argument("entry", nargs="?")
    s.add_argument("--profile", default="ones")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        if argv and not argv[0].startswith("-") and argv[0] not in VERBS:
            raise UnknownVerb(f"unknown verb {argv[0]!r}; expected one of {', '.join(VERBS)}")
        try:
            args = parser.parse_args(argv)
        except SystemExit as exc:  # --help
            return int(exc.code or 0)
        if args.verb is None:
            parser.print_usage(stderr)
            return EXIT_USAGE
        out = Output(args.verb, args.fmt)
        out.raw = None
        out.raw_pass = True
        try:
            _HANDLERS[args.verb](args, out)
        except ReportedFailure as exc:
            if exc.report is not None:
                out.add_report(exc.report)
            print(f"error: {exc}", file=stderr)
            stdout.write(out.render())
            return EXIT_VIOLATION
    except (ParseError, UnknownVerb, _UsageError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    except AlgebraError as exc:
        # preconditions of an operation (non-regular input, bad shapes, ...)
        print(f"error: {type(exc).__name__}: {exc}", file=stderr)
        return EXIT_USAGE
    if out.raw is not None:
        stdout.write(out.raw)
        return EXIT_OK if out.raw_pass else EXIT_VIOLATION
    stdout.write(out.render())
    return EXIT_OK if out.passed() else EXIT_VIOLATION


def main(argv=None) -> int:
    return run(argv)


if __name__ == "__main__":
    sys.exit(main())
