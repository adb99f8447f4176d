"""Command-line front end.

Exit status: 0 for a definite answer (including "not-yet"), 2 when a
criterion is inapplicable, 1 on errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys

import jsonschema

from . import criteria
from .documents import load_document
from .errors import CohocError
from .groebner import as_order, groebner_basis, standard_monomials
from .hilbert import IntegerPolynomial, clear_parameters, poincare_series
from .morphism import gendeg, validate_morphism
from .parameters import (
    ParameterSet,
    filter_regular_report,
    is_hsop,
    is_regular_sequence,
    krull_dimension,
    pars_existence,
    replacement_search,
)

OK, ERROR, INAPPLICABLE = 0, 1, 2

REPORT_SCHEMA = {
    "type": "object",
    "required": ["command", "verdict", "exit_code", "data"],
    "properties": {
        "command": {"type": "string"},
        "verdict": {"type": "string"},
        "exit_code": {"enum": [0, 1, 2]},
        "data": {"type": "object"},
    },
    "additionalProperties": False,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # argparse would exit with 2, which is reserved for "inapplicable"
        self.print_usage(sys.stderr)
        self.exit(ERROR, f"{self.prog}: error: {message}\n")


def _degree_list(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _add_params(p):
    p.add_argument("--param", action="append", default=[], metavar="EXPR", help="parameter expression (repeatable)")
    p.add_argument("--params", metavar="DOC", help="parameter document (used before any --param)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="cohoc", description=__doc__.splitlines()[0])
    parser.add_argument("--report", metavar="PATH", help="also write a JSON report")
    parser.add_argument("--order", choices=["degrevlex", "deglex"], default="degrevlex")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("hilbert", help="Poincare series of a presentation")
    p.add_argument("doc")
    p.add_argument("--truncate", type=int, metavar="B", help="only use a basis truncated at degree B")
    p.add_argument("--expand", type=int, metavar="B", help="also print dimensions in degrees 0..B")
    p.add_argument("--reference", metavar="DOC", help="series document to compare against")

    p = sub.add_parser("dim", help="Krull dimension of R/<params>")
    p.add_argument("doc")
    _add_params(p)

    for name in ("hsop-check", "regular-check", "fregular-report"):
        p = sub.add_parser(name)
        p.add_argument("doc")
        _add_params(p)

    p = sub.add_parser("pars-exist", help="parameters of a given degree over an extension field")
    p.add_argument("doc")
    _add_params(p)
    p.add_argument("--degree", type=int, required=True)

    p = sub.add_parser("replace-search", help="exhaustive search for a lower-degree replacement")
    p.add_argument("doc")
    _add_params(p)
    p.add_argument("--slot", type=int, required=True, help="1-based position")
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--budget", type=int, default=2**32)

    p = sub.add_parser("gendeg", help="generation degree over the image of a morphism")
    p.add_argument("doc")
    p.add_argument("--bound", type=int, default=40)

    p = sub.add_parser("validate-morphism")
    p.add_argument("doc")

    p = sub.add_parser("criterion", help="run one completeness test")
    which = p.add_subparsers(dest="criterion", required=True, parser_class=_Parser)
    q = which.add_parser("benson")
    q.add_argument("doc", nargs="?", help="presentation, for the filter-regularity check")
    _add_params(q)
    q.add_argument("--param-degrees", type=_degree_list)
    q = which.add_parser("symonds")
    q.add_argument("doc")
    _add_params(q)
    q.add_argument("-n", type=int, required=True)
    q = which.add_parser("king-gen")
    q.add_argument("doc", help="morphism document")
    q.add_argument("-n", type=int, required=True)
    q = which.add_parser("king-rel")
    q.add_argument("doc")
    _add_params(q)
    q.add_argument("--param-degrees", type=_degree_list)
    q.add_argument("--depth", type=int, required=True)
    q.add_argument("-n", type=int, required=True)
    q.add_argument("--surjective", action="store_true", help="surjectivity is already certified")
    q.add_argument("--morphism", metavar="DOC", help="certify surjectivity with this morphism instead")

    p = sub.add_parser("compare-all", help="minimal certifying degree of every criterion")
    p.add_argument("doc", help="bundle document")
    p.add_argument("--n-max", type=int)
    return parser


# helpers ----------------------------------------------------------------------


def _load(ref, kind):
    doc = load_document(ref)
    if doc.kind != kind:
        raise UsageError(f"{ref} is a {doc.kind} document, expected {kind}")
    return doc


def _ring(args):
    return _load(args.doc, "presentation").build()


def _params(args, ring, required=True) -> ParameterSet | None:
    elements = []
    if args.params:
        ps = _load(args.params, "parameters").build()
        if ps.ring.signature != ring.signature:
            raise UsageError(f"{args.params} belongs to another presentation")
        elements += [f.rebind(ring) for f in ps.elements]
    elements += [ring.parse(e) for e in args.param]
    if not elements:
        if required:
            raise UsageError("no parameters given (use --param or --params)")
        return None
    return ParameterSet(ring, tuple(elements))


def _poly(f):
    return str(f)


# commands -----------------------------------------------------------------------


def cmd_hilbert(args):
    ring = _ring(args)
    order = as_order(args.order)
    data = {"generators": len(ring.generators), "relations": len(ring.relations), "order": order.kind}
    lines = []
    if args.truncate is not None:
        gb = groebner_basis(ring, order=order, truncation=args.truncate)
        dims = [len(standard_monomials(gb, d)) for d in range(args.truncate + 1)]
        data["truncation"] = args.truncate
        data["hilbert_function"] = dims
        lines.append(f"hilbert function (degrees 0..{args.truncate}): {' '.join(map(str, dims))}")
        return "computed", data, lines
    series = poincare_series(ring, order)
    data["series"] = str(series)
    data["numerator"] = list(series.numerator.coefficients)
    data["denominator_degrees"] = list(series.denominator_degrees)
    lines.append(f"series: {series}")
    if args.expand is not None:
        dims = list(series.expand(args.expand).dimensions)
        data["hilbert_function"] = dims
        lines.append(f"hilbert function (degrees 0..{args.expand}): {' '.join(map(str, dims))}")
    ref = args.reference or _load(args.doc, "presentation").tree.get("series")
    if ref:
        num, den, cleared = _load(ref, "series").build()
        match = series.equals_rational(num, den)
        data["reference"] = {"numerator": str(num), "denominator": str(den), "equal": match}
        lines.append(f"reference: ({num}) / ({den})")
        lines.append(f"equal to reference: {'yes' if match else 'no'}")
        for degrees, poly in cleared:
            q = clear_parameters(series, degrees)
            ok = isinstance(q, IntegerPolynomial) and q == poly
            data.setdefault("cleared", []).append({"degrees": list(degrees), "polynomial": str(q), "equal": ok})
            lines.append(f"times prod(1-t^d), d in {','.join(map(str, degrees))}: {q}")
            lines.append(f"equal to reference polynomial: {'yes' if ok else 'no'}")
    return "computed", data, lines


def cmd_dim(args):
    ring = _ring(args)
    params = _params(args, ring, required=False)
    extra = params.elements if params else ()
    k = krull_dimension(ring, extra, as_order(args.order))
    return "computed", {"krull_dimension": k, "params": len(extra)}, [f"krull dimension: {k}"]


def cmd_hsop_check(args):
    ring = _ring(args)
    res = is_hsop(ring, _params(args, ring))
    data = {
        "is_hsop": res.value,
        "krull_dimension": res.krull_dimension,
        "size": res.size,
        "quotient_top_degree": res.quotient_top_degree,
        "offending_generator": res.offending_generator,
    }
    lines = [f"hsop: {'yes' if res else 'no'}", f"krull dimension: {res.krull_dimension}", f"parameters: {res.size}"]
    if res.quotient_top_degree is not None:
        lines.append(f"quotient top degree: {res.quotient_top_degree}")
    if res.offending_generator:
        lines.append(f"quotient infinite along: {res.offending_generator}")
    return ("true" if res else "false"), data, lines


def cmd_regular_check(args):
    ring = _ring(args)
    res = is_regular_sequence(ring, _params(args, ring))
    data = {"regular": res.value, "failing_index": res.failing_index}
    lines = [f"regular sequence: {'yes' if res else 'no'}"]
    if not res:
        data["difference"] = str(res.difference)
        lines.append(f"first failing index: {res.failing_index}")
    return ("regular" if res else "not-regular"), data, lines


def cmd_fregular_report(args):
    ring = _ring(args)
    rep = filter_regular_report(ring, _params(args, ring))
    fr = criteria._fr_data(rep)
    lines = [f"hsop: {'yes' if rep.hsop else 'no'}"]
    for s in fr["steps"]:
        if s["filter_regular"]:
            lines.append(f"step {s['index']} (degree {s['degree']}): filter-regular, annihilator series {s['annihilator']}")
        else:
            lines.append(f"step {s['index']} (degree {s['degree']}): not filter-regular")
    lines.append(f"filter-regular hsop: {'yes' if rep.filter_regular else 'no'}")
    return ("filter-regular" if rep.filter_regular else "not-filter-regular"), fr, lines


def cmd_pars_exist(args):
    ring = _ring(args)
    cert = pars_existence(ring, _params(args, ring), args.degree)
    data = {
        "fixed_degrees": list(cert.fixed_degrees),
        "degree": cert.degree,
        "count": cert.count,
        "verdict": cert.verdict,
        "quotient_top_degree": cert.quotient_top_degree,
    }
    lines = [f"verdict: {cert.verdict}"]
    if cert:
        lines.append(f"parameter degrees over an extension field: {','.join(map(str, cert.parameter_degrees))}")
    return cert.verdict, data, lines


def cmd_replace_search(args):
    ring = _ring(args)
    found = replacement_search(ring, _params(args, ring), args.slot, args.max_degree, args.budget)
    data = {"slot": args.slot, "max_degree": args.max_degree, "replacements": [_poly(f) for f in found]}
    lines = [f"replacements: {len(found) if found else 'none'}"] + [f"  {f}" for f in found]
    return ("found" if found else "none"), data, lines


def cmd_gendeg(args):
    m = _load(args.doc, "morphism").build()
    check = validate_morphism(m)
    if not check:
        data = {"failing_index": check.failing_index, "remainder": _poly(check.remainder)}
        return "inapplicable", data, [f"morphism invalid: relation {check.failing_index} does not map to zero"]
    rep = gendeg(m, args.bound)
    data = criteria._gendeg_data(rep)
    value = rep.gendeg if rep.finite else "infinite"
    lines = [f"gendeg: {value}", f"hilbert function of quotient: {' '.join(map(str, rep.hilbert_function))}"]
    return ("finite" if rep.finite else "infinite"), data, lines


def cmd_validate_morphism(args):
    m = _load(args.doc, "morphism").build()
    check = validate_morphism(m)
    data = {"valid": check.value, "failing_index": check.failing_index}
    lines = [f"valid: {'yes' if check else 'no'}"]
    if not check:
        data["failing_relation"] = _poly(check.failing_relation)
        data["remainder"] = _poly(check.remainder)
        lines.append(f"first failing relation: {check.failing_index}")
    return ("valid" if check else "invalid"), data, lines


def _report_lines(rep: criteria.CriterionReport):
    lines = [f"criterion: {rep.criterion}", f"verdict: {rep.verdict}"]
    if rep.threshold is not None:
        lines.append(f"threshold: {rep.threshold}")
    if rep.reason:
        lines.append(f"reason: {rep.reason}")
    w = rep.witness
    if "polynomial" in w:
        lines.append(f"polynomial: {w['polynomial']['text']}")
        lines.append(f"polynomial degree: {w['polynomial']['degree']}")
    for key in ("generation_degree", "gendeg", "degree_bound"):
        if key in w:
            lines.append(f"{key.replace('_', ' ')}: {w[key]}")
    return lines


def cmd_criterion(args):
    kind = args.criterion
    if kind == "benson":
        fr = None
        degrees = args.param_degrees
        if args.doc:
            ring = _ring(args)
            params = _params(args, ring)
            fr = filter_regular_report(ring, params)
            degrees = list(params.degrees)
        if not degrees:
            raise UsageError("benson needs --param-degrees or a presentation with parameters")
        rep = criteria.benson_threshold(degrees, fr)
    elif kind == "symonds":
        ring = _ring(args)
        rep = criteria.symonds_test(ring, _params(args, ring), args.n)
    elif kind == "king-gen":
        m = _load(args.doc, "morphism").build()
        rep = criteria.king_gen(m, args.n)
    else:
        ring = _ring(args)
        degrees = args.param_degrees
        if degrees is None:
            params = _params(args, ring)
            degrees = list(params.degrees)
        surjective = args.surjective
        if args.morphism:
            m = _load(args.morphism, "morphism").build()
            surjective = criteria.king_gen(m, args.n).verdict == criteria.SURJECTIVE
        rep = criteria.king_rel(poincare_series(ring), degrees, args.depth, args.n, surjective)
    return rep.verdict, rep.to_dict(), _report_lines(rep)


def cmd_compare_all(args):
    bundle = _load(args.doc, "bundle").build()
    if args.n_max is not None:
        bundle.n_max = args.n_max
    rows = criteria.compare_all(bundle)
    lines = []
    for r in rows:
        deg = r.degree if r.degree is not None else "-"
        lines.append(f"{r.criterion:<10} {r.label:<14} {deg!s:>4}  {r.report.verdict}")
    return "computed", {"rows": [r.to_dict() for r in rows], "n_max": bundle.n_max}, lines


COMMANDS = {
    "hilbert": cmd_hilbert,
    "dim": cmd_dim,
    "hsop-check": cmd_hsop_check,
    "regular-check": cmd_regular_check,
    "fregular-report": cmd_fregular_report,
    "pars-exist": cmd_pars_exist,
    "replace-search": cmd_replace_search,
    "gendeg": cmd_gendeg,
    "validate-morphism": cmd_validate_morphism,
    "criterion": cmd_criterion,
    "compare-all": cmd_compare_all,
}


def _jsonable(x):
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (bool, int, str)) or x is None:
        return x
    return str(x)


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stderr(stderr), contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else ERROR
    name = args.command if args.command != "criterion" else f"criterion {args.criterion}"
    try:
        verdict, data, lines = COMMANDS[args.command](args)
    except (CohocError, UsageError, ValueError, LookupError, TypeError, IndexError, OSError) as exc:
        print(f"cohoc: error: {exc}", file=stderr)
        return ERROR
    code = INAPPLICABLE if verdict == "inapplicable" else OK
    for line in lines:
        print(line, file=stdout)
    if args.report:
        report = _jsonable({"command": name, "verdict": verdict, "exit_code": code, "data": data})
        jsonschema.validate(report, REPORT_SCHEMA)
        try:
            with open(args.report, "w", encoding="utf-8") as fh:
                json.dump(report, fh, indent=1, sort_keys=True)
                fh.write("\n")
        except OSError as exc:
            print(f"cohoc: error: cannot write report: {exc}", file=stderr)
            return ERROR
    return code


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
