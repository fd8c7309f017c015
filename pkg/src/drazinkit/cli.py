"""Command-line front end.

One subcommand per invocation; standard output carries exactly one JSON
document in canonical form (sorted keys, compact separators, one trailing
newline), standard error carries diagnostics.  Exit codes:

* 0 - success / every identity checked holds
* 1 - a verification mismatch (the report on stdout carries witnesses)
* 2 - malformed input (error JSON on stderr locates the problem)
* 3 - precondition violation (relation fails, lambda = 0, characteristic 2
      for the sum formula, incompatible family, budget exceeded, ...)

Identical invocations produce byte-identical stdout.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Dict, List, Optional, Tuple

from .drazin import drazin_inverse
from .errors import (
    DrazinKitError,
    InternalCertificationFailure,
    NotNilpotentWithinBound,
    ParseError,
    PreconditionViolated,
    CharacteristicTwo,
)
from .fields import Field, FieldScalar, PrimeField, QQ
from .matrices import Matrix
from .pairs import (
    Conjugated,
    CorpusPair,
    DiagTripotents,
    DirectSum,
    ExhaustiveHit,
    PairFamily,
    ScalarTimesIdentity,
    SearchSpec,
    TrivialZeroB,
    WeightedShift,
    corpus_from_json_obj,
    corpus_to_json_obj,
    default_cube_corpus,
    default_lambda_corpus,
    describe_family,
    exhaustive_hits_corpus,
    exhaustive_search,
    gen_cube_pair,
    gen_lambda_pair,
    gen_swapped_pair,
)
from .relations import (
    CrossCube,
    LambdaCommute,
    RelationKind,
    SwappedCube,
    check_relation,
    det_consistency_diagnostic,
    first_violation,
    lemma21_suite,
    lemma22_suite,
    lemma31_suite,
    lemma32_suite,
    lemma33_suite,
    lemma34_suite,
    lemma35_suite,
    relation_from_json_fields,
    relation_to_json_fields,
)
from .theorems import evaluate_thm23, evaluate_thm36

__all__ = ["main"]

# Fixed exponent pairs at which the parametrized absorption identities run.
_L35_EXPONENTS = ((0, 0), (1, 2), (2, 1))


# --------------------------------------------------------------------------
# I/O helpers
# --------------------------------------------------------------------------


def _canonical(obj: Any) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _emit(obj: Any, output: Optional[str]) -> None:
    text = _canonical(obj)
    if output is None or output == "-":
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def _read_json(path: str) -> Any:
    if path == "-":
        text = sys.stdin.read()
        source = "<stdin>"
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise ParseError(f"cannot read {path}: {exc}", {"path": path})
        source = path
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"{source}: invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            {"path": source, "line": exc.lineno, "column": exc.colno},
        )


def _field_from_flags(args: argparse.Namespace) -> Field:
    name = getattr(args, "field", None) or "Q"
    if name == "Q":
        if getattr(args, "mod", None) is not None:
            raise ParseError("--mod is only meaningful with --field Fp")
        return QQ
    if getattr(args, "mod", None) is None:
        raise ParseError("--field Fp requires --mod p")
    return PrimeField(args.mod)


def _relation_from_flags(
    args: argparse.Namespace, field: Field
) -> RelationKind:
    name = getattr(args, "relation", None) or "lambda-commute"
    if name == "lambda-commute":
        text = getattr(args, "lam", None)
        lam = field.parse(text) if text is not None else field.one_scalar()
        return LambdaCommute(lam)
    if name == "cross-cube":
        return CrossCube()
    return SwappedCube()


def _load_pair(
    obj: Any, where: str = "input"
) -> Tuple[Matrix, Matrix, Optional[RelationKind]]:
    """Decode {"a", "b", "relation"?, "lambda"?}; relation stays optional."""
    if not isinstance(obj, dict):
        raise ParseError(f"{where}: expected an object with 'a' and 'b'", {"at": where})
    for key in ("a", "b"):
        if key not in obj:
            raise ParseError(f"{where}: missing key {key!r}", {"at": where})
    a = Matrix.from_json_obj(obj["a"], f"{where}.a")
    b = Matrix.from_json_obj(obj["b"], f"{where}.b")
    rel: Optional[RelationKind] = None
    if "relation" in obj and obj["relation"] is not None:
        lam = None
        if obj.get("lambda") is not None:
            if not isinstance(obj["lambda"], str):
                raise ParseError(
                    f"{where}.lambda: expected a string scalar",
                    {"at": f"{where}.lambda"},
                )
            lam = a.field.parse(obj["lambda"])
        rel = relation_from_json_fields(obj["relation"], lam, f"{where}.relation")
    return a, b, rel


# --------------------------------------------------------------------------
# family descriptor grammar:  name(arg;arg;...), nested families allowed
# --------------------------------------------------------------------------


def _split_args(body: str) -> List[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(body):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in family {body!r}")
        elif ch == ";" and depth == 0:
            parts.append(body[start:i])
            start = i + 1
    if depth:
        raise ParseError(f"unbalanced parentheses in family {body!r}")
    parts.append(body[start:])
    return [p.strip() for p in parts]


def _int_arg(text: str, what: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {text!r}")


def parse_family(text: str) -> PairFamily:
    """Parse a family descriptor.

    Grammar: ``name(arg;...)`` with nested descriptors, e.g.
    ``weighted-shift(3)``, ``diag-tripotents(3;1,-1,0;-1,1,1)``,
    ``scalar-identity(2;-1)``, ``zero-b(2)``, ``exhaustive(3;2;0)``,
    ``conjugated(weighted-shift(2);7)``,
    ``direct-sum(weighted-shift(2);zero-b(1))``.
    """
    text = text.strip()
    open_at = text.find("(")
    if open_at < 0 or not text.endswith(")"):
        raise ParseError(f"family descriptor {text!r} must look like name(args)")
    name = text[:open_at].strip()
    args = _split_args(text[open_at + 1 : -1])
    if name == "weighted-shift" and len(args) == 1:
        return WeightedShift(_int_arg(args[0], "n"))
    if name == "diag-tripotents" and len(args) in (1, 3):
        n = _int_arg(args[0], "n")
        if len(args) == 1:
            return DiagTripotents(n)
        pa = tuple(_int_arg(x, "pattern entry") for x in args[1].split(","))
        pb = tuple(_int_arg(x, "pattern entry") for x in args[2].split(","))
        return DiagTripotents(n, (pa, pb))
    if name == "scalar-identity" and len(args) in (1, 2):
        n = _int_arg(args[0], "n")
        scale = _int_arg(args[1], "scale") if len(args) == 2 else -1
        return ScalarTimesIdentity(n, scale)
    if name == "zero-b" and len(args) == 1:
        return TrivialZeroB(_int_arg(args[0], "n"))
    if name == "conjugated" and len(args) == 2:
        return Conjugated(parse_family(args[0]), _int_arg(args[1], "seed"))
    if name == "direct-sum" and len(args) == 2:
        return DirectSum(parse_family(args[0]), parse_family(args[1]))
    if name == "exhaustive" and len(args) == 3:
        return ExhaustiveHit(
            _int_arg(args[0], "p"),
            _int_arg(args[1], "n"),
            _int_arg(args[2], "ordinal"),
        )
    raise ParseError(f"unknown family descriptor {text!r}")


# --------------------------------------------------------------------------
# subcommand handlers
# --------------------------------------------------------------------------


def _cmd_compute(args: argparse.Namespace) -> int:
    m = Matrix.from_json_obj(_read_json(args.input), "input")
    data = drazin_inverse(m)
    _emit(data.to_json_obj(), args.output)
    return 0


def _cmd_check_relation(args: argparse.Namespace) -> int:
    a, b, embedded = _load_pair(_read_json(args.input))
    if args.relation is not None:
        rel = _relation_from_flags(args, a.field)
    elif embedded is not None:
        rel = embedded
    else:
        raise ParseError(
            "no relation given: pass --relation or embed one in the input"
        )
    holds = check_relation(a, b, rel)
    out: Dict[str, Any] = dict(relation_to_json_fields(rel))
    out["holds"] = holds
    if not holds:
        out["first_violation"] = first_violation(a, b, rel)
    if isinstance(rel, LambdaCommute) and a.is_square():
        out["det_diagnostic"] = det_consistency_diagnostic(a, b, rel.lam)
    _emit(out, args.output)
    return 0 if holds else 1


def _suites_for(
    which: str, cp: CorpusPair, i_max: int
) -> List[Tuple[str, Any]]:
    a, b, rel = cp.a, cp.b, cp.relation
    if which == "section-2":
        if not isinstance(rel, LambdaCommute):
            raise PreconditionViolated(
                "section-2 suites need a lambda-commuting pair, got "
                + relation_to_json_fields(rel)["relation"]
            )
        return [
            ("L2.1", lemma21_suite(a, b, rel.lam, i_max)),
            ("L2.2", lemma22_suite(a, b, rel.lam)),
        ]
    if which == "section-3":
        if not isinstance(rel, CrossCube):
            raise PreconditionViolated(
                "section-3 suites need a cross-cube pair, got "
                + relation_to_json_fields(rel)["relation"]
            )
        out = [
            ("L3.1", lemma31_suite(a, b, i_max)),
            ("L3.2", lemma32_suite(a, b)),
            ("L3.4", lemma34_suite(a, b)),
        ]
        for i, j in _L35_EXPONENTS:
            out.append((f"L3.5[i={i},j={j}]", lemma35_suite(a, b, i, j)))
        return out
    if not isinstance(rel, SwappedCube):
        raise PreconditionViolated(
            "the lemma-3.3 suite needs a swapped-cube pair, got "
            + relation_to_json_fields(rel)["relation"]
        )
    return [("L3.3", lemma33_suite(a, b))]


def _cmd_lemmas(args: argparse.Namespace) -> int:
    obj = _read_json(args.input)
    if isinstance(obj, dict):
        obj = [obj]
    corpus = corpus_from_json_obj(obj, "input")
    all_pass = True
    results = []
    for idx, cp in enumerate(corpus):
        for label, report in _suites_for(args.which, cp, args.i_max):
            entry: Dict[str, Any] = {
                "pair": idx,
                "provenance": cp.provenance,
                "suite": label,
                "all_pass": report.all_pass,
            }
            if not report.all_pass:
                all_pass = False
                entry["report"] = report.to_json_obj()
            results.append(entry)
    _emit(
        {
            "which": args.which,
            "pairs": len(corpus),
            "all_pass": all_pass,
            "results": results,
        },
        args.output,
    )
    return 0 if all_pass else 1


def _cmd_thm23(args: argparse.Namespace) -> int:
    a, b, rel = _load_pair(_read_json(args.input))
    if rel is not None and not isinstance(rel, LambdaCommute):
        raise PreconditionViolated(
            "the difference formula needs a lambda-commuting pair"
        )
    if args.lam is not None:
        lam = a.field.parse(args.lam)
    elif isinstance(rel, LambdaCommute):
        lam = rel.lam
    else:
        raise ParseError(
            "no lambda given: pass --lambda or embed relation/lambda in the input"
        )
    report = evaluate_thm23(a, b, lam)
    _emit(report.to_json_obj(), args.output)
    return 0 if report.match else 1


def _cmd_thm36(args: argparse.Namespace) -> int:
    a, b, rel = _load_pair(_read_json(args.input))
    if rel is not None and not isinstance(rel, CrossCube):
        raise PreconditionViolated("the sum formula needs a cross-cube pair")
    report = evaluate_thm36(a, b)
    _emit(report.to_json_obj(), args.output)
    return 0 if report.match else 1


def _cmd_gen(args: argparse.Namespace) -> int:
    field = _field_from_flags(args)
    rel = _relation_from_flags(args, field)
    pairs: List[CorpusPair]
    if args.family is not None:
        fam = parse_family(args.family)
        count = args.count if args.count is not None else 1
        if count < 1:
            raise ParseError(f"--count must be positive, got {count}")
        pairs = []
        for k in range(count):
            seed = args.seed + k
            if isinstance(rel, LambdaCommute):
                a, b = gen_lambda_pair(fam, rel.lam, seed)
            elif isinstance(rel, CrossCube):
                a, b = gen_cube_pair(fam, seed, field)
            else:
                a, b = gen_swapped_pair(fam, seed, field)
            pairs.append(CorpusPair(a, b, rel, describe_family(fam)))
    else:
        if isinstance(rel, LambdaCommute):
            pairs = default_lambda_corpus(field)
        else:
            pairs = default_cube_corpus(field, rel)
        if args.count is not None:
            if args.count < 1:
                raise ParseError(f"--count must be positive, got {args.count}")
            pairs = pairs[: args.count]
    _emit(corpus_to_json_obj(pairs), args.output)
    return 0


def _cmd_search(args: argparse.Namespace) -> int:
    if args.mod is None:
        raise ParseError("search requires --mod p")
    field = PrimeField(args.mod)
    rel = _relation_from_flags(args, field)
    entry_bound = None
    if args.entry_bound is not None:
        entry_bound = tuple(
            _int_arg(x, "entry bound") for x in args.entry_bound.split(",")
        )
    try:
        spec = SearchSpec(
            p=args.mod,
            n=args.dim,
            relation=rel,
            entry_bound=entry_bound,
            require_nontrivial=args.nontrivial,
        )
    except ValueError as exc:
        raise ParseError(str(exc))
    hits = exhaustive_search(spec, jobs=args.jobs, budget=args.budget)
    out: Dict[str, Any] = dict(relation_to_json_fields(rel))
    out.update(
        {
            "p": spec.p,
            "n": spec.n,
            "nontrivial": spec.require_nontrivial,
            "count": len(hits),
            "pairs": [
                {"a": a.to_json_obj(), "b": b.to_json_obj()} for a, b in hits
            ],
        }
    )
    if spec.entry_bound is not None:
        out["entry_bound"] = list(spec.entry_bound)
    _emit(out, args.output)
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    field = _field_from_flags(args)
    if field.characteristic == 2:
        raise CharacteristicTwo(
            "the selftest exercises the sum formula, which needs 2 invertible"
        )

    def note(msg: str) -> None:
        sys.stderr.write(msg + "\n")

    suites: List[Dict[str, Any]] = []

    def record(label: str, pair_count: int, failures: List[Dict[str, Any]]) -> None:
        ok = not failures
        suites.append(
            {
                "suite": label,
                "pairs": pair_count,
                "passed": ok,
                "failures": failures,
            }
        )
        note(f"{label}: {pair_count} pairs, {'ok' if ok else 'FAIL'}")

    lam_corpus = default_lambda_corpus(field)

    def run_identity_suite(label, corpus, runner):
        failures = []
        for idx, cp in enumerate(corpus):
            report = runner(cp)
            if not report.all_pass:
                failures.append(
                    {
                        "pair": idx,
                        "provenance": cp.provenance,
                        "failing": report.failing_ids(),
                    }
                )
        record(label, len(corpus), failures)

    run_identity_suite(
        "L2.1", lam_corpus, lambda cp: lemma21_suite(cp.a, cp.b, cp.relation.lam, 3)
    )
    run_identity_suite(
        "L2.2", lam_corpus, lambda cp: lemma22_suite(cp.a, cp.b, cp.relation.lam)
    )

    failures = []
    for idx, cp in enumerate(lam_corpus):
        rep = evaluate_thm23(cp.a, cp.b, cp.relation.lam)
        if not rep.match:
            failures.append({"pair": idx, "provenance": cp.provenance, "match": False})
    record("T2.3", len(lam_corpus), failures)

    cube_corpus = default_cube_corpus(field) + exhaustive_hits_corpus(3, 2, CrossCube())
    run_identity_suite("L3.1", cube_corpus, lambda cp: lemma31_suite(cp.a, cp.b, 3))
    run_identity_suite("L3.2", cube_corpus, lambda cp: lemma32_suite(cp.a, cp.b))

    swapped_corpus = default_cube_corpus(field, SwappedCube()) + exhaustive_hits_corpus(
        3, 2, SwappedCube()
    )
    run_identity_suite("L3.3", swapped_corpus, lambda cp: lemma33_suite(cp.a, cp.b))

    run_identity_suite("L3.4", cube_corpus, lambda cp: lemma34_suite(cp.a, cp.b))
    for i, j in _L35_EXPONENTS:
        run_identity_suite(
            f"L3.5[i={i},j={j}]",
            cube_corpus,
            lambda cp, i=i, j=j: lemma35_suite(cp.a, cp.b, i, j),
        )

    failures = []
    for idx, cp in enumerate(cube_corpus):
        rep = evaluate_thm36(cp.a, cp.b)
        if not rep.match or not rep.projectors_orthogonal:
            failures.append({"pair": idx, "provenance": cp.provenance, "match": False})
    record("T3.6", len(cube_corpus), failures)

    all_pass = all(s["passed"] for s in suites)
    _emit(
        {"field": field.to_json_obj(), "suites": suites, "all_pass": all_pass},
        args.output,
    )
    return 0 if all_pass else 1


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def _add_common(sub: argparse.ArgumentParser, *, with_input: bool = True) -> None:
    if with_input:
        sub.add_argument(
            "--input",
            default="-",
            help="input JSON file, or - for standard input (default)",
        )
    sub.add_argument(
        "--output", default=None, help="output file (default: standard output)"
    )


def _add_field_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--field", choices=("Q", "Fp"), default="Q")
    sub.add_argument("--mod", type=int, default=None, help="prime modulus for Fp")


def _add_relation_flags(sub: argparse.ArgumentParser) -> None:
    sub.add_argument(
        "--relation",
        choices=("lambda-commute", "cross-cube", "swapped-cube"),
        default=None,
    )
    sub.add_argument(
        "--lambda",
        dest="lam",
        default=None,
        help="commutation constant (wire format, e.g. 2 or 1/2)",
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="drazinkit",
        description=(
            "Exact Drazin inverses over Q and F_p, and verification of the "
            "library's identity catalog on matrix pairs."
        ),
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("compute", help="Drazin inverse of one matrix")
    _add_common(p)
    p.set_defaults(handler=_cmd_compute)

    p = subs.add_parser("check-relation", help="test a pair against a relation")
    _add_common(p)
    _add_relation_flags(p)
    p.set_defaults(handler=_cmd_check_relation)

    p = subs.add_parser("lemmas", help="run an identity suite over a corpus")
    _add_common(p)
    p.add_argument(
        "--which",
        choices=("section-2", "section-3", "lemma-3.3"),
        required=True,
    )
    p.add_argument("--i-max", dest="i_max", type=int, default=3)
    p.set_defaults(handler=_cmd_lemmas)

    p = subs.add_parser("thm23", help="difference formula on a pair")
    _add_common(p)
    p.add_argument("--lambda", dest="lam", default=None)
    p.set_defaults(handler=_cmd_thm23)

    p = subs.add_parser("thm36", help="sum formula on a pair")
    _add_common(p)
    p.set_defaults(handler=_cmd_thm36)

    p = subs.add_parser("gen", help="generate a corpus of relation pairs")
    _add_common(p, with_input=False)
    _add_field_flags(p)
    _add_relation_flags(p)
    p.add_argument("--family", default=None, help="family descriptor; see docs")
    p.add_argument("--count", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_gen)

    p = subs.add_parser("search", help="exhaustive search over F_p")
    _add_common(p, with_input=False)
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--dim", type=int, required=True, help="matrix size n (1..3)")
    _add_relation_flags(p)
    p.add_argument(
        "--entry-bound",
        dest="entry_bound",
        default=None,
        help="comma-separated residues restricting entries",
    )
    p.add_argument(
        "--nontrivial",
        action="store_true",
        help="drop hits with a*b == 0",
    )
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(handler=_cmd_search)

    p = subs.add_parser("selftest", help="run the default corpus end to end")
    _add_common(p, with_input=False)
    _add_field_flags(p)
    p.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except DrazinKitError as exc:
        payload = {
            "error": {"code": exc.code, "message": str(exc), "detail": exc.detail}
        }
        sys.stderr.write(_canonical(payload))
        if isinstance(exc, ParseError):
            return 2
        if isinstance(exc, (InternalCertificationFailure, NotNilpotentWithinBound)):
            return 1
        return 3
    except ValueError as exc:
        payload = {
            "error": {"code": "malformed-input", "message": str(exc), "detail": {}}
        }
        sys.stderr.write(_canonical(payload))
        return 2


if __name__ == "__main__":
    sys.exit(main())
