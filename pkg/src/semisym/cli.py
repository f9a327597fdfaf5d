"""Command-line front end: ``semisym <command> [options]``.

Exit status is 0 on success, 1 when a validation or check fails, 2 when a
standing hypothesis is violated and 64 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .algebra import SemiSymmetricAlgebra
from .character import InvalidSequence
from .errors import HypothesisViolation, SemisymError
from .ring import parse_ring
from .serialize import (
    load_sequence,
    matrix_from_text,
    sequence_to_json,
    tensor_to_json,
    vector_from_json,
    vector_to_json,
)

EXIT_OK, EXIT_FAIL, EXIT_HYPOTHESIS, EXIT_USAGE = 0, 1, 2, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _context_options(p, need_n=True):
    p.add_argument("--ring", default="Q", help="Q, Z, mod:m or eisenstein (default Q)")
    if need_n:
        p.add_argument("--n", type=int, required=True, help="rank of the free module E")
    p.add_argument("--builtin", default=None,
                   help="tensor, symmetric, exterior or truncated:k (default tensor)")
    p.add_argument("--config", default=None, help="JSON file with explicit sequence stages")
    p.add_argument("--max-degree", type=int, default=None, help="top degree D of the sequence")
    p.add_argument("--format", choices=("json", "text"), default="json")


def build_parser():
    parser = _Parser(prog="semisym", description="Exact computations in semi-symmetric algebras.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("basis", help="canonical basis indices per degree")
    _context_options(p)
    p.add_argument("--degree", type=int, default=None)

    p = sub.add_parser("table", help="multiplication table of basis elements")
    _context_options(p)
    p.add_argument("--degree", type=int, default=None, help="degree of the left factors")
    p.add_argument("--right-degree", type=int, default=None)

    p = sub.add_parser("schur", help="generalized Schur function of a square matrix")
    _context_options(p, need_n=False)
    p.add_argument("--matrix", required=True, help="JSON or CSV matrix file")
    p.add_argument("--composition", default=None, help='also expand along blocks, e.g. "1,2"')

    p = sub.add_parser("pair", help="pairing of a chi-vector with a chi-form")
    _context_options(p)
    p.add_argument("vector", help="JSON file with the chi-vector")
    p.add_argument("form", help="JSON file with the chi-form")

    p = sub.add_parser("comul", help="comultiplication c_k of a chi-vector")
    _context_options(p)
    p.add_argument("vector")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--side", choices=("vector", "form"), default="vector")

    p = sub.add_parser("inner", help="left or right inner product")
    _context_options(p)
    p.add_argument("--side", choices=("left", "right"), required=True)
    p.add_argument("vector")
    p.add_argument("form")

    p = sub.add_parser("check", help="run the axiom and identity suite")
    _context_options(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=10)

    p = sub.add_parser("counterexample", help="freeness counterexamples")
    p.add_argument("which", choices=("z15", "eisenstein"))
    p.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _sequence(args, default_degree):
    ring = parse_ring(args.ring)
    top = args.max_degree if args.max_degree is not None else default_degree
    if top is None or top < 1:
        raise UsageError("--max-degree must be at least 1")
    return load_sequence(ring, args.builtin, args.config, top)


def _read_json(path):
    with open(path) as fh:
        return json.load(fh)


def cmd_basis(args):
    seq = _sequence(args, args.degree or 3)
    alg = SemiSymmetricAlgebra(seq, args.n)
    if args.degree is not None:
        return [list(j) for j in alg.basis(args.degree)]
    return {str(d): [list(j) for j in alg.basis(d)] for d in sorted(seq.stages)}


def cmd_table(args):
    seq = _sequence(args, 2 if args.degree is None else args.degree + (args.right_degree or 1))
    seq.require_valid()
    alg = SemiSymmetricAlgebra(seq, args.n)
    top = seq.max_degree
    rows = []
    lefts = [args.degree] if args.degree is not None else range(1, top)
    for p in lefts:
        rights = [args.right_degree] if args.right_degree is not None else range(1, top - p + 1)
        for q in rights:
            for j in alg.basis(p):
                for k in alg.basis(q):
                    prod = alg.multiply(alg.basis_vector(j), alg.basis_vector(k))
                    rows.append({"left": list(j), "right": list(k), "product": vector_to_json(prod)})
    return rows


def cmd_schur(args):
    from .index import enum_J_composition
    from .schur import schur_direct, schur_laplace

    ring = parse_ring(args.ring)
    with open(args.matrix) as fh:
        A = matrix_from_text(fh.read(), ring)
    n = A.shape[0]
    if A.shape != (n, n):
        raise UsageError(f"matrix of shape {A.shape} is not square")
    if args.max_degree is None:
        args.max_degree = n
    seq = _sequence(args, n)
    chi = seq.character(n)
    out = {"direct": str(schur_direct(A, chi))}
    if args.composition:
        comp = tuple(int(x) for x in args.composition.split(","))
        out["laplace"] = [
            {"blocks": [list(b) for b in blocks], "value": str(schur_laplace(A, seq, comp, blocks))}
            for blocks in enum_J_composition(seq, n, comp)
        ]
        out["agree"] = all(e["value"] == out["direct"] for e in out["laplace"])
    return out


def _operands(args):
    v = _read_json(args.vector)
    f = _read_json(args.form)
    degs = [len(t["index"]) for obj in (v, f) for t in (obj["terms"] if isinstance(obj, dict) else obj)]
    seq = _sequence(args, max(degs + [1]))
    alg = SemiSymmetricAlgebra(seq, args.n)
    return alg, vector_from_json(alg, v), vector_from_json(alg.dual(), f)


def cmd_pair(args):
    from .duality import pair

    _, x, y = _operands(args)
    return {"pairing": str(pair(x, y))}


def cmd_comul(args):
    from .coalgebra import comul

    obj = _read_json(args.vector)
    terms = obj["terms"] if isinstance(obj, dict) else obj
    seq = _sequence(args, max([len(t["index"]) for t in terms] + [1]))
    alg = SemiSymmetricAlgebra(seq, args.n)
    if args.side == "form":
        alg = alg.dual()
    return tensor_to_json(comul(vector_from_json(alg, obj), args.k))


def cmd_inner(args):
    from .inner import left_inner, right_inner

    _, a, f = _operands(args)
    result = left_inner(a, f) if args.side == "left" else right_inner(a, f)
    return vector_to_json(result)


def cmd_check(args):
    from .checks import run_suite

    seq = _sequence(args, 4)
    report = run_suite(seq, args.n, random.Random(args.seed), samples=args.samples)
    report["sequence"] = sequence_to_json(seq)
    return report


def cmd_counterexample(args):
    from .diag import eisenstein_counterexample, z15_counterexample

    if args.which == "z15":
        rep = z15_counterexample()
        r3, r5 = rep["image_rank_mod_3"], rep["image_rank_mod_5"]
        rep["summary"] = (
            f"|M_chi| = 3^{r3} * 5^{r5} = 15^{min(r3, r5)} * "
            f"{'3' if r3 > r5 else '5'}^{abs(r3 - r5)} = {rep['image_cardinality']}, "
            "not a power of 15"
        )
        return rep
    rep = eisenstein_counterexample()
    rep["summary"] = f"invariant factors with torsion: {rep['torsion_factors']}"
    return rep


COMMANDS = {
    "basis": cmd_basis,
    "table": cmd_table,
    "schur": cmd_schur,
    "pair": cmd_pair,
    "comul": cmd_comul,
    "inner": cmd_inner,
    "check": cmd_check,
    "counterexample": cmd_counterexample,
}


def render_text(obj, indent=0) -> str:
    pad = " " * indent
    if isinstance(obj, dict):
        if not obj:
            return pad + "{}"
        width = max(len(str(k)) for k in obj)
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{str(k):<{width}}")
                lines.append(render_text(v, indent + 2))
            else:
                lines.append(f"{pad}{str(k):<{width}}  {_inline(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        if _flat(obj):
            return pad + _inline(obj)
        return "\n".join(pad + "-\n" + render_text(x, indent + 2) for x in obj)
    return pad + str(obj)


def _flat(v):
    if isinstance(v, list):
        return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)
    return False


def _inline(v):
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, dict):
        return json.dumps(v, sort_keys=True)
    return str(v)


def _failed(result) -> bool:
    return isinstance(result, dict) and result.get("ok") is False


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        result = COMMANDS[args.command](args)
    except HypothesisViolation as exc:
        print(f"semisym: hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except InvalidSequence as exc:
        print(f"semisym: invalid sequence:\n{exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"semisym: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SemisymError, ValueError) as exc:
        print(f"semisym: {exc}", file=sys.stderr)
        return EXIT_FAIL
    if args.format == "text":
        print(render_text(result))
    else:
        print(json.dumps(result, indent=2))
    return EXIT_FAIL if _failed(result) else EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
