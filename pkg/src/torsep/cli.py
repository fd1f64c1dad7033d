"""Command-line surface for every operation, with machine-readable JSON output.

Every subcommand prints a single result document on stdout.  Serialization is
canonical: keys sorted, and integers beyond 2^53 rendered as decimal strings
so consumers with double-precision JSON parsers stay lossless.  Exit codes:
0 success, 2 invalid input, 3 resource-cap exceeded.  Boolean verdicts are
always carried in the document, never in the exit code.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import __version__
from .errors import (
    DimensionTooLarge,
    GeneratorNotInvariant,
    NotNullconeComponent,
    SearchSpaceTooLarge,
)
from .lattice import IntMatrix, LatticeBasis, kernel_basis, lattice_equal
from .segre_veronese import (
    SVSpec,
    monomial_min_construction,
    monomial_min_size,
    segre_weight_matrix,
    separating_size_bounds,
    sv_weight_matrix,
)
from .semigroup import MonomialSemigroup, hilbert_basis
from .septest import (
    DEFAULT_CHARP_CAP,
    DEFAULT_ORACLE_BUDGET,
    DEFAULT_ORACLE_MODULUS,
    DEFAULT_SEARCH_BUDGET,
    LatticeCertificate,
    PPowerCertificate,
    SupportCertificate,
    check_separating_char0,
    check_separating_charp,
    construct_2rplus1,
    kernel_small_support_spans,
    minimal_monomial_size,
    oracle_refute,
    verify_certificate,
)
from .torusrep import TorusRep, graph_closure_classify, nullcone, is_orbit_closed, sepvar_decompose

_BIG = 2**53


class InputError(ValueError):
    """Invalid document or flag value; reported on stderr with exit code 2."""


# --- document plumbing -------------------------------------------------------


def _stringify_big_ints(obj):
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, int):
        return str(obj) if abs(obj) >= _BIG else obj
    if isinstance(obj, (list, tuple)):
        return [_stringify_big_ints(x) for x in obj]
    if isinstance(obj, dict):
        return {k: _stringify_big_ints(v) for k, v in obj.items()}
    return obj


def render_document(command: str, payload: dict) -> str:
    doc = {"command": command, "version": __version__, **payload}
    return json.dumps(_stringify_big_ints(doc), sort_keys=True, separators=(", ", ": "))


def _read_json(path: str) -> dict:
    try:
        text = sys.stdin.read() if path == "-" else open(path, "r", encoding="utf-8").read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise InputError(f"{path}: top-level value must be an object")
    return doc


def _int_field(doc: dict, field: str, source: str) -> int:
    if field not in doc:
        raise InputError(f"{source}: missing field '{field}'")
    value = doc[field]
    if isinstance(value, str):
        try:
            value = int(value)
        except ValueError:
            raise InputError(f"{source}: field '{field}' must be an integer") from None
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputError(f"{source}: field '{field}' must be an integer")
    return value


def _vector_list_field(doc: dict, field: str, source: str) -> list[list[int]]:
    if field not in doc:
        raise InputError(f"{source}: missing field '{field}'")
    value = doc[field]
    if not isinstance(value, list):
        raise InputError(f"{source}: field '{field}' must be a list of integer vectors")
    out = []
    for i, vec in enumerate(value):
        if not isinstance(vec, list):
            raise InputError(f"{source}: field '{field}'[{i}] must be a list")
        row = []
        for x in vec:
            if isinstance(x, str):
                try:
                    x = int(x)
                except ValueError:
                    raise InputError(f"{source}: field '{field}'[{i}] has a non-integer entry") from None
            if not isinstance(x, int) or isinstance(x, bool):
                raise InputError(f"{source}: field '{field}'[{i}] has a non-integer entry")
            row.append(x)
        out.append(row)
    return out


def load_rep(path: str) -> TorusRep:
    doc = _read_json(path)
    rank_ = _int_field(doc, "rank", path)
    columns = _vector_list_field(doc, "weights", path)
    if any(len(col) != rank_ for col in columns):
        raise InputError(f"{path}: every weight column must have length {rank_}")
    try:
        return TorusRep.from_columns(columns)
    except ValueError as exc:
        raise InputError(f"{path}: field 'weights': {exc}") from exc


def load_generators(path: str, rep: TorusRep) -> MonomialSemigroup:
    doc = _read_json(path)
    gens = _vector_list_field(doc, "generators", path)
    try:
        return MonomialSemigroup.for_rep(rep, gens)
    except GeneratorNotInvariant:
        raise
    except ValueError as exc:
        raise InputError(f"{path}: field 'generators': {exc}") from exc


def _parse_indices(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise InputError(f"expected comma-separated integers, got '{text}'") from None


def _parse_int_list(text: str, flag: str) -> tuple[int, ...]:
    values = _parse_indices(text)
    if not values:
        raise InputError(f"{flag} must list at least one integer")
    return values


def _make_spec(args) -> SVSpec:
    factors = _parse_int_list(args.n, "--n")
    degrees = _parse_int_list(args.a, "--a") if args.a else tuple([1] * len(factors))
    try:
        return SVSpec(factors, degrees, args.char)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _ser_cert(cert) -> Optional[dict]:
    if cert is None:
        return None
    if isinstance(cert, LatticeCertificate):
        return {"kind": "lattice", "support": list(cert.support), "witness": list(cert.witness)}
    if isinstance(cert, SupportCertificate):
        return {"kind": "support", "witness": list(cert.witness), "index": cert.index}
    if isinstance(cert, PPowerCertificate):
        return {"kind": "p-power", "element": list(cert.element), "prime": cert.prime, "cap": cert.cap}
    raise TypeError(f"unknown certificate {cert!r}")


def _ser_rep(rep: TorusRep) -> dict:
    return {"rank": rep.rank, "weights": [list(rep.weight(i)) for i in range(rep.dim)]}


def _ser_point(point) -> list:
    return [None if c is None else c for c in point.coords]


def _caps_kwargs(args) -> dict:
    # --max-dim tightens (or relaxes) both the Hilbert-basis cap and the
    # subset-enumeration cap; module defaults apply when absent.
    out = {}
    if getattr(args, "max_dim", None) is not None:
        out["max_dim"] = args.max_dim
    return out


# --- subcommand handlers -----------------------------------------------------


def _cmd_hilbert_basis(args) -> str:
    rep = load_rep(args.rep)
    kwargs = {}
    if args.max_dim is not None:
        kwargs["max_dim"] = args.max_dim
    basis = hilbert_basis(rep.weights, **kwargs)
    return render_document(
        "hilbert-basis", {"result": {"basis": [list(v) for v in basis.elements]}}
    )


def _cmd_nullcone(args) -> str:
    rep = load_rep(args.rep)
    decomp = nullcone(rep, **_caps_kwargs(args))
    return render_document(
        "nullcone", {"result": {"components": [list(c) for c in decomp.components]}}
    )


def _cmd_orbit_closed(args) -> str:
    rep = load_rep(args.rep)
    support = _parse_indices(args.support)
    try:
        closed = is_orbit_closed(rep, support)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    return render_document("orbit-closed", {"result": {"closed": closed, "support": sorted(support)}})


def _cmd_sepvar(args) -> str:
    rep = load_rep(args.rep)
    decomp = sepvar_decompose(rep, **_caps_kwargs(args))
    return render_document(
        "sepvar",
        {
            "result": {
                "includes_graph": decomp.includes_graph,
                "simple": decomp.simple,
                "nullcone_pairs": [
                    {"i": list(i), "j": list(j), "classification": c.value}
                    for i, j, c in decomp.nullcone_pairs
                ],
                "triples": [
                    {"k": list(k), "i": list(i), "j": list(j)} for k, i, j in decomp.triples
                ],
            }
        },
    )


def _cmd_classify_pair(args) -> str:
    rep = load_rep(args.rep)
    verdict = graph_closure_classify(
        rep, _parse_indices(args.i), _parse_indices(args.j), **_caps_kwargs(args)
    )
    return render_document("classify-pair", {"result": {"classification": verdict.value}})


def _cmd_check_sep(args) -> str:
    rep = load_rep(args.rep)
    gens = load_generators(args.gens, rep)
    hilbert_kwargs = {}
    if args.max_dim is not None:
        hilbert_kwargs["hilbert_max_dim"] = args.max_dim
    payload: dict = {}
    if args.char == 0:
        verdict = check_separating_char0(rep, gens, **hilbert_kwargs)
        payload["result"] = {"characteristic": 0, "separating": verdict.separating}
        cert = _ser_cert(verdict.certificate)
        if cert is not None:
            payload["certificate"] = cert
        if args.verify and verdict.certificate is not None:
            payload["verified"] = verify_certificate(rep, gens, verdict.certificate)
    else:
        verdict = check_separating_charp(rep, gens, args.char, cap=args.charp_cap, **hilbert_kwargs)
        payload["result"] = {
            "characteristic": args.char,
            "result": "yes" if verdict.is_yes else "no-up-to",
            "m": verdict.m,
            "cap": verdict.cap,
        }
        cert = _ser_cert(verdict.certificate)
        if cert is not None:
            payload["certificate"] = cert
        if args.verify and verdict.certificate is not None:
            payload["verified"] = verify_certificate(rep, gens, verdict.certificate)
    return render_document("check-sep", payload)


def _cmd_construct(args) -> str:
    rep = load_rep(args.rep)
    result = construct_2rplus1(rep)
    payload = {
        "result": {
            "bound": min(2 * rep.rank + 1, rep.dim),
            "generators": [list(g) for g in result.generators],
            "separating": True,
        }
    }
    if args.verify:
        payload["verified"] = check_separating_char0(rep, result).separating
    return render_document("construct", payload)


def _cmd_kernel_span(args) -> str:
    rep = load_rep(args.rep)
    spans, witness = kernel_small_support_spans(rep, **_caps_kwargs(args))
    payload = {"result": {"spans": spans, "witness": [list(v) for v in witness]}}
    if args.verify:
        limit = min(rep.rank + 1, rep.dim)
        ok = all(
            not any(rep.weights.mul_vector(v)) and sum(1 for x in v if x) <= limit
            for v in witness
        )
        ok = ok and lattice_equal(LatticeBasis(rep.dim, witness), kernel_basis(rep.weights))
        payload["verified"] = ok
    return render_document("kernel-span", payload)


def _cmd_min_search(args) -> str:
    rep = load_rep(args.rep)
    pool = load_generators(args.gens, rep)
    p = None if args.char == 0 else args.char
    result = minimal_monomial_size(
        rep,
        pool,
        args.cap,
        p=p,
        charp_cap=args.charp_cap,
        budget=args.search_budget,
    )
    if result is None:
        payload: dict = {"result": {"found": False, "cap": args.cap, "pool_relative": True}}
    else:
        payload = {
            "result": {
                "found": True,
                "size": result.size,
                "witness": [list(g) for g in result.witness],
                "pool_relative": True,
            }
        }
        if args.verify:
            candidate = MonomialSemigroup(rep.dim, result.witness)
            if p is None:
                payload["verified"] = check_separating_char0(rep, candidate).separating
            else:
                payload["verified"] = check_separating_charp(
                    rep, candidate, p, cap=args.charp_cap
                ).is_yes
    return render_document("min-search", payload)


def _cmd_sv_bounds(args) -> str:
    spec = _make_spec(args)
    report = separating_size_bounds(spec)
    return render_document(
        "sv-bounds",
        {
            "result": {
                "case": report.case,
                "s": [report.s_lower, report.s_upper],
                "s_prime": [report.s_prime_lower, report.s_prime_upper],
                "reduced_degrees": list(report.reduced_degrees),
            }
        },
    )


def _cmd_sv_monomial(args) -> str:
    spec = _make_spec(args)
    construction = monomial_min_construction(spec)
    return render_document(
        "sv-monomial",
        {
            "result": {
                "size": monomial_min_size(spec),
                "generators": [list(g) for g in construction.generators],
            }
        },
    )


def _cmd_sv_rep(args) -> str:
    if args.encoding == "segre":
        factors = _parse_int_list(args.n, "--n")
        if args.a and any(x != 1 for x in _parse_int_list(args.a, "--a")):
            raise InputError("the segre encoding requires every degree to be 1")
        try:
            rep = segre_weight_matrix(factors)
        except ValueError as exc:
            raise InputError(str(exc)) from exc
    else:
        rep = sv_weight_matrix(_make_spec(args))
    return render_document("sv-rep", {"result": _ser_rep(rep)})


def _cmd_oracle(args) -> str:
    rep = load_rep(args.rep)
    gens = load_generators(args.gens, rep)
    refutation = oracle_refute(rep, gens, modulus=args.oracle_modulus, budget=args.oracle_budget)
    if refutation is None:
        payload: dict = {"result": {"refuted": False, "modulus": args.oracle_modulus}}
    else:
        payload = {
            "result": {
                "refuted": True,
                "modulus": args.oracle_modulus,
                "u": _ser_point(refutation.u),
                "v": _ser_point(refutation.v),
                "separator": list(refutation.separator),
            }
        }
        if args.verify:
            u, v = refutation.u, refutation.v
            sep = refutation.separator
            ok = u.eval_monomial(sep) != v.eval_monomial(sep)
            ok = ok and all(u.eval_monomial(g) == v.eval_monomial(g) for g in gens.generators)
            payload["verified"] = ok
    return render_document("oracle", payload)


# --- parser ------------------------------------------------------------------


def _add_rep_flag(p: argparse.ArgumentParser) -> None:
    p.add_argument("--rep", required=True, help="representation document (JSON file, or - for stdin)")


def _add_caps(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-dim", type=int, default=None, help="override the enumeration dimension cap")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torsep",
        description="Exact invariant-theory computations for torus representations.",
    )
    parser.add_argument("--version", action="version", version=f"torsep {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hilbert-basis", help="minimal generating set of the invariant semigroup")
    _add_rep_flag(p)
    _add_caps(p)
    p.set_defaults(func=_cmd_hilbert_basis)

    p = sub.add_parser("nullcone", help="maximal coordinate subspaces inside the nullcone")
    _add_rep_flag(p)
    _add_caps(p)
    p.set_defaults(func=_cmd_nullcone)

    p = sub.add_parser("orbit-closed", help="closed-orbit test for a support pattern")
    _add_rep_flag(p)
    p.add_argument("--support", default="", help="comma-separated coordinate indices (0-based)")
    p.set_defaults(func=_cmd_orbit_closed)

    p = sub.add_parser("sepvar", help="separating-variety decomposition certificate")
    _add_rep_flag(p)
    _add_caps(p)
    p.set_defaults(func=_cmd_sepvar)

    p = sub.add_parser("classify-pair", help="graph-closure classification of two nullcone components")
    _add_rep_flag(p)
    p.add_argument("--i", required=True, help="first component, comma-separated indices")
    p.add_argument("--j", required=True, help="second component, comma-separated indices")
    _add_caps(p)
    p.set_defaults(func=_cmd_classify_pair)

    p = sub.add_parser("check-sep", help="separating-algebra test for a generator list")
    _add_rep_flag(p)
    p.add_argument("--gens", required=True, help="generator document (JSON file, or - for stdin)")
    p.add_argument("--char", type=int, default=0, help="characteristic: 0 or a prime")
    p.add_argument("--charp-cap", type=int, default=DEFAULT_CHARP_CAP)
    p.add_argument("--verify", action="store_true", help="re-verify any emitted certificate")
    _add_caps(p)
    p.set_defaults(func=_cmd_check_sep)

    p = sub.add_parser("construct", help="separating set from invariants of support <= 2r+1")
    _add_rep_flag(p)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("kernel-span", help="kernel generation by vectors of support <= r+1")
    _add_rep_flag(p)
    p.add_argument("--verify", action="store_true")
    _add_caps(p)
    p.set_defaults(func=_cmd_kernel_span)

    p = sub.add_parser("min-search", help="smallest separating subset of a generator pool")
    _add_rep_flag(p)
    p.add_argument("--gens", required=True, help="pool document (JSON file, or - for stdin)")
    p.add_argument("--cap", type=int, required=True, help="largest subset size to try")
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--charp-cap", type=int, default=DEFAULT_CHARP_CAP)
    p.add_argument("--search-budget", type=int, default=DEFAULT_SEARCH_BUDGET)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_min_search)

    p = sub.add_parser("sv-bounds", help="separating-size bounds for a Segre-Veronese cone")
    p.add_argument("--n", required=True, help="factor sizes, comma-separated")
    p.add_argument("--a", default="", help="degrees, comma-separated (default: all 1)")
    p.add_argument("--char", type=int, default=0)
    p.set_defaults(func=_cmd_sv_bounds)

    p = sub.add_parser("sv-monomial", help="minimal monomial separating set for a Segre-Veronese cone")
    p.add_argument("--n", required=True)
    p.add_argument("--a", default="")
    p.add_argument("--char", type=int, default=0)
    p.set_defaults(func=_cmd_sv_monomial)

    p = sub.add_parser("sv-rep", help="weight matrix of a Segre-Veronese encoding")
    p.add_argument("--n", required=True)
    p.add_argument("--a", default="")
    p.add_argument("--char", type=int, default=0)
    p.add_argument("--encoding", choices=["cone", "segre"], default="cone")
    p.set_defaults(func=_cmd_sv_rep)

    p = sub.add_parser("oracle", help="finite falsification oracle for a generator list")
    _add_rep_flag(p)
    p.add_argument("--gens", required=True)
    p.add_argument("--oracle-modulus", type=int, default=DEFAULT_ORACLE_MODULUS)
    p.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on bad flags and 0 on --help; pass both through
        return int(exc.code or 0)
    try:
        document = args.func(args)
    except (DimensionTooLarge, SearchSpaceTooLarge) as exc:
        print(f"torsep: resource cap: {exc}", file=sys.stderr)
        return 3
    except (InputError, GeneratorNotInvariant, NotNullconeComponent) as exc:
        print(f"torsep: invalid input: {exc}", file=sys.stderr)
        return 2
    print(document)
    return 0


def console_main() -> None:
    sys.exit(main())


if __name__ == "__main__":
    console_main()
