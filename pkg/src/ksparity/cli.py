"""Command line: ``ksparity <command> [input | --catalog NAME] [options]``.

Exit status is 0 for a valid KS proof or a successful run, 1 for valid input
that is not a KS proof (or fails a check), and 2 for malformed input.
"""

from __future__ import annotations

import argparse
import sys
from collections.abc import Sequence
from pathlib import Path

from . import catalog, io
from .errors import KSError
from .kite import KiteProof, all_solutions, assemble, compressed_tail, nine_basis_proofs, standard_tail
from .oracle import basis_clique_oracle, coloring_search, verify_system
from .parity import (
    check_proof_critical,
    classify,
    count_parity_proofs,
    enumerate_parity_proofs,
)
from .projectors import enumerate_bases, enumerate_projectors
from .proof import (
    ObservablesProof,
    assignment_search,
    check_critical,
    is_parity_proof,
    proof_symbol,
    validate,
)

OK, NOT_KS, MALFORMED = 0, 1, 2


class _Malformed(Exception):
    pass


def _add_input(p: argparse.ArgumentParser):
    p.add_argument("input", nargs="?", help="proof document (JSON)")
    p.add_argument("--catalog", metavar="NAME", help="use a built-in proof instead of a file")


def _load(args) -> ObservablesProof:
    if (args.input is None) == (args.catalog is None):
        raise _Malformed("give exactly one of an input file or --catalog NAME")
    if args.catalog is not None:
        return catalog.get(args.catalog).proof
    return io.read_proof(args.input)


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _ks_status(proof: ObservablesProof) -> tuple[bool, str]:
    """(is a KS proof, how it was decided)."""
    if is_parity_proof(proof).is_proof:
        return True, "parity"
    if len(proof.observables) <= 30 and assignment_search(proof) is None:
        return True, "no noncontextual assignment"
    return False, ""


def cmd_verify(args) -> int:
    proof = _load(args)
    report = validate(proof)
    print(f"qubits: {proof.n_qubits}")
    print(f"observables: {len(proof.observables)}")
    print(f"contexts: {len(proof.contexts)}")
    if not report.ok:
        print("valid: no")
        for line in report.lines():
            print(f"  {line}")
        return NOT_KS
    print("valid: yes")
    print("signs: " + " ".join("+" if s == 1 else "-" for s in proof.signs))
    ks, how = _ks_status(proof)
    symbol = proof_symbol(proof)
    if ks:
        print(f"KS proof: yes ({how}); symbol {symbol}")
    else:
        print(f"KS proof: no; symbol {symbol}")
    if args.critical:
        cr = check_critical(proof)
        print(f"critical: {'yes' if cr.critical else 'no'}")
        if cr.context_violation is not None:
            print(f"  sub-proof on contexts {list(cr.context_violation)}")
        if cr.qubit_violation is not None:
            print(f"  sub-proof on qubits {list(cr.qubit_violation[0])}")
    return OK if ks else NOT_KS


def _system(args, proof: ObservablesProof):
    projectors = enumerate_projectors(proof)
    return enumerate_bases(projectors, max_projectors=args.max_projectors, method=args.method)


def cmd_project(args) -> int:
    proof = _load(args)
    if not validate(proof).ok:
        raise _Malformed("input is not a valid observables proof; run verify")
    system = _system(args, proof)
    print(f"projectors: {len(system.projectors)}")
    print(
        f"bases: {len(system.bases)} "
        f"({len(system.pure_bases)} pure, {len(system.hybrid_bases)} hybrid)"
    )
    print(f"symbol: {system.symbol}")
    if args.table:
        for p in system.projectors:
            print(f"  {p.id:>4}  context {p.context_id}  {p.signature_string}  rank {p.rank}")
        for b in system.bases:
            print(f"  {b.label:>4}  " + " ".join(str(i) for i in b.sorted_ids()))
    if args.out:
        Path(args.out).write_text(io.dumps(io.system_document(system)))
    ks, _ = _ks_status(proof)
    if not ks:
        print("warning: not a KS proof", file=sys.stderr)
        return NOT_KS
    return OK


def cmd_parity(args) -> int:
    proof = _load(args)
    if not validate(proof).ok:
        raise _Malformed("input is not a valid observables proof; run verify")
    system = _system(args, proof)
    count = count_parity_proofs(system, max_bases=args.max_bases)
    print(f"parity proofs: {count}")
    if args.count_only:
        return OK if count else NOT_KS
    if args.classify:
        for row in classify(system, max_bases=args.max_bases):
            print(f"  {row.symbol}  projectors {row.projector_count}  bases {row.basis_count}  count {row.count}")
    if args.emit or args.check_critical:
        limit = args.emit if args.emit else None
        listed = []
        critical_all = True
        for pr in enumerate_parity_proofs(system, max_bases=args.max_bases):
            listed.append(pr)
            line = f"  {pr}  ({pr.projector_count}-{pr.basis_count})"
            if args.check_critical:
                crit = check_proof_critical(system, pr, max_bases=args.max_bases)
                critical_all &= crit.critical
                line += "  critical" if crit.critical else "  not critical"
            if args.emit:
                print(line)
            if limit is not None and len(listed) >= limit:
                break
        if args.check_critical:
            print(f"all critical: {'yes' if critical_all else 'no'} ({len(listed)} checked)")
        if args.out:
            Path(args.out).write_text(io.dumps(io.listing_document(listed)))
    return OK if count else NOT_KS


def _kite_spec(args):
    if args.variant:
        return compressed_tail(args.variant)
    if args.qubits is None:
        raise _Malformed("give --qubits N or --variant NAME")
    if args.qubits < 3:
        raise _Malformed(
            "Kites need at least 3 qubits (a tail-less Kite degenerates); "
            "use 'ksparity verify --catalog peres-mermin' for 2 qubits"
        )
    return standard_tail(args.qubits)


def _nine_basis_listing(kite: KiteProof) -> list[dict]:
    nb = nine_basis_proofs(kite, max_tail=len(kite.tail))
    return [
        {"pattern": list(pat), "bases": list(pr.bases), "symbol": str(pr.symbol)}
        for pat, pr in zip(nb.patterns, nb.proofs)
    ]


def cmd_kite(args) -> int:
    spec = _kite_spec(args)
    name = args.variant or f"kite{args.qubits}"
    if args.all_solutions:
        kites = all_solutions(spec, limit=args.limit)
        doc = {"solutions": [io.proof_document(k.proof) for k in kites]}
    else:
        kite = assemble(spec, name=name)
        doc = io.proof_document(kite.proof)
        if args.nine_bases:
            doc["nine_basis_proofs"] = _nine_basis_listing(kite)
    _emit(io.dumps(doc), args.out)
    return OK


def cmd_export(args) -> int:
    proof = _load(args)
    if args.format == "dot":
        _emit(io.to_dot(proof), args.out)
    else:
        _emit(io.dumps(io.proof_document(proof)), args.out)
    return OK


def cmd_catalog(args) -> int:
    if args.action == "list":
        for row in catalog.list_entries():
            print(f"{row.name:<14} {row.n_qubits:>3}  {row.symbol}")
        return OK
    if not args.name:
        raise _Malformed("catalog show needs a NAME")
    entry = catalog.get(args.name)
    _emit(io.dumps(io.proof_document(entry.proof, entry.provenance)), None)
    return OK


def cmd_oracle(args) -> int:
    proof = _load(args)
    if not validate(proof).ok:
        raise _Malformed("input is not a valid observables proof; run verify")
    system = _system(args, proof)
    report = verify_system(system)
    for line in report.lines():
        print(f"  {line}")
    ok = report.ok
    print(f"matrix checks: {'pass' if report.ok else 'FAIL'}")
    if args.clique:
        agree = basis_clique_oracle(system.projectors) == {b.projector_ids for b in system.bases}
        ok &= agree
        print(f"clique oracle agrees: {'yes' if agree else 'no'}")
    if args.coloring:
        witness = coloring_search(system)
        print("coloring: none (uncolorable)" if witness is None else f"coloring: {list(witness)}")
    return OK if ok else NOT_KS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ksparity", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="validate a proof and test the parity property")
    _add_input(p)
    p.add_argument("--critical", action="store_true", help="also test criticality")
    p.set_defaults(func=cmd_verify)

    def system_opts(p):
        p.add_argument("--method", choices=["clique", "split"], default="clique")
        p.add_argument("--max-projectors", type=int, default=256)

    p = sub.add_parser("project", help="projector and basis tables")
    _add_input(p)
    system_opts(p)
    p.add_argument("--table", action="store_true", help="print every projector and basis")
    p.add_argument("--out", help="write the system document here")
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("parity", help="projectors-based parity proofs")
    _add_input(p)
    system_opts(p)
    p.add_argument("--count-only", action="store_true")
    p.add_argument("--classify", action="store_true")
    p.add_argument("--emit", type=int, metavar="N", help="list the first N proofs")
    p.add_argument("--check-critical", action="store_true")
    p.add_argument("--max-bases", type=int, default=64)
    p.add_argument("--out", help="write the emitted listing here")
    p.set_defaults(func=cmd_parity)

    p = sub.add_parser("kite", help="assemble a Kite proof")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--qubits", type=int)
    g.add_argument("--variant", choices=["kite7", "kite11", "kite16"])
    p.add_argument("--nine-bases", action="store_true", help="add the 16 nine-basis proofs")
    p.add_argument("--all-solutions", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--out")
    p.set_defaults(func=cmd_kite)

    p = sub.add_parser("export", help="dot diagram or JSON document")
    _add_input(p)
    p.add_argument("--format", choices=["dot", "json"], default="json")
    p.add_argument("--out")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("catalog", help="built-in proofs")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("oracle", help="check the system against dense matrices")
    _add_input(p)
    system_opts(p)
    p.add_argument("--clique", action="store_true", help="compare with the clique oracle")
    p.add_argument("--coloring", action="store_true", help="search for a 0/1 coloring")
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (_Malformed, KSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return MALFORMED


if __name__ == "__main__":
    sys.exit(main())
