"""Command-line front end.

Exit codes: 0 the property holds or the query succeeded, 1 a counterexample
was found (reported), 2 usage, parse, contract or size-guard error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path

from depspace import axioms, core, instances, properties
from depspace.axioms import Verdict
from depspace.core import DependenceError, DependenceSpace
from depspace.fileformat import (
    parse_graph,
    parse_matrix,
    parse_raw,
    parse_space,
    serialize_space,
    space_hash,
)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _split_set(text: str) -> list[str]:
    return [t.strip() for t in text.split(",") if t.strip()]


def _fmt(labels) -> str:
    return "{" + ",".join(labels) + "}"


_started = time.perf_counter()


class _Report:
    def __init__(self, command: str, input_hash: str | None):
        self.command = command
        self.input_hash = input_hash
        self.start = _started
        self.fields: dict = {}
        self.lines: list[str] = []

    def emit(self, as_json: bool, verdict: str, witness=None, scanned=None) -> None:
        elapsed = (time.perf_counter() - self.start) * 1000.0
        if as_json:
            doc = {"command": self.command, "input-hash": self.input_hash, "verdict": verdict}
            if witness is not None:
                doc["witness"] = witness
            doc["scanned-count"] = scanned
            doc["elapsed-ms"] = round(elapsed, 3)
            doc.update(self.fields)
            print(json.dumps(doc, sort_keys=False))
            return
        print(f"command: {self.command}")
        if self.input_hash:
            print(f"input-hash: {self.input_hash}")
        for line in self.lines:
            print(line)
        print(f"verdict: {verdict}")
        if scanned is not None:
            print(f"scanned-count: {scanned}")


def _load_space(path: str) -> DependenceSpace:
    return parse_space(_read(path))


def _exit_for(verdict: Verdict) -> int:
    return 0 if verdict is Verdict.HOLDS else 1


def cmd_check(args) -> int:
    if args.axiom == "well-formed":
        text = _read(args.file)
        raw, _ = parse_raw(text)
        report = axioms.check_well_formed(raw)
        digest = hashlib.sha256(text.encode()).hexdigest()
        if report.holds:
            try:
                digest = space_hash(DependenceSpace.from_labels(raw.elements, raw.delta))
            except DependenceError:
                pass
    else:
        space = _load_space(args.file)
        digest = space_hash(space)
        report = axioms.check_transitivity(space, args.method, args.workers)
    rep = _Report(f"check {args.axiom}", digest)
    rep.fields["method"] = report.method
    rep.lines.append(f"method: {report.method}")
    w = report.witness
    if isinstance(w, axioms.TransitivityCounterexample):
        rep.lines.append(f"witness: x={w.x} A={_fmt(w.a)} B={_fmt(w.b)}")
    elif w is not None:
        rep.lines.append(f"witness: member {list(w.member)} ({w.reason})")
    rep.emit(args.json, report.verdict.value, None if w is None else w.to_dict(), report.scanned_count)
    return _exit_for(report.verdict)


def cmd_verify(args) -> int:
    space = _load_space(args.file)
    rep = _Report(f"verify {args.property}", space_hash(space))
    if args.property == "equicardinal-bases":
        br = properties.enumerate_bases(space)
        rep.fields.update(br.to_dict())
        rep.lines.append("bases: " + " ".join(_fmt(b) for b in br.bases))
        rep.lines.append(f"equicardinal: {str(br.equicardinal).lower()}")
        verdict = Verdict.HOLDS if br.equicardinal else Verdict.FAILS
        witness = None
        if br.witness_pair is not None:
            witness = {"bases": [list(b) for b in br.witness_pair]}
            rep.lines.append("witness: " + " ".join(_fmt(b) for b in br.witness_pair))
        rep.emit(args.json, verdict.value, witness, 1 << space.n)
        return _exit_for(verdict)
    scan = properties.steinitz_scan if args.property == "steinitz" else properties.eis_scan
    report = scan(space, args.workers)
    w = report.witness
    if isinstance(w, properties.EisCounterexample):
        rep.lines.append(f"witness: P={_fmt(w.p)} Q={_fmt(w.q)} R={_fmt(w.r)}")
    elif w is not None:
        rep.lines.append(f"witness: a={w.a} b={w.b} A={_fmt(w.base)}")
    rep.emit(args.json, report.verdict.value, None if w is None else w.to_dict(), report.scanned_count)
    return _exit_for(report.verdict)


def cmd_span(args) -> int:
    space = _load_space(args.file)
    rep = _Report("span", space_hash(space))
    s = core.span(space, _split_set(args.set))
    if args.json:
        rep.fields["result"] = list(s)
        rep.emit(True, "success")
    else:
        print(",".join(s))
    return 0


def cmd_independent(args) -> int:
    space = _load_space(args.file)
    rep = _Report("independent", space_hash(space))
    member = core.contained_member(space, _split_set(args.set))
    if member is not None:
        rep.lines.append(f"witness: contains delta member {_fmt(member)}")
    rep.emit(args.json, "holds" if member is None else "fails",
             None if member is None else {"member": list(member)}, len(space.delta))
    return 0 if member is None else 1


def cmd_basis(args) -> int:
    space = _load_space(args.file)
    labels = _split_set(args.set)
    rep = _Report("basis", space_hash(space))
    member = core.contained_member(space, labels)
    missing = [x for x in space.labels if x not in core.span(space, labels)]
    witness = None
    if member is not None:
        witness = {"member": list(member)}
        rep.lines.append(f"witness: contains delta member {_fmt(member)}")
    elif missing:
        witness = {"unspanned": missing}
        rep.lines.append(f"witness: does not span {_fmt(missing)}")
    rep.emit(args.json, "holds" if witness is None else "fails", witness, None)
    return 0 if witness is None else 1


def cmd_extend(args) -> int:
    space = _load_space(args.file)
    labels = _split_set(args.set)
    rep = _Report("extend", space_hash(space))
    if args.element is not None:
        out = properties.extend_independent(space, labels, args.element)
    else:
        out = properties.extend_to_basis(space, labels, strict=args.strict)
    if args.json:
        rep.fields["result"] = list(out)
        rep.emit(True, "success")
    else:
        print(",".join(out))
    return 0


def cmd_bases(args) -> int:
    space = _load_space(args.file)
    rep = _Report("bases", space_hash(space))
    br = properties.enumerate_bases(space)
    if args.json:
        rep.fields.update(br.to_dict())
        rep.emit(True, "success", None, 1 << space.n)
    else:
        for b in br.bases:
            print(",".join(b))
    return 0


def cmd_dimension(args) -> int:
    space = _load_space(args.file)
    rep = _Report("dimension", space_hash(space))
    br = properties.enumerate_bases(space)
    rep.fields["dimension"] = br.dimension
    if br.equicardinal:
        rep.lines.append(f"dimension: {br.dimension}")
        rep.emit(args.json, "holds", None, 1 << space.n)
        return 0
    pair = [list(b) for b in br.witness_pair]
    rep.lines.append("dimension: undefined, bases of different sizes: "
                     + " ".join(_fmt(b) for b in br.witness_pair))
    rep.emit(args.json, "fails", {"bases": pair}, 1 << space.n)
    return 1


def cmd_gen(args) -> int:
    kind = args.kind
    if kind == "uniform":
        space = instances.gen_uniform(args.n, args.k, args.redundant)
    elif kind == "graphic":
        space = instances.gen_graphic(parse_graph(_read(args.file)), args.redundant)
    elif kind == "binary":
        rows, labels = parse_matrix(_read(args.file))
        space = instances.gen_binary(rows, labels, args.redundant)
    else:
        space = instances.gen_random(args.n, args.m, args.max_size, args.seed)
    text = serialize_space(space)
    if args.output:
        Path(args.output).write_text(text)
    if args.json:
        rep = _Report(f"gen {kind}", space_hash(space))
        rep.fields["document"] = json.loads(text)
        rep.emit(True, "success")
    elif not args.output:
        sys.stdout.write(text)
    return 0


def cmd_oracle_compare(args) -> int:
    space = _load_space(args.file)
    if args.uniform is not None:
        oracle = instances.UniformOracle(space.labels, args.uniform)
    elif args.graph is not None:
        oracle = instances.GraphicOracle(parse_graph(_read(args.graph)))
    else:
        rows, labels = parse_matrix(_read(args.matrix))
        oracle = instances.BinaryOracle(rows, None if labels is None else tuple(labels))
    rep = _Report("oracle-compare", space_hash(space))
    rep.fields["oracle"] = oracle.kind
    res = instances.oracle_compare(space, oracle, args.workers)
    if res.witness is not None:
        rep.lines.append(f"witness: mismatch on {_fmt(res.witness)}")
    rep.emit(args.json, res.verdict.value,
             None if res.witness is None else {"set": list(res.witness)}, res.scanned_count)
    return _exit_for(res.verdict)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")
    common.add_argument("--workers", type=int, default=1, help="processes for exhaustive scans")

    parser = argparse.ArgumentParser(prog="depspace", description="Finite dependence spaces.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="check an axiom")
    p.add_argument("axiom", choices=["well-formed", "transitivity"])
    p.add_argument("file")
    p.add_argument("--method", choices=["direct", "idempotence"], default="direct")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("verify", parents=[common], help="verify a theorem exhaustively")
    p.add_argument("property", choices=["steinitz", "eis", "equicardinal-bases"])
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    for name, func, helptext in [
        ("span", cmd_span, "one-step span of a set"),
        ("independent", cmd_independent, "test independence of a set"),
        ("basis", cmd_basis, "test whether a set is a basis"),
        ("extend", cmd_extend, "extend an independent set"),
    ]:
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("file")
        p.add_argument("--set", default="", help="comma-separated labels")
        p.set_defaults(func=func)
        if name == "extend":
            p.add_argument("--element", help="add one element instead of extending to a basis")
            p.add_argument("--strict", action=argparse.BooleanOptionalAction, default=True,
                           help="require transitivity before extending to a basis")

    for name, func in [("bases", cmd_bases), ("dimension", cmd_dimension)]:
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file")
        p.set_defaults(func=func)

    p = sub.add_parser("gen", help="generate a space")
    gen = p.add_subparsers(dest="kind", required=True)
    gen_common = argparse.ArgumentParser(add_help=False, parents=[common])
    gen_common.add_argument("-o", "--output", help="write the space document here")
    gen_common.add_argument("--redundant", type=int, metavar="SIZE",
                            help="also add every dependent set with at most SIZE elements")
    g = gen.add_parser("uniform", parents=[gen_common])
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    for kind in ("graphic", "binary"):
        g = gen.add_parser(kind, parents=[gen_common])
        g.add_argument("file")
    g = gen.add_parser("random", parents=[common])
    g.add_argument("-o", "--output")
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--max-size", type=int, default=2)
    g.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle-compare", parents=[common], help="compare with a rank oracle")
    p.add_argument("file")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--uniform", type=int, metavar="K")
    which.add_argument("--graph", metavar="GRAPH_FILE")
    which.add_argument("--matrix", metavar="MATRIX_FILE")
    p.set_defaults(func=cmd_oracle_compare)
    return parser


def run_command(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    global _started
    _started = time.perf_counter()
    try:
        return args.func(args)
    except (DependenceError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command())


if __name__ == "__main__":
    main()
