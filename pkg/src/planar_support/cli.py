"""Command-line interface: ``planar-support <command> ...``.

Every command reads files, writes files, and prints one JSON document on
standard output. Human-readable diagnostics go to standard error.

Exit codes: 0 success or yes, 1 no or violations, 2 error, 3 unknown.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Callable

from . import __version__
from . import fixtures, generators
from .formats import (
    FormatError,
    dumps,
    emit_hg,
    emit_pg,
    envelope,
    parse_hg,
    parse_pg,
    sha256_of,
    sorted_ids,
)
from .gluing import glue, verify_glue_layers
from .kernel import KernelConfig, kernelize
from .oracle import SearchBudget, Verdict, find_support
from .plane_graph import EmbeddingError, to_dot
from .separators import build_wfss, sequence_from_json, validate_wfss
from .signatures import find_equal_signature_pair, signatures
from .support import is_support

EXIT_OK, EXIT_NO, EXIT_ERROR, EXIT_UNKNOWN = 0, 1, 2, 3

log = logging.getLogger("planar_support")


class _Inputs:
    """Reads input files and remembers their digests for the JSON envelope."""

    def __init__(self) -> None:
        self.digests: dict[str, str] = {}

    def text(self, path: str) -> str:
        try:
            data = Path(path).read_text()
        except OSError as exc:
            raise FormatError(f"cannot read file: {exc.strerror}", source=path) from None
        self.digests[path] = sha256_of(data)
        return data

    def hypergraph(self, path: str):
        H, diags = parse_hg(self.text(path), path)
        for d in diags:
            log.warning("%s:%d: %s", path, d.line, d.message)
        return H

    def graph(self, path: str):
        return parse_pg(self.text(path), path)

    def json(self, path: str):
        raw = self.text(path)
        try:
            return json.loads(raw)
        except json.JSONDecodeError as exc:
            raise FormatError(exc.msg, exc.lineno, exc.colno, path) from None


def _emit(doc: dict) -> None:
    sys.stdout.write(dumps(doc))


def _write(path: str | None, text: str) -> None:
    if path is None:
        return
    Path(path).write_text(text)


def _sequence(inp: _Inputs, path: str, G):
    try:
        return sequence_from_json(inp.json(path), G)
    except ValueError as exc:
        if isinstance(exc, FormatError):
            raise
        raise FormatError(str(exc), source=path) from None


# ----------------------------------------------------------------------
# commands


def cmd_kernelize(args, inp: _Inputs) -> int:
    H = inp.hypergraph(args.input)
    cfg = KernelConfig(args.r, None if args.paper_bound else args.alpha)
    K, report = kernelize(H, cfg)
    text = emit_hg(K)
    _write(args.out, text)
    doc = envelope("kernelize", inp.digests, report=report.to_json(), vertices=K.n, hyperedges=K.m)
    if args.out is None:
        doc["hg"] = text
    _emit(doc)
    return EXIT_OK


def cmd_solve(args, inp: _Inputs) -> int:
    H = inp.hypergraph(args.input)
    budget = SearchBudget(
        max_free_edges=args.max_free_edges,
        max_nodes=args.max_nodes,
        time_cap=args.time_cap,
        engine=args.engine,
    )
    res = find_support(H, args.r, budget)
    doc = envelope("solve", inp.digests, verdict=res.verdict.value, r=args.r, layers=res.layers)
    if res.stats is not None:
        st = res.stats
        doc["stats"] = {
            "engine": st.engine,
            "free_edges": st.free_edges,
            "forced_edges": st.forced_edges,
            "nodes": st.nodes,
            "seconds": round(st.seconds, 3),
            "reason": st.reason,
        }
    if res.found and res.embedding is not None:
        text = emit_pg(res.embedding)
        _write(args.out, text)
        doc["edges"] = sorted(sorted_ids(e) for e in res.graph.edges)
        if args.out is None:
            doc["pg"] = text
    _emit(doc)
    return {Verdict.YES: EXIT_OK, Verdict.NO: EXIT_NO, Verdict.UNKNOWN: EXIT_UNKNOWN}[res.verdict]


def cmd_check_support(args, inp: _Inputs) -> int:
    G = inp.graph(args.graph)
    H = inp.hypergraph(args.hypergraph)
    try:
        v = is_support(G, H)
    except ValueError as exc:
        raise FormatError(str(exc), source=args.graph) from None
    bad = [{"hyperedge": sorted_ids(H.edges[j]), "index": j, "pieces": k} for j, k in v.violations]
    _emit(envelope("check-support", inp.digests, support=v.ok, violations=bad))
    return EXIT_OK if v.ok else EXIT_NO


def cmd_sepseq(args, inp: _Inputs) -> int:
    G = inp.graph(args.graph)
    seq = build_wfss(G, args.block_threshold)
    doc = envelope(
        "sepseq",
        inp.digests,
        length=len(seq),
        width=seq.width,
        shape=seq.shape,
        provenance=seq.provenance,
        sequence=seq.to_json(),
    )
    _write(args.out, dumps(doc))
    _emit(doc)
    return EXIT_OK


def cmd_validate_sepseq(args, inp: _Inputs) -> int:
    G = inp.graph(args.graph)
    seq = _sequence(inp, args.sequence, G)
    rep = validate_wfss(G, seq)
    _emit(envelope("validate-sepseq", inp.digests, **rep.to_json()))
    return EXIT_OK if rep.ok else EXIT_NO


def cmd_glue(args, inp: _Inputs) -> int:
    G = inp.graph(args.graph)
    seq = _sequence(inp, args.sequence, G)
    rep = validate_wfss(G, seq)
    if not rep.ok:
        raise FormatError(f"sequence violates properties {', '.join(rep.failed())}", source=args.sequence)
    res = glue(G, seq, args.i, args.j)
    text = emit_pg(res.graph)
    _write(args.out, text)
    doc = envelope("glue", inp.digests, **res.to_json(), layers_ok=verify_glue_layers(G, res), vertices=res.graph.n)
    if args.out is None:
        doc["pg"] = text
    _emit(doc)
    return EXIT_OK


def cmd_signature(args, inp: _Inputs) -> int:
    G = inp.graph(args.graph)
    H = inp.hypergraph(args.hypergraph)
    seq = _sequence(inp, args.sequence, G)
    try:
        sigs = signatures(G, H, seq)
    except ValueError as exc:
        raise FormatError(str(exc), source=args.graph) from None
    pair = find_equal_signature_pair(sigs)
    _emit(
        envelope(
            "signature",
            inp.digests,
            signatures=[s.to_json() for s in sigs],
            distinct=len(set(sigs)),
            equal_pair=list(pair) if pair else None,
        )
    )
    return EXIT_OK


def cmd_render(args, inp: _Inputs) -> int:
    G = inp.graph(args.graph)
    text = to_dot(G, with_layers=args.layers)
    if args.out is None:
        sys.stdout.write(text)
    else:
        _write(args.out, text)
        _emit(envelope("render", inp.digests, out=args.out))
    return EXIT_OK


_HYPER_KINDS: dict[str, Callable] = {
    "fig-counter": lambda a: fixtures.counter_hypergraph(),
    "fig-counter-minus-t": lambda a: fixtures.counter_minus_t(),
    "supplement-ell": lambda a: fixtures.copies_hypergraph(a.n),
}

_GRAPH_KINDS: dict[str, Callable] = {
    "fan": lambda a: generators.fan(a.n),
    "disk": lambda a: generators.random_disk(a.layers, a.size, a.seed),
    "hinged-fan": lambda a: generators.hinged_fan(a.n),
    "wheel-corridor": lambda a: generators.wheel_corridor(a.n),
    "corridor": lambda a: generators.corridor(a.n, a.hub),
    "nested-corridor": lambda a: generators.nested_corridor(a.n, a.layers, a.seed),
}


def cmd_gen(args, inp: _Inputs) -> int:
    kind = args.kind
    needs_n = kind in ("supplement-ell", "fan", "hinged-fan", "wheel-corridor", "corridor", "nested-corridor")
    if needs_n and args.n is None:
        raise FormatError(f"gen {kind} needs a size argument")
    if kind in _HYPER_KINDS:
        text = emit_hg(_HYPER_KINDS[kind](args))
    else:
        try:
            text = emit_pg(_GRAPH_KINDS[kind](args))
        except (ValueError, EmbeddingError) as exc:
            raise FormatError(str(exc)) from None
    if args.out is None:
        sys.stdout.write(text)
    else:
        _write(args.out, text)
        _emit(envelope("gen", {}, kind=kind, out=args.out))
    return EXIT_OK


# ----------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planar-support", description=__doc__.split("\n")[0])
    p.add_argument("--version", action="version", version=__version__)
    p.add_argument("--threads", type=int, default=1, help="worker cap (commands currently run single-threaded)")
    p.add_argument("-v", "--verbose", action="store_true", help="more diagnostics on stderr")
    sub = p.add_subparsers(dest="command", required=True)

    def out(sp):
        sp.add_argument("--out", "-o", help="output file")

    k = sub.add_parser("kernelize", help="cap twin classes")
    k.add_argument("input")
    k.add_argument("--r", type=int, required=True)
    g = k.add_mutually_exclusive_group()
    g.add_argument("--alpha", type=int)
    g.add_argument("--paper-bound", action="store_true", help="cap at the proven safe class size (the default)")
    out(k)
    k.set_defaults(func=cmd_kernelize)

    s = sub.add_parser("solve", help="search for an (r-outerplanar) planar support")
    s.add_argument("input")
    s.add_argument("--r", type=int, default=None)
    s.add_argument("--engine", choices=("auto", "dfs", "sat"), default="auto")
    s.add_argument("--max-free-edges", type=int, default=SearchBudget.max_free_edges)
    s.add_argument("--max-nodes", type=int, default=SearchBudget.max_nodes)
    s.add_argument("--time-cap", type=float, default=SearchBudget.time_cap, help="seconds")
    out(s)
    s.set_defaults(func=cmd_solve)

    c = sub.add_parser("check-support", help="is the graph a support of the hypergraph")
    c.add_argument("graph")
    c.add_argument("hypergraph")
    c.set_defaults(func=cmd_check_support)

    q = sub.add_parser("sepseq", help="build a well-formed separator sequence")
    q.add_argument("graph")
    q.add_argument("--block-threshold", type=float, default=None)
    out(q)
    q.set_defaults(func=cmd_sepseq)

    vq = sub.add_parser("validate-sepseq", help="check a separator sequence")
    vq.add_argument("graph")
    vq.add_argument("sequence")
    vq.set_defaults(func=cmd_validate_sepseq)

    gl = sub.add_parser("glue", help="glue T_i to T_j (1-based)")
    gl.add_argument("graph")
    gl.add_argument("sequence")
    gl.add_argument("--i", type=int, required=True)
    gl.add_argument("--j", type=int, required=True)
    out(gl)
    gl.set_defaults(func=cmd_glue)

    sg = sub.add_parser("signature", help="separator signatures over a representative support")
    sg.add_argument("graph")
    sg.add_argument("hypergraph")
    sg.add_argument("sequence")
    sg.set_defaults(func=cmd_signature)

    r = sub.add_parser("render", help="DOT output")
    r.add_argument("graph")
    r.add_argument("--dot", action="store_true", default=True, help="DOT format (the only one)")
    r.add_argument("--layers", action="store_true", help="rank vertices by layer")
    out(r)
    r.set_defaults(func=cmd_render)

    ge = sub.add_parser("gen", help="emit a fixture or a generated disk")
    ge.add_argument("kind", choices=sorted(list(_HYPER_KINDS) + list(_GRAPH_KINDS)))
    ge.add_argument("n", nargs="?", type=int, help="size parameter of the family")
    ge.add_argument("--layers", type=int, default=2)
    ge.add_argument("--size", type=int, default=40)
    ge.add_argument("--seed", type=int, default=None, help="defaults to $PSK_SEED")
    ge.add_argument("--hub", action="store_true", help="corridor: one L1 vertex sees the top row")
    out(ge)
    ge.set_defaults(func=cmd_gen)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    inp = _Inputs()
    try:
        return args.func(args, inp)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit(envelope(args.command, inp.digests, error=exc.to_json()))
        return EXIT_ERROR
    except (EmbeddingError, ValueError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        _emit(envelope(args.command, inp.digests, error={"message": str(exc)}))
        return EXIT_ERROR


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
