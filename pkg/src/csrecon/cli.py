"""Command-line front end over the csr/1 file format.

Exit codes: 0 reachable / verified, 1 unreachable / verification failed,
2 input or resource error.  Standard output carries only the answer line;
diagnostics go to stderr.
"""
from __future__ import annotations

import argparse
import math
import random
import sys

from .core import FormatError, IntervalModel, InvariantError, ResourceLimitError, SplitModel
from .generators import (
    random_edges_instance,
    random_interval_instance,
    random_split_instance,
)
from .instances import (
    Instance,
    parse_document,
    parse_instance,
    parse_sequence,
    render_instance,
    render_sequence,
    verify_sequence,
    _vertex_list,
)
from .interval_recon import shortest_tar_sequence, tar_distance, tj_distance, tj_sequence
from .oracle import DEFAULT_MAX_N, oracle_connectivity_report, oracle_distance
from .reductions import isr_to_split_csr, oct_to_colorable_set, spr_to_cocomp_csr
from .split_recon import DEFAULT_MAX_C, split_tar_reachable, split_tar_witness

EXIT_OK = 0
EXIT_UNREACHABLE = 1
EXIT_ERROR = 2


def _read(path):
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _emit_sequence(args, seq):
    if not getattr(args, "emit_sequence", False):
        return
    if not args.out:
        raise InvariantError("--emit-sequence requires --out")
    _write(args.out, render_sequence(seq))


def _solve_oracle(inst, args, emit):
    dist, seq = oracle_distance(
        inst.representation, inst.c, inst.start, inst.target,
        k=inst.k, rule=inst.rule,
        max_n=args.max_n, max_states=args.max_states,
        want_sequence=emit)
    if dist == math.inf:
        print("unreachable")
        return EXIT_UNREACHABLE
    print(dist)
    if emit:
        _emit_sequence(args, seq)
    return EXIT_OK


def _cmd_solve(args, emit=True):
    inst = parse_instance(_read(args.instance))
    rep = inst.representation
    emit = emit and getattr(args, "emit_sequence", False)
    if isinstance(rep, IntervalModel) and inst.rule == "tar":
        verdict = tar_distance(rep, inst.c, inst.start, inst.target, inst.k)
        if verdict.distance == math.inf:
            print("unreachable (locked)")
            return EXIT_UNREACHABLE
        print(verdict.distance)
        if emit:
            _emit_sequence(args, shortest_tar_sequence(
                rep, inst.c, inst.start, inst.target, inst.k, verdict=verdict))
        return EXIT_OK
    if isinstance(rep, IntervalModel) and inst.rule == "tj":
        dist = tj_distance(rep, inst.c, inst.start, inst.target)
        if dist == math.inf:
            print("unreachable")
            return EXIT_UNREACHABLE
        print(dist)
        if emit:
            _emit_sequence(args, tj_sequence(rep, inst.c, inst.start, inst.target))
        return EXIT_OK
    if isinstance(rep, SplitModel) and inst.rule in ("tar", "tj"):
        if inst.rule == "tj":
            if len(inst.start) != len(inst.target):
                raise InvariantError("size mismatch: |S| must equal |S2| under tj")
            if inst.start == inst.target:
                print("reachable")
                return EXIT_OK
            if emit:
                raise InvariantError("sequence emission is not supported for split tj instances")
            floor = len(inst.start) - 1
        else:
            floor = inst.k
        if inst.rule == "tar" and emit:
            seq = split_tar_witness(rep, inst.c, inst.start, inst.target, floor,
                                    max_c=args.max_c)
            if seq is None:
                print("unreachable")
                return EXIT_UNREACHABLE
            print("reachable")
            _emit_sequence(args, seq)
            return EXIT_OK
        if split_tar_reachable(rep, inst.c, inst.start, inst.target, floor,
                               max_c=args.max_c):
            print("reachable")
            return EXIT_OK
        print("unreachable")
        return EXIT_UNREACHABLE
    # token sliding and plain edge lists go to the guarded oracle
    return _solve_oracle(inst, args, emit)


def _cmd_distance(args):
    inst = parse_instance(_read(args.instance))
    rep = inst.representation
    if isinstance(rep, IntervalModel) and inst.rule == "tar":
        verdict = tar_distance(rep, inst.c, inst.start, inst.target, inst.k)
        if verdict.distance == math.inf:
            print("unreachable (locked)")
            return EXIT_UNREACHABLE
        print(verdict.distance)
        return EXIT_OK
    if isinstance(rep, IntervalModel) and inst.rule == "tj":
        dist = tj_distance(rep, inst.c, inst.start, inst.target)
        if dist == math.inf:
            print("unreachable")
            return EXIT_UNREACHABLE
        print(dist)
        return EXIT_OK
    # shortest distances on split graphs are only available at oracle scale
    return _solve_oracle(inst, args, emit=False)


def _cmd_verify(args):
    inst = parse_instance(_read(args.instance))
    seq = parse_sequence(_read(args.sequence))
    result = verify_sequence(inst, seq)
    if result.ok:
        print("ok")
        return EXIT_OK
    where = "start" if result.step is None else f"step {result.step}"
    print(f"violation at {where}: {result.reason}")
    return EXIT_UNREACHABLE


def _cmd_oracle(args):
    inst = parse_instance(_read(args.instance))
    if args.report:
        report = oracle_connectivity_report(
            inst.representation, inst.c, inst.k, rule=inst.rule,
            max_n=args.max_n, max_states=args.max_states)
        sizes = " ".join(str(x) for x in report.sizes)
        diameters = " ".join(str(x) for x in report.diameters)
        print(f"components: {report.components}; sizes: {sizes}; diameters: {diameters}")
        return EXIT_OK
    return _solve_oracle(inst, args, emit=getattr(args, "emit_sequence", False))


def _field(fields, key, parser, what):
    if key not in fields:
        raise FormatError(f"missing '{key}:' (required for {what})")
    val, lineno = fields[key]
    return parser(val, lineno)


def _cmd_reduce(args):
    header, representation, _, fields = parse_document(_read(args.source))
    if isinstance(representation, SplitModel):
        representation = representation.graph
    if isinstance(representation, IntervalModel):
        raise InvariantError("reduction sources must use the edges representation")
    g = representation

    def as_int(val, lineno):
        try:
            return int(val)
        except ValueError:
            raise FormatError("expected an integer", lineno) from None

    meta_lines = [f"kind: {args.kind}"]
    if args.kind == "oct":
        if "c" not in header or "k" not in header:
            raise FormatError("oct sources need 'c:' and 'k:' headers")
        c = as_int(*header["c"])
        k = as_int(*header["k"])
        out = oct_to_colorable_set(g, c, k)
        inst = Instance(out.graph, "tar", out.c, 0, set(), set())
        extra = [f"target: {out.target_size}"]
        for layer, group in enumerate(out.padding_cliques):
            for v in group:
                meta_lines.append(f"pad: {v} layer {layer}")
    elif args.kind == "isr":
        start = set(_field(fields, "I", _vertex_list, "isr"))
        target = set(_field(fields, "I2", _vertex_list, "isr"))
        out = isr_to_split_csr(g, start, target)
        rule = args.rule or "tj"
        # image sets have size k; the addition-removal variant runs at floor k-1
        inst = Instance(out.model, rule, out.c, out.k - 1, out.phi_start, out.phi_target)
        extra = []
        for v, (eu, ev) in sorted(out.edge_of_vertex.items()):
            meta_lines.append(f"pad: {v} edge {eu} {ev}")
    elif args.kind == "spr":
        s = _field(fields, "s", lambda val, ln: as_int(val, ln), "spr")
        t = _field(fields, "t", lambda val, ln: as_int(val, ln), "spr")
        path_start = _field(fields, "P", _vertex_list, "spr")
        path_target = _field(fields, "P2", _vertex_list, "spr")
        if "c" not in header:
            raise FormatError("spr sources need a 'c:' header")
        c = as_int(*header["c"])
        out = spr_to_cocomp_csr(g, s, t, path_start, path_target, c)
        rule = args.rule or "tj"
        k = out.k - 1
        inst = Instance(out.graph, rule, out.c, k, out.phi_start, out.phi_target)
        extra = []
        for layer, group in enumerate(out.padding):
            for v in group:
                meta_lines.append(f"pad: {v} layer {layer}")
        for new_id, orig in sorted(out.source_vertex.items()):
            meta_lines.append(f"orig: {new_id} {orig}")
        meta_lines.append("order: " + " ".join(str(v) for v in out.order))
    else:
        raise InvariantError(f"unknown reduction kind '{args.kind}'")
    text = render_instance(inst)
    for line in extra:
        text += line + "\n"
    _write(args.out, text)
    meta_path = args.meta or (args.out + ".meta")
    _write(meta_path, "\n".join(meta_lines) + "\n")
    return EXIT_OK


def _cmd_gen(args):
    rng = random.Random(args.seed)
    if args.repr == "interval":
        inst = random_interval_instance(rng, args.n, args.c, rule=args.rule,
                                        k=args.k, coord_max=args.coord_max,
                                        max_len=args.max_len)
    elif args.repr == "split":
        inst = random_split_instance(rng, args.n, args.c, rule=args.rule,
                                     k=args.k, p=args.p)
    else:
        inst = random_edges_instance(rng, args.n, args.c, rule=args.rule,
                                     k=args.k, p=args.p)
    meta = (f"# gen: mt19937 seed={args.seed} repr={args.repr} n={args.n} "
            f"c={args.c} k={inst.k} rule={args.rule}\n")
    text = meta + render_instance(inst)
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _add_oracle_flags(sub):
    sub.add_argument("--max-n", type=int, default=DEFAULT_MAX_N,
                     help="vertex-count guard for oracle search")
    sub.add_argument("--max-states", type=int, default=None,
                     help="cap on enumerated states")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="csrecon",
        description="Reconfiguration of c-colorable vertex sets over csr/1 files")
    subs = parser.add_subparsers(dest="command", required=True)

    solve = subs.add_parser("solve", help="decide reachability / shortest distance")
    solve.add_argument("instance")
    solve.add_argument("--emit-sequence", action="store_true")
    solve.add_argument("--out", help="sequence output path")
    solve.add_argument("--max-c", type=int, default=DEFAULT_MAX_C)
    _add_oracle_flags(solve)
    solve.set_defaults(func=_cmd_solve)

    distance = subs.add_parser("distance", help="print the distance only")
    distance.add_argument("instance")
    distance.add_argument("--max-c", type=int, default=DEFAULT_MAX_C)
    _add_oracle_flags(distance)
    distance.set_defaults(func=_cmd_distance)

    verify = subs.add_parser("verify", help="replay a sequence against an instance")
    verify.add_argument("instance")
    verify.add_argument("sequence")
    verify.set_defaults(func=_cmd_verify)

    oracle = subs.add_parser("oracle", help="exact BFS distance on small instances")
    oracle.add_argument("instance")
    oracle.add_argument("--emit-sequence", action="store_true")
    oracle.add_argument("--out")
    oracle.add_argument("--report", action="store_true",
                        help="print the state-space connectivity summary instead")
    _add_oracle_flags(oracle)
    oracle.set_defaults(func=_cmd_oracle)

    reduce_p = subs.add_parser("reduce", help="build a hardness-construction instance")
    reduce_p.add_argument("source")
    reduce_p.add_argument("--kind", required=True, choices=("oct", "isr", "spr"))
    reduce_p.add_argument("--rule", choices=("tar", "tj", "ts"), default=None)
    reduce_p.add_argument("--out", required=True)
    reduce_p.add_argument("--meta", default=None)
    reduce_p.set_defaults(func=_cmd_reduce)

    gen = subs.add_parser("gen", help="generate a seeded random instance")
    gen.add_argument("--repr", required=True, choices=("interval", "split", "edges"))
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--c", type=int, required=True)
    gen.add_argument("--k", type=int, default=None,
                     help="size floor; clamped to the generated set sizes")
    gen.add_argument("--rule", choices=("tar", "tj", "ts"), default="tar")
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--coord-max", type=int, default=None)
    gen.add_argument("--max-len", type=int, default=None)
    gen.add_argument("--p", type=float, default=0.5, help="edge density for split/edges")
    gen.add_argument("--out", default=None)
    gen.set_defaults(func=_cmd_gen)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (FormatError, InvariantError, ResourceLimitError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
