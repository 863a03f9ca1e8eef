"""Command-line entry point: code inspection, symmetry reports, harmful
pattern enumeration, ensemble selection, simulation sweeps, and message
equivariance checks."""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .gf2 import BitVector, syndrome
from .code import load_code_spec, build_code, tanner_graph, girth
from .decoder import DecoderConfig, MinSumDecoder
from . import symmetry
from .symmetry import (StabilizerConfig, build_report, synthetic_config_graph,
                       find_generator_combinations, harmful_pattern_instances,
                       induced_subgraph, iter_automorphisms)
from .ensemble import sample_pool, coverage_matrix, greedy_select
from .sim import DecoderSpec, sweep, write_csv
from .ensemble import DampingVector

SCHEMA_VERSION = 1

TABLE_COLUMNS = ("single", "pair_shared_A", "pair_shared_B",
                 "triple_AAA", "triple_AAB")


def _load(path):
    return build_code(load_code_spec(path))


def _emit(payload: dict, path=None):
    payload = {"schema_version": SCHEMA_VERSION, **payload}
    text = json.dumps(payload, indent=2, sort_keys=True)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_code_info(args) -> int:
    code = _load(args.code)
    g = tanner_graph(code, "Z")
    half = code.n // 2
    degs = np.zeros(code.n, dtype=int)
    for v in g.edge_var:
        degs[v] += 1
    info = {
        "name": code.spec.name,
        "n": code.n,
        "k": code.k,
        "girth": girth(g),
        "block_a_degree": int(degs[:half].max()),
        "block_b_degree": int(degs[half:].max()),
        "num_a_monomials": code.num_a_monomials,
        "num_b_monomials": code.num_b_monomials,
        "num_edge_classes": code.num_classes,
        "commutation": "ok",  # build_code raises otherwise
    }
    _emit(info, args.out)
    return 0


def cmd_symmetry_report(args) -> int:
    m, n = args.family
    rep = build_report(m, n)
    table = {col: {c: rep.counts[(shape, c)] for c in symmetry.COLORINGS}
             for col, shape in zip(TABLE_COLUMNS, symmetry.SHAPES)
             for shape in [col]}
    # text table
    print(f"family K_{{{m},{n}}}")
    header = "coloring".ljust(10) + "".join(c.rjust(16) for c in TABLE_COLUMNS)
    print(header)
    for coloring in symmetry.COLORINGS:
        row = coloring.ljust(10)
        for shape in symmetry.SHAPES:
            row += str(rep.counts[(shape, coloring)]).rjust(16)
        print(row)
    _emit({"family": [m, n], "counts": table}, args.out)
    return 0


def cmd_harmful_enum(args) -> int:
    code = _load(args.code)
    combos = find_generator_combinations(code)
    m, n = code.num_a_monomials, code.num_b_monomials
    rep = build_report(m, n)
    instances = harmful_pattern_instances(code, rep)
    payload = {
        "code": code.spec.name,
        "combinations": [
            {"rows": list(rows), "shape": cfg.shape} for rows, cfg in combos
        ],
        "num_instances": len(instances),
        "instances": [
            {"error_support": sorted(int(i) for i in np.nonzero(e.bits)[0]),
             "syndrome_support": sorted(int(i) for i in np.nonzero(s.bits)[0])}
            for e, s in instances
        ],
    }
    _emit(payload, args.out)
    return 0


def cmd_ensemble_select(args) -> int:
    code = _load(args.code)
    pool = sample_pool(code.num_classes, size=args.pool, seed=args.seed)
    rep = build_report(code.num_a_monomials, code.num_b_monomials)
    patterns = harmful_pattern_instances(code, rep)
    matrix = coverage_matrix(pool, patterns, code, budget=args.iters)
    sel = greedy_select(matrix, pool, m=args.members)
    payload = {
        "code": code.spec.name,
        "pool_seed": args.seed,
        "pool_size": args.pool,
        "budget": args.iters,
        "num_patterns": len(patterns),
        "member_indices": list(sel.member_indices),
        "members": [list(v.xi) for v in sel.members],
        "covered_fraction": sel.covered_fraction,
    }
    _emit(payload, args.out)
    return 0


def _decoder_specs(path):
    with open(path) as fh:
        blocks = json.load(fh)
    specs = []
    for blk in blocks:
        members = blk.get("members")
        if members is not None:
            members = tuple(DampingVector(tuple(m)) for m in members)
        specs.append(DecoderSpec(name=blk["name"], mode=blk["mode"],
                                 xi=blk.get("xi"), members=members))
    return specs


def cmd_simulate(args) -> int:
    code = _load(args.code)
    specs = _decoder_specs(args.decoders)
    alphas = [float(x) for x in args.alphas.split(",")]
    budgets = [int(x) for x in args.iters.split(",")]
    rows = sweep(code, specs, alphas, budgets, trials=args.trials,
                 master_seed=args.seed, workers=args.workers)
    write_csv(rows, args.out)
    print(f"wrote {len(rows)} rows to {args.out}")
    return 0


def cmd_equivariance_check(args) -> int:
    """Isotropic min-sum messages are equal on automorphism orbits."""
    m, n = args.family
    cfg = StabilizerConfig("single", m, n)
    g = synthetic_config_graph(cfg)
    tg = g.to_tanner_graph()
    autos = list(iter_automorphisms(g, symmetry.COLORING_NONE))
    nontrivial = [a for a in autos
                  if a != list(range(g.n_vars + g.n_checks))]
    if not nontrivial:
        print("no nontrivial automorphism on fixture", file=sys.stderr)
        return 1
    perm = nontrivial[0]
    dcfg = DecoderConfig(alpha=args.alpha, max_iters=args.iters,
                         mode="isotropic", early_stop=False)
    dec = MinSumDecoder(tg, dcfg)
    s = BitVector(np.zeros(g.n_checks, dtype=np.uint8))
    outcome = dec.decode(s, record=True)
    # posterior values must agree on variable orbits
    post = outcome.posterior
    ok = True
    for v in range(g.n_vars):
        w = perm[v]
        if post[v] != post[w]:
            ok = False
            break
    print("equivariance:", "pass" if ok else "fail")
    return 0 if ok else 1


def _family(text):
    m, n = (int(x) for x in text.split(","))
    return (m, n)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gbdec")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("code-info")
    sp.add_argument("--code", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_code_info)

    sp = sub.add_parser("symmetry-report")
    sp.add_argument("--family", type=_family, required=True,
                    help="m,n e.g. 3,3")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_symmetry_report)

    sp = sub.add_parser("harmful-enum")
    sp.add_argument("--code", required=True)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_harmful_enum)

    sp = sub.add_parser("ensemble-select")
    sp.add_argument("--code", required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--pool", type=int, default=100)
    sp.add_argument("--members", type=int, default=5)
    sp.add_argument("--iters", type=int, default=10)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_ensemble_select)

    sp = sub.add_parser("simulate")
    sp.add_argument("--code", required=True)
    sp.add_argument("--decoders", required=True, help="JSON decoder blocks")
    sp.add_argument("--alphas", required=True, help="comma list")
    sp.add_argument("--iters", default="10,20,50")
    sp.add_argument("--trials", type=int, default=1000)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_simulate)

    sp = sub.add_parser("equivariance-check")
    sp.add_argument("--family", type=_family, default=(3, 3))
    sp.add_argument("--alpha", type=float, default=0.05)
    sp.add_argument("--iters", type=int, default=50)
    sp.set_defaults(func=cmd_equivariance_check)

    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
