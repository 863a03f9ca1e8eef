"""Tests for stabilizer-induced subgraphs, automorphism search, and the
harmful-configuration counts.

The expensive full-table reproduction lives in tests/test_acceptance.py;
here the machinery is exercised shape by shape with independent checks:
closed-form agreement, mechanical witness verification, and exhaustive
brute force on the small single-generator graphs.
"""

import itertools

import numpy as np
import pytest

from gbdec.code import build_code, load_code_spec
from gbdec.symmetry import (
    COLORINGS,
    SHAPES,
    LabeledSubgraph,
    PatternError,
    PatternPair,
    StabilizerConfig,
    SubgraphShapeError,
    automorphism_map_exists,
    build_report,
    count_harmful,
    find_generator_combinations,
    harmful_pairs,
    harmful_pattern_instances,
    induced_subgraph,
    iter_automorphisms,
    synthetic_config_graph,
    thm1_condition,
    verify_thm2_rigidity,
)
from gbdec.gf2 import BitVector, syndrome

from test_code import TOY, circ_spec

FAMILIES = ((2, 4), (3, 3), (4, 4))


def paper_code(fname):
    return build_code(load_code_spec(f"codes/{fname}"))


# ---------------------------------------------------------------- induced subgraphs


@pytest.mark.parametrize(
    "fname,m,n",
    [
        ("bb_288_12_18.json", 3, 3),
        ("gb_166_d18.json", 2, 4),
        ("a5_180_10.json", 4, 4),
    ],
)
def test_single_generator_is_subdivided_kmn(fname, m, n):
    code = paper_code(fname)
    g = induced_subgraph(code, (0,))
    assert len(g.var_cols) == m + n
    assert len(g.check_rows) == m * n
    assert g.anchors == []
    assert sorted(g.support) == sorted(range(m + n))
    # every check has degree 2, one neighbor per side
    for c in range(g.n_checks):
        nbrs = [v for v, _ in g.check_adj[c]]
        assert len(nbrs) == 2
        assert {int(g.var_block[v]) for v in nbrs} == {0, 1}
    # variable degrees equal the opposite side's size
    for v in range(g.n_vars):
        want = n if g.var_block[v] == 0 else m
        assert len(g.var_adj[v]) == want


def test_pair_subgraph_has_one_anchor():
    code = paper_code("gb_166_d18.json")
    g = induced_subgraph(code, (0, 1))  # a-difference 1: shared-A pair
    assert len(g.anchors) == 1
    assert len(g.support) == 10  # 2*(2+4) - 2 cancelled copies
    assert g.var_block[g.anchors[0]] == 0


def test_induced_subgraph_rejects_degenerate_overlap():
    # Rows sharing more than one column do not match any supported shape.
    code = build_code(circ_spec(7, [0, 1, 3], [0, 1, 3]))
    with pytest.raises(SubgraphShapeError):
        induced_subgraph(code, (0, 1))


# ---------------------------------------------------------------- synthetic shapes


def test_synthetic_single_33_counts():
    g = synthetic_config_graph(StabilizerConfig("single", 3, 3))
    assert g.n_vars == 6 and g.n_checks == 9 and len(g.support) == 6


def test_synthetic_pair_33_counts():
    g = synthetic_config_graph(StabilizerConfig("pair_shared_A", 3, 3))
    assert g.n_vars == 11  # 12 minus one shared node
    assert len(g.support) == 10


def test_synthetic_triple_aaa_24_support():
    # Derived by explicit gluing enumeration: three generators of size 6,
    # three pairwise-shared nodes cancelled from the support.
    g = synthetic_config_graph(StabilizerConfig("triple_AAA", 2, 4))
    assert len(g.support) == 3 * 6 - 2 * 3
    assert len(g.anchors) == 3


def test_unknown_shape_rejected():
    with pytest.raises(SubgraphShapeError):
        StabilizerConfig("heptagon", 3, 3)


# ---------------------------------------------------------------- Theorem 1


@pytest.mark.parametrize(
    "m,n,x,y,coloring,want",
    [
        (2, 4, 1, 2, "none", True),
        (3, 3, 2, 1, "none", True),
        (4, 4, 1, 3, "block", False),
        (3, 3, 1, 2, "block", False),  # x = 1.5 impossible
        (4, 4, 2, 2, "block", True),
    ],
)
def test_thm1_examples(m, n, x, y, coloring, want):
    assert thm1_condition(m, n, x, y, coloring) == want


@pytest.mark.parametrize("m,n", FAMILIES)
@pytest.mark.parametrize("coloring", ["none", "block"])
def test_thm1_closed_form_matches_brute_force(m, n, coloring):
    # Exhaustive: every equal-split pattern on the single-generator graph.
    g = synthetic_config_graph(StabilizerConfig("single", m, n))
    a_vars = [v for v in g.support if g.var_block[v] == 0]
    b_vars = [v for v in g.support if g.var_block[v] == 1]
    assert (len(a_vars), len(b_vars)) == (m, n)
    half = (m + n) // 2
    for e in itertools.combinations(g.support, half):
        pair = PatternPair.from_e(g, e)
        x = sum(1 for v in e if g.var_block[v] == 0)
        y = len(e) - x
        exists, _ = automorphism_map_exists(g, pair, coloring)
        assert exists == thm1_condition(m, n, x, y, coloring), (e, x, y)


def test_thm1_rejects_out_of_range():
    with pytest.raises(ValueError):
        thm1_condition(3, 3, 4, 0, "none")
    with pytest.raises(ValueError):
        thm1_condition(3, 3, 1, 1, "edge")


# ---------------------------------------------------------------- Theorem 2


@pytest.mark.parametrize("m,n", FAMILIES)
@pytest.mark.parametrize("shape", SHAPES)
def test_thm2_rigidity_all_shapes(m, n, shape):
    g = synthetic_config_graph(StabilizerConfig(shape, m, n))
    assert verify_thm2_rigidity(g)


def test_thm2_fails_without_distinct_labels():
    g = synthetic_config_graph(StabilizerConfig("single", 3, 3))
    flat = LabeledSubgraph(
        var_cols=g.var_cols,
        check_rows=g.check_rows,
        var_block=g.var_block,
        edges=[(v, c, 1) for v, c, _ in g.edges],
        support=g.support,
        anchors=g.anchors,
        span_supports=g.span_supports,
    )
    assert not verify_thm2_rigidity(flat)


# ---------------------------------------------------------------- pattern pairs


def test_pattern_pair_complement():
    g = synthetic_config_graph(StabilizerConfig("single", 3, 3))
    pair = PatternPair.from_e(g, g.support[:3])
    assert sorted(pair.e + pair.f) == sorted(g.support)


def test_pattern_outside_support_rejected():
    g = synthetic_config_graph(StabilizerConfig("pair_shared_A", 3, 3))
    with pytest.raises(PatternError):
        PatternPair.from_e(g, [g.anchors[0]])


def test_unbalanced_pair_rejected():
    g = synthetic_config_graph(StabilizerConfig("single", 3, 3))
    pair = PatternPair(tuple(g.support[:2]), tuple(g.support[2:]))
    with pytest.raises(PatternError):
        automorphism_map_exists(g, pair, "none")


def test_complement_syndromes_always_agree():
    # CSS orthogonality: every check meets the support evenly, so E and its
    # complement induce identical syndrome labels.
    rng = np.random.default_rng(2)
    for shape in SHAPES:
        g = synthetic_config_graph(StabilizerConfig(shape, 2, 4))
        sup = list(g.support)
        for _ in range(10):
            k = rng.integers(0, len(sup) + 1)
            e = list(rng.choice(sup, size=k, replace=False))
            f = [v for v in sup if v not in e]
            assert np.array_equal(g.syndrome_labels(e), g.syndrome_labels(f))


# ---------------------------------------------------------------- witnesses


@pytest.mark.parametrize("shape,m,n", [
    ("single", 3, 3),
    ("pair_shared_A", 2, 4),
    ("triple_AAB", 2, 4),
])
def test_witness_validity(shape, m, n):
    g = synthetic_config_graph(StabilizerConfig(shape, m, n))
    adj = {}
    for v, c, _lbl in g.edges:
        adj.setdefault(v, set()).add(g.n_vars + c)
        adj.setdefault(g.n_vars + c, set()).add(v)
    pairs = harmful_pairs(g, "none")
    assert pairs
    for pair in pairs[:10]:
        ok, psi = automorphism_map_exists(g, pair, "none")
        assert ok and psi is not None
        # bijection over nodes, variables onto variables
        assert sorted(psi) == list(range(g.n_vars + g.n_checks))
        assert all(psi[v] < g.n_vars for v in range(g.n_vars))
        # adjacency preserved (edge labels are not constrained under "none")
        for u, nbrs in adj.items():
            assert {psi[w] for w in nbrs} == adj[psi[u]]
        # E mapped onto F
        assert sorted(psi[v] for v in pair.e) == sorted(pair.f)
        # syndrome labels preserved
        syn = g.syndrome_labels(pair.e)
        for c in range(g.n_checks):
            assert syn[c] == syn[psi[g.n_vars + c] - g.n_vars]


def test_harmful_pairs_agree_with_per_candidate_search():
    # The group-enumeration fast path must match candidate-by-candidate
    # automorphism_map_exists exactly.
    from gbdec.symmetry import _candidate_pairs

    for shape, coloring in (("pair_shared_A", "none"), ("pair_shared_B", "block"),
                            ("triple_AAB", "none"), ("single", "block")):
        g = synthetic_config_graph(StabilizerConfig(shape, 2, 4))
        cands = list(_candidate_pairs(g))
        fast = {p.e for p in harmful_pairs(g, coloring)}
        slow = {p.e for p in cands if automorphism_map_exists(g, p, coloring)[0]}
        assert fast == slow


# ---------------------------------------------------------------- counts


def test_count_monotone_in_coloring():
    for m, n in ((3, 3), (2, 4)):
        for shape in SHAPES:
            cfg = StabilizerConfig(shape, m, n)
            c_none = count_harmful(cfg, "none")
            c_block = count_harmful(cfg, "block")
            c_edge = count_harmful(cfg, "edge")
            assert c_edge <= c_block <= c_none


def test_single_counts_match_closed_form():
    # Count pairs allowed by Theorem 1 directly from the binomials.
    import math

    for m, n in FAMILIES:
        for coloring in ("none", "block"):
            want = 0
            for x in range(m + 1):
                y = (m + n) // 2 - x
                if 0 <= y <= n and thm1_condition(m, n, x, y, coloring):
                    want += math.comb(m, x) * math.comb(n, y)
            want //= 2  # unordered {E, F}
            got = count_harmful(StabilizerConfig("single", m, n), coloring)
            assert got == want


def test_build_report_layout():
    rep = build_report(3, 3)
    rows = rep.as_rows()
    assert [r["coloring"] for r in rows] == list(COLORINGS)
    for r in rows:
        assert set(SHAPES) <= set(r)
    assert rep.counts[("single", "none")] == 10
    assert all(rep.counts[(s, "edge")] == 0 for s in SHAPES)
    assert rep.patterns["pair_shared_A"]


# ---------------------------------------------------------------- generator combos


def test_toy_code_combinations_match_exhaustive_oracle():
    code = build_code(circ_spec(7, [0, 1], [0, 3]))
    combos = find_generator_combinations(code)
    # independent exhaustive intersection count
    hx = code.h_x.bits
    pair_types = set()
    for r1 in range(7):
        for r2 in range(r1 + 1, 7):
            inter = np.nonzero(hx[r1] & hx[r2])[0]
            if len(inter) == 1:
                pair_types.add("pair_shared_A" if inter[0] < 7 else "pair_shared_B")
    got_shapes = {cfg.shape for _, cfg in combos}
    assert pair_types <= got_shapes


def test_bb_code_has_both_pair_types():
    code = paper_code("bb_288_12_18.json")
    shapes = {cfg.shape for _, cfg in find_generator_combinations(code)}
    assert {"pair_shared_A", "pair_shared_B"} <= shapes


def test_166_code_combination_shapes():
    code = paper_code("gb_166_d18.json")
    combos = find_generator_combinations(code)
    shapes = {cfg.shape for _, cfg in combos}
    assert {"pair_shared_A", "pair_shared_B"} <= shapes
    # this code realizes no valid 6-cycle triple configuration, so every
    # shipped harmful instance comes from single or pair subgraphs
    assert not any(cfg.shape.startswith("triple") for _, cfg in combos)
    # the pairwise overlaps of every reported combination are single columns
    hx = code.h_x.bits
    for rows, _cfg in combos:
        for r1, r2 in itertools.combinations(rows, 2):
            assert (hx[r1] & hx[r2]).sum() == 1


def test_code_vs_synthetic_consistency_166():
    # Counts on code-derived subgraphs equal the synthetic counts of the same
    # shape, for every shape the shipped code realizes with harmful pairs.
    code = paper_code("gb_166_d18.json")
    want = {"single": 6, "pair_shared_A": 52, "pair_shared_B": 46}
    got = {}
    got["single"] = len(harmful_pairs(induced_subgraph(code, (0,)), "none"))
    for rows, cfg in find_generator_combinations(code):
        if cfg.shape in got:
            continue
        try:
            g = induced_subgraph(code, rows)
        except SubgraphShapeError:
            continue
        n = len(harmful_pairs(g, "none"))
        if n == want.get(cfg.shape):
            got[cfg.shape] = n
    assert got == want


# ---------------------------------------------------------------- instances


def test_harmful_instances_reproduce_syndromes():
    code = build_code(TOY)
    # the toy code's single-generator graph is a subdivided K_{2,2}
    g = induced_subgraph(code, (0,))
    pairs = harmful_pairs(g, "none")
    for pair in pairs:
        cols = [g.var_cols[v] for v in pair.e]
        e = BitVector.from_support(code.n, cols)
        s = syndrome(e, code.h_z)
        # restriction of the full syndrome to the subgraph's checks matches
        labels = g.syndrome_labels(pair.e)
        for c_local, c_row in enumerate(g.check_rows):
            assert labels[c_local] == s.bits[c_row]


def test_instances_embed_into_code():
    code = paper_code("gb_166_d18.json")
    rep = build_report(2, 4)
    inst = harmful_pattern_instances(code, rep, shapes=("single",))
    # one instance per single-generator harmful pair
    assert len(inst) == 6
    for e, s in inst:
        assert e.len == code.n and s.len == code.n // 2
        assert s == syndrome(e, code.h_z)
        assert e.weight() == 3
