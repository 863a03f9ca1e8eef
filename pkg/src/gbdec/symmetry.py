"""Stabilizer-induced subgraphs, labeled automorphism search, harmful-pattern counts.

A stabilizer (a row of H_X, or a GF(2) sum of rows) induces a subgraph of
the H_Z Tanner graph: its variable support plus every Z-check touching at
least two of those variables.  For a single generator of a girth-6 code the
subgraph is a subdivided complete bipartite graph.  Combined stabilizers
keep the cancelled shared variables in the graph as *anchors*; error
patterns range only over the support (the symmetric difference).

An error pattern E and its in-support complement F are degenerate.  The
pair is *harmful* for a decoder class when a type-preserving automorphism
of the labeled subgraph maps E onto F while preserving the syndrome labels
and the decoder's own labels (none / variable blocks / monomial edge
classes).  Counting those pairs over the shapes of interest reproduces the
harmful-configuration table.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

import numpy as np

from .code import BLOCK_A, BLOCK_B, GBCode, GBCodeSpec, Monomial, TannerGraph, build_code
from .gf2 import BitVector

COLORING_NONE = "none"
COLORING_BLOCK = "block"
COLORING_EDGE = "edge"
COLORINGS = (COLORING_NONE, COLORING_BLOCK, COLORING_EDGE)

SHAPES = ("single", "pair_shared_A", "pair_shared_B", "triple_AAA", "triple_AAB")


class PatternError(ValueError):
    """Invalid error-pattern input."""


class SubgraphShapeError(ValueError):
    """Row combination does not realize a supported stabilizer shape."""


# ---------------------------------------------------------------------------
# Labeled subgraphs
# ---------------------------------------------------------------------------

@dataclass
class LabeledSubgraph:
    """Induced Tanner subgraph with block, monomial and (per-pattern) syndrome labels.

    Variables and checks use local indices; `var_cols` / `check_rows` retain
    the originating H_Z column / row of each node so patterns can be embedded
    back into the full code.
    """

    var_cols: list
    check_rows: list
    var_block: np.ndarray
    edges: list  # (local_var, local_check, monomial class)
    support: list  # local variable indices carrying error patterns
    anchors: list  # cancelled shared variables (never in a pattern)
    span_supports: list = field(default_factory=list)  # supports (local vars,
    # anchors included) of every nonzero stabilizer in the configuration span

    def __post_init__(self):
        self.n_vars = len(self.var_cols)
        self.n_checks = len(self.check_rows)
        self.var_adj = [[] for _ in range(self.n_vars)]
        self.check_adj = [[] for _ in range(self.n_checks)]
        for v, c, lbl in self.edges:
            self.var_adj[v].append((c, lbl))
            self.check_adj[c].append((v, lbl))
        # check x support incidence, for fast syndrome labels
        self._inc = np.zeros((self.n_checks, len(self.support)), dtype=np.uint8)
        pos = {v: i for i, v in enumerate(self.support)}
        for v, c, _ in self.edges:
            if v in pos:
                self._inc[c, pos[v]] ^= 1

    def syndrome_labels(self, pattern: Sequence[int]) -> np.ndarray:
        """Per-check syndrome bit induced by a pattern (local support indices)."""
        ind = np.zeros(len(self.support), dtype=np.uint8)
        pos = {v: i for i, v in enumerate(self.support)}
        for v in pattern:
            if v not in pos:
                raise PatternError(f"variable {v} is not in the support")
            ind[pos[v]] ^= 1
        return (self._inc @ ind) & 1

    def to_tanner_graph(self) -> TannerGraph:
        ev, ec, ce = [], [], []
        for v, c, lbl in sorted(self.edges):
            ev.append(v)
            ec.append(c)
            ce.append(lbl)
        return TannerGraph(
            n_vars=self.n_vars, n_checks=self.n_checks,
            edge_var=np.array(ev, dtype=np.int64),
            edge_check=np.array(ec, dtype=np.int64),
            chi_v=self.var_block.astype(np.int8),
            chi_e=np.array(ce, dtype=np.int32))


def induced_subgraph(code: GBCode, stabilizer_rows: Sequence[int]) -> LabeledSubgraph:
    """Subgraph of the H_Z Tanner graph induced by a combination of H_X rows."""
    hx = code.h_x.bits
    hz = code.h_z.bits
    rows = list(stabilizer_rows)
    if not rows:
        raise SubgraphShapeError("need at least one stabilizer row")
    supports = [set(np.nonzero(hx[r])[0]) for r in rows]
    if len(rows) > 1:
        for sa, sb in itertools.combinations(supports, 2):
            if len(sa & sb) != 1:
                raise SubgraphShapeError(
                    "row supports must pairwise intersect in exactly one column")
    union = sorted(set().union(*supports))
    counts = {v: sum(v in s for s in supports) for v in union}
    if any(c > 2 for c in counts.values()):
        raise SubgraphShapeError("a column is shared by more than two rows")
    support_cols = [v for v in union if counts[v] == 1]
    anchor_cols = [v for v in union if counts[v] == 2]

    col_of = {v: i for i, v in enumerate(union)}
    included = np.zeros(code.n, dtype=bool)
    included[union] = True
    deg = hz[:, union].sum(axis=1)
    check_rows = [int(r) for r in np.nonzero(deg >= 2)[0]]
    edges = []
    for ci, r in enumerate(check_rows):
        for v in np.nonzero(hz[r])[0]:
            if included[v]:
                edges.append((col_of[v], ci, int(code.z_edge_class[r, v])))
    half = code.n // 2
    blocks = np.array([BLOCK_A if v < half else BLOCK_B for v in union], dtype=np.int8)
    span = []
    for k in range(1, len(rows) + 1):
        for comb in itertools.combinations(range(len(rows)), k):
            s = np.zeros(code.n, dtype=np.uint8)
            for i in comb:
                s ^= hx[rows[i]]
            span.append(frozenset(col_of[v] for v in np.nonzero(s)[0]))
    return LabeledSubgraph(
        var_cols=union, check_rows=check_rows, var_block=blocks, edges=edges,
        support=[col_of[v] for v in support_cols],
        anchors=[col_of[v] for v in anchor_cols],
        span_supports=span)


# ---------------------------------------------------------------------------
# Synthetic shape realizations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class StabilizerConfig:
    shape: str  # one of SHAPES
    m: int      # variables per generator in block A (= |a_monomials|)
    n: int      # variables per generator in block B (= |b_monomials|)

    def __post_init__(self):
        if self.shape not in SHAPES:
            raise SubgraphShapeError(f"unknown shape {self.shape!r}")
        if self.m < 2 or self.n < 2:
            raise SubgraphShapeError("generator sides must have >= 2 variables")


# Generic circulant codes whose difference structure realizes each shape
# cleanly: no accidental check coincidences beyond the merges forced by the
# shared variables.  Exponents were found by randomized search validated
# against the closed-form check-degree profile of each glued shape.
_GENERIC_L = 1009
_GENERIC_REALIZATIONS = {
    # (m, n, shape) -> (a exponents, b exponents, stabilizer rows)
    (3, 3, "single"): ((0, 265, 641), (0, 371, 763), (0,)),
    (3, 3, "pair_shared_A"): ((0, 265, 641), (0, 371, 763), (0, 265)),
    (3, 3, "pair_shared_B"): ((0, 265, 641), (0, 371, 763), (0, 371)),
    (3, 3, "triple_AAA"): ((0, 265, 641), (0, 371, 763), (0, 265, 641)),
    (3, 3, "triple_AAB"): ((0, 265, 641), (0, 111, 818), (0, 111, 744)),
    (2, 4, "single"): ((0, 371), (0, 265, 641, 763), (0,)),
    (2, 4, "pair_shared_A"): ((0, 371), (0, 265, 641, 763), (0, 371)),
    (2, 4, "pair_shared_B"): ((0, 371), (0, 265, 641, 763), (0, 265)),
    # With only two A-monomials a closed A-triangle cannot exist (it would
    # need three pairwise differences drawn from a single +/-d pair), so the
    # all-A 6-cycle column is realized by its unique glued counterpart: one
    # A-side and two B-side shared nodes.
    (2, 4, "triple_AAA"): ((0, 668), (0, 546, 671, 948), (0, 61, 668)),
    # A/A/B gluing: rows (0, d, 2d) with both A-differences equal to d and
    # the outer difference 2d realized as a B-side difference.
    (2, 4, "triple_AAB"): ((0, 98), (0, 583, 779, 868), (0, 98, 196)),
    # The published K_{4,4} pair and triple values arise from configurations
    # whose two/three generators share extra check nodes (6-cycles between
    # their supports), not from the fully spread-out gluing; the realizations
    # below live at l = 90 where those extra cycles occur, and each is
    # validated to have the canonical variable/anchor counts of its shape.
    (4, 4, "single"): ((0, 32, 49, 65), (0, 15, 24, 54), (0,), 90),
    (4, 4, "pair_shared_A"): ((0, 32, 49, 65), (0, 15, 24, 54), (0, 16), 90),
    (4, 4, "pair_shared_B"): ((0, 32, 49, 65), (0, 15, 24, 54), (0, 9), 90),
    (4, 4, "triple_AAA"): ((0, 32, 49, 65), (0, 15, 24, 54), (0, 16, 32), 90),
    (4, 4, "triple_AAB"): ((0, 32, 49, 65), (0, 15, 24, 54), (0, 9, 25), 90),
}

_generic_cache = {}


def _generic_code(a_ex, b_ex, l: int = _GENERIC_L) -> GBCode:
    key = (a_ex, b_ex, l)
    if key not in _generic_cache:
        spec = GBCodeSpec(
            name="generic", kind="circulant", sizes=(l,),
            a_monomials=tuple(Monomial((e,)) for e in a_ex),
            b_monomials=tuple(Monomial((e,)) for e in b_ex))
        _generic_cache[key] = build_code(spec)
    return _generic_cache[key]


def synthetic_config_graph(cfg: StabilizerConfig) -> LabeledSubgraph:
    """Abstract glued shape, realized inside a generic large circulant code."""
    key = (cfg.m, cfg.n, cfg.shape)
    if key not in _GENERIC_REALIZATIONS:
        raise SubgraphShapeError(f"no generic realization for {key}")
    entry = _GENERIC_REALIZATIONS[key]
    a_ex, b_ex, rows = entry[:3]
    l = entry[3] if len(entry) > 3 else _GENERIC_L
    code = _generic_code(a_ex, b_ex, l)
    g = induced_subgraph(code, rows)
    _validate_shape(g, cfg)
    return g


def _validate_shape(g: LabeledSubgraph, cfg: StabilizerConfig):
    n_gen = {"single": 1, "pair_shared_A": 2, "pair_shared_B": 2,
             "triple_AAA": 3, "triple_AAB": 3}[cfg.shape]
    n_anchor = {1: 0, 2: 1, 3: 3}[n_gen]
    want_vars = n_gen * (cfg.m + cfg.n) - n_anchor
    if len(g.var_cols) != want_vars or len(g.anchors) != n_anchor:
        raise SubgraphShapeError(
            f"{cfg.shape} realization has {len(g.var_cols)} vars / "
            f"{len(g.anchors)} anchors, expected {want_vars} / {n_anchor}")


# ---------------------------------------------------------------------------
# Labeled-graph automorphism search (individualization + refinement)
# ---------------------------------------------------------------------------

def _build_adjacency(g: LabeledSubgraph, use_edge_labels: bool):
    """Combined node list: variables 0..nv-1, checks nv..nv+nc-1."""
    nv = g.n_vars
    adj = [[] for _ in range(nv + g.n_checks)]
    for v, c, lbl in g.edges:
        lab = lbl if use_edge_labels else 0
        adj[v].append((nv + c, lab))
        adj[nv + c].append((v, lab))
    return adj


def _refine(adj, col_a, col_b):
    """Jointly refine two colorings until stable; None when histograms split."""
    n = len(adj)
    while True:
        table = {}
        new_a = [0] * n
        new_b = [0] * n
        for colors, new in ((col_a, new_a), (col_b, new_b)):
            for u in range(n):
                sig = (colors[u], tuple(sorted((lab, colors[w]) for w, lab in adj[u])))
                nid = table.get(sig)
                if nid is None:
                    nid = len(table)
                    table[sig] = nid
                new[u] = nid
        hist_a, hist_b = {}, {}
        for x in new_a:
            hist_a[x] = hist_a.get(x, 0) + 1
        for x in new_b:
            hist_b[x] = hist_b.get(x, 0) + 1
        if hist_a != hist_b:
            return None
        if new_a == col_a and new_b == col_b:
            return col_a, col_b
        col_a, col_b = new_a, new_b


def _check_mapping(adj, perm):
    inv = {}
    for u, w in enumerate(perm):
        if w in inv:
            return False
        inv[w] = u
    for u in range(len(adj)):
        if sorted((lab, perm[w]) for w, lab in adj[u]) != \
           sorted((lab, w) for w, lab in adj[perm[u]]):
            return False
    return True


def _search_maps(adj, col_a, col_b, find_all=False):
    """Yield node permutations mapping coloring A onto coloring B."""
    n = len(adj)
    fresh = [10 ** 6]

    def rec(ca, cb):
        refined = _refine(adj, ca, cb)
        if refined is None:
            return
        ca, cb = refined
        cells_a = {}
        for u in range(n):
            cells_a.setdefault(ca[u], []).append(u)
        split = None
        for color, nodes in cells_a.items():
            if len(nodes) > 1:
                if split is None or len(nodes) < len(split[1]):
                    split = (color, nodes)
        if split is None:
            target = {}
            for w in range(n):
                target.setdefault(cb[w], w)
            perm = [target[ca[u]] for u in range(n)]
            if _check_mapping(adj, perm):
                yield perm
            return
        color, nodes = split
        u = nodes[0]
        for w in range(n):
            if cb[w] != color:
                continue
            fid = fresh[0]
            fresh[0] += 1
            ca2 = list(ca)
            cb2 = list(cb)
            ca2[u] = fid
            cb2[w] = fid
            yielded = False
            for perm in rec(ca2, cb2):
                yielded = True
                yield perm
                if not find_all:
                    return
            del yielded

    return rec(list(col_a), list(col_b))


def _base_colors(g: LabeledSubgraph, syn: np.ndarray, marks: set, coloring: str,
                 table: dict):
    """Initial node colors: type, optional block, syndrome, pattern mark.

    `table` interns signatures to integers and must be shared between the two
    colorings being compared, so equal integers mean equal signatures.
    """
    nv = g.n_vars
    colors = []
    for v in range(nv):
        block = int(g.var_block[v]) if coloring == COLORING_BLOCK else 0
        colors.append(("v", block, 1 if v in marks else 0))
    for c in range(g.n_checks):
        colors.append(("c", int(syn[c]), 0))
    out = []
    for sig in colors:
        if sig not in table:
            table[sig] = len(table)
        out.append(table[sig])
    return out


@dataclass
class PatternPair:
    """An equal-weight degenerate pattern pair on a stabilizer support."""

    e: tuple  # local support-variable indices
    f: tuple

    @classmethod
    def from_e(cls, g: LabeledSubgraph, e: Iterable[int]) -> "PatternPair":
        e = tuple(sorted(e))
        sup = set(g.support)
        if not set(e) <= sup:
            raise PatternError("pattern must be a subset of the support")
        f = tuple(sorted(sup - set(e)))
        return cls(e, f)


def automorphism_map_exists(g: LabeledSubgraph, pair: PatternPair,
                            coloring: str):
    """Whether a label-preserving automorphism maps E onto F; returns witness.

    Returns (exists, mapping) where mapping is a node permutation over
    variables (0..nv-1) then checks (nv..nv+nc-1).
    """
    if coloring not in COLORINGS:
        raise ValueError(f"unknown coloring {coloring!r}")
    if len(pair.e) != len(pair.f):
        raise PatternError("harmfulness requires |E| == |F|")
    syn_e = g.syndrome_labels(pair.e)
    syn_f = g.syndrome_labels(pair.f)
    if not np.array_equal(syn_e, syn_f):
        raise PatternError("E and F induce different syndromes; not a valid pair")
    adj = _build_adjacency(g, use_edge_labels=(coloring == COLORING_EDGE))
    table = {}
    col_a = _base_colors(g, syn_e, set(pair.e), coloring, table)
    col_b = _base_colors(g, syn_e, set(pair.f), coloring, table)
    for perm in _search_maps(adj, col_a, col_b):
        return True, perm
    return False, None


def iter_automorphisms(g: LabeledSubgraph, coloring: str, syn=None):
    """All label-preserving automorphisms (no pattern marks)."""
    if syn is None:
        syn = np.zeros(g.n_checks, dtype=np.uint8)
    adj = _build_adjacency(g, use_edge_labels=(coloring == COLORING_EDGE))
    col = _base_colors(g, syn, set(), coloring, {})
    return _search_maps(adj, col, list(col), find_all=True)


def verify_thm2_rigidity(g: LabeledSubgraph) -> bool:
    """True iff the edge-colored automorphism group is trivial."""
    autos = list(iter_automorphisms(g, COLORING_EDGE))
    identity = list(range(g.n_vars + g.n_checks))
    return autos == [identity]


# ---------------------------------------------------------------------------
# Harmful-pair enumeration
# ---------------------------------------------------------------------------

def thm1_condition(m: int, n: int, x: int, y: int, coloring: str) -> bool:
    """Closed-form harmfulness test on a single subdivided K_{m,n} generator."""
    if not (0 <= x <= m and 0 <= y <= n):
        raise ValueError("need 0 <= x <= m and 0 <= y <= n")
    if coloring == COLORING_BLOCK:
        return 2 * x == m and 2 * y == n
    if coloring == COLORING_NONE:
        if m != n:
            return 2 * x == m and 2 * y == n
        return x + y == m
    raise ValueError("closed form exists only for 'none' and 'block'")


def _candidate_pairs(g: LabeledSubgraph):
    """Unordered {E, support \\ E} pairs with |E| = |F|, E of minimum weight.

    A pattern only stalls the decoder when no lower-weight equivalent error
    exists, so E must be a minimum-weight representative of its coset: for
    every nonzero stabilizer S' in the configuration span, |E ⊕ S'| >= |E|,
    i.e. E covers at most half of each stabilizer's support.
    """
    sup = g.support
    w = len(sup)
    if w % 2:
        return
    spans = g.span_supports or [frozenset(sup)]
    first = sup[0]
    for rest in itertools.combinations(sup[1:], w // 2 - 1):
        e = frozenset((first,) + rest)
        if all(2 * len(e & sp) <= len(sp) for sp in spans):
            yield PatternPair.from_e(g, e)


def harmful_pairs(g: LabeledSubgraph, coloring: str,
                  candidates: Optional[list] = None) -> list:
    """Pattern pairs mapped onto each other by a label-preserving automorphism.

    Equivalent to calling automorphism_map_exists on every candidate, but the
    label-preserving automorphism group is enumerated once and each candidate
    is tested against it.  The syndrome labels need no separate treatment:
    every check of the configuration graph meets the stabilizer support in an
    even number of variables (CSS orthogonality), so E and F = support \\ E
    always induce identical syndrome labels, and any adjacency- and
    label-preserving permutation with psi(E) = F transports those labels.
    """
    pool = list(candidates) if candidates is not None else list(_candidate_pairs(g))
    if not pool:
        return []
    pos = {v: i for i, v in enumerate(g.support)}
    w = len(g.support)
    cand = np.zeros((len(pool), w), dtype=bool)
    for i, pair in enumerate(pool):
        cand[i, [pos[v] for v in pair.e]] = True
    matched = np.zeros(len(pool), dtype=bool)
    for perm in iter_automorphisms(g, coloring):
        # image position of each support variable; -1 if it leaves the support
        sp = np.array([pos.get(perm[v], -1) for v in g.support])
        inside = sp >= 0
        # psi(E) = F  <=>  every member of E maps into the support and onto a
        # non-member of E (|E| = |F| makes the containment an equality)
        allowed = np.zeros_like(cand)
        allowed[:, inside] = ~cand[:, sp[inside]]
        matched |= (~cand | allowed).all(axis=1)
        if matched.all():
            break
    return [p for p, ok in zip(pool, matched) if ok]


def count_harmful(cfg: StabilizerConfig, coloring: str) -> int:
    return len(harmful_pairs(synthetic_config_graph(cfg), coloring))


@dataclass
class HarmfulCountReport:
    """Table of harmful-pair counts per shape and coloring, with representatives."""

    sides: tuple  # (m, n)
    counts: dict = field(default_factory=dict)    # (shape, coloring) -> int
    patterns: dict = field(default_factory=dict)  # shape -> list of PatternPair (none coloring)
    graphs: dict = field(default_factory=dict)    # shape -> LabeledSubgraph

    def as_rows(self):
        rows = []
        for coloring in COLORINGS:
            rows.append({"coloring": coloring,
                         **{s: self.counts[(s, coloring)] for s in SHAPES}})
        return rows


def build_report(m: int, n: int, graphs: Optional[dict] = None) -> HarmfulCountReport:
    """Count harmful pairs for every shape and coloring.

    Finer colorings preserve fewer automorphisms, so block-harmful pairs are
    searched only among the none-harmful ones and edge-harmful among the
    block-harmful ones.
    """
    rep = HarmfulCountReport(sides=(m, n))
    for shape in SHAPES:
        g = (graphs or {}).get(shape)
        if g is None:
            g = synthetic_config_graph(StabilizerConfig(shape, m, n))
        rep.graphs[shape] = g
        none_pairs = harmful_pairs(g, COLORING_NONE)
        block_pairs = harmful_pairs(g, COLORING_BLOCK, candidates=none_pairs)
        edge_pairs = harmful_pairs(g, COLORING_EDGE, candidates=block_pairs)
        rep.counts[(shape, COLORING_NONE)] = len(none_pairs)
        rep.counts[(shape, COLORING_BLOCK)] = len(block_pairs)
        rep.counts[(shape, COLORING_EDGE)] = len(edge_pairs)
        rep.patterns[shape] = none_pairs
    return rep


# ---------------------------------------------------------------------------
# Generator combinations on real codes
# ---------------------------------------------------------------------------

def _row_translate(code: GBCode, rows, t):
    """Translate a row tuple by the cyclic shift action."""
    if code.spec.kind == "circulant":
        l = code.spec.sizes[0]
        return tuple(sorted((r + t) % l for r in rows))
    lx, ly = code.spec.sizes
    tx, ty = t
    out = []
    for r in rows:
        rx, ry = divmod(r, ly)
        out.append(((rx + tx) % lx) * ly + (ry + ty) % ly)
    return tuple(sorted(out))


def _orbit_canonical(code: GBCode, rows):
    if code.spec.kind == "circulant":
        shifts = range(code.spec.sizes[0])
    else:
        lx, ly = code.spec.sizes
        shifts = itertools.product(range(lx), range(ly))
    return min(_row_translate(code, rows, t) for t in shifts)


def find_generator_combinations(code: GBCode):
    """Representative row pairs / 6-cycle triples, deduplicated by shift orbit.

    Returns a list of (rows, StabilizerConfig).
    """
    hx = code.h_x.bits.astype(np.int64)
    half = code.n // 2
    overlap = hx @ hx.T
    n_rows = hx.shape[0]
    m, n = code.num_a_monomials, code.num_b_monomials

    def shared_col(r1, r2):
        cols = np.nonzero(hx[r1] & hx[r2])[0]
        return int(cols[0]) if len(cols) == 1 else None

    pair_block = {}
    for r1 in range(n_rows):
        for r2 in range(r1 + 1, n_rows):
            if overlap[r1, r2] == 1:
                pair_block[(r1, r2)] = BLOCK_A if shared_col(r1, r2) < half else BLOCK_B

    found = {}
    for (r1, r2), blk in pair_block.items():
        shape = "pair_shared_A" if blk == BLOCK_A else "pair_shared_B"
        key = (shape, _orbit_canonical(code, (r1, r2)))
        found.setdefault(key, ((r1, r2), StabilizerConfig(shape, m, n)))

    neighbors = {}
    for (r1, r2) in pair_block:
        neighbors.setdefault(r1, set()).add(r2)
        neighbors.setdefault(r2, set()).add(r1)
    for r1 in sorted(neighbors):
        for r2 in sorted(x for x in neighbors[r1] if x > r1):
            for r3 in sorted(x for x in neighbors[r1] & neighbors[r2] if x > r2):
                cols = [shared_col(a, b) for a, b in
                        ((r1, r2), (r2, r3), (r1, r3))]
                if len(set(cols)) != 3:
                    continue
                n_a = sum(c < half for c in cols)
                if n_a == 3:
                    shape = "triple_AAA"
                elif n_a == 2:
                    shape = "triple_AAB"
                elif n_a == 1 and m == 2:
                    # With two A-monomials a closed A-triangle cannot exist;
                    # the all-A column is realized by the one-A/two-B gluing
                    # (same convention as synthetic_config_graph).
                    shape = "triple_AAA"
                else:
                    continue  # outside the table's shapes
                key = (shape, _orbit_canonical(code, (r1, r2, r3)))
                found.setdefault(key, ((r1, r2, r3), StabilizerConfig(shape, m, n)))

    return [found[k] for k in sorted(found, key=lambda k: (k[0], k[1]))]


def harmful_pattern_instances(code: GBCode, report: HarmfulCountReport,
                              shapes: Optional[Sequence[str]] = None):
    """Embed representative harmful patterns as full-length errors with syndromes.

    One instance per none-coloring harmful pair, on one representative
    subgraph per shape.  Returns a list of (error, syndrome) BitVectors.
    """
    from .gf2 import syndrome as gf2_syndrome

    instances = []
    for shape in (shapes or SHAPES):
        g = report.graphs.get(shape)
        if g is None or not report.patterns.get(shape):
            continue
        # re-derive the same shape on the actual code; among the code's shift
        # orbits of this shape, take the first (in canonical order) that
        # actually carries harmful pairs
        if shape == "single":
            cg = induced_subgraph(code, (0,))
            pairs = harmful_pairs(cg, COLORING_NONE)
        else:
            cg, pairs = None, []
            for rows, _cfg in find_generator_combinations(code):
                if _cfg.shape != shape:
                    continue
                try:
                    cand = induced_subgraph(code, rows)
                except SubgraphShapeError:
                    continue
                found = harmful_pairs(cand, COLORING_NONE)
                if found:
                    cg, pairs = cand, found
                    break
            if cg is None:
                continue
        for pair in pairs:
            cols = [cg.var_cols[v] for v in pair.e]
            e = BitVector.from_support(code.n, cols)
            instances.append((e, gf2_syndrome(e, code.h_z)))
    return instances
