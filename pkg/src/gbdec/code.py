"""Generalized bicycle / bivariate bicycle code construction.

A code is specified by two lists of monomials (cyclic shift terms).  For
circulant codes a monomial is a single exponent a, realized as the l x l
shift matrix S^a.  For bivariate codes a monomial is an exponent pair
(a, b) realized as S_{Lx}^a (x) S_{Ly}^b.

H_X = [A B] and H_Z = [B^T A^T].  Every nonzero entry of H_Z descends from
exactly one monomial; that monomial's class id labels the corresponding
Tanner-graph edge.  Class ids 1..m belong to the A monomials and
m+1..m+n_mono to the B monomials.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .gf2 import BitMatrix, BitVector, in_rowspace, rank

BLOCK_A = 0
BLOCK_B = 1

GIRTH_INFINITE = -1


class SpecError(ValueError):
    """Invalid monomial specification."""


class CommutationError(ValueError):
    """A and B do not commute."""


@dataclass(frozen=True)
class Monomial:
    """A single shift term: exponent a for circulant codes, (a, b) for bivariate."""

    exponents: tuple

    def __post_init__(self):
        if len(self.exponents) not in (1, 2):
            raise SpecError(f"monomial must have 1 or 2 exponents, got {self.exponents}")

    @classmethod
    def parse(cls, raw) -> "Monomial":
        if isinstance(raw, int):
            return cls((raw,))
        if isinstance(raw, (list, tuple)) and len(raw) == 2:
            return cls((int(raw[0]), int(raw[1])))
        raise SpecError(f"cannot parse monomial {raw!r}")

    def reduced(self, sizes: tuple) -> "Monomial":
        return Monomial(tuple(e % s for e, s in zip(self.exponents, sizes)))


@dataclass(frozen=True)
class GBCodeSpec:
    name: str
    kind: str  # "circulant" | "bivariate"
    sizes: tuple  # (l,) or (lx, ly)
    a_monomials: tuple
    b_monomials: tuple
    claimed_params: Optional[tuple] = None

    def __post_init__(self):
        if self.kind not in ("circulant", "bivariate"):
            raise SpecError(f"unknown code kind {self.kind!r}")
        want = 1 if self.kind == "circulant" else 2
        if len(self.sizes) != want:
            raise SpecError(f"{self.kind} code needs {want} size(s), got {self.sizes}")
        if any(s < 1 for s in self.sizes):
            raise SpecError("cyclic group orders must be positive")
        for label, monos in (("a", self.a_monomials), ("b", self.b_monomials)):
            if not monos:
                raise SpecError(f"{label}_monomials must be non-empty")
            reduced = [m.reduced(self.sizes) for m in monos]
            if len(set(reduced)) != len(reduced):
                raise SpecError(f"duplicate monomial in {label}_monomials")
            for m in monos:
                if len(m.exponents) != want:
                    raise SpecError(f"monomial {m} has wrong arity for {self.kind} code")

    @property
    def block_size(self) -> int:
        return int(np.prod(self.sizes))

    @classmethod
    def from_dict(cls, d: dict) -> "GBCodeSpec":
        kind = d["kind"]
        sizes = (d["l"],) if kind == "circulant" else (d["lx"], d["ly"])
        claimed = tuple(d["claimed_params"]) if d.get("claimed_params") else None
        return cls(
            name=d["name"],
            kind=kind,
            sizes=tuple(sizes),
            a_monomials=tuple(Monomial.parse(m) for m in d["a_monomials"]),
            b_monomials=tuple(Monomial.parse(m) for m in d["b_monomials"]),
            claimed_params=claimed,
        )


def load_code_spec(path) -> GBCodeSpec:
    with open(path) as f:
        return GBCodeSpec.from_dict(json.load(f))


def _circulant(l: int, a: int) -> np.ndarray:
    m = np.zeros((l, l), dtype=np.uint8)
    idx = np.arange(l)
    m[idx, (idx + a) % l] = 1
    return m


def shift_matrix(kind: str, sizes: tuple, mono: Monomial) -> BitMatrix:
    """Permutation matrix of a single monomial shift term."""
    mono = mono.reduced(sizes)
    if kind == "circulant":
        return BitMatrix(_circulant(sizes[0], mono.exponents[0]))
    a, b = mono.exponents
    return BitMatrix(np.kron(_circulant(sizes[0], a), _circulant(sizes[1], b)))


@dataclass
class GBCode:
    spec: GBCodeSpec
    h_x: BitMatrix
    h_z: BitMatrix
    n: int
    k: int
    # class id of each nonzero H_Z entry, 0 where H_Z is zero
    z_edge_class: np.ndarray = field(repr=False)
    # same labeling for H_X entries (used for X-side graphs)
    x_edge_class: np.ndarray = field(repr=False)

    @property
    def num_a_monomials(self) -> int:
        return len(self.spec.a_monomials)

    @property
    def num_b_monomials(self) -> int:
        return len(self.spec.b_monomials)

    @property
    def num_classes(self) -> int:
        return self.num_a_monomials + self.num_b_monomials

    def block_of(self, v: int) -> int:
        return BLOCK_A if v < self.n // 2 else BLOCK_B


def build_code(spec: GBCodeSpec) -> GBCode:
    """Assemble H_X, H_Z, code parameters, and per-entry monomial classes."""
    l = spec.block_size
    a_terms = [shift_matrix(spec.kind, spec.sizes, m).bits for m in spec.a_monomials]
    b_terms = [shift_matrix(spec.kind, spec.sizes, m).bits for m in spec.b_monomials]
    A = np.bitwise_xor.reduce(a_terms)
    B = np.bitwise_xor.reduce(b_terms)
    if np.any((A.astype(np.int64) @ B.astype(np.int64) - B.astype(np.int64) @ A.astype(np.int64)) % 2):
        raise CommutationError(f"A and B do not commute for code {spec.name!r}")

    h_x = BitMatrix(np.hstack([A, B]))
    h_z = BitMatrix(np.hstack([B.T, A.T]))
    n = 2 * l
    k = n - rank(h_x) - rank(h_z)

    m_a = len(a_terms)
    z_cls = np.zeros((l, n), dtype=np.int32)
    x_cls = np.zeros((l, n), dtype=np.int32)
    for i, t in enumerate(a_terms, start=1):
        x_cls[:, :l][t == 1] = i          # A block of H_X
        z_cls[:, l:][t.T == 1] = i        # A^T block of H_Z
    for j, t in enumerate(b_terms, start=m_a + 1):
        x_cls[:, l:][t == 1] = j          # B block of H_X
        z_cls[:, :l][t.T == 1] = j        # B^T block of H_Z

    return GBCode(spec=spec, h_x=h_x, h_z=h_z, n=n, k=k,
                  z_edge_class=z_cls, x_edge_class=x_cls)


@dataclass
class TannerGraph:
    """Bipartite variable/check graph with block and monomial edge labels.

    Edges are kept in a fixed canonical order: sorted by (variable, check).
    """

    n_vars: int
    n_checks: int
    edge_var: np.ndarray    # edge -> variable index
    edge_check: np.ndarray  # edge -> check index
    chi_v: np.ndarray       # variable -> block label
    chi_e: np.ndarray       # edge -> monomial class id

    def __post_init__(self):
        self.var_neighbors = [[] for _ in range(self.n_vars)]
        self.check_neighbors = [[] for _ in range(self.n_checks)]
        for v, c in zip(self.edge_var, self.edge_check):
            self.var_neighbors[v].append(int(c))
            self.check_neighbors[c].append(int(v))

    @property
    def n_edges(self) -> int:
        return len(self.edge_var)

    @classmethod
    def from_check_matrix(cls, h: np.ndarray, chi_v: np.ndarray,
                          edge_class: np.ndarray) -> "TannerGraph":
        checks, vars_ = np.nonzero(h)
        order = np.lexsort((checks, vars_))
        ev = vars_[order].astype(np.int64)
        ec = checks[order].astype(np.int64)
        ce = edge_class[checks[order], vars_[order]].astype(np.int32)
        return cls(n_vars=h.shape[1], n_checks=h.shape[0],
                   edge_var=ev, edge_check=ec, chi_v=chi_v, chi_e=ce)


def tanner_graph(code: GBCode, which: str = "Z") -> TannerGraph:
    """Tanner graph of H_Z (default) or H_X with chi_V, chi_E populated."""
    if which not in ("Z", "X"):
        raise ValueError("which must be 'Z' or 'X'")
    h = code.h_z if which == "Z" else code.h_x
    cls = code.z_edge_class if which == "Z" else code.x_edge_class
    half = code.n // 2
    chi_v = np.where(np.arange(code.n) < half, BLOCK_A, BLOCK_B).astype(np.int8)
    return TannerGraph.from_check_matrix(h.bits, chi_v, cls)


def girth(g: TannerGraph) -> int:
    """Length of the shortest cycle; GIRTH_INFINITE for forests."""
    if g.n_edges == 0:
        raise ValueError("graph has no edges")
    n = g.n_vars + g.n_checks
    adj = [[] for _ in range(n)]
    for v, c in zip(g.edge_var, g.edge_check):
        adj[v].append(g.n_vars + c)
        adj[g.n_vars + c].append(int(v))
    best = None
    dist = np.empty(n, dtype=np.int64)
    parent = np.empty(n, dtype=np.int64)
    for s in range(n):
        dist.fill(-1)
        parent.fill(-1)
        dist[s] = 0
        frontier = [s]
        while frontier:
            nxt = []
            for u in frontier:
                for w in adj[u]:
                    if dist[w] == -1:
                        dist[w] = dist[u] + 1
                        parent[w] = u
                        nxt.append(w)
                    elif w != parent[u] and dist[w] >= dist[u]:
                        cyc = int(dist[u] + dist[w] + 1)
                        if best is None or cyc < best:
                            best = cyc
            frontier = nxt
    return GIRTH_INFINITE if best is None else best


@dataclass(frozen=True)
class DistanceResult:
    status: str  # "ok" | "undefined" | "limit_exceeded"
    value: Optional[int] = None


def brute_force_distance(code: GBCode, limit: int, which: str = "X") -> DistanceResult:
    """Minimum weight of a kernel vector outside the stabilizer rowspace.

    X-distance: vectors in ker(H_Z) not in rowspace(H_X).  Enumerates by
    weight up to `limit`; only feasible for toy blocklengths.
    """
    if code.k == 0:
        return DistanceResult("undefined")
    h_ker = code.h_z if which == "X" else code.h_x
    h_row = code.h_x if which == "X" else code.h_z
    from itertools import combinations

    for w in range(1, limit + 1):
        for support in combinations(range(code.n), w):
            v = BitVector.from_support(code.n, support)
            if not (h_ker.bits[:, list(support)].sum(axis=1) % 2).any():
                if not in_rowspace(v, h_row):
                    return DistanceResult("ok", w)
    return DistanceResult("limit_exceeded")
