"""Syndrome-based min-sum decoding with label-dependent damping.

One engine realizes all three variants.  The variable-to-check update first
computes the undamped message

    nu_tilde = lambda + sum of incoming check messages (excluding the target)

and then commits

    nu = xi * nu_tilde + (1 - xi) * nu_prev

where xi is resolved per edge from the labeling mode: a single class
(isotropic), the variable's block, or the edge's monomial class.

Floating-point sums of incoming messages are accumulated in ascending value
order, so the result depends only on the *multiset* of incoming messages.
This makes message evolution exactly invariant under neighbor permutations
and graph automorphisms, which the symmetry tests rely on bit-for-bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from .code import BLOCK_A, BLOCK_B, GBCode, TannerGraph
from .gf2 import BitVector, ShapeError, in_rowspace, syndrome

RESIDUAL_EXACT = "exact"
RESIDUAL_DEGENERATE = "degenerate_success"
RESIDUAL_LOGICAL = "logical_failure"
RESIDUAL_MISMATCH = "syndrome_mismatch"

MODE_NONE = "none"
MODE_BLOCK = "block"
MODE_EDGE = "edge"

_MODE_ALIASES = {
    "isotropic": MODE_NONE,
    "none": MODE_NONE,
    "block": MODE_BLOCK,
    "edge": MODE_EDGE,
}


class ConfigError(ValueError):
    """Invalid decoder configuration."""


@dataclass(frozen=True)
class DecoderConfig:
    alpha: float
    max_iters: int
    mode: str = MODE_NONE
    xi: Union[float, Sequence[float], dict, None] = None
    clip: float = 64.0
    early_stop: bool = True

    def __post_init__(self):
        if not (0.0 < self.alpha < 0.5):
            raise ConfigError(f"alpha must lie strictly in (0, 0.5), got {self.alpha}")
        if self.max_iters < 1:
            raise ConfigError("max_iters must be >= 1")
        mode = _MODE_ALIASES.get(self.mode)
        if mode is None:
            raise ConfigError(f"unknown labeling mode {self.mode!r}")
        object.__setattr__(self, "mode", mode)

    @property
    def llr_prior(self) -> float:
        return math.log((1.0 - self.alpha) / self.alpha)

    def xi_for_edges(self, graph: TannerGraph) -> np.ndarray:
        """Resolve the damping value of every edge under the labeling mode."""
        n_e = graph.n_edges
        if self.mode == MODE_NONE:
            if self.xi is not None and not np.all(np.asarray(self.xi, dtype=float) == 1.0):
                raise ConfigError("isotropic mode requires all xi equal to 1")
            out = np.ones(n_e)
        elif self.mode == MODE_BLOCK:
            pair = self._xi_lookup({BLOCK_A: "blockA", BLOCK_B: "blockB"}, 2)
            out = pair[graph.chi_v[graph.edge_var]]
        else:
            classes = graph.chi_e
            n_cls = int(classes.max())
            table = self._xi_lookup({k: k + 1 for k in range(n_cls)}, n_cls)
            out = table[classes - 1]
        if np.any(out < 0.5) or np.any(out > 1.0):
            raise ConfigError("damping values must satisfy 0.5 <= xi <= 1")
        return out

    def _xi_lookup(self, key_map: dict, size: int) -> np.ndarray:
        if self.xi is None:
            raise ConfigError(f"mode {self.mode!r} requires xi")
        if isinstance(self.xi, dict):
            try:
                return np.array([float(self.xi[k]) for k in key_map.values()])
            except KeyError as exc:
                raise ConfigError(f"missing xi entry for {exc}") from None
        arr = np.atleast_1d(np.asarray(self.xi, dtype=float))
        if arr.size == 1:
            return np.full(size, float(arr[0]))
        if arr.size != size:
            raise ConfigError(f"expected {size} xi values, got {arr.size}")
        return arr.astype(float)


@dataclass
class DecodeOutcome:
    estimate: BitVector
    converged: bool
    iters_used: int
    residual_class: Optional[str] = None
    posterior: Optional[np.ndarray] = None
    trace: Optional[list] = field(default=None, repr=False)


def _pad_groups(keys: np.ndarray, order_within: np.ndarray, n_groups: int):
    """Pad variable-length edge groups into a (n_groups, max_deg) index table.

    Edges are grouped by `keys` and ordered inside each group by
    `order_within` ascending, matching the canonical neighbor order used by
    the reference decoder.
    """
    n_e = len(keys)
    order = np.lexsort((order_within, keys))
    counts = np.bincount(keys, minlength=n_groups)
    max_deg = int(counts.max()) if n_e else 0
    idx = np.zeros((n_groups, max_deg), dtype=np.int64)
    mask = np.zeros((n_groups, max_deg), dtype=bool)
    pos = np.concatenate([[0], np.cumsum(counts)])
    for g in range(n_groups):
        d = counts[g]
        idx[g, :d] = order[pos[g]:pos[g] + d]
        mask[g, :d] = True
    return idx, mask


def _sorted_row_sums(values: np.ndarray, finite: np.ndarray, prior: float) -> np.ndarray:
    """prior + sum of each row's finite entries, added in ascending value order."""
    srt = np.sort(np.where(finite, values, np.inf), axis=1)
    total = np.full(srt.shape[0], prior)
    for j in range(srt.shape[1]):
        total = total + np.where(np.isfinite(srt[:, j]), srt[:, j], 0.0)
    return total


class MinSumDecoder:
    """Flooding-schedule min-sum engine over a fixed Tanner graph."""

    def __init__(self, graph: TannerGraph, cfg: DecoderConfig):
        self.graph = graph
        self.cfg = cfg
        self.lam = cfg.llr_prior
        self.xi_edge = cfg.xi_for_edges(graph)
        self.undamped = bool(np.all(self.xi_edge == 1.0))
        # (n_vars, Dv): edge ids of each variable, neighbor checks ascending
        self.v_idx, self.v_mask = _pad_groups(
            graph.edge_var, graph.edge_check, graph.n_vars)
        # (n_checks, Dc): edge ids of each check, neighbor variables ascending
        self.c_idx, self.c_mask = _pad_groups(
            graph.edge_check, graph.edge_var, graph.n_checks)
        # syndrome accumulator: which check each hard-decision bit feeds
        self.h_rows = [np.array(graph.check_neighbors[c], dtype=np.int64)
                       for c in range(graph.n_checks)]

    def _syndrome_of(self, est: np.ndarray) -> np.ndarray:
        return np.array([est[r].sum() & 1 for r in self.h_rows], dtype=np.uint8)

    def _check_update(self, nu: np.ndarray, s: np.ndarray) -> np.ndarray:
        vals = nu[self.c_idx]
        mag = np.where(self.c_mask, np.abs(vals), np.inf)
        neg = np.where(self.c_mask, vals < 0, False)
        n_neg = neg.sum(axis=1)
        min1 = mag.min(axis=1)
        n_min = (mag == min1[:, None]).sum(axis=1)
        masked = np.where(mag == min1[:, None], np.inf, mag)
        min2 = masked.min(axis=1)
        mu = np.zeros_like(nu)
        base_sign = np.where((s & 1).astype(bool), -1.0, 1.0)
        for j in range(self.c_idx.shape[1]):
            col = self.c_mask[:, j]
            others_neg = n_neg - neg[:, j]
            sgn = base_sign * np.where(others_neg & 1, -1.0, 1.0)
            is_min = mag[:, j] == min1
            excl = np.where(is_min & (n_min == 1), min2, min1)
            mu[self.c_idx[col, j]] = (sgn * excl)[col]
        return mu

    def _var_update(self, mu: np.ndarray, nu_prev: np.ndarray):
        vals = mu[self.v_idx]
        fin = self.v_mask
        posterior = _sorted_row_sums(vals, fin, self.lam)
        d = self.v_idx.shape[1]
        nu = np.zeros_like(mu)
        for j in range(d):
            others = np.delete(vals, j, axis=1)
            others_fin = np.delete(fin, j, axis=1)
            tilde = _sorted_row_sums(others, others_fin, self.lam)
            col = self.v_mask[:, j]
            eidx = self.v_idx[col, j]
            if self.undamped:
                committed = tilde[col]
            else:
                xi = self.xi_edge[eidx]
                committed = np.where(
                    xi == 1.0, tilde[col],
                    xi * tilde[col] + (1.0 - xi) * nu_prev[eidx])
            nu[eidx] = committed
        np.clip(nu, -self.cfg.clip, self.cfg.clip, out=nu)
        return nu, posterior

    def decode(self, s: BitVector, record: bool = False) -> DecodeOutcome:
        if s.len != self.graph.n_checks:
            raise ShapeError(f"syndrome length {s.len} != {self.graph.n_checks} checks")
        s_arr = s.bits.astype(np.uint8)
        nu = np.full(self.graph.n_edges, self.lam)
        nu_prev = nu.copy()
        mu = np.zeros(self.graph.n_edges)
        posterior = np.full(self.graph.n_vars, self.lam)
        trace = [] if record else None
        iters = 0
        converged = False
        for _ in range(self.cfg.max_iters):
            est = (posterior < 0).astype(np.uint8)
            if self.cfg.early_stop and np.array_equal(self._syndrome_of(est), s_arr):
                converged = True
                break
            mu = self._check_update(nu, s_arr)
            nu, posterior = self._var_update(mu, nu_prev)
            nu_prev = nu.copy()
            iters += 1
            if record:
                trace.append((nu.copy(), mu.copy(), posterior.copy()))
        est = (posterior < 0).astype(np.uint8)
        if not converged:
            converged = bool(np.array_equal(self._syndrome_of(est), s_arr))
        return DecodeOutcome(estimate=BitVector(est), converged=converged,
                             iters_used=iters, posterior=posterior, trace=trace)


def decode(graph: TannerGraph, s: BitVector, cfg: DecoderConfig,
           record: bool = False) -> DecodeOutcome:
    """One-shot decode; builds the engine for the given graph and config."""
    return MinSumDecoder(graph, cfg).decode(s, record=record)


def classify_residual(e: BitVector, outcome: DecodeOutcome, code: GBCode,
                      criterion: str = "hx") -> str:
    """Classify the residual e xor e_hat of an X-error decoding.

    `criterion` selects the stabilizer rowspace used for degenerate success:
    "hx" (default; rowspace of H_X, the X-type stabilizers) or "hz" (the
    literal rowspace-of-H reading with H = H_Z).
    """
    if not outcome.converged:
        return RESIDUAL_MISMATCH
    if e == outcome.estimate:
        return RESIDUAL_EXACT
    residual = e ^ outcome.estimate
    h = code.h_x if criterion == "hx" else code.h_z
    if in_rowspace(residual, h):
        return RESIDUAL_DEGENERATE
    return RESIDUAL_LOGICAL


def decode_and_classify(graph: TannerGraph, code: GBCode, e: BitVector,
                        cfg: DecoderConfig, criterion: str = "hx") -> DecodeOutcome:
    s = syndrome(e, code.h_z)
    outcome = decode(graph, s, cfg)
    outcome.residual_class = classify_residual(e, outcome, code, criterion=criterion)
    return outcome
