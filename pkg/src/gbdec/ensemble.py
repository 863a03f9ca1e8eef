"""Pools of edge-anisotropic damping vectors and greedy ensemble selection.

A candidate decoder is a vector of per-edge-class damping factors xi in
[0.5, 1].  Candidates are scored by which harmful degenerate patterns they
correct within a small iteration budget; a fixed-size ensemble is chosen
greedily to maximize joint coverage and decoded with a sequential
first-success rule.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import List, Sequence, Tuple

import numpy as np

from .gf2 import BitVector
from .code import GBCode, TannerGraph, tanner_graph
from .decoder import (DecoderConfig, DecodeOutcome, MinSumDecoder,
                      classify_residual, RESIDUAL_EXACT, RESIDUAL_DEGENERATE)

__all__ = [
    "DampingVector", "CandidatePool", "EnsembleSelection", "SelectionError",
    "sample_pool", "coverage_matrix", "greedy_select", "ensemble_decode",
]

DEFAULT_POOL_SIZE = 100
DEFAULT_MEMBERS = 5
DEFAULT_BUDGET = 10


class SelectionError(ValueError):
    """Raised when an ensemble cannot be selected from the pool."""


@dataclass(frozen=True)
class DampingVector:
    """Per-edge-class damping factors, one value per monomial class."""

    xi: Tuple[float, ...]

    def __post_init__(self):
        if not self.xi:
            raise ValueError("damping vector must be non-empty")
        if any(not (0.5 <= x <= 1.0) for x in self.xi):
            raise ValueError("all damping values must lie in [0.5, 1]")


@dataclass(frozen=True)
class CandidatePool:
    candidates: Tuple[DampingVector, ...]
    seed: int
    size: int

    def __post_init__(self):
        if self.size != len(self.candidates):
            raise ValueError("pool size does not match candidate count")


@dataclass(frozen=True)
class EnsembleSelection:
    members: Tuple[DampingVector, ...]
    member_indices: Tuple[int, ...]
    coverage_matrix: np.ndarray = field(repr=False)
    covered_fraction: float


def sample_pool(k_classes: int, size: int = DEFAULT_POOL_SIZE,
                seed: int = 0) -> CandidatePool:
    """Draw `size` damping vectors, each entry uniform on [0.5, 1]."""
    if k_classes < 1:
        raise ValueError("k_classes must be >= 1")
    rng = np.random.default_rng(seed)
    draws = rng.uniform(0.5, 1.0, size=(size, k_classes))
    cands = tuple(DampingVector(tuple(float(x) for x in row)) for row in draws)
    return CandidatePool(candidates=cands, seed=seed, size=size)


def _candidate_config(vec: DampingVector, base: DecoderConfig) -> DecoderConfig:
    return replace(base, mode="edge", xi=vec.xi)


def _corrects(decoder: MinSumDecoder, code: GBCode, e: BitVector,
              s: BitVector) -> bool:
    outcome = decoder.decode(s)
    if not outcome.converged:
        return False
    cls = classify_residual(e, outcome, code)
    return cls in (RESIDUAL_EXACT, RESIDUAL_DEGENERATE)


def coverage_matrix(pool: CandidatePool,
                    patterns: Sequence[Tuple[BitVector, BitVector]],
                    code: GBCode, budget: int = DEFAULT_BUDGET,
                    base: DecoderConfig = None) -> np.ndarray:
    """Boolean (candidate x pattern) matrix of corrected-within-budget."""
    if base is None:
        base = DecoderConfig(alpha=0.05, max_iters=budget, mode="edge", xi=1.0)
    else:
        base = replace(base, max_iters=budget)
    graph = tanner_graph(code, "Z")
    out = np.zeros((pool.size, len(patterns)), dtype=bool)
    for i, vec in enumerate(pool.candidates):
        dec = MinSumDecoder(graph, _candidate_config(vec, base))
        for j, (e, s) in enumerate(patterns):
            out[i, j] = _corrects(dec, code, e, s)
    return out


def greedy_select(matrix: np.ndarray, pool: CandidatePool,
                  m: int = DEFAULT_MEMBERS) -> EnsembleSelection:
    """Greedy maximum-marginal-coverage selection of m pool members.

    Ties are broken toward the lower candidate index.  Selection always
    returns m members (padding with the lowest-index unselected candidates
    once everything coverable is covered).
    """
    n_cand, n_pat = matrix.shape
    if n_cand < m:
        raise SelectionError(f"pool has {n_cand} candidates, need {m}")
    covered = np.zeros(n_pat, dtype=bool)
    chosen: List[int] = []
    for _ in range(m):
        gains = (matrix & ~covered).sum(axis=1)
        gains[chosen] = -1
        best = int(np.argmax(gains))  # argmax returns the first (lowest) index
        chosen.append(best)
        covered |= matrix[best]
    frac = float(covered.mean()) if n_pat else 1.0
    return EnsembleSelection(
        members=tuple(pool.candidates[i] for i in chosen),
        member_indices=tuple(chosen),
        coverage_matrix=matrix,
        covered_fraction=frac,
    )


def ensemble_decode(graph: TannerGraph, s: BitVector,
                    members: Sequence[DampingVector],
                    cfg_base: DecoderConfig) -> DecodeOutcome:
    """Run members in fixed order; return the first converged outcome.

    If no member converges, the first member's (non-converged) outcome is
    returned with iters_used accumulated over all attempted members.
    """
    if not members:
        raise SelectionError("ensemble has no members")
    first = None
    total_iters = 0
    for vec in members:
        outcome = MinSumDecoder(graph, _candidate_config(vec, cfg_base)).decode(s)
        total_iters += outcome.iters_used
        if outcome.converged:
            outcome.iters_used = total_iters
            return outcome
        if first is None:
            first = outcome
    first.iters_used = total_iters
    return first
