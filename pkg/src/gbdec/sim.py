"""Seeded Monte Carlo logical-error-rate estimation under i.i.d. X errors.

Each trial derives its own counter-based RNG stream from (master seed,
trial index), so failure counts are identical for any degree of
parallelism or scheduling order.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .gf2 import BitVector, syndrome
from .code import GBCode, TannerGraph, tanner_graph
from .decoder import (DecoderConfig, MinSumDecoder, classify_residual,
                      RESIDUAL_EXACT, RESIDUAL_DEGENERATE)
from .ensemble import DampingVector, ensemble_decode

__all__ = [
    "NoiseModel", "DecoderSpec", "SweepRow", "CSV_HEADER",
    "sample_error", "run_point", "sweep", "write_csv", "wilson_interval",
]

CSV_HEADER = "code,decoder,mode,alpha,iters,trials,failures,ler,ci_lo,ci_hi,seed"
DEFAULT_BUDGETS = (10, 20, 50)


@dataclass(frozen=True)
class NoiseModel:
    alpha: float

    def __post_init__(self):
        if not (0.0 < self.alpha < 0.5):
            raise ValueError("alpha must lie strictly in (0, 0.5)")


@dataclass(frozen=True)
class DecoderSpec:
    """One decoder column of the sweep: a single config or an ensemble."""

    name: str
    mode: str                 # "isotropic" | "block" | "edge"
    xi: object = None         # scalar / pair / per-class list (single decoder)
    members: Optional[Tuple[DampingVector, ...]] = None  # ensemble if set


@dataclass(frozen=True)
class SweepRow:
    code: str
    decoder: str
    mode: str
    alpha: float
    iters: int
    trials: int
    failures: int
    ler: float
    ci_lo: float
    ci_hi: float
    seed: int

    def as_csv(self) -> str:
        return (f"{self.code},{self.decoder},{self.mode},{self.alpha:.10g},"
                f"{self.iters},{self.trials},{self.failures},"
                f"{self.ler:.10g},{self.ci_lo:.10g},{self.ci_hi:.10g},{self.seed}")


def wilson_interval(failures: int, trials: int, z: float = 1.959963984540054
                    ) -> Tuple[float, float]:
    """95% Wilson score interval for a binomial proportion."""
    if trials == 0:
        return 0.0, 1.0
    p = failures / trials
    denom = 1.0 + z * z / trials
    center = (p + z * z / (2 * trials)) / denom
    half = (z / denom) * math.sqrt(p * (1 - p) / trials
                                   + z * z / (4 * trials * trials))
    # At p in {0, 1} the nearer endpoint is exactly p; pin it to avoid
    # rounding residue from center - half.
    lo = 0.0 if failures == 0 else max(0.0, center - half)
    hi = 1.0 if failures == trials else min(1.0, center + half)
    return lo, hi


def trial_rng(master_seed: int, trial: int) -> np.random.Generator:
    """Counter-based per-trial stream; independent of evaluation order."""
    return np.random.Generator(np.random.Philox(key=[master_seed, trial]))


def sample_error(alpha: float, n: int, rng: np.random.Generator) -> BitVector:
    """I.i.d. X-error vector: each bit flips with probability alpha."""
    NoiseModel(alpha)
    return BitVector((rng.random(n) < alpha).astype(np.uint8))


_FAILURE_CLASSES = frozenset({"syndrome_mismatch", "logical_failure"})


def _decode_trial(graph: TannerGraph, code: GBCode, spec: DecoderSpec,
                  cfg: DecoderConfig, e: BitVector,
                  engine: Optional[MinSumDecoder]) -> bool:
    """Returns True when the trial fails."""
    s = syndrome(e, code.h_z)
    if spec.members is not None:
        outcome = ensemble_decode(graph, s, spec.members, cfg)
    else:
        outcome = engine.decode(s)
    cls = classify_residual(e, outcome, code)
    return cls in _FAILURE_CLASSES


def _run_chunk(args) -> int:
    code, spec, cfg, master_seed, trials_lo, trials_hi = args
    graph = tanner_graph(code, "Z")
    engine = None
    if spec.members is None:
        engine = MinSumDecoder(graph, cfg)
    failures = 0
    for t in range(trials_lo, trials_hi):
        rng = trial_rng(master_seed, t)
        e = sample_error(cfg.alpha, code.n, rng)
        if _decode_trial(graph, code, spec, cfg, e, engine):
            failures += 1
    return failures


def _base_config(spec: DecoderSpec, alpha: float, iters: int) -> DecoderConfig:
    if spec.members is not None:
        # per-member xi is substituted inside ensemble_decode
        return DecoderConfig(alpha=alpha, max_iters=iters, mode="edge", xi=1.0)
    xi = spec.xi if spec.mode != "isotropic" else None
    return DecoderConfig(alpha=alpha, max_iters=iters, mode=spec.mode, xi=xi)


def run_point(code: GBCode, spec: DecoderSpec, alpha: float, iters: int,
              trials: int, master_seed: int, workers: int = 1) -> SweepRow:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    cfg = _base_config(spec, alpha, iters)
    if workers <= 1:
        failures = _run_chunk((code, spec, cfg, master_seed, 0, trials))
    else:
        bounds = np.linspace(0, trials, workers + 1).astype(int)
        jobs = [(code, spec, cfg, master_seed, int(lo), int(hi))
                for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            failures = sum(pool.map(_run_chunk, jobs))
    ler = failures / trials
    lo, hi = wilson_interval(failures, trials)
    return SweepRow(code=code.spec.name, decoder=spec.name, mode=spec.mode,
                    alpha=alpha, iters=iters, trials=trials, failures=failures,
                    ler=ler, ci_lo=lo, ci_hi=hi, seed=master_seed)


def sweep(code: GBCode, decoders: Sequence[DecoderSpec],
          alphas: Sequence[float], budgets: Sequence[int] = DEFAULT_BUDGETS,
          trials: int = 1000, master_seed: int = 0,
          workers: int = 1) -> List[SweepRow]:
    if not decoders or not alphas or not budgets:
        raise ValueError("decoders, alphas, and budgets must be non-empty")
    rows = []
    for spec in decoders:
        for alpha in alphas:
            for iters in budgets:
                rows.append(run_point(code, spec, alpha, iters, trials,
                                      master_seed, workers=workers))
    return rows


def write_csv(rows: Sequence[SweepRow], path) -> None:
    with open(path, "w", newline="") as fh:
        fh.write(CSV_HEADER + "\n")
        for row in rows:
            fh.write(row.as_csv() + "\n")
