"""Seeded uniform sampling of Bell-diagonal states and detection shares.

States are drawn flat on the probability simplex by normalizing d^2
independent unit exponentials (the Dirichlet(1, ..., 1) construction).
Sampling is chunked: chunk i uses the PCG64 substream spawned from
SeedSequence(seed) at index i, so the stream is reproducible bit for bit
regardless of how the consumer schedules or batches the draws. The chunk
size is fixed at 4096 draws.

With a zero_coset constraint the d coefficients on the chosen coset are
pinned to exact zeros and only the remaining d^2 - d coordinates are
drawn, flat on their reduced simplex. Such constrained qutrit samples can
never be PPT entangled, which :func:`proposition1_check` verifies
empirically.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from typing import Iterator, NamedTuple

import numpy as np

from . import detection
from .errors import BellDiagError, DimensionTooSmallError
from .phase_space import Coset, all_cosets
from .weyl import CoefficientMatrix

CHUNK_SIZE = 4096

# Pinned PRNG identity, reported in ShareReport metadata. Reproduction of
# the share tables needs this generator and the chunked spawn scheme.
RNG_DESCRIPTION = f"numpy-PCG64 via SeedSequence.spawn (numpy {np.__version__})"

CSV_COLUMNS = (
    "d",
    "n",
    "seed",
    "npt_share",
    "realignment_share",
    "ppt_ent_share",
    "undetected_share",
)


@dataclass(frozen=True)
class SamplerConfig:
    """Sampling request: dimension, draw count, seed, optional zero coset."""

    d: int
    n_samples: int
    seed: int
    zero_coset: Coset | None = None

    def __post_init__(self):
        if self.d < 2:
            raise DimensionTooSmallError(f"need d >= 2, got {self.d}")
        if self.n_samples < 1:
            raise BellDiagError(f"n_samples must be >= 1, got {self.n_samples}")
        if self.zero_coset is not None and self.zero_coset not in all_cosets(self.d):
            raise BellDiagError(
                f"zero_coset {self.zero_coset.elements!r} is not a coset of Z_{self.d}^2"
            )


@dataclass(frozen=True)
class ShareReport:
    """Detection shares over one uniform sample of the simplex.

    npt_share, ppt_and_realignment_share (PPT states that realignment
    detects), and undetected_share partition the sample, so they sum to 1
    up to 1/n rounding; undetected_share includes the qubit states labeled
    separable (detected by neither criterion). realignment_share counts
    all realignment detections regardless of the PPT verdict.
    """

    d: int
    n_samples: int
    seed: int
    npt_share: float
    realignment_share: float
    ppt_and_realignment_share: float
    undetected_share: float
    wall_time: float
    rng: str = RNG_DESCRIPTION

    def to_dict(self) -> dict:
        return asdict(self)

    def csv_row(self) -> tuple:
        return (
            self.d,
            self.n_samples,
            self.seed,
            self.npt_share,
            self.realignment_share,
            self.ppt_and_realignment_share,
            self.undetected_share,
        )


class Prop1Counts(NamedTuple):
    n_ppt_entangled_detected: int
    n_npt: int
    n_other: int


def sample_uniform(cfg: SamplerConfig) -> Iterator[CoefficientMatrix]:
    """Yield cfg.n_samples coefficient matrices drawn flat on the simplex.

    Each draw normalizes d^2 unit exponentials (Dirichlet(1, ..., 1)). If
    cfg.zero_coset is set, the coset coordinates are exact zeros and the
    free coordinates are drawn flat on the reduced simplex. Deterministic
    for a fixed config: chunk i of 4096 draws uses the substream
    SeedSequence(seed).spawn at index i, independent of consumption order.
    """
    d = cfg.d
    if cfg.zero_coset is not None:
        zeroed = {k * d + l for k, l in cfg.zero_coset.elements}
        free = np.array([p for p in range(d * d) if p not in zeroed], dtype=np.intp)
    else:
        free = np.arange(d * d)
    n_chunks = -(-cfg.n_samples // CHUNK_SIZE)
    children = np.random.SeedSequence(cfg.seed).spawn(n_chunks)
    remaining = cfg.n_samples
    for child in children:
        rng = np.random.default_rng(child)
        m = min(CHUNK_SIZE, remaining)
        remaining -= m
        draws = rng.exponential(size=(m, free.size))
        draws /= draws.sum(axis=1, keepdims=True)
        flat = np.zeros((m, d * d))
        flat[:, free] = draws
        for row in flat:
            yield CoefficientMatrix(row.reshape(d, d))


def estimate_shares(cfg: SamplerConfig) -> ShareReport:
    """Classify every sample and aggregate the detection shares.

    Every draw goes through detection.classify (fast realignment for all
    d, the cubic det criterion for d=3, the dense PPT oracle otherwise).
    Counts are deterministic for a fixed config.
    """
    if cfg.zero_coset is not None:
        raise BellDiagError("estimate_shares expects an unconstrained sampler config")
    start = time.perf_counter()
    n_npt = n_realign = n_ppt_detected = 0
    for cm in sample_uniform(cfg):
        record = detection.classify(cm)
        if record.realignment_detected:
            n_realign += 1
        if not record.is_ppt:
            n_npt += 1
        elif record.realignment_detected:
            n_ppt_detected += 1
    n = cfg.n_samples
    return ShareReport(
        d=cfg.d,
        n_samples=n,
        seed=cfg.seed,
        npt_share=n_npt / n,
        realignment_share=n_realign / n,
        ppt_and_realignment_share=n_ppt_detected / n,
        undetected_share=(n - n_npt - n_ppt_detected) / n,
        wall_time=time.perf_counter() - start,
    )


def proposition1_check(cfg: SamplerConfig) -> Prop1Counts:
    """Classify zero-coset qutrit samples and count the verdicts.

    States with a full coset of zero coefficients are separable or NPT,
    never PPT entangled, so n_ppt_entangled_detected is expected to be 0;
    generic draws are NPT with probability 1 (the separable boundary
    cases have measure zero).
    """
    if cfg.d != 3:
        raise BellDiagError(f"the zero-coset check is a d=3 statement, got d={cfg.d}")
    if cfg.zero_coset is None:
        raise BellDiagError("proposition1_check needs cfg.zero_coset set")
    n_detected = n_npt = 0
    for cm in sample_uniform(cfg):
        record = detection.classify(cm)
        if not record.is_ppt:
            n_npt += 1
        elif record.realignment_detected:
            n_detected += 1
    return Prop1Counts(
        n_ppt_entangled_detected=n_detected,
        n_npt=n_npt,
        n_other=cfg.n_samples - n_detected - n_npt,
    )
