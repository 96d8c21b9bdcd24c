"""Monte Carlo of the likelihood-ratio game against a local-realistic model.

Each trial flags an event with probability q (the quantum prediction); the
model under attack assigns it probability r. The running log10 likelihood
ratio drifts downward at K(q, r) digits per trial on average, and a run ends
when it has fallen past the target exponent or hits the trial cap.

Randomness uses counter-based Philox streams keyed by (seed, run_index), so
every run is reproducible in isolation and batches are identical no matter
how work is split across threads.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .serialize import Table
from .strength import info_distance
from .tensor import PureState, bloch_observable

# Trials are drawn in fixed-size blocks so the random stream consumed for a
# given (seed, run_index) never depends on the cap or on scheduling.
_BLOCK = 4096


@dataclass(frozen=True)
class SimulationRun:
    """Outcome of one likelihood-ratio run."""

    seed: int
    run_index: int
    event_probability: float
    lr_probability: float
    target_exponent: float
    cap: int
    crossing_trial: int | None  # first trial where log10 LR <= -target
    capped: bool
    final_log10: float  # log10 LR at the crossing (or at the cap)
    expected_trials: float
    trajectory: np.ndarray | None = None


def simulate_depression(
    q: float,
    r: float,
    target_exponent: float = 4.0,
    cap: int = 1_000_000,
    seed: int = 0,
    run_index: int = 0,
    keep_trajectory: bool = False,
) -> SimulationRun:
    """Run the likelihood-ratio game once.

    q = 1 hits deterministically every trial; q = r never crosses (the
    expected_trials field is then inf and the run ends capped). Per-trial
    increments are log10(q/r) on a hit and log10((1-q)/(1-r)) on a miss.
    """
    if not (0.0 <= q <= 1.0):
        raise ValueError(f"q must lie in [0, 1], got {q}")
    if not (0.0 < r < 1.0) and r != q:
        # r at an endpoint is only playable when q matches it exactly
        raise ValueError(f"model probability r = {r} forbids possible outcomes")
    if target_exponent <= 0.0:
        raise ValueError(f"target_exponent must be positive, got {target_exponent}")
    if cap < 1:
        raise ValueError(f"cap must be >= 1, got {cap}")

    k = info_distance(q, r)
    expected = math.inf if k == 0.0 else target_exponent / k
    up = math.log10(q / r) if q > 0.0 else 0.0
    dn = math.log10((1.0 - q) / (1.0 - r)) if q < 1.0 else 0.0

    rng = np.random.Generator(np.random.Philox(key=[int(seed), int(run_index)]))
    target = -float(target_exponent)

    acc = 0.0
    done = 0
    crossing: int | None = None
    pieces: list[np.ndarray] = []
    while done < cap:
        block = rng.random(_BLOCK)  # always a full block; see _BLOCK note
        take = min(_BLOCK, cap - done)
        steps = np.where(block[:take] < q, -up, -dn)
        partial = acc + np.cumsum(steps)
        if keep_trajectory:
            pieces.append(partial)
        hits = np.nonzero(partial <= target)[0]
        if hits.size:
            crossing = done + int(hits[0]) + 1
            acc = float(partial[hits[0]])
            if keep_trajectory:
                pieces[-1] = partial[: hits[0] + 1]
            break
        acc = float(partial[-1]) if take else acc
        done += take

    trajectory = None
    if keep_trajectory:
        trajectory = np.concatenate(pieces) if pieces else np.zeros(0)
        trajectory.setflags(write=False)
    return SimulationRun(
        seed=int(seed),
        run_index=int(run_index),
        event_probability=q,
        lr_probability=r,
        target_exponent=float(target_exponent),
        cap=int(cap),
        crossing_trial=crossing,
        capped=crossing is None,
        final_log10=acc,
        expected_trials=expected,
        trajectory=trajectory,
    )


@dataclass(frozen=True)
class SimulationBatch:
    """A set of runs sharing (q, r, target) but with distinct substreams."""

    runs: tuple[SimulationRun, ...]

    def crossing_trials(self) -> np.ndarray:
        """Crossing trial per run, nan where the run hit the cap."""
        return np.array(
            [math.nan if r.crossing_trial is None else float(r.crossing_trial) for r in self.runs]
        )

    def to_table(self) -> Table:
        rows = tuple(
            (r.run_index, r.seed, r.crossing_trial, r.capped) for r in self.runs
        )
        return Table(
            column_names=("run_index", "seed", "crossing_trial", "capped"),
            rows=rows,
        )


def run_batch(
    q: float,
    r: float,
    runs: int,
    seed: int = 0,
    target_exponent: float = 4.0,
    cap: int = 1_000_000,
    workers: int | None = None,
) -> SimulationBatch:
    """Independent runs indexed 0..runs-1, each on its own Philox substream.

    The result is ordered by run index and is byte-identical for any worker
    count, because the substream key is (seed, run_index) alone.
    """
    if runs < 1:
        raise ValueError(f"runs must be >= 1, got {runs}")
    job = lambda i: simulate_depression(
        q, r, target_exponent=target_exponent, cap=cap, seed=seed, run_index=i
    )
    indices = range(runs)
    if workers is not None and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(job, indices))
    else:
        results = [job(i) for i in indices]
    return SimulationBatch(runs=tuple(results))


def sample_joint_outcomes(
    state: PureState, n_a, n_b, n_c, n: int, seed: int = 0
) -> np.ndarray:
    """Multinomial sample of the eight joint outcomes of three spin measurements.

    Returns a 2x2x2 integer array of counts; index 0 along an axis means
    outcome +1 for that party, index 1 means -1. Probabilities come from the
    Born rule via the projectors (I +/- n.sigma)/2.
    """
    if state.n_qubits != 3:
        raise ValueError("sample_joint_outcomes needs a three-qubit state")
    if n < 0:
        raise ValueError(f"sample count must be >= 0, got {n}")
    eye = np.eye(2)
    projectors = []
    for direction in (n_a, n_b, n_c):
        obs = bloch_observable(direction).matrix
        projectors.append(((eye + obs) / 2.0, (eye - obs) / 2.0))
    t = state.tensor
    probs = np.empty((2, 2, 2))
    for i in range(2):
        for j in range(2):
            for k in range(2):
                value = np.einsum(
                    "abc,ax,by,cz,xyz->",
                    t.conj(),
                    projectors[0][i],
                    projectors[1][j],
                    projectors[2][k],
                    t,
                )
                probs[i, j, k] = value.real
    total = probs.sum()
    if abs(total - 1.0) > 1e-12:
        raise ValueError(f"outcome probabilities sum to {total}, not 1")
    flat = np.clip(probs.ravel(), 0.0, None)
    flat = flat / flat.sum()
    rng = np.random.default_rng(seed)
    return rng.multinomial(n, flat).reshape(2, 2, 2)
