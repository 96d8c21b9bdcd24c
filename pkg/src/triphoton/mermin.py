"""Triple-observable expectations, the Mermin functional, and its extremization.

Measurement settings are restricted to the symmetric form the decay states
call for: one unprimed Bloch direction shared by all three parties and one
primed direction shared by all three. The Mermin combination is evaluated as
the full four-term sum E(n',n,n) + E(n,n',n) + E(n,n,n') - E(n',n',n'),
which reduces to 3E - E' on permutation-symmetric states and respects the
|M| <= 2 product-state bound for asymmetric ones as well.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import minimize
from scipy.stats import qmc

from .serialize import ScanGrid
from .states import delta_family_state
from .tensor import PAULI, PureState, bloch_observable

_SIGMA = np.stack(PAULI)


def _unit_vector(v, tol: float = 1e-9) -> np.ndarray:
    arr = np.asarray(v, dtype=float).ravel()
    if arr.shape != (3,):
        raise ValueError("Bloch direction must have three components")
    length = float(np.linalg.norm(arr))
    if abs(length - 1.0) > tol:
        raise ValueError(f"Bloch direction must be unit length, got |n| = {length}")
    out = arr / length
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class ObservableSettings:
    """Symmetric Stern-Gerlach settings: one unprimed and one primed direction."""

    unprimed: np.ndarray
    primed: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "unprimed", _unit_vector(self.unprimed))
        object.__setattr__(self, "primed", _unit_vector(self.primed))

    @classmethod
    def from_angles(
        cls,
        theta_deg: float,
        phi_deg: float,
        theta_prime_deg: float,
        phi_prime_deg: float,
    ) -> "ObservableSettings":
        return cls(
            unprimed=_direction(np.radians(theta_deg), np.radians(phi_deg)),
            primed=_direction(np.radians(theta_prime_deg), np.radians(phi_prime_deg)),
        )

    @property
    def angles_deg(self) -> tuple[float, float, float, float]:
        """(theta, phi, theta', phi') in degrees, phi folded into [0, 360)."""
        return _angles_of(self.unprimed) + _angles_of(self.primed)


def _direction(theta_rad: float, phi_rad: float) -> np.ndarray:
    return np.array(
        [
            np.sin(theta_rad) * np.cos(phi_rad),
            np.sin(theta_rad) * np.sin(phi_rad),
            np.cos(theta_rad),
        ]
    )


def _angles_of(n: np.ndarray) -> tuple[float, float]:
    theta = float(np.degrees(np.arccos(np.clip(n[2], -1.0, 1.0))))
    phi = float(np.degrees(np.arctan2(n[1], n[0])) % 360.0)
    return theta, phi


def yx_settings() -> ObservableSettings:
    """Unprimed along y, primed along x; the fixed settings of the delta sweep."""
    return ObservableSettings(unprimed=(0.0, 1.0, 0.0), primed=(1.0, 0.0, 0.0))


def _require_normalized(state: PureState) -> None:
    if abs(state.norm() ** 2 - 1.0) > 1e-12:
        raise ValueError("state must be normalized (squared norm within 1e-12 of 1)")


def triple_expectation(state: PureState, n_a, n_b, n_c) -> float:
    """<state| (n_a.sigma) x (n_b.sigma) x (n_c.sigma) |state> for unit vectors."""
    if state.n_qubits != 3:
        raise ValueError("triple_expectation needs a three-qubit state")
    _require_normalized(state)
    ops = [bloch_observable(_unit_vector(n)).matrix for n in (n_a, n_b, n_c)]
    t = state.tensor
    value = np.einsum("abc,ax,by,cz,xyz->", t.conj(), ops[0], ops[1], ops[2], t)
    if abs(value.imag) > 1e-10:
        raise ValueError(f"expectation has nonreal residue {value.imag}")
    return float(value.real)


def mermin_value(state: PureState, settings: ObservableSettings) -> float:
    """Four-term Mermin combination at the given symmetric settings."""
    n, p = settings.unprimed, settings.primed
    return (
        triple_expectation(state, p, n, n)
        + triple_expectation(state, n, p, n)
        + triple_expectation(state, n, n, p)
        - triple_expectation(state, p, p, p)
    )


def _correlation_tensor(state: PureState) -> np.ndarray:
    """Real 3x3x3 tensor of Pauli expectations; every setting evaluation is
    then a cheap trilinear contraction."""
    _require_normalized(state)
    t = state.tensor
    corr = np.einsum("abc,iax,jby,kcz,xyz->ijk", t.conj(), _SIGMA, _SIGMA, _SIGMA, t)
    return np.real(corr)


def _mermin_from_tensor(corr: np.ndarray, angles_rad: np.ndarray) -> float:
    th, ph, thp, php = angles_rad
    n = _direction(th, ph)
    p = _direction(thp, php)
    e = lambda a, b, c: float(np.einsum("ijk,i,j,k->", corr, a, b, c))
    return e(p, n, n) + e(n, p, n) + e(n, n, p) - e(p, p, p)


def mermin_gradient(state: PureState, angles_deg) -> np.ndarray:
    """Central-difference gradient of the Mermin functional.

    angles_deg is (theta, phi, theta', phi') in degrees; the returned
    derivatives are with respect to the angles in radians (h = 1e-5 rad).
    """
    corr = _correlation_tensor(state)
    x = np.radians(np.asarray(angles_deg, dtype=float))
    if x.shape != (4,):
        raise ValueError("angles must be (theta, phi, theta_prime, phi_prime)")
    return _gradient(corr, x)


def _gradient(corr: np.ndarray, angles_rad: np.ndarray, h: float = 1e-5) -> np.ndarray:
    grad = np.zeros(4)
    for i in range(4):
        step = np.zeros(4)
        step[i] = h
        grad[i] = (
            _mermin_from_tensor(corr, angles_rad + step)
            - _mermin_from_tensor(corr, angles_rad - step)
        ) / (2.0 * h)
    return grad


@dataclass(frozen=True)
class LRBoundCheck:
    """Exhaustive check of the Mermin combination over deterministic outcomes."""

    n_assignments: int
    distinct_values: tuple[float, ...]
    within_bounds: bool


def lr_constraint_check() -> LRBoundCheck:
    """Enumerate all 64 deterministic outcome assignments.

    For every (a, a', b, b', c, c') in {-1, +1}^6 the combination
    a'bc + ab'c + abc' - a'b'c' equals -2 or +2, which is the local-realism
    bound the quantum states violate.
    """
    values = set()
    count = 0
    for a, ap, b, bp, c, cp in itertools.product((-1.0, 1.0), repeat=6):
        values.add(ap * b * c + a * bp * c + a * b * cp - ap * bp * cp)
        count += 1
    distinct = tuple(sorted(values))
    return LRBoundCheck(
        n_assignments=count,
        distinct_values=distinct,
        within_bounds=all(v in (-2.0, 2.0) for v in distinct),
    )


@dataclass(frozen=True)
class MerminResult:
    """One stationary point of the Mermin functional (and, on the result of
    mermin_extremize, the full list of distinct points found)."""

    value: float
    settings: ObservableSettings
    angles_deg: tuple[float, float, float, float]
    stationary: bool
    gradient_norm: float
    points: tuple["MerminResult", ...] = field(default=())


def _fold_angles(corr: np.ndarray, x: np.ndarray, value: float) -> np.ndarray:
    """Map converged angles onto a canonical representative.

    Directions are normalized to theta in [0, 180] and phi in [0, 360); the
    complex-conjugation copy (phi, phi') -> (360 - phi, 360 - phi') is folded
    when it moves phi below 180 degrees, but only if the folded angles
    reproduce the same value (true for real-amplitude states).
    """
    out = x.copy()
    for base in (0, 2):
        th = out[base] % (2.0 * np.pi)
        ph = out[base + 1]
        if th > np.pi:
            th = 2.0 * np.pi - th
            ph = ph + np.pi
        out[base] = th
        out[base + 1] = ph % (2.0 * np.pi)
    if out[1] > np.pi:
        candidate = out.copy()
        candidate[1] = (2.0 * np.pi - out[1]) % (2.0 * np.pi)
        candidate[3] = (2.0 * np.pi - out[3]) % (2.0 * np.pi)
        if abs(_mermin_from_tensor(corr, candidate) - value) <= 1e-9:
            out = candidate
    return out


def mermin_extremize(state: PureState, starts: int = 64, seed: int = 0) -> MerminResult:
    """Multi-start minimization of the Mermin functional over symmetric settings.

    Runs a derivative-free simplex search from `starts` low-discrepancy
    points in (theta, phi, theta', phi') space, clusters the converged
    results by value, and returns the best minimum found. The `points` field
    carries one representative per distinct stationary value, best first;
    each carries its finite-difference gradient norm and a stationarity flag
    (norm <= 1e-6). Deterministic for fixed (starts, seed) and independent
    of thread count.
    """
    if starts < 1:
        raise ValueError(f"starts must be >= 1, got {starts}")
    corr = _correlation_tensor(state)
    fun = lambda x: _mermin_from_tensor(corr, x)

    sampler = qmc.Halton(d=4, scramble=True, seed=seed)
    lo = np.array([0.0, 0.0, 0.0, 0.0])
    hi = np.array([np.pi, 2.0 * np.pi, np.pi, 2.0 * np.pi])
    x0s = qmc.scale(sampler.random(starts), lo, hi)

    found = []
    for x0 in x0s:
        res = minimize(
            fun,
            x0,
            method="Nelder-Mead",
            options={"xatol": 1e-10, "fatol": 1e-13, "maxiter": 4000, "maxfev": 8000},
        )
        if res.success:
            found.append((float(res.fun), np.asarray(res.x, dtype=float)))
    if not found:
        raise RuntimeError("no start converged; increase starts or loosen options")

    clusters: dict[float, tuple[float, np.ndarray]] = {}
    for value, x in found:
        folded = _fold_angles(corr, x, value)
        key = round(value, 6)
        entry = (value, folded)
        if key not in clusters:
            clusters[key] = entry
        else:
            # deterministic representative: smallest value, then smallest angles
            best = clusters[key]
            cand_rank = (value, tuple(np.round(folded, 6)))
            best_rank = (best[0], tuple(np.round(best[1], 6)))
            if cand_rank < best_rank:
                clusters[key] = entry

    points = []
    for value, x in sorted(clusters.values(), key=lambda e: (e[0], tuple(np.round(e[1], 6)))):
        grad_norm = float(np.linalg.norm(_gradient(corr, x)))
        angles = tuple(float(a) for a in np.degrees(x))
        points.append(
            MerminResult(
                value=value,
                settings=ObservableSettings.from_angles(*angles),
                angles_deg=angles,
                stationary=grad_norm <= 1e-6,
                gradient_norm=grad_norm,
            )
        )
    best = points[0]
    return MerminResult(
        value=best.value,
        settings=best.settings,
        angles_deg=best.angles_deg,
        stationary=best.stationary,
        gradient_norm=best.gradient_norm,
        points=tuple(points),
    )


def inclusive_range(start: float, stop: float, step: float) -> np.ndarray:
    """start, start + step, ... up to and including stop (within 1e-9 slack)."""
    if step <= 0.0:
        raise ValueError(f"step must be positive, got {step}")
    if stop < start:
        raise ValueError(f"range end {stop} is below start {start}")
    n = int(np.floor((stop - start) / step + 1e-9)) + 1
    return start + step * np.arange(n)


def mermin_delta_sweep(start_deg: float, stop_deg: float, step_deg: float) -> ScanGrid:
    """Mermin value of the delta family at the fixed y/x settings.

    Emits one row per delta with the four-term value and the violation
    -value - 2 (positive once the local-realism bound -2 is beaten; the
    curve crosses zero near delta = 85.88 degrees).
    """
    deltas = inclusive_range(float(start_deg), float(stop_deg), float(step_deg))
    if deltas.size and not (0.0 <= deltas[0] and deltas[-1] <= 180.0 + 1e-9):
        raise ValueError("delta range must stay within [0, 180] degrees")
    deltas = np.clip(deltas, 0.0, 180.0)  # accumulated step dust must not trip validation
    settings = yx_settings()
    values = np.array([mermin_value(delta_family_state(d), settings) for d in deltas])
    return ScanGrid(
        axis_names=("delta_deg",),
        axes=(deltas,),
        column_names=("mermin_value", "violation"),
        columns=(values, -values - 2.0),
    )
