"""Optimization of mana over maximally coherent phase vectors.

The objective Mana(psi_theta) with psi_theta = (1/sqrt d) sum_j e^{i theta_j}|j>
(theta_0 = 0) is bounded by (1/2) log d for every pure state; that bound is
in fact strict for every prime d, since Cauchy-Schwarz equality would force
all d^2 Wigner values to share the magnitude d^{-3/2}, and with their sum
pinned to 1 the signed count n+ - n- would have to equal d^{3/2}, never an
integer for prime d.  The search therefore reports the best value found and
never asserts attainment of the bound.

Strategy: exhaustive evaluation on a uniform grid over [0, 2pi)^{d-1},
local grid maxima refined by coordinate-wise golden-section ascent, then
all refined optima within 1e-6 of the best are kept, deduplicated by
angular distance, and returned sorted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.ndimage import maximum_filter

from .errors import BetaDeltaZero, DimensionTooLarge
from .phasespace import _dim, phase_point_stack

DEFAULT_GRIDS = {3: 64, 5: 24, 7: 12}
GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True)
class PhaseVector:
    """Phases (theta_1 ... theta_{d-1}) of a maximally coherent state; theta_0 = 0."""

    dim: int
    thetas: tuple[float, ...]

    def __post_init__(self):
        d = _dim(self.dim)
        th = tuple(float(x) % (2.0 * math.pi) for x in self.thetas)
        if len(th) != d - 1:
            raise ValueError(f"need {d - 1} phases for d={d}, got {len(th)}")
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "thetas", th)

    def amplitudes(self) -> np.ndarray:
        d = self.dim
        return np.concatenate([[1.0], np.exp(1j * np.array(self.thetas))]) / math.sqrt(d)


@dataclass(frozen=True)
class SearchResult:
    """Best value, the set of attaining phase vectors, and search metadata."""

    best_value: float
    argmax: tuple[PhaseVector, ...]
    evaluations: int
    grid_resolution: int
    refine_sweeps: int

    def __post_init__(self):
        d = self.argmax[0].dim if self.argmax else 3
        bound = 0.5 * math.log(d) + 1e-9
        if self.best_value > bound:
            raise ValueError(f"best value {self.best_value} exceeds the purity bound {bound}")


class _CoherentObjective:
    """Mana of a maximally coherent state as a function of its phases."""

    def __init__(self, d: int):
        self.d = d
        stack = phase_point_stack(d).reshape(d * d, d, d)
        # B[(i,j), p] = A_p[j, i] so that W = rho_flat @ B
        self.kernel = np.ascontiguousarray(
            stack.transpose(2, 1, 0).reshape(d * d, d * d)
        )
        self.evaluations = 0

    def value(self, thetas: np.ndarray) -> float:
        d = self.d
        psi = np.concatenate([[1.0], np.exp(1j * np.asarray(thetas))]) / math.sqrt(d)
        rho_flat = np.outer(psi, psi.conj()).reshape(-1)
        w = rho_flat @ self.kernel / d
        self.evaluations += 1
        return float(np.log(np.abs(w).sum()))

    def batch(self, theta_block: np.ndarray) -> np.ndarray:
        """Values for a block of phase vectors, shape (N, d-1)."""
        d = self.d
        n = theta_block.shape[0]
        psis = np.empty((n, d), dtype=complex)
        psis[:, 0] = 1.0
        psis[:, 1:] = np.exp(1j * theta_block)
        psis /= math.sqrt(d)
        rho = (psis[:, :, None] * psis.conj()[:, None, :]).reshape(n, d * d)
        w = rho @ self.kernel / d
        self.evaluations += n
        return np.log(np.abs(w).sum(axis=1))


def _golden_max(f, lo: float, hi: float, tol: float = 1e-11) -> tuple[float, float]:
    """Golden-section maximization on [lo, hi]."""
    a, b = lo, hi
    c = b - GOLDEN * (b - a)
    d_ = a + GOLDEN * (b - a)
    fc, fd = f(c), f(d_)
    while abs(b - a) > tol:
        if fc > fd:
            b, d_, fd = d_, c, fc
            c = b - GOLDEN * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d_, fd
            d_ = a + GOLDEN * (b - a)
            fd = f(d_)
    x = 0.5 * (a + b)
    return x, f(x)


def _refine(obj: _CoherentObjective, start: np.ndarray, step: float, max_sweeps: int):
    x = np.array(start, dtype=float)
    best = obj.value(x)
    sweeps = 0
    for sweep in range(max_sweeps):
        improved = 0.0
        for i in range(x.size):
            def line(t, i=i):
                y = x.copy()
                y[i] = t
                return obj.value(y)

            xi, vi = _golden_max(line, x[i] - step, x[i] + step)
            if vi > best:
                improved += vi - best
                best = vi
                x[i] = xi
        sweeps = sweep + 1
        if improved < 1e-13:
            break
    return x % (2.0 * math.pi), best, sweeps


def _angular_distance(a, b) -> float:
    diff = np.abs(np.asarray(a) - np.asarray(b)) % (2.0 * math.pi)
    diff = np.minimum(diff, 2.0 * math.pi - diff)
    return float(diff.max())


def max_mana_coherent(dim, grid: int | None = None, refine_iters: int = 200) -> SearchResult:
    """Exhaustive-then-refine search for the largest coherent-state mana.

    Evaluates the full uniform grid, refines every local grid maximum by
    coordinate-wise golden-section ascent, keeps all refined optima within
    1e-6 of the best, and deduplicates by angular distance < 1e-3.
    """
    d = _dim(dim)
    if d > 7:
        raise DimensionTooLarge(f"grid search capped at d=7, got {d}")
    grid = DEFAULT_GRIDS[d] if grid is None else int(grid)
    if grid < 8:
        raise ValueError(f"grid must be >= 8, got {grid}")
    obj = _CoherentObjective(d)
    naxes = d - 1
    axis = 2.0 * math.pi * np.arange(grid) / grid

    values = np.empty((grid,) * naxes)
    mesh = np.stack(np.meshgrid(*([axis] * naxes), indexing="ij"), axis=-1).reshape(
        -1, naxes
    )
    chunk = 16384
    flat = np.empty(mesh.shape[0])
    for i in range(0, mesh.shape[0], chunk):
        flat[i : i + chunk] = obj.batch(mesh[i : i + chunk])
    values = flat.reshape((grid,) * naxes)

    local_max = values >= maximum_filter(values, size=3, mode="wrap")
    cand_idx = np.argwhere(local_max)
    cand_vals = values[local_max]
    order = np.argsort(cand_vals)[::-1]
    cand_idx = cand_idx[order][:128]

    step = 2.0 * math.pi / grid
    refined = []
    total_sweeps = 0
    for idx in cand_idx:
        start = axis[idx]
        x, v, sweeps = _refine(obj, start, step, refine_iters)
        total_sweeps = max(total_sweeps, sweeps)
        refined.append((v, tuple(x)))

    best = max(v for v, _ in refined)
    keep = [(v, x) for v, x in refined if best - v <= 1e-6]
    keep.sort(key=lambda t: t[1])
    unique: list[tuple[float, tuple[float, ...]]] = []
    for v, x in keep:
        if all(_angular_distance(x, u[1]) >= 1e-3 for u in unique):
            unique.append((v, x))
    argmax = tuple(PhaseVector(d, x) for _, x in unique)
    return SearchResult(best, argmax, obj.evaluations, grid, total_sweeps)


def mutual_mana_coherent_equals_mana(dim, theta: PhaseVector, spec) -> tuple[float, float]:
    """(mutual mana of the beamsplitter output, mana of the coherent input).

    The beamsplitter conserves total magic and, for beta*delta != 0 with a
    vacuum ancilla, leaves both output marginals maximally mixed, so the two
    numbers agree for every theta.
    """
    from .circuits import apply_beamsplitter
    from .measures import mana, mutual_mana
    from .states import DensityState, PureVector, named_state, tensor

    d = _dim(dim)
    if (spec.beta * spec.delta) % d == 0:
        raise BetaDeltaZero(f"beta*delta = 0 mod {d}")
    psi = PureVector(d, theta.amplitudes())
    rho_in = psi.density()
    vac = named_state("basis", [0], dim=d).density()
    out = apply_beamsplitter(spec, tensor(rho_in, vac))
    out_state = DensityState((d, d), out, validate=False)
    return mutual_mana(out_state), mana(rho_in)
