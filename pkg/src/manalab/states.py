"""State constructors, density-operator algebra, and stabilizer enumeration.

The named qutrit states studied throughout the package:

    strange   |S> = (|1> - |2>)/sqrt(2)
    norrell   |N> = (-|0> + 2|1> - |2>)/sqrt(6)
    t         |T> = (e^{i 2pi/9}|0> + |1> + e^{-i 2pi/9}|2>)/sqrt(3)
    h         |H> = ((1+sqrt3)|0> + |1> + e^{-i 2pi/9}|2>)/sqrt(2(3+sqrt3))
    h_fourier       ((1+sqrt3)|0> + |1> + |2>)/sqrt(2(3+sqrt3))

h and h_fourier share their amplitude magnitudes but differ in one phase:
h_fourier is the +1 eigenstate of the Fourier gate, and it is the variant
whose noisy-mana curve the comparison table and its thresholds describe; h
carries a relative ninth-root phase on |2> and is the variant the long
closed-form L1/Renyi expressions correspond to.  See the README.

Pure stabilizer states for prime d are enumerated as the d+1 mutually
unbiased eigenbases of the Weyl operators: the computational basis plus, for
each r in Z_d, the basis v_n = omega^(inv2*r*n^2 + b*n)/sqrt(d) with
inv2 = (d+1)/2, giving d(d+1) states in total.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    BadParamCount,
    DimensionTooLarge,
    NegativeEigenvalue,
    NotBipartite,
    ParamOutOfRange,
    UnknownState,
)
from .phasespace import PrimeDim, _dim, omega_power

# Validation tolerances: hermiticity/trace soft at 1e-10, eigenvalue hard
# floor at -1e-8 (roundoff from products of unitaries is clipped above it).
HERM_TOL = 1e-10
EIG_FLOOR = -1e-8


@dataclass(frozen=True)
class PureVector:
    """A normalized state vector."""

    dim: int
    amplitudes: np.ndarray

    def __post_init__(self):
        amps = np.asarray(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (self.dim,):
            raise ValueError(f"expected {self.dim} amplitudes, got {amps.shape}")
        norm = float(np.linalg.norm(amps))
        if abs(norm - 1.0) > HERM_TOL:
            raise ValueError(f"vector norm {norm} deviates from 1 beyond {HERM_TOL}")
        amps.setflags(write=False)
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "dim", int(self.dim))

    def density(self, dims=None) -> "DensityState":
        dims = (self.dim,) if dims is None else tuple(dims)
        return DensityState(dims, np.outer(self.amplitudes, self.amplitudes.conj()))


@dataclass(frozen=True)
class DensityState:
    """Positive unit-trace operator tagged with its subsystem dimensions."""

    dims: tuple[int, ...]
    matrix: np.ndarray
    validate: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        mat = np.asarray(self.matrix, dtype=complex)
        total = int(np.prod(dims))
        if mat.shape != (total, total):
            raise ValueError(f"matrix shape {mat.shape} != ({total},{total})")
        if self.validate:
            herm = float(np.abs(mat - mat.conj().T).max())
            if herm > HERM_TOL:
                raise ValueError(f"matrix is not Hermitian (deviation {herm:.3e})")
            tr = complex(np.trace(mat))
            if abs(tr - 1.0) > HERM_TOL:
                raise ValueError(f"trace is {tr}, not 1")
            lo = float(np.linalg.eigvalsh(mat).min())
            if lo < EIG_FLOOR:
                raise NegativeEigenvalue(f"eigenvalue {lo:.3e} below {EIG_FLOOR}")
        mat.setflags(write=False)
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "matrix", mat)

    @property
    def total_dim(self) -> int:
        return int(np.prod(self.dims))

    def purity(self) -> float:
        return float(np.trace(self.matrix @ self.matrix).real)


def maximally_mixed(dim, subsystems: int = 1) -> DensityState:
    d = _dim(dim)
    total = d**subsystems
    return DensityState((d,) * subsystems, np.eye(total, dtype=complex) / total)


_SQRT3 = math.sqrt(3.0)


def named_state(name: str, params=(), dim: int = 3) -> PureVector:
    """Build one of the named pure states; params are real numbers."""
    params = tuple(float(x) for x in params)
    name = str(name).lower()

    def need(n):
        if len(params) != n:
            raise BadParamCount(f"{name} takes {n} parameter(s), got {len(params)}")

    if name == "strange":
        need(0)
        amps = np.array([0.0, 1.0, -1.0], dtype=complex) / math.sqrt(2.0)
        return PureVector(3, amps)
    if name == "norrell":
        need(0)
        amps = np.array([-1.0, 2.0, -1.0], dtype=complex) / math.sqrt(6.0)
        return PureVector(3, amps)
    if name == "t":
        need(0)
        amps = np.array(
            [np.exp(2j * np.pi / 9), 1.0, np.exp(-2j * np.pi / 9)], dtype=complex
        ) / math.sqrt(3.0)
        return PureVector(3, amps)
    if name == "h":
        need(0)
        amps = np.array(
            [1.0 + _SQRT3, 1.0, np.exp(-2j * np.pi / 9)], dtype=complex
        ) / math.sqrt(2.0 * (3.0 + _SQRT3))
        return PureVector(3, amps)
    if name == "h_fourier":
        need(0)
        amps = np.array([1.0 + _SQRT3, 1.0, 1.0], dtype=complex) / math.sqrt(
            2.0 * (3.0 + _SQRT3)
        )
        return PureVector(3, amps)
    if name == "phi_lambda":
        need(1)
        lam = params[0]
        if not (0.0 <= lam <= 1.0 / math.sqrt(2.0) + 1e-12):
            raise ParamOutOfRange(f"lambda={lam} outside [0, 1/sqrt(2)]")
        rest = max(1.0 - 2.0 * lam * lam, 0.0)
        amps = np.array([lam, lam, math.sqrt(rest)], dtype=complex)
        return PureVector(3, amps)
    if name == "psi_theta":
        need(1)
        th = params[0]
        amps = np.array([math.cos(th), math.sin(th), 0.0], dtype=complex)
        return PureVector(3, amps)
    if name == "max_coherent":
        d = len(params) + 1
        try:
            PrimeDim(d)
        except ValueError as exc:
            raise ParamOutOfRange(f"{len(params)} phases do not fit an odd prime dimension") from exc
        amps = np.concatenate([[1.0], np.exp(1j * np.asarray(params))]) / math.sqrt(d)
        return PureVector(d, amps)
    if name == "basis":
        need(1)
        j = int(params[0])
        d = _dim(dim)
        if not (0 <= j < d):
            raise ParamOutOfRange(f"basis index {j} outside [0, {d})")
        amps = np.zeros(d, dtype=complex)
        amps[j] = 1.0
        return PureVector(d, amps)
    raise UnknownState(f"unknown state name {name!r}")


def noisy_mix(psi: PureVector, p: float) -> DensityState:
    """Depolarized pure state p|psi><psi| + (1-p) 1/d."""
    if not (0.0 <= p <= 1.0):
        raise ParamOutOfRange(f"p={p} outside [0, 1]")
    d = psi.dim
    mat = p * np.outer(psi.amplitudes, psi.amplitudes.conj()) + (1.0 - p) * np.eye(d) / d
    return DensityState((d,), mat)


def tensor(a: DensityState, b: DensityState) -> DensityState:
    """Kronecker product; subsystem a indexes the slower-varying axis."""
    return DensityState(a.dims + b.dims, np.kron(a.matrix, b.matrix), validate=False)


def partial_trace(rho: DensityState, keep) -> DensityState:
    """Reduce a bipartite state to one subsystem (keep 0/'a' or 1/'b')."""
    if len(rho.dims) != 2:
        raise NotBipartite(f"state has {len(rho.dims)} subsystems, need 2")
    keep = {"a": 0, "b": 1, 0: 0, 1: 1}.get(keep)
    if keep is None:
        raise ValueError("keep must be 'a'/'b'/0/1")
    da, db = rho.dims
    r4 = rho.matrix.reshape(da, db, da, db)
    if keep == 0:
        red = np.einsum("ajbj->ab", r4)
        return DensityState((da,), red)
    red = np.einsum("jajb->ab", r4)
    return DensityState((db,), red)


def enumerate_stabilizer_pure(dim) -> list[PureVector]:
    """All d(d+1) pure stabilizer states for odd prime d <= 7.

    Computational basis plus the d mutually unbiased Weyl eigenbases.
    """
    d = _dim(dim)
    if d > 7:
        raise DimensionTooLarge(f"stabilizer enumeration capped at d=7, got {d}")
    states = []
    for j in range(d):
        amps = np.zeros(d, dtype=complex)
        amps[j] = 1.0
        states.append(PureVector(d, amps))
    inv2 = (d + 1) // 2  # inverse of 2 mod d
    for r in range(d):
        for b in range(d):
            amps = np.array(
                [omega_power(d, inv2 * r * n * n + b * n) for n in range(d)]
            ) / math.sqrt(d)
            states.append(PureVector(d, amps))
    return states


def random_pure(d: int, rng: np.random.Generator) -> PureVector:
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return PureVector(d, v / np.linalg.norm(v))


def random_density(d: int, rng: np.random.Generator, rank: int | None = None) -> DensityState:
    """Ginibre-induced random mixed state of full (or given) rank."""
    rank = d if rank is None else rank
    g = rng.standard_normal((d, rank)) + 1j * rng.standard_normal((d, rank))
    mat = g @ g.conj().T
    return DensityState((d,), mat / np.trace(mat).real)


# --- JSON state format -----------------------------------------------------
#
# {"dims": [d, ...], "kind": "pure"|"mixed", "data": ...} where data holds
# [re, im] pairs: a vector of pairs for "pure", row-major rows of pairs for
# "mixed".


def _pair(z: complex):
    return [float(z.real), float(z.imag)]


def state_to_json(state) -> str:
    if isinstance(state, PureVector):
        return json.dumps(
            {
                "dims": [state.dim],
                "kind": "pure",
                "data": [_pair(z) for z in state.amplitudes],
            }
        )
    if isinstance(state, DensityState):
        return json.dumps(
            {
                "dims": list(state.dims),
                "kind": "mixed",
                "data": [[_pair(z) for z in row] for row in state.matrix],
            }
        )
    raise TypeError(f"cannot serialize {type(state)!r}")


def state_from_json(text: str) -> DensityState:
    """Parse the JSON state format; pure vectors are returned as projectors."""
    doc = json.loads(text)
    dims = tuple(int(d) for d in doc["dims"])
    kind = doc["kind"]
    if kind == "pure":
        amps = np.array([complex(re, im) for re, im in doc["data"]])
        vec = PureVector(int(np.prod(dims)), amps)
        return vec.density(dims)
    if kind == "mixed":
        mat = np.array([[complex(re, im) for re, im in row] for row in doc["data"]])
        return DensityState(dims, mat)
    raise ValueError(f"unknown state kind {kind!r}")
