"""Heisenberg-Weyl operators and discrete Wigner transforms for odd prime d.

The qudit shift and clock operators X, Z (X|j> = |j+1 mod d>, Z|j> = w^j|j>,
w = exp(2*pi*i/d)) generate the displacement operators

    D(k,l) = tau^(k*l) X^k Z^l,        tau = -exp(i*pi/d),

which obey D(k,l) D(s,t) = tau^(l*s - k*t) D(k+s, l+t).  The phase-space
point operators

    A(0,0) = (1/d) sum_{k,l} D(k,l),   A(k,l) = D(k,l) A(0,0) D(k,l)^dag
           = (1/d) sum_{m,n} w^(l*m - k*n) D(m,n)

form a Hermitian, trace-one, orthogonal (tr A_p A_q = d delta_pq), complete
basis, and the discrete Wigner function of a state rho is

    W(k,l) = tr(rho A(k,l)) / d,

extended to multi-qudit systems with tensor products of point operators and
the prefactor 1/(d_1 ... d_n).

All phases are built from exact integer exponents reduced mod 2d and
exponentiated once, so operator identities hold to machine epsilon.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

import numpy as np

from .errors import ImaginaryResidue

# Hermiticity / realness tolerances (see module design notes): soft check at
# 1e-10, hard error at 1e-8.
REAL_CHECK_TOL = 1e-10
REAL_ERROR_TOL = 1e-8


def is_odd_prime(n: int) -> bool:
    if n < 3 or n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimeDim:
    """An odd prime local dimension d >= 3."""

    d: int

    def __post_init__(self):
        if not isinstance(self.d, (int, np.integer)) or not is_odd_prime(int(self.d)):
            raise ValueError(f"dimension must be an odd prime >= 3, got {self.d!r}")
        object.__setattr__(self, "d", int(self.d))

    @property
    def omega(self) -> complex:
        return omega_power(self.d, 1)

    @property
    def tau(self) -> complex:
        return tau_power(self.d, 1)


@dataclass(frozen=True)
class PhasePoint:
    """A discrete phase-space point (k, l) with residues mod d."""

    k: int
    l: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError(f"phase point indices must be nonnegative, got {self}")


def _dim(dim) -> int:
    return dim.d if isinstance(dim, PrimeDim) else PrimeDim(dim).d


def _point(pt, d: int) -> tuple[int, int]:
    k, l = (pt.k, pt.l) if isinstance(pt, PhasePoint) else (int(pt[0]), int(pt[1]))
    if not (0 <= k < d and 0 <= l < d):
        raise ValueError(f"phase point {(k, l)} out of range for d={d}")
    return k, l


def tau_power(d: int, exponent: int) -> complex:
    """tau^exponent with tau = -exp(i*pi/d); exact in the exponent mod 2d."""
    m = (int(exponent) * (d + 1)) % (2 * d)
    return complex(np.exp(1j * np.pi * m / d))


def omega_power(d: int, exponent: int) -> complex:
    """omega^exponent with omega = exp(2*pi*i/d) = tau^2."""
    return tau_power(d, 2 * int(exponent))


def weyl(dim, pt) -> np.ndarray:
    """Displacement operator D(k,l) as a dense d x d unitary."""
    d = _dim(dim)
    k, l = _point(pt, d)
    return weyl_stack(d)[k, l].copy()


# Per-dimension operator caches.  dict.setdefault makes first-writer-wins
# initialization safe under concurrent first use.
_WEYL_CACHE: dict[int, np.ndarray] = {}
_POINT_CACHE: dict[int, np.ndarray] = {}
_CACHE_LOCK = threading.Lock()


def weyl_stack(d: int) -> np.ndarray:
    """All d^2 displacement operators as an array of shape (d, d, d, d).

    Entry [k, l] is D(k,l); D(k,l)[(j+k) mod d, j] = tau^(k*l + 2*l*j).
    """
    d = _dim(d)
    stack = _WEYL_CACHE.get(d)
    if stack is None:
        fresh = np.zeros((d, d, d, d), dtype=complex)
        for k in range(d):
            for l in range(d):
                for j in range(d):
                    fresh[k, l, (j + k) % d, j] = tau_power(d, k * l + 2 * l * j)
        fresh.setflags(write=False)
        with _CACHE_LOCK:
            stack = _WEYL_CACHE.setdefault(d, fresh)
    return stack


def phase_point_stack(d: int) -> np.ndarray:
    """All d^2 phase-space point operators, shape (d, d, d, d), entry [k, l]."""
    d = _dim(d)
    stack = _POINT_CACHE.get(d)
    if stack is None:
        ds = weyl_stack(d)
        phases = np.empty((d, d, d, d), dtype=complex)
        for k in range(d):
            for l in range(d):
                for m in range(d):
                    for n in range(d):
                        phases[k, l, m, n] = omega_power(d, l * m - k * n)
        fresh = np.einsum("klmn,mnij->klij", phases, ds) / d
        fresh.setflags(write=False)
        with _CACHE_LOCK:
            stack = _POINT_CACHE.setdefault(d, fresh)
    return stack


def phase_point_operator(dim, pt) -> np.ndarray:
    """Phase-space point operator A(k,l); Hermitian with unit trace."""
    d = _dim(dim)
    k, l = _point(pt, d)
    return phase_point_stack(d)[k, l].copy()


@dataclass(frozen=True)
class WignerTable:
    """Real quasi-probability table, one (k, l) index pair per subsystem.

    values has shape (d1, d1) for a single system and (d1, d1, d2, d2, ...)
    in general, indexed [k1, l1, k2, l2, ...]; the entries sum to 1.
    """

    dims: tuple[int, ...]
    values: np.ndarray

    def __post_init__(self):
        dims = tuple(int(d) for d in self.dims)
        object.__setattr__(self, "dims", dims)
        vals = np.asarray(self.values, dtype=float)
        expected = tuple(x for d in dims for x in (d, d))
        if vals.shape != expected:
            raise ValueError(f"values shape {vals.shape} != {expected} for dims {dims}")
        total = vals.sum()
        if abs(total - 1.0) > 1e-8:
            raise ValueError(f"Wigner table sums to {total}, not 1")
        object.__setattr__(self, "values", vals)

    def abs_sum(self) -> float:
        return float(np.abs(self.values).sum())


def _unpack_state(rho, dims):
    if dims is None:
        dims = tuple(int(x) for x in rho.dims)
        mat = np.asarray(rho.matrix, dtype=complex)
    else:
        dims = tuple(int(x) for x in dims)
        mat = np.asarray(rho, dtype=complex)
    total = int(np.prod(dims))
    if mat.shape != (total, total):
        raise ValueError(f"matrix shape {mat.shape} incompatible with dims {dims}")
    return mat, dims


def _kernel_transform(mat: np.ndarray, dims: tuple[int, ...], stacks) -> np.ndarray:
    """Contract rho against one operator stack per subsystem.

    stacks[i] has shape (d_i^2, d_i, d_i) with entry [p] an operator O_p; the
    result has one length-d_i^2 axis per subsystem holding tr(rho O_p1 x O_p2 ...).
    """
    n = len(dims)
    t = mat.reshape(*(dims + dims))
    # interleave to (r1, c1, r2, c2, ...)
    t = t.transpose([x for i in range(n) for x in (i, n + i)])
    for stack in stacks:
        # t[r, c, rest...] with O[p, r', c']: tr picks O[c, r]
        t = np.tensordot(t, stack, axes=([0, 1], [2, 1]))
    return t


def wigner(rho, dims=None) -> WignerTable:
    """Discrete Wigner function of a density state.

    Accepts a DensityState-like object (with .matrix and .dims) or a raw
    matrix plus explicit dims.  Raises ImaginaryResidue if any tr(rho A)
    carries imaginary weight above 1e-8 (non-Hermitian input); residues
    below that are checked against 1e-10 and discarded.
    """
    mat, dims = _unpack_state(rho, dims)
    stacks = [phase_point_stack(d).reshape(d * d, d, d) for d in dims]
    table = _kernel_transform(mat, dims, stacks) / np.prod(dims)
    worst = float(np.abs(table.imag).max())
    if worst > REAL_ERROR_TOL:
        raise ImaginaryResidue(f"max |Im tr(rho A)| = {worst:.3e} exceeds {REAL_ERROR_TOL}")
    shape = tuple(x for d in dims for x in (d, d))
    return WignerTable(dims, table.real.reshape(shape))


def reconstruct(table: WignerTable):
    """Rebuild the density state rho = sum_p W(p) A_p1 x A_p2 x ... ."""
    from .states import DensityState  # local import to avoid a module cycle

    dims = table.dims
    n = len(dims)
    flat = table.values.reshape([d * d for d in dims])
    stacks = [phase_point_stack(d).reshape(d * d, d, d) for d in dims]
    total = int(np.prod(dims))
    mat = np.zeros((total, total), dtype=complex)
    for idx in np.ndindex(*flat.shape):
        op = stacks[0][idx[0]]
        for i in range(1, n):
            op = np.kron(op, stacks[i][idx[i]])
        mat += flat[idx] * op
    return DensityState(dims, mat)


def char_function(rho, dims=None) -> np.ndarray:
    """Weyl characteristic function tr(rho D_p1 x D_p2 x ...).

    Returns a complex array with one length-d_i^2 axis per subsystem; entry
    p = k*d + l corresponds to D(k,l).
    """
    mat, dims = _unpack_state(rho, dims)
    stacks = [weyl_stack(d).reshape(d * d, d, d) for d in dims]
    return _kernel_transform(mat, dims, stacks)
