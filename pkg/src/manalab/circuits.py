"""Clifford gates, generalized discrete beamsplitters, and their covariance.

A 2x2 integer matrix G = ((alpha, beta), (gamma, delta)) with det G != 0
mod d induces the permutation unitary

    B_G |j1, j2> = |g (delta j1 - gamma j2),  g (alpha j2 - beta j1)>,

g = (det G)^(-1) mod d.  B_G is Clifford: it maps displacement-operator
pairs to displacement-operator pairs,

    B_G (D(k1,l1) x D(k2,l2)) B_G^dag
        = D(g(delta k1 - gamma k2), alpha l1 + beta l2)
          x D(g(alpha k2 - beta k1), delta l2 + gamma l1),

and the same index map transports phase-space point operators.  Pulling a
single-side point operator through B_G expands it in displacement pairs:

    B_G^dag (A(k,l) x 1) B_G
        = (1/d) sum_{m,n} w^(lm-kn) D(alpha m, g delta n) x D(beta m, -g gamma n)
    B_G^dag (1 x A(k,l)) B_G
        = (1/d) sum_{m,n} w^(lm-kn) D(gamma m, -g beta n) x D(delta m, g alpha n)

(the side-b series follows from S B_G = B_G' with G' = ((gamma, delta),
(alpha, beta)); both series are verified entrywise against dense
conjugation in the test suite).  With a vacuum ancilla and beta*delta != 0,
expectations of the pulled-back operators collapse onto single diagonal
entries of the input state:

    tr((rho x |0><0|) B_G^dag (A(k,l) x 1) B_G) = rho[j0, j0],
        j0 =  k delta^(-1) det G  (mod d)
    tr((rho x |0><0|) B_G^dag (1 x A(k,l)) B_G) = rho[j1, j1],
        j1 = -k beta^(-1)  det G  (mod d).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BetaDeltaZero, SingularG, UnknownGate
from .phasespace import PhasePoint, _dim, _point, omega_power, tau_power, weyl_stack


@dataclass(frozen=True)
class BeamsplitterSpec:
    """Beamsplitter parameters: dimension, 2x2 matrix mod d, inverse determinant."""

    dim: int
    g_matrix: tuple[tuple[int, int], tuple[int, int]]

    def __post_init__(self):
        d = _dim(self.dim)
        rows = tuple(tuple(int(x) % d for x in row) for row in self.g_matrix)
        if len(rows) != 2 or any(len(r) != 2 for r in rows):
            raise ValueError("g_matrix must be 2x2")
        det = (rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]) % d
        if det == 0:
            raise SingularG(f"det G = 0 mod {d} for G={rows}")
        object.__setattr__(self, "dim", d)
        object.__setattr__(self, "g_matrix", rows)

    @property
    def alpha(self) -> int:
        return self.g_matrix[0][0]

    @property
    def beta(self) -> int:
        return self.g_matrix[0][1]

    @property
    def gamma(self) -> int:
        return self.g_matrix[1][0]

    @property
    def delta(self) -> int:
        return self.g_matrix[1][1]

    @property
    def det(self) -> int:
        return (self.alpha * self.delta - self.beta * self.gamma) % self.dim

    @property
    def g(self) -> int:
        return mod_inverse(self.det, self.dim)


def mod_inverse(a: int, d: int) -> int:
    """Inverse mod prime d via Fermat exponentiation a^(d-2)."""
    a %= d
    if a == 0:
        raise ZeroDivisionError(f"{a} has no inverse mod {d}")
    return pow(a, d - 2, d)


# The four invertible qutrit parameter matrices singled out for the
# comparison study, plus the generic swap/csum forms.
QUTRIT_G = {
    "g1": ((1, 2), (0, 1)),  # controlled-SUM, control on subsystem a
    "g2": ((1, 0), (2, 1)),  # controlled-SUM, control on subsystem b
    "g3": ((0, 1), (1, 2)),
    "g4": ((2, 1), (1, 0)),
}


def swap_spec(dim) -> BeamsplitterSpec:
    return BeamsplitterSpec(dim, ((0, 1), (1, 0)))


def csum_spec(dim) -> BeamsplitterSpec:
    d = _dim(dim)
    return BeamsplitterSpec(d, ((1, d - 1), (0, 1)))


def qutrit_specs() -> dict[str, BeamsplitterSpec]:
    return {name: BeamsplitterSpec(3, g) for name, g in QUTRIT_G.items()}


def beamsplitter(spec: BeamsplitterSpec) -> np.ndarray:
    """Dense d^2 x d^2 permutation matrix for B_G."""
    d = spec.dim
    a, b, c, dl, g = spec.alpha, spec.beta, spec.gamma, spec.delta, spec.g
    mat = np.zeros((d * d, d * d), dtype=complex)
    for j1 in range(d):
        for j2 in range(d):
            r1 = (g * (dl * j1 - c * j2)) % d
            r2 = (g * (a * j2 - b * j1)) % d
            mat[r1 * d + r2, j1 * d + j2] = 1.0
    return mat


def clifford_gate(dim, name: str) -> np.ndarray:
    """One of the generating gates: z, phase, fourier (d x d), csum, swap (d^2 x d^2)."""
    d = _dim(dim)
    name = str(name).lower()
    if name == "z":
        return np.diag([omega_power(d, j) for j in range(d)])
    if name == "phase":
        return np.diag([tau_power(d, j * j) for j in range(d)])
    if name == "fourier":
        return np.array(
            [[omega_power(d, j * k) for j in range(d)] for k in range(d)]
        ) / np.sqrt(d)
    if name == "csum":
        return beamsplitter(csum_spec(d))
    if name == "swap":
        return beamsplitter(swap_spec(d))
    raise UnknownGate(f"unknown gate {name!r}")


def conjugate_weyl(spec: BeamsplitterSpec, p1, p2) -> tuple[PhasePoint, PhasePoint]:
    """Index map of B_G (D_p1 x D_p2) B_G^dag; the phase is exactly 1."""
    d = spec.dim
    k1, l1 = _point(p1, d)
    k2, l2 = _point(p2, d)
    a, b, c, dl, g = spec.alpha, spec.beta, spec.gamma, spec.delta, spec.g
    q1 = PhasePoint((g * (dl * k1 - c * k2)) % d, (a * l1 + b * l2) % d)
    q2 = PhasePoint((g * (a * k2 - b * k1)) % d, (dl * l2 + c * l1) % d)
    return q1, q2


def heisenberg_pullback(spec: BeamsplitterSpec, side: str, pt) -> np.ndarray:
    """B_G^dag (A(k,l) x 1) B_G (side 'a') or B_G^dag (1 x A(k,l)) B_G (side 'b').

    Built from the displacement-pair series; equals the dense conjugation to
    machine precision.
    """
    d = spec.dim
    k, l = _point(pt, d)
    a, b, c, dl, g = spec.alpha, spec.beta, spec.gamma, spec.delta, spec.g
    ds = weyl_stack(d)
    out = np.zeros((d * d, d * d), dtype=complex)
    for m in range(d):
        for n in range(d):
            w = omega_power(d, l * m - k * n)
            if side == "a":
                left = ds[(a * m) % d, (g * dl * n) % d]
                right = ds[(b * m) % d, (-g * c * n) % d]
            elif side == "b":
                left = ds[(c * m) % d, (-g * b * n) % d]
                right = ds[(dl * m) % d, (g * a * n) % d]
            else:
                raise ValueError("side must be 'a' or 'b'")
            out += w * np.kron(left, right)
    return out / d


def prop3_expectation(rho, spec: BeamsplitterSpec, side: str, pt) -> float:
    """tr((rho x |0><0|) B_G^dag (A x 1 or 1 x A) B_G) for beta*delta != 0.

    Computed as the dense trace; equals the diagonal entry rho[j0,j0]
    (side 'a') or rho[j1,j1] (side 'b') with the indices in the module
    docstring.
    """
    d = spec.dim
    if (spec.beta * spec.delta) % d == 0:
        raise BetaDeltaZero(f"beta*delta = {spec.beta}*{spec.delta} = 0 mod {d}")
    mat = np.asarray(rho.matrix if hasattr(rho, "matrix") else rho, dtype=complex)
    if mat.shape != (d, d):
        raise ValueError(f"need a single {d}-dim state, got {mat.shape}")
    vac = np.zeros((d, d), dtype=complex)
    vac[0, 0] = 1.0
    big = np.kron(mat, vac)
    op = heisenberg_pullback(spec, side, pt)
    return float(np.trace(big @ op).real)


def prop3_index(spec: BeamsplitterSpec, side: str, k: int) -> int:
    """Predicted diagonal index j0/j1 for the vacuum-ancilla expectation."""
    d = spec.dim
    if side == "a":
        return (k * mod_inverse(spec.delta, d) * spec.det) % d
    if side == "b":
        return (-k * mod_inverse(spec.beta, d) * spec.det) % d
    raise ValueError("side must be 'a' or 'b'")


def apply_beamsplitter(spec: BeamsplitterSpec, rho_in) -> "np.ndarray":
    """Conjugate a two-qudit density matrix by B_G."""
    mat = np.asarray(rho_in.matrix if hasattr(rho_in, "matrix") else rho_in, dtype=complex)
    bmat = beamsplitter(spec)
    return bmat @ mat @ bmat.conj().T
