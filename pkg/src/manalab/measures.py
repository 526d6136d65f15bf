"""Scalar magic and correlation measures.

All logarithms are natural internally; MeasureReport records the base used
for display and the CLI converts on output.

    mana(rho)         = log sum_p |W(p)|             (log of total Wigner mass)
    sum_negativity    = (sum_p |W(p)| - 1) / 2
    purity bound      : mana(rho) <= (1/2) log(D tr rho^2), D = prod(dims)
    mutual mana       = mana(ab) - mana(a) - mana(b)
    L1 magic          = sum_p |tr(rho D_p)|          (characteristic 1-norm)
    mutual L1         = log L1(ab) - log L1(a) - log L1(b)
    SRE_alpha         = (1/(1-alpha)) [log sum_p xi_p^alpha - log sum_p xi_p]
                        - log D,   xi_p = |tr(rho D_p)|^2 / D
    mutual SRE_alpha  = SRE(ab) - SRE(a) - SRE(b)
    I(ab)             = S(a) + S(b) - S(ab)          (von Neumann mutual info)

The SRE normalization is the mixed-state variant that divides the squared
Pauli spectrum by its own total (sum_p xi_p = tr rho^2): it reduces to the
pure-state stabilizer Renyi entropy, is additive, Clifford invariant, and
zero on pure stabilizer states.  Note that the comparison-table closed
forms for "mutual" SRE treat the beamsplitter output's incoherent marginals
as magic-free, so they coincide with the GLOBAL sre_alpha of the output
state rather than with the mutual composition above; the two agree exactly
when the output marginals are maximally mixed.  The oracle layer documents
and reports this split.

nonlocal_mana_upper certifies upper bounds on the minimum of mana over
local-unitary orbits by seeded random-restart Nelder-Mead descent over
exp(i H_a) x exp(i H_b), with the identity and the marginal-diagonalizing
pair always included as candidates.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import logm
from scipy.optimize import minimize

from .errors import AlphaOne, NegativeEigenvalue, NotBipartite
from .phasespace import _kernel_transform, phase_point_stack, weyl_stack, wigner
from .states import DensityState, partial_trace

LOG_BASE_FACTORS = {"e": 1.0, "2": 1.0 / math.log(2.0), "10": 1.0 / math.log(10.0)}


@dataclass(frozen=True)
class LogBase:
    """Display base for logarithmic measures: one of 'e', '2', '10'."""

    name: str = "e"

    def __post_init__(self):
        if self.name not in LOG_BASE_FACTORS:
            raise ValueError(f"log base must be one of {sorted(LOG_BASE_FACTORS)}")

    @property
    def factor(self) -> float:
        return LOG_BASE_FACTORS[self.name]

    def convert(self, natural_value: float) -> float:
        return natural_value * self.factor


@dataclass(frozen=True)
class MeasureReport:
    """Named measure values for one state, all in one log base."""

    state_id: str
    base: LogBase
    values: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.values.get("mana", 0.0) < -1e-10:
            raise ValueError(f"mana invariant violated: {self.values['mana']}")
        if self.values.get("mutual_information", 0.0) < -1e-8:
            raise ValueError(
                f"mutual information invariant violated: {self.values['mutual_information']}"
            )


def _unpack(rho):
    if isinstance(rho, DensityState):
        return rho.matrix, rho.dims
    raise TypeError(f"expected DensityState, got {type(rho)!r}")


def _abs_wigner_sum(mat: np.ndarray, dims) -> float:
    stacks = [phase_point_stack(d).reshape(d * d, d, d) for d in dims]
    table = _kernel_transform(mat, tuple(dims), stacks) / np.prod(dims)
    return float(np.abs(table).sum())


def _char_abs(mat: np.ndarray, dims) -> np.ndarray:
    stacks = [weyl_stack(d).reshape(d * d, d, d) for d in dims]
    return np.abs(_kernel_transform(mat, tuple(dims), stacks))


def mana(rho: DensityState) -> float:
    """log of the total absolute Wigner mass; 0 on stabilizer states."""
    table = wigner(rho)  # carries the imaginary-residue check
    return math.log(table.abs_sum())


def sum_negativity(rho: DensityState) -> float:
    table = wigner(rho)
    return 0.5 * (table.abs_sum() - 1.0)


def purity_bound(rho: DensityState) -> float:
    """(1/2) log(D tr rho^2): an upper bound on mana."""
    mat, dims = _unpack(rho)
    purity = float(np.trace(mat @ mat).real)
    return 0.5 * math.log(np.prod(dims) * purity)


def _require_bipartite(rho: DensityState):
    if len(rho.dims) != 2:
        raise NotBipartite(f"state has {len(rho.dims)} subsystems, need 2")


def mutual_mana(rho_ab: DensityState) -> float:
    _require_bipartite(rho_ab)
    return (
        mana(rho_ab)
        - mana(partial_trace(rho_ab, 0))
        - mana(partial_trace(rho_ab, 1))
    )


def l1_magic(rho: DensityState) -> float:
    """Characteristic-function 1-norm; minimum 1 (maximally mixed), d for pure stabilizers."""
    mat, dims = _unpack(rho)
    return float(_char_abs(mat, dims).sum())


def mutual_l1(rho_ab: DensityState) -> float:
    _require_bipartite(rho_ab)
    return (
        math.log(l1_magic(rho_ab))
        - math.log(l1_magic(partial_trace(rho_ab, 0)))
        - math.log(l1_magic(partial_trace(rho_ab, 1)))
    )


def sre_alpha(rho: DensityState, alpha: float) -> float:
    """Stabilizer alpha-Renyi entropy over the d^(2n) displacement representatives.

    Phase prefactors drop out of |tr(rho P)|^2, so the sum runs over the
    D^2 operators D_p1 x ... x D_pn only.
    """
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if abs(alpha - 1.0) < 1e-12:
        raise AlphaOne("alpha = 1 is not admissible")
    mat, dims = _unpack(rho)
    total = float(np.prod(dims))
    xi = _char_abs(mat, dims) ** 2 / total
    s1 = float(xi.sum())  # equals tr rho^2
    s_alpha = float((xi**alpha).sum())
    return (math.log(s_alpha) - math.log(s1)) / (1.0 - alpha) - math.log(total)


def mutual_sre(rho_ab: DensityState, alpha: float) -> float:
    """SRE(ab) - SRE(a) - SRE(b); zero on product states by additivity.

    Coincides with the comparison-table closed forms only where the output
    marginals are maximally mixed; see the module docstring.
    """
    _require_bipartite(rho_ab)
    return (
        sre_alpha(rho_ab, alpha)
        - sre_alpha(partial_trace(rho_ab, 0), alpha)
        - sre_alpha(partial_trace(rho_ab, 1), alpha)
    )


def von_neumann_entropy(rho: DensityState) -> float:
    """-tr(rho log rho) with eigenvalues in [-1e-8, 0) clipped to zero."""
    mat, _ = _unpack(rho)
    eigs = np.linalg.eigvalsh(mat)
    lo = float(eigs.min())
    if lo < -1e-8:
        raise NegativeEigenvalue(f"eigenvalue {lo:.3e} below -1e-8")
    eigs = np.clip(eigs, 0.0, None)
    pos = eigs[eigs > 0.0]
    return float(-(pos * np.log(pos)).sum())


def mutual_information(rho_ab: DensityState) -> float:
    _require_bipartite(rho_ab)
    return (
        von_neumann_entropy(partial_trace(rho_ab, 0))
        + von_neumann_entropy(partial_trace(rho_ab, 1))
        - von_neumann_entropy(rho_ab)
    )


# --- nonlocal mana ----------------------------------------------------------


def hermitian_basis(n: int) -> np.ndarray:
    """Orthonormal (Hilbert-Schmidt) Hermitian basis of n x n matrices."""
    mats = [np.eye(n, dtype=complex) / math.sqrt(n)]
    for i in range(n):
        for j in range(i + 1, n):
            m = np.zeros((n, n), dtype=complex)
            m[i, j] = m[j, i] = 1.0 / math.sqrt(2.0)
            mats.append(m)
            m = np.zeros((n, n), dtype=complex)
            m[i, j] = -1j / math.sqrt(2.0)
            m[j, i] = 1j / math.sqrt(2.0)
            mats.append(m)
    for k in range(1, n):
        diag = np.zeros(n)
        diag[:k] = 1.0
        diag[k] = -k
        mats.append(np.diag(diag).astype(complex) / math.sqrt(k * (k + 1)))
    return np.stack(mats)


def _unitary_from_params(theta: np.ndarray, basis: np.ndarray) -> np.ndarray:
    h = np.tensordot(theta, basis, axes=1)
    w, v = np.linalg.eigh(h)
    return (v * np.exp(1j * w)) @ v.conj().T


def _params_from_unitary(u: np.ndarray, basis: np.ndarray) -> np.ndarray:
    h = logm(u) / 1j
    h = 0.5 * (h + h.conj().T)
    return np.real(np.einsum("kij,ji->k", basis, h))


def _split_dims(dims):
    n = len(dims)
    if n % 2 != 0:
        raise NotBipartite(f"cannot bipartition {n} subsystems evenly")
    half = n // 2
    da = int(np.prod(dims[:half]))
    db = int(np.prod(dims[half:]))
    return da, db


def nonlocal_mana_upper(
    rho_ab: DensityState,
    restarts: int = 32,
    seed: int = 42,
    maxfev: int = 600,
    exit_tol: float = 1e-12,
) -> float:
    """Certified upper bound on the local-unitary minimum of mana.

    Minimizes mana((Ua x Ub) rho (Ua x Ub)^dag) over Ua, Ub parameterized by
    Hermitian generators; the identity pair and the marginal-diagonalizing
    pair are always in the candidate set, so the result never exceeds
    mana(rho_ab).  Deterministic given the seed (restart seeds are spawned
    from it); restarts are independent and stop early once the running best
    drops below exit_tol (the objective is nonnegative up to roundoff).

    For states with 2k subsystems the bipartition is first half vs second
    half of dims.
    """
    if restarts < 1:
        raise ValueError("restarts must be >= 1")
    mat, dims = _unpack(rho_ab)
    da, db = _split_dims(dims)
    basis_a = hermitian_basis(da)
    basis_b = hermitian_basis(db)
    na = da * da

    def conjugated(theta):
        ua = _unitary_from_params(theta[:na], basis_a)
        ub = _unitary_from_params(theta[na:], basis_b)
        u = np.kron(ua, ub)
        return u @ mat @ u.conj().T

    def objective(theta):
        return math.log(_abs_wigner_sum(conjugated(theta), dims))

    nparams = na + db * db
    best = math.log(_abs_wigner_sum(mat, dims))  # identity candidate, exact

    # marginal-diagonalizing candidate: any product state becomes a mixture
    # of computational-basis products, which carries no negativity
    ra = np.einsum(
        mat.reshape(da, db, da, db), [0, 2, 1, 2], [0, 1]
    )
    rb = np.einsum(mat.reshape(da, db, da, db), [2, 0, 2, 1], [0, 1])
    _, va = np.linalg.eigh(ra)
    _, vb = np.linalg.eigh(rb)
    theta_diag = np.concatenate(
        [_params_from_unitary(va.conj().T, basis_a), _params_from_unitary(vb.conj().T, basis_b)]
    )
    starts = [theta_diag]
    seeds = np.random.SeedSequence(seed).spawn(restarts)
    for s in seeds:
        rng = np.random.default_rng(s)
        starts.append(rng.normal(scale=math.pi / 2.0, size=nparams))

    for x0 in starts:
        if best <= exit_tol:
            break
        val0 = objective(x0)
        best = min(best, val0)
        if best <= exit_tol:
            break
        res = minimize(
            objective,
            x0,
            method="Nelder-Mead",
            options={"xatol": 1e-7, "fatol": 1e-9, "maxfev": maxfev, "adaptive": True},
        )
        best = min(best, float(res.fun))
    return best


# --- reports ----------------------------------------------------------------

SINGLE_MEASURES = ("mana", "sum_negativity", "purity_bound", "l1", "log_l1", "sre2", "entropy")
BIPARTITE_MEASURES = ("mutual_mana", "mutual_information", "mutual_l1", "mutual_sre2")


def measure_report(rho: DensityState, names, base: LogBase | str = "e", state_id: str = "state") -> MeasureReport:
    """Evaluate the requested measures; logarithmic ones converted to `base`."""
    base = base if isinstance(base, LogBase) else LogBase(str(base))
    values: dict[str, float] = {}
    for name in names:
        if name == "mana":
            values[name] = base.convert(mana(rho))
        elif name == "sum_negativity":
            values[name] = sum_negativity(rho)
        elif name == "purity_bound":
            values[name] = base.convert(purity_bound(rho))
        elif name == "l1":
            values[name] = l1_magic(rho)
        elif name == "log_l1":
            values[name] = base.convert(math.log(l1_magic(rho)))
        elif name == "sre2":
            values[name] = base.convert(sre_alpha(rho, 2.0))
        elif name == "entropy":
            values[name] = base.convert(von_neumann_entropy(rho))
        elif name == "mutual_mana":
            values[name] = base.convert(mutual_mana(rho))
        elif name == "mutual_information":
            values[name] = base.convert(mutual_information(rho))
        elif name == "mutual_l1":
            values[name] = base.convert(mutual_l1(rho))
        elif name == "mutual_sre2":
            values[name] = base.convert(mutual_sre(rho, 2.0))
        else:
            raise ValueError(f"unknown measure {name!r}")
    return MeasureReport(state_id, base, values)
