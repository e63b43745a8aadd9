"""Conditional Hamiltonian, decoherence-free subspace, and effective three-level model.

The no-jump evolution of two driven four-level atoms in a lossy cavity is
generated by (hbar = 1, rates in units of the coupling g)::

    H = g * sum_i (|2>_i<1| b + h.c.)
        + 1/2 * (W1 |sigma>_1<2| + W1' |sigma>_2<2| + W2 |1>_1<2| + W2' |1>_2<2| + h.c.)
        - i*(kappa/2) * b^dag b
        + ((delta - i*gamma)/2) * sum_i |2>_i<2|

where b is the cavity annihilation operator, kappa the cavity decay rate, gamma
the excited-state emission rate, and delta the laser detuning from level |2>.

States annihilated by the collective coupling to the cavity form a
decoherence-free subspace; inside it the drive reduces to a three-level model
on (|A>, |11>, |alpha>) whose zero-energy dark state carries the gate protocols.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy.linalg import null_space

from .hilbert import SIGMA, StateSpace, a_state, alpha_state, basis_state

__all__ = [
    "SystemParams",
    "LaserAmplitudes",
    "EffectiveModel",
    "ProjectedModel",
    "ValidityReport",
    "conditional_hamiltonian",
    "laser_hamiltonian",
    "dfs_projector",
    "effective_hamiltonian",
    "analytic_spectrum",
    "tuned_amplitudes",
    "effective_couplings",
    "effective_from_projection",
    "drive_blocks",
    "drive_coefficients",
    "validity_check",
]

SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class SystemParams:
    """Physical rates of the atom-cavity system, in units of g.

    g is kept as an explicit field (g = 0 decouples the cavity for diagnostic
    runs); kappa is the cavity decay rate, gamma the spontaneous emission rate
    of level |2>, delta the laser detuning, n_max the Fock-space cutoff.
    """

    kappa: float = 0.0
    gamma: float = 0.0
    delta: float = 0.0
    g: float = 1.0
    n_max: int = 2

    def __post_init__(self) -> None:
        if self.g < 0:
            raise ValueError(f"coupling g must be >= 0, got {self.g}")
        if self.kappa < 0:
            raise ValueError(f"cavity decay kappa must be >= 0, got {self.kappa}")
        if self.gamma < 0:
            raise ValueError(f"emission rate gamma must be >= 0, got {self.gamma}")
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")

    @property
    def space(self) -> StateSpace:
        return StateSpace(self.n_max)

    @property
    def lossless(self) -> bool:
        return self.kappa == 0.0 and self.gamma == 0.0


@dataclass(frozen=True)
class LaserAmplitudes:
    """Physical Rabi amplitudes of the four driving lasers.

    omega1 / omega1p drive sigma<->2 on atoms 1 / 2; omega2 / omega2p drive
    1<->2 on atoms 1 / 2.  Each amplitude W enters the Hamiltonian as
    (W/2)|g><2| + h.c.
    """

    omega1: complex = 0.0
    omega1p: complex = 0.0
    omega2: complex = 0.0
    omega2p: complex = 0.0

    def max_abs(self) -> float:
        return max(abs(self.omega1), abs(self.omega1p), abs(self.omega2), abs(self.omega2p))


OFF = LaserAmplitudes()


def _single_atom_op(space: StateSpace, atom: int, op4: np.ndarray) -> np.ndarray:
    """Embed a 4x4 single-atom operator on atom 1 or 2 (identity elsewhere)."""
    eye4 = np.eye(4)
    eyec = np.eye(space.n_cavity)
    if atom == 1:
        return np.kron(np.kron(op4, eye4), eyec)
    return np.kron(np.kron(eye4, op4), eyec)


@lru_cache(maxsize=None)
def _structure(n_max: int) -> dict[str, np.ndarray]:
    """Parameter-independent operator blocks, cached per Fock cutoff."""
    space = StateSpace(n_max)
    nc = space.n_cavity
    b = np.diag(np.sqrt(np.arange(1, nc)), k=1)  # cavity annihilation
    eye4 = np.eye(4)
    eye16 = np.eye(16)

    def lower(to_level: int) -> np.ndarray:
        op = np.zeros((4, 4))
        op[to_level, 3] = 1.0  # |to><2|
        return op

    raise21 = lower(1).T  # |2><1|
    coupling = np.kron(np.kron(raise21, eye4) + np.kron(eye4, raise21), b)
    coupling = coupling + coupling.conj().T

    blocks = {
        "coupling": coupling,
        "photon_number": np.kron(eye16, b.conj().T @ b),
        "excited": (
            _single_atom_op(space, 1, lower(3)) + _single_atom_op(space, 2, lower(3))
        ),
        "lower_s1": _single_atom_op(space, 1, lower(2)),
        "lower_s2": _single_atom_op(space, 2, lower(2)),
        "lower_q1": _single_atom_op(space, 1, lower(1)),
        "lower_q2": _single_atom_op(space, 2, lower(1)),
    }
    for m in blocks.values():
        m.flags.writeable = False
    return blocks


def laser_hamiltonian(space: StateSpace, laser: LaserAmplitudes) -> np.ndarray:
    """Drive term sum_k (W_k/2) L_k + h.c. as a dense complex matrix."""
    st = _structure(space.n_max)
    h = np.zeros((space.dim, space.dim), dtype=np.complex128)
    for amp, key in (
        (laser.omega1, "lower_s1"),
        (laser.omega1p, "lower_s2"),
        (laser.omega2, "lower_q1"),
        (laser.omega2p, "lower_q2"),
    ):
        if amp != 0:
            h += (0.5 * amp) * st[key]
            h += (0.5 * np.conj(amp)) * st[key].conj().T
    return h


def conditional_hamiltonian(
    params: SystemParams, laser: LaserAmplitudes = OFF
) -> np.ndarray:
    """Non-Hermitian no-jump Hamiltonian for the given rates and laser amplitudes."""
    space = params.space
    st = _structure(params.n_max)
    h = np.zeros((space.dim, space.dim), dtype=np.complex128)
    if params.g != 0.0:
        h += params.g * st["coupling"]
    h += laser_hamiltonian(space, laser)
    if params.kappa != 0.0:
        h += (-0.5j * params.kappa) * st["photon_number"]
    diag2 = 0.5 * (params.delta - 1j * params.gamma)
    if diag2 != 0.0:
        h += diag2 * st["excited"]
    return h


@lru_cache(maxsize=None)
def dfs_projector(space: StateSpace) -> np.ndarray:
    """Projector onto the decoherence-free subspace (cavity-vacuum sector).

    The subspace is the kernel, within the vacuum sector, of the collective
    emission map |psi> -> sum_i |1>_i<2| |psi>: states that cannot deposit a
    photon in the cavity.  For the full four-level atoms its rank is 10 (the
    nine no-level-2 products plus the antisymmetric (|12>-|21>)/sqrt(2)).
    """
    lower = np.zeros((4, 4))
    lower[1, 3] = 1.0
    eye4 = np.eye(4)
    emission = np.kron(lower, eye4) + np.kron(eye4, lower)
    kernel = null_space(emission)
    proj_atoms = kernel @ kernel.conj().T
    vac = np.zeros((space.n_cavity, space.n_cavity))
    vac[0, 0] = 1.0
    proj = np.kron(proj_atoms, vac)
    proj.flags.writeable = False
    return proj


@dataclass(frozen=True)
class EffectiveModel:
    """Couplings of the three-level model on the ordered basis (|A>, |11>, |alpha>)."""

    omega: complex
    omegabar: complex
    delta: float = 0.0


def effective_hamiltonian(em: EffectiveModel) -> np.ndarray:
    """Three-level matrix: |alpha> is coupled to |A> by omega, to |11> by omegabar,
    and carries the detuning delta/2 on its diagonal."""
    w = complex(em.omega)
    wb = complex(em.omegabar)
    return np.array(
        [
            [0.0, 0.0, np.conj(w)],
            [0.0, 0.0, np.conj(wb)],
            [w, wb, 0.5 * em.delta],
        ],
        dtype=np.complex128,
    )


def analytic_spectrum(em: EffectiveModel) -> tuple[float, float, float]:
    """Closed-form eigenvalues (E1, E2, E3) of the three-level model.

    E_{1,2} = delta/4 +/- sqrt(|omega|^2 + |omegabar|^2 + (delta/4)^2), E3 = 0.
    The E3 = 0 eigenvector (-omegabar, omega, 0)/sqrt(|omega|^2+|omegabar|^2)
    is the dark state: no |alpha> component and no energy, for any delta.
    """
    quarter = 0.25 * em.delta
    root = math.sqrt(abs(em.omega) ** 2 + abs(em.omegabar) ** 2 + quarter**2)
    return (quarter + root, quarter - root, 0.0)


def tuned_amplitudes(
    omega: complex, omegabar: complex, split: str = "antisymmetric"
) -> LaserAmplitudes:
    """Physical laser amplitudes realizing nominal couplings (omega, omegabar).

    The sigma<->2 lasers are driven equally on both atoms with |W1| =
    sqrt(2)|omega|; the 1<->2 lasers differ by |W2 - W2'| = 2|omegabar|.  Signs
    and conjugation are fixed so the projection of the drive onto
    (|A>, |11>, |alpha>) equals effective_hamiltonian(omega/sqrt(2),
    omegabar/sqrt(2), delta) exactly.

    split="antisymmetric" (default) puts +/-omegabar on the two atoms, which
    decouples the leaky symmetric state (|12>+|21>)/sqrt(2) from |11> and |A>;
    split="single" drives atom 1 only (W2 = -2 conj(omegabar)).
    """
    w1 = -SQRT2 * np.conj(omega)
    if split == "antisymmetric":
        w2 = -np.conj(omegabar)
        w2p = np.conj(omegabar)
    elif split == "single":
        w2 = -2.0 * np.conj(omegabar)
        w2p = 0.0
    else:
        raise ValueError(f"unknown laser split {split!r}; expected 'antisymmetric' or 'single'")
    return LaserAmplitudes(omega1=w1, omega1p=w1, omega2=w2, omega2p=w2p)


def effective_couplings(laser: LaserAmplitudes) -> tuple[complex, complex]:
    """Closed-form couplings (omega_eff, omegabar_eff) of the three-level model.

    omega_eff = -conj(W1 + W1')/4 couples |alpha><A|; omegabar_eff =
    -conj(W2 - W2')/(2 sqrt(2)) couples |alpha><11|.  For tuned_amplitudes
    output these evaluate to (omega/sqrt(2), omegabar/sqrt(2)).
    """
    w_eff = -np.conj(laser.omega1 + laser.omega1p) / 4.0
    wb_eff = -np.conj(laser.omega2 - laser.omega2p) / (2.0 * SQRT2)
    return complex(w_eff), complex(wb_eff)


@dataclass(frozen=True)
class ProjectedModel:
    """Result of projecting the full Hamiltonian onto (|A>, |11>, |alpha>)."""

    matrix: np.ndarray
    #: Frobenius norm of the coupling from the 3-dim span to the rest of the
    #: decoherence-free subspace (nonzero when the tuning relations are violated).
    off_span_residual: float


def effective_from_projection(params: SystemParams, laser: LaserAmplitudes) -> ProjectedModel:
    """Project the Hermitian part of the full Hamiltonian into the DFS and
    restrict it to span(|A>, |11>, |alpha>).

    The cavity coupling annihilates the subspace by construction, so only the
    drive and the detuning survive.  For laser amplitudes obeying the tuning
    relations the result equals effective_hamiltonian(*effective_couplings(laser),
    params.delta); violations show up as a nonzero off-span residual.
    """
    space = params.space
    hermitian = SystemParams(
        kappa=0.0, gamma=0.0, delta=params.delta, g=params.g, n_max=params.n_max
    )
    h = conditional_hamiltonian(hermitian, laser)
    p = dfs_projector(space)
    w = p @ h @ p
    v = np.column_stack(
        [
            a_state(space).amplitudes,
            basis_state(space, "1", "1", 0).amplitudes,
            alpha_state(space).amplitudes,
        ]
    )
    matrix = v.conj().T @ w @ v
    residual = float(np.linalg.norm(w @ v - v @ matrix))
    return ProjectedModel(matrix=matrix, off_span_residual=residual)


def drive_blocks(space: StateSpace, split: str = "antisymmetric") -> tuple[np.ndarray, ...]:
    """Hermitian operator blocks B1..B4 such that the tuned drive is
    sum_k c_k(t) B_k with the real coefficients from :func:`drive_coefficients`."""
    st = _structure(space.n_max)

    def herm_pair(low: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        s = 0.5 * (low + low.conj().T)
        t = 0.5j * (low - low.conj().T)
        return s, t

    s_sig, t_sig = herm_pair(st["lower_s1"] + st["lower_s2"])
    if split == "antisymmetric":
        s_q1, t_q1 = herm_pair(st["lower_q1"])
        s_q2, t_q2 = herm_pair(st["lower_q2"])
        b3 = s_q2 - s_q1
        b4 = t_q1 - t_q2
    elif split == "single":
        s_q1, t_q1 = herm_pair(st["lower_q1"])
        b3 = -2.0 * s_q1
        b4 = 2.0 * t_q1
    else:
        raise ValueError(f"unknown laser split {split!r}; expected 'antisymmetric' or 'single'")
    blocks = (s_sig, t_sig, b3, b4)
    for m in blocks:
        m.flags.writeable = False
    return blocks


def drive_coefficients(omega: np.ndarray, omegabar: np.ndarray, split: str = "antisymmetric") -> np.ndarray:
    """Real coefficient rows c_k(t) pairing with :func:`drive_blocks`.

    Derived from the tuned amplitudes: W1 = W1' = -sqrt(2) conj(omega) scales
    (B1, B2) by (-sqrt(2) Re omega, +sqrt(2) Im omega); the 1<->2 pair scales
    (B3, B4) by (Re omegabar, Im omegabar) for either split choice.
    """
    if split not in ("antisymmetric", "single"):
        raise ValueError(f"unknown laser split {split!r}; expected 'antisymmetric' or 'single'")
    omega = np.asarray(omega, dtype=np.complex128)
    omegabar = np.asarray(omegabar, dtype=np.complex128)
    return np.ascontiguousarray(
        np.stack(
            [
                -SQRT2 * omega.real,
                SQRT2 * omega.imag,
                omegabar.real,
                omegabar.imag,
            ]
        )
    )


@dataclass(frozen=True)
class ValidityReport:
    """Weak-driving check: the transfer rate must stay below both g^2/kappa and kappa."""

    r_est: float
    ratio_g2_over_kappa: float
    ratio_kappa: float
    verdict: str

    def to_dict(self) -> dict:
        return {
            "r_est": self.r_est,
            "ratio_g2_over_kappa": self.ratio_g2_over_kappa,
            "ratio_kappa": self.ratio_kappa,
            "verdict": self.verdict,
        }


def validity_check(params: SystemParams, schedule, epsilon: float = 0.25, samples: int = 2001) -> ValidityReport:
    """Estimate the peak drive R and compare it against the protection scales.

    R_est is the peak of max(|Omega|, |Omegabar|) over the schedule.  The
    verdict is "pass" iff R_est/(g^2/kappa) <= epsilon and R_est/kappa <= 1:
    the Zeno scale g^2/kappa must dominate with margin epsilon, while reaching
    the observation rate kappa itself only triggers a warning.
    """
    ts = np.linspace(0.0, schedule.duration, samples)
    omega, omegabar = schedule.amplitudes(ts)
    r_est = float(max(np.abs(omega).max(), np.abs(omegabar).max(), 0.0))
    if params.kappa > 0.0:
        zeno = params.g**2 / params.kappa if params.g > 0 else math.inf
        ratio_g2 = r_est / zeno if math.isfinite(zeno) else 0.0
        ratio_kappa = r_est / params.kappa
    else:
        ratio_g2 = 0.0
        ratio_kappa = 0.0 if r_est == 0.0 else math.inf
    verdict = "pass" if (ratio_g2 <= epsilon and ratio_kappa <= 1.0) else "warn"
    return ValidityReport(
        r_est=r_est,
        ratio_g2_over_kappa=ratio_g2,
        ratio_kappa=ratio_kappa,
        verdict=verdict,
    )
