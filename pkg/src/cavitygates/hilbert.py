"""State space of two four-level atoms and a truncated cavity mode.

Each atom has levels ``0 < 1 < sigma < 2`` (two qubit ground states, one
auxiliary ground state, one excited state); the cavity keeps Fock states
``0..n_max``.  Basis ordering is fixed: atom 1 varies slowest, atom 2 next,
the cavity photon number fastest, so
``index = (4*a1 + a2) * (n_max + 1) + n``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

#: Atomic level symbols in enumeration order.
LEVELS = ("0", "1", "σ", "2")

SIGMA = LEVELS[2]

_LEVEL_ALIASES = {
    "0": 0,
    "1": 1,
    SIGMA: 2,
    "sigma": 2,
    "s": 2,
    "2": 3,
}


def level_index(level: int | str) -> int:
    """Map a level symbol ("0", "1", "sigma"/"s"/unicode sigma, "2") or index to 0..3."""
    if isinstance(level, (int, np.integer)):
        if 0 <= int(level) <= 3:
            return int(level)
        raise ValueError(f"atomic level index {level} out of range 0..3")
    try:
        return _LEVEL_ALIASES[str(level)]
    except KeyError:
        raise ValueError(
            f"unknown atomic level {level!r}; expected one of "
            f"'0', '1', 'sigma' (or 's'), '2'"
        ) from None


@dataclass(frozen=True)
class StateSpace:
    """Hilbert space of two four-level atoms and a cavity truncated at n_max photons."""

    n_max: int = 2
    dim: int = field(init=False)

    def __post_init__(self) -> None:
        if self.n_max < 0:
            raise ValueError(f"n_max must be >= 0, got {self.n_max}")
        object.__setattr__(self, "dim", 16 * (self.n_max + 1))

    @property
    def n_cavity(self) -> int:
        return self.n_max + 1

    def index(self, atom1: int | str, atom2: int | str, n: int) -> int:
        """Flat basis index of |atom1, atom2; n>."""
        a1 = level_index(atom1)
        a2 = level_index(atom2)
        if not 0 <= n <= self.n_max:
            raise ValueError(f"photon number {n} out of range 0..{self.n_max}")
        return (4 * a1 + a2) * self.n_cavity + n

    def unpack(self, index: int) -> tuple[int, int, int]:
        """Inverse of :meth:`index`: returns (atom1, atom2, n) as integers."""
        if not 0 <= index < self.dim:
            raise ValueError(f"basis index {index} out of range 0..{self.dim - 1}")
        atoms, n = divmod(index, self.n_cavity)
        a1, a2 = divmod(atoms, 4)
        return a1, a2, n

    def label(self, index: int) -> str:
        """Human-readable label "a1,a2;n" of a basis index."""
        a1, a2, n = self.unpack(index)
        return f"{LEVELS[a1]},{LEVELS[a2]};{n}"

    def labels(self) -> list[str]:
        return [self.label(i) for i in range(self.dim)]

    def parse_label(self, label: str) -> int:
        """Basis index for a label of the form "a1,a2;n"."""
        try:
            atoms, n_str = label.split(";")
            a1, a2 = atoms.split(",")
            n = int(n_str)
        except ValueError:
            raise ValueError(
                f"malformed basis label {label!r}; expected 'a1,a2;n' like '{SIGMA},1;0'"
            ) from None
        return self.index(a1.strip(), a2.strip(), n)


@dataclass(frozen=True)
class StateVector:
    """Complex amplitude vector over a :class:`StateSpace` basis."""

    space: StateSpace
    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        amp = np.asarray(self.amplitudes, dtype=np.complex128)
        if amp.shape != (self.space.dim,):
            raise ValueError(
                f"amplitude vector has shape {amp.shape}, expected ({self.space.dim},)"
            )
        amp = amp.copy()
        amp.flags.writeable = False
        object.__setattr__(self, "amplitudes", amp)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))

    def norm2(self) -> float:
        return float(np.real(np.vdot(self.amplitudes, self.amplitudes)))

    def overlap(self, other: "StateVector | np.ndarray") -> complex:
        """Inner product <self|other>."""
        other_amp = other.amplitudes if isinstance(other, StateVector) else np.asarray(other)
        return complex(np.vdot(self.amplitudes, other_amp))

    def normalized(self) -> "StateVector":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return StateVector(self.space, self.amplitudes / n)


def basis_state(space: StateSpace, atom1: int | str, atom2: int | str, n: int = 0) -> StateVector:
    """Computational basis vector |atom1, atom2; n>."""
    amp = np.zeros(space.dim, dtype=np.complex128)
    amp[space.index(atom1, atom2, n)] = 1.0
    return StateVector(space, amp)


def a_state(space: StateSpace) -> StateVector:
    """Antisymmetric auxiliary state |A> = (|sigma,1> - |1,sigma>)/sqrt(2), cavity vacuum."""
    amp = np.zeros(space.dim, dtype=np.complex128)
    inv = 1.0 / np.sqrt(2.0)
    amp[space.index(SIGMA, "1", 0)] = inv
    amp[space.index("1", SIGMA, 0)] = -inv
    return StateVector(space, amp)


def alpha_state(space: StateSpace) -> StateVector:
    """Antisymmetric excited state |alpha> = (|1,2> - |2,1>)/sqrt(2), cavity vacuum.

    This combination is annihilated by the collective atom-cavity coupling and is
    the only singly-excited state inside the decoherence-free subspace.
    """
    amp = np.zeros(space.dim, dtype=np.complex128)
    inv = 1.0 / np.sqrt(2.0)
    amp[space.index("1", "2", 0)] = inv
    amp[space.index("2", "1", 0)] = -inv
    return StateVector(space, amp)


def dark_state(space: StateSpace, theta: float, phi: float = 0.0) -> StateVector:
    """Dark state cos(theta/2)|11;0> - sin(theta/2) e^{i phi} |A>.

    For laser amplitudes Omega = Omega0*cos(theta/2), Omegabar =
    Omega0*sin(theta/2)*e^{i phi} this is an exact zero-energy eigenstate of the
    effective three-level model, interpolating from |11;0> (theta=0) to -e^{i
    phi}|A> (theta=pi).
    """
    c = np.cos(0.5 * theta)
    s = np.sin(0.5 * theta)
    amp = c * basis_state(space, "1", "1", 0).amplitudes.copy()
    amp = amp - s * np.exp(1j * phi) * a_state(space).amplitudes
    return StateVector(space, amp)
