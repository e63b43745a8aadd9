"""Simulator for dissipation-protected two-qubit gates in a lossy optical cavity.

Two four-level atoms (ground qubit states ``0``/``1``, auxiliary ground state
``sigma``, excited state ``2``) share a single cavity mode.  Under continuous
observation of cavity decay and spontaneous emission, the no-jump evolution is
generated by a non-Hermitian conditional Hamiltonian.  Weak lasers steer the
system inside a decoherence-free subspace where dark-state transfer realizes
conditional phase gates, either dynamically (pulse, flip, time-reversed pulse)
or geometrically (closed loops in control space).

Rates are expressed in units of the atom-cavity coupling ``g``; times in
units of ``1/g``.
"""

from .hilbert import (
    LEVELS,
    StateSpace,
    StateVector,
    a_state,
    alpha_state,
    basis_state,
    dark_state,
)
from .model import (
    EffectiveModel,
    LaserAmplitudes,
    SystemParams,
    ValidityReport,
    analytic_spectrum,
    conditional_hamiltonian,
    dfs_projector,
    effective_couplings,
    effective_from_projection,
    effective_hamiltonian,
    tuned_amplitudes,
    validity_check,
)
from .pulses import (
    ConstantLaserSchedule,
    LoopPath,
    PulseSchedule,
    berry_phase_analytic,
    dark_state_holonomy,
    loop_schedule,
    rectangle_loop,
    sigma_flip,
    stirap_linear,
    time_reversed,
)
from .dynamics import (
    Trajectory,
    TransferResult,
    conditional_fidelity,
    effective_model_run,
    evolve,
    observables,
    run_transfer,
    success_probability,
)
from .gates import (
    GateResult,
    dynamical_phase_gate,
    holonomic_phase_gate,
)
from .sweeps import (
    SweepGrid,
    SweepResult,
    find_optimum,
    run_sweep,
)

__version__ = "0.1.0"

__all__ = [
    "LEVELS",
    "StateSpace",
    "StateVector",
    "basis_state",
    "a_state",
    "alpha_state",
    "dark_state",
    "SystemParams",
    "LaserAmplitudes",
    "EffectiveModel",
    "ValidityReport",
    "conditional_hamiltonian",
    "dfs_projector",
    "effective_hamiltonian",
    "analytic_spectrum",
    "effective_from_projection",
    "effective_couplings",
    "tuned_amplitudes",
    "validity_check",
    "PulseSchedule",
    "ConstantLaserSchedule",
    "LoopPath",
    "stirap_linear",
    "loop_schedule",
    "rectangle_loop",
    "time_reversed",
    "sigma_flip",
    "berry_phase_analytic",
    "dark_state_holonomy",
    "Trajectory",
    "TransferResult",
    "evolve",
    "observables",
    "success_probability",
    "conditional_fidelity",
    "run_transfer",
    "effective_model_run",
    "GateResult",
    "dynamical_phase_gate",
    "holonomic_phase_gate",
    "SweepGrid",
    "SweepResult",
    "run_sweep",
    "find_optimum",
]
