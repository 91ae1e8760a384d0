"""Named machine-check suites behind the `verify` CLI subcommand.

Each suite returns a list of Check records; a check passes when its observed
residual does not exceed its tolerance. Randomized suites take a seed and use
numpy's PCG64 generator, which is recorded in the report for reproducibility.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import pairwise
from .dicke import (
    SymmetricState,
    collective_moments,
    make_all_down,
    make_dicke_state,
    make_state,
)
from .errors import MeanSpinDegenerateError
from .evolution import evolve_grid, hermitian_eigen, time_grid, trajectory
from .hamiltonians import HamiltonianSpec, build_hamiltonian, parity_check
from .oracle import (
    embed_symmetric,
    full_collective_moments,
    full_evolve,
    full_hamiltonian,
    partial_trace_pair,
    sample_separable,
)
from .squeezing import (
    perpendicular_correlation_min,
    squeezing_even_odd,
    squeezing_general,
)

RNG_ALGORITHM = "numpy PCG64 (default_rng)"


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.residual <= self.tolerance


def _random_symmetric_state(rng, n_qubits: int) -> SymmetricState:
    amps = rng.normal(size=n_qubits + 1) + 1j * rng.normal(size=n_qubits + 1)
    state, _ = make_state(n_qubits, amps)
    return state


def _model_specs():
    return {
        "one-axis": HamiltonianSpec.one_axis(1.0),
        "one-axis-field": HamiltonianSpec.one_axis_field(1.0, 2.0),
        "two-axis": HamiltonianSpec.two_axis(1.0),
    }


def suite_lemma1(seed: int, samples: int = 1000, n_values=range(2, 7)):
    """Separable symmetric states never show negative perpendicular correlation."""
    rng = np.random.default_rng(seed)
    checks = []
    for n in n_values:
        worst_corr = np.inf
        worst_xi2 = np.inf
        for _ in range(samples):
            k = int(rng.integers(1, 9))
            sub_seed = int(rng.integers(0, 2**63 - 1))
            _, moments = sample_separable(n, k, sub_seed)
            worst_corr = min(worst_corr, perpendicular_correlation_min(moments))
            try:
                worst_xi2 = min(worst_xi2, squeezing_general(moments).xi2)
            except MeanSpinDegenerateError:
                pass
        checks.append(Check(f"lemma1_correlation_N{n}", max(0.0, -worst_corr), 1e-12))
        checks.append(Check(f"lemma1_xi2_N{n}", max(0.0, 1.0 - worst_xi2), 1e-10))
    return checks


def suite_lemma2(seed: int, per_n: int = 100, n_values=range(2, 9)):
    """Moment-based pair reduction equals the literal partial trace."""
    rng = np.random.default_rng(seed)
    checks = []
    for n in n_values:
        worst = 0.0
        for _ in range(per_n):
            state = _random_symmetric_state(rng, n)
            predicted = pairwise.reduced_two_qubit(collective_moments(state)).as_matrix()
            traced = partial_trace_pair(embed_symmetric(state), 0, 1)
            worst = max(worst, float(np.max(np.abs(predicted - traced))))
        checks.append(Check(f"lemma2_reduction_N{n}", worst, 1e-10))
    return checks


def suite_lemma3(n_values=(2, 3, 4, 6, 10, 20), points: int = 200):
    """Numeric one-axis moments match the closed cosine formulas."""
    from .oracle import one_axis_analytic_moments

    mu = 1.0
    checks = []
    for n in n_values:
        prop = hermitian_eigen(build_hamiltonian(HamiltonianSpec.one_axis(mu), n))
        mubars = np.linspace(0.0, 2.0 * np.pi, points)
        states = evolve_grid(prop, make_all_down(n), mubars / (2.0 * mu))
        worst = 0.0
        for mubar, state in zip(mubars, states):
            m = collective_moments(state)
            ref = one_axis_analytic_moments(n, mu, mubar / (2.0 * mu))
            worst = max(
                worst,
                abs(m.sx2 - ref.sx2),
                abs(m.sy2 - ref.sy2),
                abs(m.sz2 - ref.sz2),
                abs((m.sx2 - m.sy2) - (m.sz2 - n * n / 4.0)),
            )
        checks.append(Check(f"lemma3_moments_N{n}", worst, 1e-9))
    return checks


def _trajectory_prop3_worst(spec, n, t_max=10.0, dt=0.01, require_xi2_le_1=True):
    traj = trajectory(spec, n, t_max, dt)
    worst = 0.0
    for state in traj.states:
        m = collective_moments(state)
        xi2 = squeezing_even_odd(m).xi2
        if require_xi2_le_1 and xi2 > 1.0:
            continue
        c = pairwise.concurrence_x_form(pairwise.reduced_two_qubit(m)).concurrence
        worst = max(worst, abs(pairwise.prop3_residual(xi2, c, n)))
    return worst


def suite_prop3(n_values=(2, 3, 4, 6, 10, 20), t_max: float = 10.0, dt: float = 0.01):
    """xi^2 = 1 - (N-1)C along one-axis trajectories, with and without field."""
    checks = []
    for n in n_values:
        worst = max(
            _trajectory_prop3_worst(HamiltonianSpec.one_axis(1.0), n, t_max, dt),
            _trajectory_prop3_worst(HamiltonianSpec.one_axis_field(1.0, 1.0), n, t_max, dt),
        )
        checks.append(Check(f"prop3_identity_N{n}", worst, 1e-9))
    return checks


def suite_prop4(n_values=(2, 5, 10, 25, 50, 100), t_max: float = 10.0, dt: float = 0.01):
    """One-axis twisting: |u| >= y and xi^2 <= 1 at every time."""
    checks = []
    for n in n_values:
        traj = trajectory(HamiltonianSpec.one_axis(1.0), n, t_max, dt)
        worst_margin = 0.0
        worst_xi2 = 0.0
        worst_residual = 0.0
        for state in traj.states:
            m = collective_moments(state)
            r = pairwise.reduced_two_qubit(m)
            cond = pairwise.squeezing_condition(r)
            xi2 = squeezing_even_odd(m).xi2
            c = pairwise.concurrence_x_form(r).concurrence
            worst_margin = max(worst_margin, -cond.margin)
            worst_xi2 = max(worst_xi2, xi2 - 1.0)
            worst_residual = max(worst_residual, abs(pairwise.prop3_residual(xi2, c, n)))
        checks.append(Check(f"prop4_margin_N{n}", worst_margin, 1e-12))
        checks.append(Check(f"prop4_xi2_bound_N{n}", worst_xi2, 1e-12))
        checks.append(Check(f"prop4_identity_N{n}", worst_residual, 1e-9))
    return checks


def suite_parity(n_values=(2, 3, 6, 10), t_max: float = 5.0, dt: float = 0.05):
    """Structural conservation laws along all model trajectories."""
    checks = []
    for name, spec in _model_specs().items():
        for n in n_values:
            commutator = parity_check(spec, n)
            h = build_hamiltonian(spec, n)
            traj = trajectory(spec, n, t_max, dt)
            energy0 = None
            worst_transverse = 0.0
            worst_leak = 0.0
            worst_norm = 0.0
            worst_energy = 0.0
            for state in traj.states:
                m = collective_moments(state)
                worst_transverse = max(worst_transverse, abs(m.mean_sx), abs(m.mean_sy))
                odd_weight = float(np.sum(np.abs(state.amplitudes[1::2]) ** 2))
                worst_leak = max(worst_leak, odd_weight)
                norm = float(np.linalg.norm(state.amplitudes))
                worst_norm = max(worst_norm, abs(norm - 1.0))
                energy = float(
                    (state.amplitudes.conj() @ (h.entries @ state.amplitudes)).real
                )
                if energy0 is None:
                    energy0 = energy
                worst_energy = max(worst_energy, abs(energy - energy0))
            checks.append(Check(f"parity_commutator_{name}_N{n}", commutator, 1e-13))
            checks.append(Check(f"parity_transverse_{name}_N{n}", worst_transverse, 1e-10))
            checks.append(Check(f"parity_leakage_{name}_N{n}", worst_leak, 1e-12))
            checks.append(Check(f"parity_norm_{name}_N{n}", worst_norm, 1e-12))
            checks.append(Check(f"parity_energy_{name}_N{n}", worst_energy, 1e-10))
    return checks


def suite_oracle(seed: int, n_values=range(2, 9), times=(0.1, 0.3, 1.0)):
    """Dicke-basis machinery against the full 2^N tensor-product simulation."""
    checks = []
    for n in n_values:
        # Hamiltonian projection: the symmetric-subspace matrix is the full
        # Pauli-sum Hamiltonian compressed by the Dicke embedding isometry.
        worst_h = 0.0
        embed_cols = [
            embed_symmetric(make_dicke_state(n, k)).amplitudes for k in range(n + 1)
        ]
        isometry = np.column_stack(embed_cols)
        for spec in _model_specs().values():
            projected = isometry.conj().T @ full_hamiltonian(spec, n) @ isometry
            worst_h = max(
                worst_h,
                float(np.max(np.abs(projected - build_hamiltonian(spec, n).entries))),
            )
        checks.append(Check(f"oracle_hamiltonian_projection_N{n}", worst_h, 1e-10))

        worst_fidelity = 0.0
        worst_moments = 0.0
        for name, spec in _model_specs().items():
            prop = hermitian_eigen(build_hamiltonian(spec, n))
            for t in times:
                sub_state = evolve_grid(prop, make_all_down(n), [t])[0]
                full_state = full_evolve(spec, n, t)
                overlap = abs(
                    np.vdot(embed_symmetric(sub_state).amplitudes, full_state.amplitudes)
                )
                worst_fidelity = max(worst_fidelity, 1.0 - overlap**2)
                m_sub = collective_moments(sub_state)
                m_full = full_collective_moments(full_state)
                worst_moments = max(worst_moments, _moment_distance(m_sub, m_full))
        checks.append(Check(f"oracle_evolution_fidelity_N{n}", worst_fidelity, 1e-10))
        checks.append(Check(f"oracle_moments_N{n}", worst_moments, 1e-10))
    return checks


def _moment_distance(a, b) -> float:
    fields = (
        "mean_sx", "mean_sy", "mean_sz", "sz2", "sx2", "sy2",
        "sp_mean", "sp2", "anti_sp_sz", "anti_sx_sy",
    )
    return max(abs(getattr(a, f) - getattr(b, f)) for f in fields)


def random_x_form(rng, n_qubits: int = 4) -> pairwise.TwoQubitReduced:
    """Random valid (v+, v-, y, u) tuple with unit trace and X-block positivity."""
    v_plus, v_minus, two_y = rng.dirichlet(np.ones(3))
    mod_u = rng.random() * np.sqrt(v_plus * v_minus)
    u = mod_u * np.exp(2j * np.pi * rng.random())
    return pairwise.TwoQubitReduced(
        v_plus=float(v_plus),
        v_minus=float(v_minus),
        y=float(two_y / 2.0),
        x_plus=0.0,
        x_minus=0.0,
        u=complex(u),
        n_qubits=n_qubits,
    )


def suite_x_form(seed: int, samples: int = 1000):
    """Closed-form X-state concurrence against the spectral definition."""
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(samples):
        r = random_x_form(rng)
        closed = pairwise.concurrence_x_form(r).concurrence
        spectral = pairwise.concurrence_spectral(r.as_matrix()).concurrence
        worst = max(worst, abs(closed - spectral))
    return [Check("x_form_vs_spectral", worst, 1e-10)]


SUITES = ("lemma1", "lemma2", "lemma3", "prop3", "prop4", "parity", "oracle", "x-form")


def run_suite(name: str, seed: int = 0):
    if name == "lemma1":
        return suite_lemma1(seed)
    if name == "lemma2":
        return suite_lemma2(seed)
    if name == "lemma3":
        return suite_lemma3()
    if name == "prop3":
        return suite_prop3()
    if name == "prop4":
        return suite_prop4()
    if name == "parity":
        return suite_parity()
    if name == "oracle":
        return suite_oracle(seed)
    if name == "x-form":
        return suite_x_form(seed)
    if name == "all":
        checks = []
        for suite in SUITES:
            checks.extend(run_suite(suite, seed))
        return checks
    raise ValueError(f"unknown suite {name!r}; known: {', '.join(SUITES + ('all',))}")
