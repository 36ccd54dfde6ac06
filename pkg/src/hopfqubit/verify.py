"""Seeded property checks across all modules.

Each family draws from its own generator seeded by ``(seed, crc32(name))`` so
results do not depend on which families run or in what order.
"""

from __future__ import annotations

import cmath
import itertools
import math
import zlib
from dataclasses import dataclass, asdict
from typing import Callable

import numpy as np

from hopfqubit import gadget, group_action, hopf, qubit, tolerances
from hopfqubit.qubit import TWO_PI, BlochAngles, PureState


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    value: float
    bound: float
    # "<=" for residuals, "<" for strict upper bounds on a score
    relation: str = "<="

    def to_dict(self) -> dict:
        return asdict(self)


def make_check(name: str, value: float, bound: float, relation: str = "<=") -> Check:
    value = float(value)
    passed = value <= bound if relation == "<=" else value < bound
    return Check(name, bool(passed), value, float(bound), relation)


def random_states(rng: np.random.Generator, n: int) -> list[PureState]:
    """Haar-random states: normalized Gaussian points of R^4."""
    g = rng.normal(size=(n, 4))
    g /= np.linalg.norm(g, axis=1, keepdims=True)
    return [PureState(complex(r[0], r[1]), complex(r[2], r[3])) for r in g]


def random_angles(rng: np.random.Generator, n: int) -> list[BlochAngles]:
    # uniform on the sphere, not on the (theta, phi) rectangle
    theta = np.arccos(rng.uniform(-1, 1, n))
    phi = rng.uniform(0, TWO_PI, n)
    return [BlochAngles(t, p) for t, p in zip(theta, phi)]


def random_euler(rng: np.random.Generator, n: int) -> list[gadget.EulerAngles]:
    xs, es, zs = rng.uniform(0, TWO_PI, n), rng.uniform(0, math.pi, n), rng.uniform(0, TWO_PI, n)
    return [gadget.EulerAngles(x, e, z) for x, e, z in zip(xs, es, zs)]


def bloch_grid(n_theta: int = 50, n_phi: int = 100) -> list[BlochAngles]:
    """theta on [0, pi] inclusive, phi on [0, 2pi) exclusive."""
    thetas = np.linspace(0, math.pi, n_theta)
    phis = TWO_PI * np.arange(n_phi) / n_phi
    return [BlochAngles(t, p) for t in thetas for p in phis]


def _vec_err(p, q) -> float:
    return float(np.linalg.norm(p.as_array() - q.as_array()))


def _mat_err(m1, m2) -> float:
    return float(np.max(np.abs(m1 - m2)))


# -- qubit-core -------------------------------------------------------------

def check_angle_round_trip(rng, samples):
    tol = tolerances.get()
    worst = 0.0
    for g in random_angles(rng, samples) + [BlochAngles(0, 0), BlochAngles(math.pi, 0)]:
        back = qubit.angles_from_state(qubit.state_from_angles(g))
        dphi = abs(cmath.phase(cmath.exp(1j * (back.phi - g.phi))))
        worst = max(worst, abs(back.theta - g.theta), dphi)
    return [make_check("qubit.angle_round_trip", worst, tol.ang)]


def check_consistency_triangle(rng, samples):
    worst = 0.0
    for g in random_angles(rng, samples):
        via_rho = qubit.bloch_from_density(qubit.density_matrix(qubit.state_from_angles(g)))
        worst = max(worst, _vec_err(via_rho, qubit.bloch_vector_from_angles(g)))
    return [make_check("qubit.consistency_triangle", worst, tolerances.get().mat)]


def check_density_properties(rng, samples):
    tol = tolerances.get().mat
    phase_err = purity_err = 0.0
    for psi, alpha in zip(random_states(rng, samples), rng.uniform(0, TWO_PI, samples)):
        rho = qubit.density_matrix(psi)
        phase_err = max(phase_err, _mat_err(qubit.density_matrix(psi.scaled(cmath.exp(1j * alpha))), rho))
        purity_err = max(purity_err, _mat_err(rho @ rho, rho))
    return [
        make_check("qubit.density_phase_invariance", phase_err, tol),
        make_check("qubit.density_purity", purity_err, tol),
    ]


def check_canonical_representative(rng, samples):
    failures = 0
    for psi in random_states(rng, samples) + [qubit.ONE.scaled(cmath.exp(2.2j))]:
        rep = qubit.canonical_representative(psi)
        again = qubit.canonical_representative(rep)
        if not (qubit.same_ray(psi, rep) and np.allclose(again.vector, rep.vector, rtol=0, atol=1e-15)):
            failures += 1
    return [make_check("qubit.canonical_representative", failures, 0)]


def check_pauli_algebra(rng, samples):
    worst = 0.0
    for j, k in itertools.product(range(3), repeat=2):
        expected = qubit.I2 * (j == k)
        for l in range(3):
            expected = expected + 1j * _levi_civita(j, k, l) * qubit.PAULI[l]
        worst = max(worst, _mat_err(qubit.PAULI[j] @ qubit.PAULI[k], expected))
    return [make_check("qubit.pauli_algebra", worst, tolerances.get().mat)]


def _levi_civita(i: int, j: int, k: int) -> int:
    return (i - j) * (j - k) * (k - i) // 2


# -- hopf -------------------------------------------------------------------

def check_chart_agreement(rng, samples):
    worst = 0.0
    pole = tolerances.get().pole
    for psi in random_states(rng, samples):
        if abs(psi.a) <= pole:
            continue
        via_chart = hopf.stereographic_inverse(hopf.ratio_chart(psi))
        worst = max(worst, _vec_err(via_chart, hopf.hopf_project(psi)))
    return [make_check("hopf.chart_agreement", worst, tolerances.get().proj)]


def check_ray_invariance(rng, samples):
    tol = tolerances.get()
    proj_err = rho_err = 0.0
    for psi, alpha in zip(random_states(rng, samples), rng.uniform(0, TWO_PI, samples)):
        moved = psi.scaled(cmath.exp(1j * alpha))
        proj_err = max(proj_err, _vec_err(hopf.hopf_project(moved), hopf.hopf_project(psi)))
        rho_err = max(rho_err, _mat_err(qubit.density_matrix(moved), qubit.density_matrix(psi)))
    return [
        make_check("hopf.ray_invariance_projection", proj_err, tol.proj),
        make_check("hopf.ray_invariance_density", rho_err, tol.mat),
    ]


def check_orthogonal_antipodes(rng, samples):
    worst = 0.0
    for psi in random_states(rng, samples):
        perp = PureState(-psi.b.conjugate(), psi.a.conjugate())
        worst = max(worst, float(np.linalg.norm(
            hopf.hopf_project(psi).as_array() + hopf.hopf_project(perp).as_array())))
    return [make_check("hopf.orthogonal_antipodes", worst, tolerances.get().proj)]


def check_stereographic_round_trip(rng, samples):
    worst = 0.0
    zs = rng.normal(size=samples) * 3 + 1j * rng.normal(size=samples) * 3
    for z in zs:
        back = hopf.stereographic_forward(hopf.stereographic_inverse(complex(z)))
        worst = max(worst, math.inf if hopf.is_infinite(back) else abs(back - z) / max(1.0, abs(z)))
    infinity_ok = hopf.is_infinite(hopf.stereographic_forward(hopf.stereographic_inverse(hopf.INFINITY)))
    return [
        make_check("hopf.stereographic_round_trip", worst, tolerances.get().proj),
        make_check("hopf.stereographic_infinity", 0 if infinity_ok else 1, 0),
    ]


def check_fiber_geometry(rng, samples):
    tol = tolerances.get()
    n_bases = max(1, samples // 10)
    proj_err = 0.0
    bad_rank = 0
    for psi in random_states(rng, n_bases):
        base = hopf.hopf_project(psi)
        fiber = hopf.fiber_sample(base, 64)
        for s in fiber.samples:
            proj_err = max(proj_err, _vec_err(hopf.hopf_project(s), base))
        if hopf.numerical_rank(fiber.real_matrix()) != 2:
            bad_rank += 1
    return [
        make_check("hopf.fiber_projection", proj_err, tol.proj),
        make_check("hopf.fiber_great_circle_rank", bad_rank, 0),
    ]


def check_fiber_disjoint(rng, samples):
    n_pairs = max(1, samples // 100)
    worst_gap = math.inf
    states = random_states(rng, 2 * n_pairs)
    for psi, chi in zip(states[::2], states[1::2]):
        f = hopf.fiber_sample(hopf.hopf_project(psi), 64).real_matrix()
        g = hopf.fiber_sample(hopf.hopf_project(chi), 64).real_matrix()
        gap = np.min(np.linalg.norm(f[:, None, :] - g[None, :, :], axis=-1))
        worst_gap = min(worst_gap, float(gap))
    # strictly positive gap: report its negation against a bound of 0
    return [make_check("hopf.fiber_disjoint", -worst_gap, 0.0, "<")]


# -- group-action -----------------------------------------------------------

def check_orbit_axioms(rng, samples):
    failures = 0
    states = random_states(rng, samples)
    alphas = rng.uniform(0, TWO_PI, (samples, 2))
    for i, psi in enumerate(states):
        same1 = group_action.u1_act(group_action.U1Element(alphas[i, 0]), psi)
        same2 = group_action.u1_act(group_action.U1Element(alphas[i, 1]), psi)
        other = states[(i + 1) % len(states)]
        for triple in ((psi, same1, same2), (psi, same1, other), (psi, other, same2)):
            failures += sum(not ok for ok in group_action.is_equivalence_relation(group_action.orbit_equal, *triple).values())
    return [make_check("group_action.orbit_equivalence_axioms", failures, 0)]


def check_partition(rng, samples):
    failures = 0
    states = random_states(rng, samples)
    alphas = rng.uniform(0, TWO_PI, samples)
    for i, psi in enumerate(states):
        for other in (psi.scaled(cmath.exp(1j * alphas[i])), states[(i + 1) % len(states)]):
            equal = group_action.orbit_equal(psi, other)
            reps_match = np.allclose(qubit.canonical_representative(psi).vector,
                                     qubit.canonical_representative(other).vector, rtol=0, atol=1e-9)
            if equal != reps_match:
                failures += 1
    return [make_check("group_action.partition", failures, 0)]


def check_action_axioms(rng, samples):
    failures = 0
    states = random_states(rng, samples)
    alphas = rng.uniform(-10, 10, (samples, 2))
    lams = rng.uniform(0.1, 5, (samples, 2)) * rng.choice([-1, 1], (samples, 2))
    vecs = rng.normal(size=(samples, 3))
    for i in range(samples):
        g1, g2 = group_action.U1Element(alphas[i, 0]), group_action.U1Element(alphas[i, 1])
        failures += sum(not ok for ok in group_action.u1_axioms(g1, g2, states[i]).values())
        failures += sum(not ok for ok in group_action.scalar_axioms(lams[i, 0], lams[i, 1], vecs[i]).values())
    return [make_check("group_action.action_axioms", failures, 0)]


def check_orbit_projects_to_point(rng, samples):
    worst = 0.0
    for psi, alpha in zip(random_states(rng, samples), rng.uniform(0, TWO_PI, samples)):
        other = group_action.u1_act(group_action.U1Element(alpha), psi)
        if group_action.orbit_equal(psi, other):
            worst = max(worst, _vec_err(hopf.hopf_project(psi), hopf.hopf_project(other)))
    return [make_check("group_action.orbit_projects_to_point", worst, tolerances.get().proj)]


# -- gadget -----------------------------------------------------------------

def check_gadget_euler(rng, samples):
    worst = 1.0
    for e in random_euler(rng, samples):
        worst = min(worst, qubit.phase_agreement(gadget.gadget_unitary(e), gadget.euler_unitary(e)))
    return [make_check("gadget.plates_match_euler", 1 - worst, tolerances.get().fid)]


def check_unitarity(rng, samples):
    worst = 0.0
    for e, phi in zip(random_euler(rng, samples), rng.uniform(-TWO_PI, TWO_PI, samples)):
        for m in (gadget.euler_unitary(e), gadget.gadget_unitary(e), gadget.half_wave(phi),
                  gadget.quarter_wave(phi), gadget.rotation_matrix(phi),
                  gadget.gate_rotation_axis(phi), gadget.gate_rotation_z(phi)):
            worst = max(worst, _mat_err(qubit.dagger(m) @ m, qubit.I2))
    return [make_check("gadget.unitarity", worst, tolerances.get().mat)]


def check_half_wave_involution(rng, samples):
    worst = 0.0
    for phi in rng.uniform(-TWO_PI, TWO_PI, samples):
        h = gadget.half_wave(phi)
        worst = max(worst, _mat_err(h @ h, -qubit.I2))
    return [make_check("gadget.half_wave_involution", worst, tolerances.get().mat)]


def check_two_chart_coverage(rng, samples):
    worst = 1.0
    wrong_chart = 0
    for target in bloch_grid():
        choice, e = gadget.target_to_gadget(target)
        western = target.phi == 0.0 or target.phi >= math.pi
        if (choice is gadget.InputChoice.ZERO) != western:
            wrong_chart += 1
        out = gadget.prepare(choice.state, e)
        worst = min(worst, qubit.fidelity(out, qubit.state_from_angles(target)))
    return [
        make_check("gadget.two_chart_coverage", 1 - worst, tolerances.get().fid),
        make_check("gadget.two_chart_assignment", wrong_chart, 0),
    ]


SINGLE_CHART_TARGET = BlochAngles(math.pi / 2, math.pi / 2)
SINGLE_CHART_BOUND = 1 - 1e-4


def best_single_chart_fidelity(target: BlochAngles = SINGLE_CHART_TARGET,
                               n_eta: int = 200, n_zeta: int = 400,
                               zeta_max: float = TWO_PI) -> float:
    """Best fidelity to ``target`` reachable from |0> with xi = 0 on an (eta, zeta) grid."""
    goal = qubit.state_from_angles(target)
    best = 0.0
    for eta in np.linspace(0, math.pi, n_eta):
        for zeta in np.linspace(0, zeta_max, n_zeta):
            out = gadget.prepare(qubit.ZERO, gadget.EulerAngles(0.0, eta, zeta))
            best = max(best, qubit.fidelity(out, goal))
    return best


def check_single_chart_insufficiency(rng, samples):
    return [make_check("gadget.single_chart_insufficiency", best_single_chart_fidelity(), SINGLE_CHART_BOUND, "<")]


def check_antipodality(rng, samples):
    tol = tolerances.get()
    inner_err = proj_err = 0.0
    for eta, zeta in zip(rng.uniform(0, math.pi, samples), rng.uniform(0, TWO_PI, samples)):
        west, east = gadget.prepare_western(eta, zeta), gadget.prepare_eastern(eta, zeta)
        inner_err = max(inner_err, abs(qubit.inner_product(east, west)))
        proj_err = max(proj_err, float(np.linalg.norm(
            hopf.hopf_project(east).as_array() + hopf.hopf_project(west).as_array())))
    return [
        make_check("gadget.antipodal_orthogonality", inner_err, tol.mat),
        make_check("gadget.antipodal_projection", proj_err, tol.proj),
    ]


def check_convention_mirror(rng, samples):
    hopf_err = bloch_err = 0.0
    for g in bloch_grid():
        st = math.sin(g.theta)
        mirror = np.array([st * math.cos(g.phi), st * math.sin(g.phi), -math.cos(g.theta)])
        direct = mirror * np.array([1, 1, -1])
        hopf_err = max(hopf_err, float(np.linalg.norm(hopf.hopf_project(qubit.state_from_angles(g)).as_array() - mirror)))
        bloch_err = max(bloch_err, float(np.linalg.norm(qubit.bloch_vector_from_angles(g).as_array() - direct)))
    return [
        make_check("hopf.convention_mirror_projection", hopf_err, tolerances.get().proj),
        make_check("qubit.convention_bloch_vector", bloch_err, tolerances.get().proj),
    ]


FAMILIES: dict[str, Callable] = {
    "qubit.angle_round_trip": check_angle_round_trip,
    "qubit.consistency_triangle": check_consistency_triangle,
    "qubit.density": check_density_properties,
    "qubit.canonical_representative": check_canonical_representative,
    "qubit.pauli_algebra": check_pauli_algebra,
    "hopf.chart_agreement": check_chart_agreement,
    "hopf.ray_invariance": check_ray_invariance,
    "hopf.orthogonal_antipodes": check_orthogonal_antipodes,
    "hopf.stereographic_round_trip": check_stereographic_round_trip,
    "hopf.fiber_geometry": check_fiber_geometry,
    "hopf.fiber_disjoint": check_fiber_disjoint,
    "hopf.convention_mirror": check_convention_mirror,
    "group_action.orbit_axioms": check_orbit_axioms,
    "group_action.partition": check_partition,
    "group_action.action_axioms": check_action_axioms,
    "group_action.orbit_projects_to_point": check_orbit_projects_to_point,
    "gadget.plates_match_euler": check_gadget_euler,
    "gadget.unitarity": check_unitarity,
    "gadget.half_wave_involution": check_half_wave_involution,
    "gadget.two_chart_coverage": check_two_chart_coverage,
    "gadget.single_chart_insufficiency": check_single_chart_insufficiency,
    "gadget.antipodality": check_antipodality,
}


def family_rng(seed: int, family: str) -> np.random.Generator:
    return np.random.default_rng([seed, zlib.crc32(family.encode())])


def run_family(family: str, seed: int, samples: int) -> list[Check]:
    return FAMILIES[family](family_rng(seed, family), samples)


def run_verification(seed: int = 42, samples: int = 1000, families=None) -> list[Check]:
    if samples < 1:
        raise ValueError(f"samples must be at least 1, got {samples}")
    checks = []
    for family in sorted(families or FAMILIES):
        checks.extend(run_family(family, seed, samples))
    return sorted(checks, key=lambda c: c.name)
