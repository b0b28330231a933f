import logging
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import random_two_mode_state
from beamsplitter_entanglement.errors import (
    PreconditionError,
    StandardFormDegenerate,
    UnphysicalStateError,
)
from beamsplitter_entanglement.fock import BeamSplitter
from beamsplitter_entanglement.gaussian import (
    GaussianState,
    Separability,
    aligned_frame,
    beam_split,
    beam_splitter_transform,
    case_output,
    duan_separability,
    from_elements,
    is_classical_gaussian,
    is_nonclassical,
    is_pure,
    local_squeeze,
    partial_transpose_min_eigenvalue,
    reduce_squeezed_vacuum_thermal,
    rotate,
    rotate_local,
    squeeze,
    squeezed_thermal,
    squeezed_thermal_pair_elements,
    squeezed_thermal_vacuum_elements,
    squeezed_vacuum,
    squeezed_vacuum_thermal_elements,
    symplectic_eigenvalues,
    tensor,
    thermal,
    to_standard_form,
    two_mode_squeezed_vacuum,
    vacuum,
)
from beamsplitter_entanglement.oracle import ppt_separability
from beamsplitter_entanglement.squeezing import squeezed_output_entropy

QUARTER = math.pi / 2


def invariants(state):
    m = state.matrix
    return np.array([
        np.linalg.det(m[:2, :2]), np.linalg.det(m[2:, 2:]), np.linalg.det(m[:2, 2:]), np.linalg.det(m),
    ])


def nonclassical_margin(nbar, s):
    return (2 * nbar + 1) * math.exp(-2 * s) - 1.0


# --- constructors and validation ---------------------------------------------------

def test_single_mode_constructors():
    assert np.allclose(vacuum().matrix, np.eye(2))
    assert np.allclose(thermal(1.0).matrix, 3 * np.eye(2))
    assert np.allclose(squeezed_thermal(0.0, 0.5).matrix, np.diag([math.exp(-1), math.exp(1)]))
    assert np.allclose(squeezed_thermal(0.5, 0.0).matrix, thermal(0.5).matrix)


def test_invalid_matrices():
    with pytest.raises(UnphysicalStateError):
        GaussianState(0.5 * np.eye(2))
    with pytest.raises(UnphysicalStateError):
        GaussianState(np.array([[1.0, 2.0], [2.0, 1.0]]))
    with pytest.raises(UnphysicalStateError):
        from_elements(1.0, 1.0, 1.0, 1.0, 0.5, -0.5)
    with pytest.raises(PreconditionError):
        GaussianState(np.array([[1.0, 0.5], [0.0, 1.0]]))
    with pytest.raises(PreconditionError):
        thermal(-0.1)


def test_squeezing_phase_rotates_the_ellipse():
    assert squeezed_vacuum(0.4, math.pi) == squeezed_thermal(0.0, -0.4)
    assert squeezed_vacuum(0.4, 0.0) == squeezed_thermal(0.0, 0.4)
    assert rotate(thermal(0.7), 1.1) == thermal(0.7)


def test_two_mode_squeezed_vacuum():
    state = two_mode_squeezed_vacuum(0.5)
    assert is_pure(state)
    assert abs(partial_transpose_min_eigenvalue(state) - math.exp(-1.0)) < 1e-12
    assert np.allclose(symplectic_eigenvalues(state), [1.0, 1.0], atol=1e-10)


@pytest.mark.parametrize("r", [0.0, 1.0, 2.0, 3.0])
def test_strong_two_mode_squeezing_stays_physical(r):
    state = two_mode_squeezed_vacuum(r)
    assert is_pure(state)
    assert abs(partial_transpose_min_eigenvalue(state) - math.exp(-2.0 * r)) < 1e-12 * state.scale


def test_pure_splitter_outputs_are_physical_and_pure():
    # squeezed vacua through every kind of splitter: all symplectic eigenvalues stay at 1
    for s1 in np.linspace(0.0, 2.0, 6):
        for s2 in np.linspace(0.0, 2.0, 6):
            inputs = tensor(squeezed_vacuum(s1), squeezed_vacuum(s2, 0.7))
            for reflectance in (0.0, 0.01, 0.3, 0.5, 0.99, 1.0):
                for phi in np.linspace(0.0, 2 * math.pi, 9):
                    state = beam_split(inputs, BeamSplitter.from_reflectance(reflectance, phi))
                    assert is_pure(state)
                    assert np.allclose(symplectic_eigenvalues(state), 1.0, rtol=0.0, atol=1e-12 * state.scale)


def test_symplectic_spectrum_of_mixed_product():
    state = tensor(thermal(0.5), squeezed_thermal(2.0, 0.5))
    assert np.allclose(symplectic_eigenvalues(state), [2.0, 5.0], atol=1e-12)
    assert not is_pure(state)


def test_thin_thermal_noise_is_not_pure():
    assert not is_pure(tensor(thermal(1e-6), vacuum()))


def test_weakly_entangled_pure_output_is_physical():
    state = case_output("sq-thermal-pair", 0.0, 0.001, BeamSplitter.from_reflectance(0.01, QUARTER))
    assert is_pure(state)
    assert partial_transpose_min_eigenvalue(state) < 1.0 - 1e-4


# --- transformations -------------------------------------------------------------

def test_beam_splitter_transform_is_orthogonal():
    transform = beam_splitter_transform(BeamSplitter(1.1, 2.3))
    assert np.allclose(transform.T @ transform, np.eye(4), atol=1e-14)


def test_beam_splitter_preserves_symplectic_spectrum(rng):
    for _ in range(20):
        state = random_two_mode_state(rng)
        out = beam_split(state, BeamSplitter(rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)))
        assert np.allclose(symplectic_eigenvalues(out), symplectic_eigenvalues(state), rtol=1e-9)


def test_splitter_phase_is_a_local_rotation(rng):
    state = random_two_mode_state(rng)
    theta, phi = 0.9, 1.7
    direct = beam_split(state, BeamSplitter(theta, phi))
    via_rotations = rotate_local(beam_split(rotate_local(state, 0.0, phi), BeamSplitter(theta, 0.0)), 0.0, -phi)
    assert np.allclose(direct.matrix, via_rotations.matrix, atol=1e-10)


def test_equal_squeezed_vacua_stay_uncorrelated_at_zero_phase():
    out = beam_split(tensor(squeezed_vacuum(0.6), squeezed_vacuum(0.6)), BeamSplitter.balanced(0.0))
    assert np.allclose(out.block_c, 0.0, atol=1e-14)


def test_local_squeeze_examples():
    pair = tensor(squeezed_thermal(0.3, 0.5), vacuum())
    assert local_squeeze(pair, 0.0, 0.0) == pair
    restored = local_squeeze(pair, -0.5, 0.0)
    assert np.allclose(restored.block_a, 1.6 * np.eye(2), atol=1e-12)
    squeezed = local_squeeze(tensor(vacuum(), vacuum()), 0.7, 0.0)
    assert np.allclose(squeezed.block_a, squeezed_thermal(0.0, 0.7).matrix)
    assert squeeze(vacuum(), 0.7) == squeezed_thermal(0.0, 0.7)


def test_operations_check_mode_count():
    with pytest.raises(PreconditionError):
        beam_split(vacuum(), BeamSplitter.balanced())
    with pytest.raises(PreconditionError):
        rotate(tensor(vacuum(), vacuum()), 0.1)


# --- classicality --------------------------------------------------------------------

def test_nonclassicality():
    assert is_nonclassical(squeezed_thermal(0.0, 0.3))
    assert not is_nonclassical(thermal(2.0))
    s = 0.4
    assert not is_nonclassical(squeezed_thermal((math.exp(2 * s) - 1) / 2, s))


def test_classical_inputs_stay_separable():
    for nbar_a, nbar_b in [(0.0, 0.0), (0.5, 0.1), (2.0, 0.0)]:
        inputs = tensor(thermal(nbar_a), thermal(nbar_b))
        assert is_classical_gaussian(inputs)
        for theta in (0.4, QUARTER, 2.5):
            out = beam_split(inputs, BeamSplitter(theta, 0.8))
            assert duan_separability(out).decision is Separability.SEPARABLE
            assert ppt_separability(out)[1] is Separability.SEPARABLE


def test_squeezed_input_is_not_classical():
    assert not is_classical_gaussian(tensor(squeezed_thermal(0.0, 0.2), vacuum()))


# --- printed element blocks ------------------------------------------------------------

@pytest.mark.parametrize("nbar,s", [(0.0, 0.5), (0.3, 0.2), (1.0, 0.8)])
def test_squeezed_thermal_pair_block(nbar, s):
    out = case_output("sq-thermal-pair", nbar, s, BeamSplitter.balanced(QUARTER))
    assert np.allclose(
        rotate_local(out, 0.0, QUARTER + math.pi).matrix,
        squeezed_thermal_pair_elements(nbar, s).matrix,
        atol=1e-10,
    )


@pytest.mark.parametrize("nbar,s,theta", [(0.0, 0.5, 1.0), (0.4, 0.3, QUARTER), (1.2, 0.9, 2.2)])
def test_squeezed_thermal_vacuum_block(nbar, s, theta):
    # the printed block has t and r exchanged relative to this splitter convention
    out = case_output("sq-thermal+vacuum", nbar, s, BeamSplitter(math.pi - theta, QUARTER))
    assert np.allclose(
        rotate_local(out, 0.0, QUARTER + math.pi).matrix,
        squeezed_thermal_vacuum_elements(nbar, s, BeamSplitter(theta, QUARTER)).matrix,
        atol=1e-10,
    )


@pytest.mark.parametrize("nbar,s,theta", [(0.0, 0.5, 1.0), (0.4, 0.3, QUARTER), (1.2, 0.9, 2.2)])
def test_squeezed_vacuum_thermal_block(nbar, s, theta):
    bs = BeamSplitter(theta, QUARTER)
    out = case_output("sq-vacuum+thermal", nbar, s, bs)
    assert np.allclose(aligned_frame(out, bs).matrix, squeezed_vacuum_thermal_elements(nbar, s, bs).matrix, atol=1e-10)


@pytest.mark.parametrize("nbar,s,theta", [(0.0, 0.5, 1.0), (0.4, 0.3, QUARTER), (1.2, 0.9, 2.2), (0.1, 0.05, 0.3)])
def test_local_squeezing_reduction(nbar, s, theta):
    bs = BeamSplitter(theta, QUARTER)
    reduced = reduce_squeezed_vacuum_thermal(case_output("sq-vacuum+thermal", nbar, s, bs), s, bs)
    assert np.allclose(reduced.matrix, squeezed_thermal_vacuum_elements(nbar, -s, bs).matrix, atol=1e-10)


def test_unknown_preset():
    with pytest.raises(PreconditionError):
        case_output("two-cats", 0.0, 0.1, BeamSplitter.balanced())


# --- standard form ----------------------------------------------------------------------

def test_symmetric_block_is_already_in_standard_form():
    nbar, s = 0.3, 0.4
    elements = squeezed_thermal_pair_elements(nbar, s)
    form, _ = to_standard_form(elements)
    m = elements.matrix
    assert np.allclose([form.b1, form.b2, form.d1, form.d2], [m[0, 0]] * 4, atol=1e-10)
    assert abs(form.c1 - m[0, 2]) < 1e-10
    assert abs(form.c2 - m[1, 3]) < 1e-10


def test_standard_form_is_locally_equivalent(rng):
    for _ in range(25):
        state = random_two_mode_state(rng)
        form, transform = to_standard_form(state)
        reduced = form.as_state()
        scale = max(1.0, np.abs(reduced.matrix).max(), np.abs(state.matrix).max())
        assert np.allclose(invariants(reduced), invariants(state), rtol=1e-7, atol=1e-9 * scale ** 4)
        assert np.allclose(transform.apply(state).matrix, reduced.matrix, atol=1e-8 * scale)
        assert abs(form.ratio_residual()) < 1e-8 * scale ** 2
        assert abs(form.correlation_residual()) < 1e-8 * scale
        assert form.c1 <= 0.0

def test_standard_form_ignores_local_operations(rng):
    base = squeezed_thermal_vacuum_elements(0.2, 0.6, BeamSplitter(1.0, QUARTER))
    reference, _ = to_standard_form(base)
    for _ in range(10):
        moved = rotate_local(
            local_squeeze(rotate_local(base, rng.uniform(0, 6), rng.uniform(0, 6)), rng.uniform(-1, 1), rng.uniform(-1, 1)),
            rng.uniform(0, 6), rng.uniform(0, 6),
        )
        form, _ = to_standard_form(moved)
        for name, value in reference.as_dict().items():
            assert abs(getattr(form, name) - value) < 1e-9 * max(1.0, abs(value))


def test_vacuum_pair_is_degenerate():
    with pytest.raises(StandardFormDegenerate):
        to_standard_form(tensor(vacuum(), vacuum()))
    verdict = duan_separability(tensor(vacuum(), vacuum()))
    assert verdict.decision is Separability.SEPARABLE
    assert verdict.branch == "degenerate"


# --- Duan criterion ----------------------------------------------------------------------

GRID = [(nbar, s) for nbar in (0.0, 0.1, 0.5, 1.0, 2.0) for s in (0.05, 0.2, 0.5, 0.9, 1.3)]


@pytest.mark.parametrize("nbar,s", [p for p in GRID if abs(nonclassical_margin(*p)) > 1e-3])
def test_two_squeezed_thermal_inputs(nbar, s):
    verdict = duan_separability(case_output("sq-thermal-pair", nbar, s, BeamSplitter.balanced(QUARTER)))
    assert verdict.entangled == (nonclassical_margin(nbar, s) < 0)


@pytest.mark.parametrize("reflectance", [0.1, 0.5, 0.8])
def test_squeezed_thermal_with_vacuum(reflectance):
    bs = BeamSplitter.from_reflectance(reflectance, QUARTER)
    for nbar, s in GRID:
        if abs(nonclassical_margin(nbar, s)) < 1e-3:
            continue
        verdict = duan_separability(case_output("sq-thermal+vacuum", nbar, s, bs))
        assert verdict.entangled == (nonclassical_margin(nbar, s) < 0), (nbar, s, reflectance)


@pytest.mark.parametrize("reflectance", [0.2, 0.5, 0.7])
def test_squeezed_vacuum_with_thermal(reflectance):
    bs = BeamSplitter.from_reflectance(reflectance, QUARTER)
    for nbar, s in GRID:
        if abs(nonclassical_margin(nbar, s)) < 1e-3:
            continue
        out = case_output("sq-vacuum+thermal", nbar, s, bs)
        verdict = duan_separability(out)
        reduced = duan_separability(reduce_squeezed_vacuum_thermal(out, s, bs))
        assert verdict.decision is reduced.decision
        assert verdict.entangled == (nonclassical_margin(nbar, s) < 0), (nbar, s, reflectance)


def test_threshold_is_separable():
    s = 0.5
    nbar = (math.exp(2 * s) - 1) / 2
    for preset in ("sq-thermal-pair", "sq-thermal+vacuum"):
        verdict = duan_separability(case_output(preset, nbar, s, BeamSplitter.balanced(QUARTER)))
        assert verdict.decision is Separability.SEPARABLE
        assert abs(verdict.ppt_min_symplectic - 1.0) < 1e-9


def test_two_mode_squeezed_vacuum_is_entangled():
    verdict = duan_separability(two_mode_squeezed_vacuum(0.5))
    assert verdict.entangled
    assert verdict.duan_lhs < verdict.duan_rhs
    assert abs(verdict.ppt_min_symplectic - math.exp(-1.0)) < 1e-12


@given(st.floats(0.0, 2.0), st.floats(0.0, 1.5), st.floats(0.05, 0.95))
@settings(max_examples=60, deadline=None)
def test_verdict_does_not_depend_on_reflectance(nbar, s, reflectance):
    if abs(nonclassical_margin(nbar, s)) < 1e-6 or s < 1e-6:
        return
    bs = BeamSplitter.from_reflectance(reflectance, QUARTER)
    verdict = duan_separability(case_output("sq-thermal+vacuum", nbar, s, bs))
    assert verdict.entangled == (nonclassical_margin(nbar, s) < 0)


def test_verdict_serialises():
    payload = duan_separability(two_mode_squeezed_vacuum(0.3)).to_dict()
    assert payload["decision"] == "entangled"
    assert set(payload["standard_form"]) == {"b1", "b2", "d1", "d2", "c1", "c2"}


def test_debug_messages_are_preformatted(caplog):
    with caplog.at_level(logging.DEBUG, logger="beamsplitter_entanglement"):
        duan_separability(two_mode_squeezed_vacuum(0.3))
        squeezed_output_entropy(0.5, 0.2, BeamSplitter.balanced(QUARTER))
    records = [r for r in caplog.records if r.name.startswith("beamsplitter_entanglement.")]
    assert {r.name for r in records} >= {
        "beamsplitter_entanglement.gaussian",
        "beamsplitter_entanglement.entanglement",
        "beamsplitter_entanglement.squeezing",
    }
    assert all(not r.args for r in records)
    assert any(r.getMessage().startswith("duan: lhs=") for r in records)


def test_from_elements_layout():
    state = from_elements(2.0, 3.0, 2.5, 3.5, -0.5, 0.4)
    assert state.matrix[0, 2] == -0.5
    assert state.matrix[1, 3] == 0.4
    assert state.matrix[0, 1] == 0.0
