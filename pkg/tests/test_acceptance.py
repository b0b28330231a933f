"""End-to-end checks of the headline results: Fock reflectance curves, squeezed
extremes, the three mixed-state thresholds and the classical-input theorem."""

import math

import numpy as np
import pytest
from scipy.special import comb

from conftest import random_splitter, random_two_mode_state
from beamsplitter_entanglement.entanglement import distribution_entropy, two_mode_squeezed_entropy
from beamsplitter_entanglement.fock import BeamSplitter
from beamsplitter_entanglement.gaussian import (
    Separability,
    beam_split,
    case_output,
    duan_separability,
    is_classical_gaussian,
    reduce_squeezed_vacuum_thermal,
    rotate,
    squeezed_thermal,
    squeezed_thermal_vacuum_elements,
    tensor,
)
from beamsplitter_entanglement.oracle import ModeSpec, apply_bs, build_state, ppt_separability
from beamsplitter_entanglement.squeezing import squeezed_output_entropy
from beamsplitter_entanglement.sweeps import SweepSpec, figure2_sweep

QUARTER = math.pi / 2


def verdict(preset, nbar, s, bs):
    return duan_separability(case_output(preset, nbar, s, bs)).decision


def test_fock_reflectance_curves():
    frame = figure2_sweep(total=10, reflectance=SweepSpec.reflectance(101), max_workers=1)
    curves = {k: group["entropy_nats"].to_numpy() for k, group in frame.groupby("k")}

    vacuum_port = curves[0]
    assert np.argmax(vacuum_port) == 50
    assert np.allclose(vacuum_port, vacuum_port[::-1], atol=1e-10)
    binomial = distribution_entropy([comb(10, k) / 2 ** 10 for k in range(11)])
    assert abs(vacuum_port[50] - binomial) < 1e-12

    assert frame["entropy_nats"].max() <= math.log(11) + 1e-12
    assert curves[5][50] < curves[4][50]


def test_squeezed_extremes_agree_with_oracle():
    s = 0.5
    assert squeezed_output_entropy(s, s, BeamSplitter.balanced(0.0)).nats < 1e-10
    quadrature = squeezed_output_entropy(s, s, BeamSplitter.balanced(QUARTER)).nats
    assert abs(quadrature - two_mode_squeezed_entropy(s)) < 1e-10

    bs = BeamSplitter.balanced(QUARTER)
    evolved = apply_bs(build_state(ModeSpec.squeezed_vacuum(s), ModeSpec.squeezed_vacuum(s), 40), bs)
    assert abs(evolved.reduced_entropy() - quadrature) < 2e-3


@pytest.mark.parametrize("nbar", [0.1, 0.5, 1.0, 2.0])
def test_squeezed_thermal_pair_threshold(nbar):
    bs = BeamSplitter.balanced(QUARTER)
    lo, hi = 0.0, 2.0
    assert verdict("sq-thermal-pair", nbar, lo, bs) is Separability.SEPARABLE
    assert verdict("sq-thermal-pair", nbar, hi, bs) is Separability.ENTANGLED
    while hi - lo > 1e-8:
        mid = 0.5 * (lo + hi)
        if verdict("sq-thermal-pair", nbar, mid, bs) is Separability.ENTANGLED:
            hi = mid
        else:
            lo = mid
    assert abs(hi - math.log(2 * nbar + 1) / 2) < 1e-6


@pytest.mark.parametrize("nbar,s,expected", [
    (0.0, 0.3, Separability.ENTANGLED),
    (0.4, 0.5, Separability.ENTANGLED),
    (0.5, 0.2, Separability.SEPARABLE),
    (1.0, 0.5, Separability.SEPARABLE),
])
def test_squeezed_thermal_vacuum_ignores_reflectance(nbar, s, expected):
    for r in (0.1, 0.3, 0.5, 0.7, 0.9):
        bs = BeamSplitter(2 * math.asin(r), QUARTER)
        assert verdict("sq-thermal+vacuum", nbar, s, bs) is expected


@pytest.mark.parametrize("nbar", np.linspace(0.0, 1.0, 5))
def test_squeezed_vacuum_thermal_reduces_to_squeezed_thermal_vacuum(nbar):
    bs = BeamSplitter(1.1, QUARTER)
    for s in np.linspace(0.1, 0.9, 5):
        output = case_output("sq-vacuum+thermal", nbar, s, bs)
        reduced = reduce_squeezed_vacuum_thermal(output, s, bs)
        assert np.allclose(reduced.matrix, squeezed_thermal_vacuum_elements(nbar, -s, bs).matrix, atol=1e-10)
        assert duan_separability(output).decision is duan_separability(reduced).decision


def random_classical_mode(rng):
    s = rng.uniform(-1.0, 1.0)
    nbar = (math.exp(2 * abs(s)) - 1) / 2 + rng.uniform(0.01, 2.0)
    return rotate(squeezed_thermal(nbar, s), rng.uniform(0, 2 * math.pi))


def test_classical_inputs_never_entangle(rng):
    for _ in range(1000):
        inputs = tensor(random_classical_mode(rng), random_classical_mode(rng))
        assert is_classical_gaussian(inputs)
        output = beam_split(inputs, random_splitter(rng))
        assert duan_separability(output).decision is Separability.SEPARABLE
        assert ppt_separability(output)[1] is Separability.SEPARABLE


def test_duan_agrees_with_ppt(rng):
    checked = 0
    for _ in range(600):
        state = random_two_mode_state(rng)
        nu, decision = ppt_separability(state)
        if abs(nu - 1.0) < 1e-6:
            continue
        assert duan_separability(state).decision is decision
        checked += 1
    assert checked >= 500
