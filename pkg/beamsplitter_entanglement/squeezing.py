# Pure squeezed-vacuum inputs: phase reduction, two-mode squeezing equivalent, entropy

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Tuple

from .config import ALGEBRA_TOL
from .entanglement import gaussian_entropy
from .errors import PreconditionError
from .fock import BeamSplitter
from .gaussian import beam_split, squeezed_vacuum, tensor

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SqueezeParams:
    """Squeezing S(s e^{i varphi}) applied to vacuum on each input port"""

    s1: float
    s2: float
    varphi1: float = 0.0
    varphi2: float = 0.0

    def __post_init__(self):
        if self.s1 < 0 or self.s2 < 0:
            raise PreconditionError(f"squeezing magnitudes must be non-negative, got {self.s1}, {self.s2}")

    @property
    def is_canonical(self):
        return self.varphi1 == 0.0 and self.varphi2 == 0.0


@dataclass(frozen=True)
class Canonicalized:
    """Real-squeezing configuration plus the output rotations that were dropped"""

    params: SqueezeParams
    bs: BeamSplitter
    local_rotations: Tuple[float, float]


def canonicalize_phases(params, bs):
    """Move the squeezing phases into the splitter phase

    B(phi) R_a(x) R_b(y) = R_a(x) R_b(y) B(phi - x + y), and
    S(s e^{i varphi}) = R(varphi/2) S(s) R^dag(varphi/2), so the input phases
    become output rotations (varphi1/2, varphi2/2), which leave entanglement unchanged.
    """
    half_a, half_b = params.varphi1 / 2.0, params.varphi2 / 2.0
    canonical = Canonicalized(
        params=SqueezeParams(params.s1, params.s2),
        bs=bs.with_phi(bs.phi - half_a + half_b),
        local_rotations=(half_a, half_b),
    )
    logger.debug(f"canonicalized phases {(params.varphi1, params.varphi2)} -> phi={canonical.bs.phi:.12g}")
    return canonical


def _quarter_turns(phi):
    turns = phi / (math.pi / 2.0)
    nearest = round(turns)
    return nearest if abs(turns - nearest) <= ALGEBRA_TOL else None


def decomposition_applies(bs):
    """Balanced splitter with phi a multiple of pi/2"""
    return bs.is_balanced and _quarter_turns(bs.phi) is not None


def effective_two_mode_squeezing(s1, s2, phi):
    """zeta_ab = (s1 e^{i phi} - s2 e^{-i phi}) / 2 for a 50:50 splitter, phi = l pi/2"""
    if _quarter_turns(phi) is None:
        raise PreconditionError(f"two-mode squeezing decomposition needs phi = l*pi/2, got {phi}")
    return 0.5 * (s1 * cmath.exp(1j * phi) - s2 * cmath.exp(-1j * phi))


def squeezed_output(s1, s2, bs):
    return beam_split(tensor(squeezed_vacuum(s1), squeezed_vacuum(s2)), bs)


def squeezed_output_entropy(s1, s2, bs):
    """Entropy of mode a after real squeezed vacua s1, s2 meet at the splitter"""
    entropy = gaussian_entropy(squeezed_output(s1, s2, bs))
    logger.debug(f"squeezed output s1={s1:g} s2={s2:g} theta={bs.theta:g} phi={bs.phi:g} -> {entropy.nats:.12g} nats")
    return entropy


def squeezed_params_entropy(params, bs):
    canonical = canonicalize_phases(params, bs)
    return squeezed_output_entropy(canonical.params.s1, canonical.params.s2, canonical.bs)
