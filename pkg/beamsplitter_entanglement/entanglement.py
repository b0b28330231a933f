# Entanglement quantification for pure two-mode states

import enum
import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.special import entr, xlogy

from .config import NORM_TOL, PHYSICALITY_TOL
from .errors import NormalizationError, PreconditionError, UnphysicalStateError
from .utils import nats_to_bits

logger = logging.getLogger(__name__)


class EntropyMethod(str, enum.Enum):
    FOCK_SCHMIDT = "fock_schmidt"
    GAUSSIAN_SYMPLECTIC = "gaussian_symplectic"


@dataclass(frozen=True)
class EntropyValue:
    """Von Neumann entropy of a reduced state, in nats"""

    nats: float
    method: EntropyMethod
    cutoff: Optional[int] = None

    def __post_init__(self):
        if self.nats < 0:
            raise PreconditionError(f"entropy cannot be negative, got {self.nats}")

    @property
    def bits(self):
        return nats_to_bits(self.nats)

    def __float__(self):
        return float(self.nats)


def schmidt_probabilities(state):
    """Eigenvalues of the reduced density operator of mode a, descending"""
    # singular values of the (N1 | N2) amplitude grid give the Schmidt coefficients
    singular_values = np.linalg.svd(state.amplitudes, compute_uv=False)
    return singular_values ** 2


def _check_normalised(state):
    deviation = abs(state.norm() - 1.0)
    if deviation > NORM_TOL:
        raise NormalizationError(f"state norm deviates from 1 by {deviation:.3e}")


def von_neumann_entropy(state):
    """-sum p ln p over the Schmidt spectrum of a pure TwoModeFockState"""
    _check_normalised(state)
    probabilities = schmidt_probabilities(state)
    # entr(x) = -x ln x with entr(0) = 0
    nats = float(np.sum(entr(probabilities)))
    return EntropyValue(max(nats, 0.0), EntropyMethod.FOCK_SCHMIDT, state.cutoff)


def reduced_entropy_b(state):
    """Entropy of mode b; equals von_neumann_entropy for any pure state"""
    return von_neumann_entropy(state.swapped())


def distribution_entropy(probabilities):
    """-sum p ln p of an explicit probability list"""
    probabilities = np.asarray(probabilities, dtype=float)
    return float(np.sum(entr(probabilities)))


def thermal_entropy(nu):
    """g(nu) = ((nu+1)/2) ln((nu+1)/2) - ((nu-1)/2) ln((nu-1)/2), g(1) = 0"""
    if nu < 1.0 - PHYSICALITY_TOL:
        raise UnphysicalStateError(f"symplectic eigenvalue {nu} is below 1")
    nu = max(nu, 1.0)
    upper, lower = (nu + 1.0) / 2.0, (nu - 1.0) / 2.0
    return float(xlogy(upper, upper) - xlogy(lower, lower))


def two_mode_squeezed_entropy(r):
    """cosh^2 r ln cosh^2 r - sinh^2 r ln sinh^2 r"""
    return thermal_entropy(math.cosh(2.0 * r))


def gaussian_entropy(state, pure=True):
    """Entropy of mode a for a two-mode GaussianState via the symplectic route

    Only meaningful as an entanglement measure for pure states; with pure=True
    the global purity is checked before the reduced block is used.
    """
    if state.modes != 2:
        raise PreconditionError("gaussian_entropy needs a two-mode state")
    if pure and not state.is_pure():
        raise PreconditionError("gaussian_entropy quantifies entanglement only for pure states")

    det_a = float(np.linalg.det(state.block_a))
    # the 2x2 determinant carries rounding of order eps * max|A|^2
    if det_a < 1.0 - PHYSICALITY_TOL * state.scale ** 2:
        raise UnphysicalStateError(f"reduced block has determinant {det_a} < 1")
    nu = math.sqrt(max(det_a, 1.0))
    nats = thermal_entropy(nu)
    logger.debug(f"gaussian_entropy: nu={nu:.12g}, entropy={nats:.12g} nats")
    return EntropyValue(nats, EntropyMethod.GAUSSIAN_SYMPLECTIC)
