# Brute-force reference: truncated Fock density matrices and the PPT test

"""
Independent ground truth for the Fock and Gaussian engines.

Density matrices live on the square basis {(N1, N2): N1, N2 <= cutoff} with
flat index N1 * (cutoff + 1) + N2. The beam splitter acts block by block on
fixed total photon number, restricted to the square, so weight that would
leave the square is lost and caught by the trace guard.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np
from scipy.linalg import block_diag, expm
from scipy.special import entr, gammaln

from .config import (
    ALGEBRA_TOL,
    DECISION_TOL,
    DEFAULT_FOCK_CUTOFF,
    DEFAULT_SQUEEZE_CUTOFF,
    ORACLE_TOL,
    PHYSICALITY_TOL,
    TRACE_GUARD,
    TRACE_TOL,
)
from .errors import NormalizationError, PreconditionError, TruncationError, UnphysicalStateError
from .fock import block_unitary
from .gaussian import Separability

logger = logging.getLogger(__name__)

MODE_KINDS = ("fock", "coherent", "thermal", "squeezed_thermal")


@dataclass(frozen=True)
class ModeSpec:
    """Input descriptor for one port"""

    kind: str
    n: int = 0
    alpha: complex = 0j
    nbar: float = 0.0
    s: float = 0.0
    varphi: float = 0.0

    def __post_init__(self):
        if self.kind not in MODE_KINDS:
            raise PreconditionError(f"unknown mode kind {self.kind!r}; expected one of {MODE_KINDS}")
        if self.n < 0 or self.nbar < 0:
            raise PreconditionError("photon numbers must be non-negative")

    @classmethod
    def fock(cls, n):
        return cls("fock", n=n)

    @classmethod
    def coherent(cls, alpha):
        return cls("coherent", alpha=complex(alpha))

    @classmethod
    def thermal(cls, nbar):
        return cls("thermal", nbar=nbar)

    @classmethod
    def squeezed_thermal(cls, nbar, s, varphi=0.0):
        return cls("squeezed_thermal", nbar=nbar, s=s, varphi=varphi)

    @classmethod
    def squeezed_vacuum(cls, s, varphi=0.0):
        return cls("squeezed_thermal", nbar=0.0, s=s, varphi=varphi)


@dataclass(frozen=True)
class TruncatedDensityMatrix:
    cutoff: int
    rho: np.ndarray = field(repr=False)

    def __post_init__(self):
        size = (self.cutoff + 1) ** 2
        rho = np.array(self.rho, dtype=complex)
        if rho.shape != (size, size):
            raise PreconditionError(f"density matrix must be {size}x{size}, got {rho.shape}")
        if np.abs(rho - rho.conj().T).max() > ALGEBRA_TOL * max(1.0, np.abs(rho).max()):
            raise PreconditionError("density matrix is not Hermitian")
        rho = 0.5 * (rho + rho.conj().T)
        # the trace may fall short by truncation, never exceed 1
        trace = float(np.real(np.trace(rho)))
        if trace > 1.0 + TRACE_TOL:
            raise NormalizationError(f"density matrix has trace {trace:.12g} > 1")
        lowest = float(np.linalg.eigvalsh(rho).min())
        if lowest < -PHYSICALITY_TOL:
            raise UnphysicalStateError(f"density matrix has negative eigenvalue {lowest:.3e}")
        rho.setflags(write=False)
        object.__setattr__(self, "rho", rho)

    @classmethod
    def from_pure(cls, state, cutoff=None):
        """Projector onto a TwoModeFockState, re-embedded in the square basis"""
        cutoff = state.cutoff if cutoff is None else cutoff
        grid = np.zeros((cutoff + 1, cutoff + 1), dtype=complex)
        keep = min(cutoff, state.cutoff) + 1
        grid[:keep, :keep] = state.amplitudes[:keep, :keep]
        vector = grid.reshape(-1)
        return cls(cutoff, np.outer(vector, vector.conj()))

    @property
    def dimension(self):
        return self.cutoff + 1

    def trace(self):
        return float(np.real(np.trace(self.rho)))

    def tensor(self):
        """rho[N1, N2, M1, M2]"""
        d = self.dimension
        return self.rho.reshape(d, d, d, d)

    def populations(self):
        """P(N1, N2) on the square grid"""
        d = self.dimension
        return np.real(np.diag(self.rho)).reshape(d, d)

    def reduced_a(self):
        return np.einsum("ijkj->ik", self.tensor())

    def reduced_b(self):
        return np.einsum("ijil->jl", self.tensor())

    def partial_transpose(self):
        """Transpose on mode b: swap N2 and M2"""
        d = self.dimension
        return self.tensor().transpose(0, 3, 2, 1).reshape(d * d, d * d)

    def reduced_entropy(self, mode="a"):
        """Von Neumann entropy of one mode in nats, renormalised by the trace"""
        if mode not in ("a", "b"):
            raise PreconditionError(f"mode must be 'a' or 'b', got {mode!r}")
        reduced = self.reduced_a() if mode == "a" else self.reduced_b()
        eigenvalues = np.clip(np.linalg.eigvalsh(reduced), 0.0, None)
        total = eigenvalues.sum()
        if total <= 0:
            raise TruncationError("reduced state carries no weight inside the cutoff")
        return float(np.sum(entr(eigenvalues / total)))


# --- single-mode inputs ---------------------------------------------------------

def _coherent_amplitudes(alpha, cutoff):
    numbers = np.arange(cutoff + 1)
    if alpha == 0:
        amplitudes = np.zeros(cutoff + 1, dtype=complex)
        amplitudes[0] = 1.0
        return amplitudes
    magnitude = np.exp(-abs(alpha) ** 2 / 2 + numbers * math.log(abs(alpha)) - 0.5 * gammaln(numbers + 1))
    return magnitude * np.exp(1j * numbers * np.angle(alpha))


def _thermal_populations(nbar, size):
    numbers = np.arange(size)
    if nbar == 0:
        populations = np.zeros(size)
        populations[0] = 1.0
        return populations
    return (nbar / (1.0 + nbar)) ** numbers / (1.0 + nbar)


def squeezed_vacuum_amplitudes(s, varphi, cutoff):
    """<2n| S(s e^{i varphi}) |0> = (-e^{i varphi} tanh s)^n sqrt((2n)!) / (2^n n!) / sqrt(cosh s)"""
    amplitudes = np.zeros(cutoff + 1, dtype=complex)
    ratio = -np.exp(1j * varphi) * math.tanh(s)
    for n in range(cutoff // 2 + 1):
        log_weight = 0.5 * gammaln(2 * n + 1) - n * math.log(2.0) - gammaln(n + 1)
        amplitudes[2 * n] = ratio ** n * math.exp(log_weight) / math.sqrt(math.cosh(s))
    return amplitudes


def _squeeze_operator(s, varphi, size):
    # S(zeta) = exp[(zeta^* a^2 - zeta a^dag^2) / 2] on a truncated space
    zeta = s * np.exp(1j * varphi)
    lowering = np.diag(np.sqrt(np.arange(1, size)), k=1)
    square = lowering @ lowering
    return expm(0.5 * (np.conj(zeta) * square - zeta * square.conj().T))


def _single_mode_density(spec, cutoff):
    size = cutoff + 1
    if spec.kind == "fock":
        if spec.n > cutoff:
            raise PreconditionError(f"Fock state |{spec.n}> exceeds cutoff {cutoff}")
        rho = np.zeros((size, size), dtype=complex)
        rho[spec.n, spec.n] = 1.0
        return rho
    if spec.kind == "coherent":
        amplitudes = _coherent_amplitudes(spec.alpha, cutoff)
        return np.outer(amplitudes, amplitudes.conj())
    if spec.kind == "thermal":
        return np.diag(_thermal_populations(spec.nbar, size)).astype(complex)
    if spec.nbar == 0:
        amplitudes = squeezed_vacuum_amplitudes(spec.s, spec.varphi, cutoff)
        return np.outer(amplitudes, amplitudes.conj())
    # squeeze a thermal state on an enlarged space, then crop
    enlarged = 2 * size + 40
    squeezer = _squeeze_operator(spec.s, spec.varphi, enlarged)
    thermal_rho = np.diag(_thermal_populations(spec.nbar, enlarged))
    rho = squeezer @ thermal_rho @ squeezer.conj().T
    return rho[:size, :size]


def default_cutoff(mode_a, mode_b):
    """Fock inputs fit under DEFAULT_FOCK_CUTOFF; anything with a tail gets DEFAULT_SQUEEZE_CUTOFF"""
    if mode_a.kind == "fock" and mode_b.kind == "fock":
        return max(DEFAULT_FOCK_CUTOFF, mode_a.n + mode_b.n)
    return DEFAULT_SQUEEZE_CUTOFF


def build_state(mode_a, mode_b, cutoff=None):
    """Product density matrix rho_a (x) rho_b on the square basis"""
    cutoff = default_cutoff(mode_a, mode_b) if cutoff is None else cutoff
    if cutoff < 0:
        raise PreconditionError(f"cutoff must be non-negative, got {cutoff}")
    factors = []
    for label, spec in (("a", mode_a), ("b", mode_b)):
        rho = _single_mode_density(spec, cutoff)
        trace = float(np.real(np.trace(rho)))
        if trace < 1.0 - TRACE_GUARD:
            raise TruncationError(f"mode {label} keeps only {trace:.6f} of its weight below cutoff {cutoff}")
        factors.append(rho)
    logger.debug(f"built product state {mode_a.kind} (x) {mode_b.kind} at cutoff {cutoff}")
    return TruncatedDensityMatrix(cutoff, np.kron(factors[0], factors[1]))


# --- evolution and witnesses -------------------------------------------------------

def square_unitary(cutoff, bs):
    """Beam-splitter blocks for totals up to 2*cutoff, restricted to N1, N2 <= cutoff"""
    d = cutoff + 1
    unitary = np.zeros((d * d, d * d), dtype=complex)
    for total in range(2 * cutoff + 1):
        block = block_unitary(total, bs)
        ks = np.arange(max(0, total - cutoff), min(total, cutoff) + 1)
        flat = ks * d + (total - ks)
        unitary[np.ix_(flat, flat)] = block[np.ix_(ks, ks)]
    return unitary


def apply_bs(rho, bs):
    unitary = square_unitary(rho.cutoff, bs)
    evolved = TruncatedDensityMatrix(rho.cutoff, unitary @ rho.rho @ unitary.conj().T)
    loss = rho.trace() - evolved.trace()
    if loss > TRACE_GUARD:
        raise TruncationError(f"beam splitter pushed {loss:.3e} of the weight beyond cutoff {rho.cutoff}")
    if loss > ORACLE_TOL:
        logger.debug(f"apply_bs: truncation loss {loss:.3e} at cutoff {rho.cutoff}")
    return evolved


def negativity(rho):
    """Magnitude of the sum of negative partial-transpose eigenvalues"""
    eigenvalues = np.linalg.eigvalsh(rho.partial_transpose())
    return float(-eigenvalues[eigenvalues < 0].sum())


def log_negativity(rho):
    """ln ||rho^T_b||_1 in nats"""
    eigenvalues = np.linalg.eigvalsh(rho.partial_transpose())
    return float(math.log(np.abs(eigenvalues).sum()))


# --- Gaussian PPT -------------------------------------------------------------------

_OMEGA = block_diag(np.array([[0.0, 1.0], [-1.0, 0.0]]), np.array([[0.0, 1.0], [-1.0, 0.0]]))


def ppt_symplectic_spectrum(state):
    """Symplectic eigenvalues of the partially transposed matrix from |eig(i Omega M~)|"""
    if state.modes != 2:
        raise PreconditionError("ppt_separability needs a two-mode state")
    flip = np.diag([1.0, 1.0, 1.0, -1.0])
    transposed = flip @ state.matrix @ flip
    moduli = np.sort(np.abs(np.linalg.eigvals(1j * _OMEGA @ transposed)))
    # eigenvalues come in +/- pairs
    return moduli[::2]


def ppt_separability(state, tol: Optional[float] = None):
    """Simon criterion: separable iff the partial transpose is still physical"""
    tol = DECISION_TOL if tol is None else tol
    nu_min = float(ppt_symplectic_spectrum(state)[0])
    decision = Separability.SEPARABLE if nu_min >= 1.0 - tol else Separability.ENTANGLED
    return nu_min, decision
