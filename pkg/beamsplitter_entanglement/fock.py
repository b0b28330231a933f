# Exact beam-splitter action on two-mode Fock states

"""
Fock-basis engine.

The beam splitter is B = exp[(theta/2)(a^dag b e^{i phi} - a b^dag e^{-i phi})]
with t = cos(theta/2), r = sin(theta/2). In the Heisenberg picture
B^dag a B = t a + r e^{i phi} b, so displaced inputs (alpha, beta) leave as
(t alpha + r e^{i phi} beta, t beta - r e^{-i phi} alpha).

Two-mode amplitudes are stored on a square (cutoff+1) x (cutoff+1) grid indexed
by (N1, N2); only the triangle N1 + N2 <= cutoff may be populated. Vectors and
unitaries use the triangular ordering returned by fock_basis().

Phase note: expanding B|n1,n2> = (t a^dag - r e^{-i phi} b^dag)^n1
(r e^{i phi} a^dag + t b^dag)^n2 |0,0> / sqrt(n1! n2!) reproduces the printed
overall factor e^{-i phi (n1 - N1)} term by term, so the closed form and the
matrix exponential agree without any extra global phase. Example: B|1,1> at
theta = pi/2 is (e^{i phi}|2,0> - e^{-i phi}|0,2>)/sqrt(2), which differs from the
textbook (|0,2> + e^{i phi}|2,0>)/sqrt(2) only by per-component phases that
drop out of populations and entropies.
"""

import functools
import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.linalg import expm
from scipy.special import gammaln

from .config import ALGEBRA_TOL, LADDER_THRESHOLD, NORM_TOL
from .errors import NumericalGuardError, PreconditionError
from .utils import reduce_phase

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BeamSplitter:
    """Lossless beam splitter; theta in [0, pi], phi reduced to [0, 2pi)"""

    theta: float
    phi: float = 0.0

    def __post_init__(self):
        theta = float(self.theta)
        if not (-ALGEBRA_TOL <= theta <= math.pi + ALGEBRA_TOL):
            raise PreconditionError(f"theta must lie in [0, pi], got {theta}")
        object.__setattr__(self, "theta", min(max(theta, 0.0), math.pi))
        object.__setattr__(self, "phi", reduce_phase(self.phi))

    @classmethod
    def from_reflectance(cls, reflectance, phi=0.0):
        if not 0.0 <= reflectance <= 1.0:
            raise PreconditionError(f"reflectance must lie in [0, 1], got {reflectance}")
        return cls(2.0 * math.asin(math.sqrt(reflectance)), phi)

    @classmethod
    def balanced(cls, phi=0.0):
        return cls(math.pi / 2, phi)

    @property
    def t(self):
        return math.cos(self.theta / 2)

    @property
    def r(self):
        return math.sin(self.theta / 2)

    @property
    def reflectance(self):
        return self.r ** 2

    @property
    def is_balanced(self):
        return abs(self.theta - math.pi / 2) <= ALGEBRA_TOL

    def with_phi(self, phi):
        return BeamSplitter(self.theta, phi)


def fock_basis(cutoff):
    """Two-mode basis {(N1, N2): N1 + N2 <= cutoff}, grouped by total photon number"""
    if cutoff < 0:
        raise PreconditionError(f"cutoff must be non-negative, got {cutoff}")
    return [(n1, total - n1) for total in range(cutoff + 1) for n1 in range(total + 1)]


def basis_index(n1, n2):
    """Position of (n1, n2) in the triangular ordering of fock_basis()"""
    total = n1 + n2
    return total * (total + 1) // 2 + n1


@dataclass(frozen=True)
class TwoModeFockState:
    """Pure two-mode state with amplitudes[N1, N2] on the triangle N1 + N2 <= cutoff"""

    cutoff: int
    amplitudes: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.cutoff < 0:
            raise PreconditionError(f"cutoff must be non-negative, got {self.cutoff}")
        grid = np.array(self.amplitudes, dtype=complex)
        size = self.cutoff + 1
        if grid.shape != (size, size):
            raise PreconditionError(f"amplitude grid must be {size}x{size}, got {grid.shape}")
        outside = np.add.outer(np.arange(size), np.arange(size)) > self.cutoff
        if np.any(np.abs(grid[outside]) > 0):
            raise PreconditionError("amplitudes populated beyond the total photon cutoff")
        grid.setflags(write=False)
        object.__setattr__(self, "amplitudes", grid)

    @classmethod
    def product(cls, n1, n2, cutoff=None):
        cutoff = n1 + n2 if cutoff is None else cutoff
        if n1 < 0 or n2 < 0:
            raise PreconditionError("photon numbers must be non-negative")
        if n1 + n2 > cutoff:
            raise PreconditionError(f"|{n1},{n2}> does not fit under cutoff {cutoff}")
        grid = np.zeros((cutoff + 1, cutoff + 1), dtype=complex)
        grid[n1, n2] = 1.0
        return cls(cutoff, grid)

    def amplitude(self, n1, n2):
        if n1 < 0 or n2 < 0 or n1 + n2 > self.cutoff:
            return 0j
        return complex(self.amplitudes[n1, n2])

    def to_vector(self):
        return np.array([self.amplitudes[n1, n2] for n1, n2 in fock_basis(self.cutoff)])

    def norm(self):
        return float(np.sum(np.abs(self.amplitudes) ** 2))

    def support(self, tol=ALGEBRA_TOL):
        """(N1, N2) pairs whose amplitude magnitude exceeds tol"""
        rows, cols = np.nonzero(np.abs(self.amplitudes) > tol)
        return sorted(zip(rows.tolist(), cols.tolist()))

    def phase_rotated(self, theta_a=0.0, theta_b=0.0):
        """Apply exp(i theta_a n_a) exp(i theta_b n_b)"""
        numbers = np.arange(self.cutoff + 1)
        phases = np.outer(np.exp(1j * theta_a * numbers), np.exp(1j * theta_b * numbers))
        return TwoModeFockState(self.cutoff, self.amplitudes * phases)

    def swapped(self):
        """Exchange the roles of modes a and b"""
        return TwoModeFockState(self.cutoff, self.amplitudes.T)


def _log_weight(power, base):
    # log(base**power) with 0**0 = 1; None marks an exact zero
    if power == 0:
        return 0.0
    if base == 0.0:
        return None
    return power * math.log(base)


@functools.lru_cache(maxsize=256)
def _ladder_column(n1, n2, theta, phi):
    # (A1^dag)^n1 (A2^dag)^n2 |0,0> / sqrt(n1! n2!) with A1^dag = t a^dag - r e^{-i phi} b^dag
    # and A2^dag = r e^{i phi} a^dag + t b^dag; every step stays normalised
    t, r = math.cos(theta / 2), math.sin(theta / 2)
    column = np.ones(1, dtype=complex)
    steps = [(r * np.exp(1j * phi), t, j) for j in range(1, n2 + 1)]
    steps += [(t, -r * np.exp(-1j * phi), j) for j in range(1, n1 + 1)]
    for alpha, beta, count in steps:
        k = column.size - 1
        raised = np.zeros(k + 2, dtype=complex)
        numbers = np.arange(k + 1)
        raised[1:] += alpha * np.sqrt(numbers + 1.0) * column
        raised[:-1] += beta * np.sqrt(k + 1.0 - numbers) * column
        column = raised / math.sqrt(count)
    column.setflags(write=False)
    return column


def ladder_amplitudes(n1, n2, bs):
    """<N1, total - N1| B |n1, n2> for N1 = 0..n1+n2, by repeated creation operators"""
    if n1 < 0 or n2 < 0:
        raise PreconditionError("photon numbers must be non-negative")
    return _ladder_column(n1, n2, bs.theta, bs.phi)


def bs_coefficient(n1, n2, N1, N2, bs):
    """Amplitude <N1, N2| B |n1, n2>, zero unless N1 + N2 == n1 + n2"""
    if min(n1, n2, N1, N2) < 0:
        raise PreconditionError("photon numbers must be non-negative")
    if N1 + N2 != n1 + n2:
        return 0j

    total = n1 + n2
    if total > LADDER_THRESHOLD:
        # the alternating sum cancels catastrophically at large totals
        return complex(ladder_amplitudes(n1, n2, bs)[N1])

    t, r = bs.t, bs.r
    phase = complex(np.exp(-1j * bs.phi * (n1 - N1)))
    prefactor = math.sqrt(
        math.factorial(n1) * math.factorial(n2) * math.factorial(N1) * math.factorial(N2)
    )
    terms = []
    for k in range(n1 + 1):
        l = n2 + k - N1
        if l < 0 or l > n2:
            continue
        denominator = (
            math.factorial(k) * math.factorial(n1 - k) * math.factorial(l) * math.factorial(n2 - l)
        )
        terms.append(
            (-1) ** (n1 - k) * r ** (total - k - l) * t ** (k + l) * prefactor / denominator
        )
    return phase * math.fsum(terms)


def fock_output(n1, n2, bs, cutoff=None):
    """B|n1, n2> as a TwoModeFockState supported on N1 + N2 = n1 + n2"""
    total = n1 + n2
    cutoff = total if cutoff is None else cutoff
    if n1 < 0 or n2 < 0:
        raise PreconditionError("photon numbers must be non-negative")
    if cutoff < total:
        raise PreconditionError(f"cutoff {cutoff} is below the input photon number {total}")

    grid = np.zeros((cutoff + 1, cutoff + 1), dtype=complex)
    for N1 in range(total + 1):
        grid[N1, total - N1] = bs_coefficient(n1, n2, N1, total - N1, bs)

    state = TwoModeFockState(cutoff, grid)
    deviation = abs(state.norm() - 1.0)
    if deviation > NORM_TOL:
        raise NumericalGuardError(f"output of |{n1},{n2}> lost normalisation ({deviation:.3e})")
    logger.debug(
        f"fock_output({n1}, {n2}, theta={bs.theta:.6f}, phi={bs.phi:.6f}): norm deviation {deviation:.2e}"
    )
    return state


def su2_coefficients(N, bs):
    """c_k = sqrt(binom(N, k)) r^k t^(N-k) e^{i k phi}, the output of |0, N>"""
    if N < 0:
        raise PreconditionError(f"N must be non-negative, got {N}")
    t, r = bs.t, bs.r
    coefficients = []
    for k in range(N + 1):
        log_r = _log_weight(k, r)
        log_t = _log_weight(N - k, t)
        if log_r is None or log_t is None:
            magnitude = 0.0
        else:
            log_binom = gammaln(N + 1) - gammaln(k + 1) - gammaln(N - k + 1)
            magnitude = math.exp(0.5 * log_binom + log_r + log_t)
        coefficients.append(magnitude * complex(np.exp(1j * k * bs.phi)))
    return coefficients


def equal_input_amplitudes(n, phi=0.0, cutoff=None):
    """Closed form for B|n, n> at a 50:50 splitter; only even N1 = 2m appear"""
    cutoff = 2 * n if cutoff is None else cutoff
    if cutoff < 2 * n:
        raise PreconditionError(f"cutoff {cutoff} is below the input photon number {2 * n}")
    grid = np.zeros((cutoff + 1, cutoff + 1), dtype=complex)
    for m in range(n + 1):
        total = 0.0
        for k in range(n + 1):
            if not 0 <= 2 * m - k <= n:
                continue
            total += (-1) ** (n - k) * math.comb(n, k) * math.comb(n, 2 * m - k)
        norm = math.sqrt(math.factorial(2 * m) * math.factorial(2 * n - 2 * m)) / math.factorial(n)
        grid[2 * m, 2 * n - 2 * m] = np.exp(-1j * (n - 2 * m) * phi) * 0.5 ** n * total * norm
    return TwoModeFockState(cutoff, grid)


@functools.lru_cache(maxsize=512)
def _block_unitary(total, theta, phi):
    # generator restricted to the (total+1)-dimensional block {(k, total - k)}
    generator = np.zeros((total + 1, total + 1), dtype=complex)
    for k in range(total):
        # a^dag b |k, total-k> = sqrt((k+1)(total-k)) |k+1, total-k-1>
        hop = math.sqrt((k + 1) * (total - k))
        generator[k + 1, k] += 0.5 * theta * np.exp(1j * phi) * hop
        generator[k, k + 1] -= 0.5 * theta * np.exp(-1j * phi) * hop
    block = expm(generator)
    block.setflags(write=False)
    return block


def block_unitary(total, bs):
    """Beam-splitter unitary on the fixed-total-photon block, basis ordered by N1"""
    if total < 0:
        raise PreconditionError(f"total photon number must be non-negative, got {total}")
    return _block_unitary(total, bs.theta, bs.phi)


def bs_unitary_matrix(cutoff, bs):
    """exp of the beam-splitter generator on {N1 + N2 <= cutoff}, triangular ordering"""
    if cutoff < 0:
        raise PreconditionError(f"cutoff must be non-negative, got {cutoff}")
    dimension = (cutoff + 1) * (cutoff + 2) // 2
    unitary = np.zeros((dimension, dimension), dtype=complex)
    for total in range(cutoff + 1):
        start = basis_index(0, total)
        unitary[start:start + total + 1, start:start + total + 1] = block_unitary(total, bs)
    logger.debug(f"built beam-splitter unitary of dimension {dimension}")
    return unitary
