# Gaussian-state engine: characteristic-function matrices, beam splitting,
# nonclassicality tests, standard form and the Duan separability decision

"""
A Gaussian state is represented by the real symmetric matrix M of its Weyl
characteristic function C(zeta) = Tr rho D(zeta) = exp(-x^T M x / 2), written
in the ordering x = (zeta_i, zeta_r) for one mode and
(zeta_i, zeta_r, eta_i, eta_r) for two. The vacuum is the identity. First
moments are not carried: separability depends on second moments only.

Linear maps act through argument substitution: if C_out(x) = C_in(S x) then
M_out = S^T M_in S. Multiplication of a complex argument by e^{i a} is the
rotation matrix _phase_matrix(a) on the (i, r) pair.
"""

import enum
import logging
import math
from dataclasses import dataclass, field
from typing import List, Optional, Tuple

import numpy as np
from scipy.linalg import block_diag
from scipy.optimize import brentq

from .config import (
    ALGEBRA_TOL,
    DECISION_TOL,
    NONCLASSICAL_TOL,
    PHYSICALITY_TOL,
    ROOT_SCAN_DECADES,
    ROOT_SCAN_POINTS,
    ROOT_XTOL,
)
from .errors import (
    NumericalGuardError,
    PreconditionError,
    StandardFormDegenerate,
    UnphysicalStateError,
)
from .utils import check_symmetric

logger = logging.getLogger(__name__)

PRESETS = ("sq-thermal-pair", "sq-thermal+vacuum", "sq-vacuum+thermal")


def _phase_matrix(angle):
    """Multiplication by e^{i angle} on (imag, real) coordinates"""
    c, s = math.cos(angle), math.sin(angle)
    return np.array([[c, s], [-s, c]])


@dataclass(frozen=True)
class GaussianState:
    """Characteristic-function matrix of a one- or two-mode Gaussian state"""

    matrix: np.ndarray = field(repr=False)

    def __post_init__(self):
        matrix = check_symmetric(self.matrix, ALGEBRA_TOL)
        if matrix.shape not in ((2, 2), (4, 4)):
            raise PreconditionError(f"expected a 2x2 or 4x4 matrix, got {matrix.shape}")
        if np.linalg.eigvalsh(matrix).min() <= 0:
            raise UnphysicalStateError("characteristic-function matrix is not positive definite")
        matrix.setflags(write=False)
        object.__setattr__(self, "matrix", matrix)
        nu_min = min(symplectic_eigenvalues(self))
        if nu_min < 1.0 - PHYSICALITY_TOL * self.scale:
            raise UnphysicalStateError(f"symplectic eigenvalue {nu_min:.12g} violates the uncertainty bound")

    @property
    def modes(self):
        return self.matrix.shape[0] // 2

    @property
    def block_a(self):
        return self.matrix[:2, :2]

    @property
    def block_b(self):
        self._require_two_modes()
        return self.matrix[2:, 2:]

    @property
    def block_c(self):
        self._require_two_modes()
        return self.matrix[:2, 2:]

    @property
    def scale(self):
        """Largest matrix element, at least 1; sets the size of rounding errors"""
        return max(1.0, float(np.abs(self.matrix).max()))

    def is_pure(self, tol=1e-8):
        return max(symplectic_eigenvalues(self)) - 1.0 <= tol * self.scale

    def _require_two_modes(self):
        if self.modes != 2:
            raise PreconditionError("operation needs a two-mode state")

    def __eq__(self, other):
        if not isinstance(other, GaussianState):
            return NotImplemented
        return self.matrix.shape == other.matrix.shape and np.allclose(
            self.matrix, other.matrix, rtol=0.0, atol=ALGEBRA_TOL
        )

    def __hash__(self):
        return hash(self.matrix.tobytes())


def _symplectic_form(modes):
    return block_diag(*([np.array([[0.0, 1.0], [-1.0, 0.0]])] * modes))


def williamson_spectrum(matrix):
    """Symplectic eigenvalues of a positive-definite matrix, ascending

    i M^{1/2} Omega M^{1/2} is Hermitian and similar to i Omega M; its positive
    eigenvalues are the Williamson spectrum.
    """
    matrix = np.asarray(matrix, dtype=float)
    weights, vectors = np.linalg.eigh(matrix)
    root = (vectors * np.sqrt(np.clip(weights, 0.0, None))) @ vectors.T
    modes = matrix.shape[0] // 2
    spectrum = np.linalg.eigvalsh(1j * root @ _symplectic_form(modes) @ root)
    return [float(nu) for nu in spectrum[modes:]]


def symplectic_eigenvalues(state):
    """Williamson spectrum of the state; ascending"""
    return williamson_spectrum(state.matrix)


def is_pure(state, tol=1e-8):
    """Every symplectic eigenvalue equals 1 for a pure Gaussian state"""
    return state.is_pure(tol)


def partial_transposed(matrix):
    """Sign flip of mode b's second quadrature, M -> F M F"""
    flip = np.diag([1.0, 1.0, 1.0, -1.0])
    return flip @ np.asarray(matrix, dtype=float) @ flip


def partial_transpose_min_eigenvalue(state):
    """Smallest symplectic eigenvalue after flipping the sign of mode b's second quadrature"""
    state._require_two_modes()
    return williamson_spectrum(partial_transposed(state.matrix))[0]


# --- constructors -----------------------------------------------------------------

def vacuum():
    return GaussianState(np.eye(2))


def thermal(nbar):
    if nbar < 0:
        raise PreconditionError(f"mean photon number must be non-negative, got {nbar}")
    return GaussianState((2.0 * nbar + 1.0) * np.eye(2))


def squeezed_thermal(nbar, s):
    """S(s) rho_th S^dag(s): diag((2n+1)e^{-2s}, (2n+1)e^{2s}) in (zeta_i, zeta_r)"""
    if nbar < 0:
        raise PreconditionError(f"mean photon number must be non-negative, got {nbar}")
    scale = 2.0 * nbar + 1.0
    return GaussianState(np.diag([scale * math.exp(-2.0 * s), scale * math.exp(2.0 * s)]))


def squeezed_vacuum(s, varphi=0.0):
    """S(s e^{i varphi})|0> = R(varphi/2) S(s) R^dag(varphi/2) |0>"""
    return rotate(squeezed_thermal(0.0, s), varphi / 2.0)


def tensor(a, b):
    if a.modes != 1 or b.modes != 1:
        raise PreconditionError("tensor composes two single-mode states")
    return GaussianState(block_diag(a.matrix, b.matrix))


def two_mode_squeezed_vacuum(r):
    """Two-mode squeezed vacuum with real squeezing r"""
    ch, sh = math.cosh(2.0 * r), math.sinh(2.0 * r)
    correlation = np.diag([sh, -sh])
    return GaussianState(np.block([[ch * np.eye(2), correlation], [correlation, ch * np.eye(2)]]))


def from_elements(b1, b2, d1, d2, c1, c2):
    """Two-mode state in the block-diagonal layout with the given elements"""
    return GaussianState(np.array([
        [b1, 0.0, c1, 0.0],
        [0.0, b2, 0.0, c2],
        [c1, 0.0, d1, 0.0],
        [0.0, c2, 0.0, d2],
    ]))


# --- transformations ---------------------------------------------------------------

def beam_splitter_transform(bs):
    """Orthogonal 4x4 substitution (zeta, eta) -> (t zeta - r e^{i phi} eta, r e^{-i phi} zeta + t eta)"""
    t, r = bs.t, bs.r
    return np.block([
        [t * np.eye(2), -r * _phase_matrix(bs.phi)],
        [r * _phase_matrix(-bs.phi), t * np.eye(2)],
    ])


def beam_split(state, bs):
    state._require_two_modes()
    transform = beam_splitter_transform(bs)
    return GaussianState(transform.T @ state.matrix @ transform)


def rotate(state, theta):
    """Phase rotation exp(i theta a^dag a) on a single-mode state"""
    if state.modes != 1:
        raise PreconditionError("rotate acts on a single-mode state")
    rotation = _phase_matrix(-theta)
    return GaussianState(rotation.T @ state.matrix @ rotation)


def rotate_local(state, theta_a, theta_b):
    """Independent phase rotations on modes a and b"""
    state._require_two_modes()
    rotation = block_diag(_phase_matrix(-theta_a), _phase_matrix(-theta_b))
    return GaussianState(rotation.T @ state.matrix @ rotation)


def squeeze(state, s):
    """Single-mode squeezer S(s): M -> L M L with L = diag(e^{-s}, e^{s})"""
    if state.modes != 1:
        raise PreconditionError("squeeze acts on a single-mode state")
    scaling = np.diag([math.exp(-s), math.exp(s)])
    return GaussianState(scaling @ state.matrix @ scaling)


def local_squeeze(state, s_a, s_b):
    """Local squeezers on both modes: congruence by diag(e^{-s_a}, e^{s_a}, e^{-s_b}, e^{s_b})"""
    state._require_two_modes()
    scaling = np.diag([math.exp(-s_a), math.exp(s_a), math.exp(-s_b), math.exp(s_b)])
    return GaussianState(scaling @ state.matrix @ scaling)


def aligned_frame(state, bs):
    """Undo the splitter phase on output mode b (exact when input b is phase invariant)"""
    return rotate_local(state, 0.0, bs.phi)


# --- classicality --------------------------------------------------------------------

def is_nonclassical(state):
    """Some quadrature variance below the vacuum value"""
    if state.modes != 1:
        raise PreconditionError("is_nonclassical expects a single-mode state")
    return bool(np.linalg.eigvalsh(state.matrix).min() < 1.0 - NONCLASSICAL_TOL)


def is_classical_gaussian(state):
    """M - I positive semidefinite, i.e. a well-behaved positive P-function"""
    identity = np.eye(state.matrix.shape[0])
    return bool(np.linalg.eigvalsh(state.matrix - identity).min() >= -DECISION_TOL)


# --- standard form -------------------------------------------------------------------

@dataclass(frozen=True)
class StandardForm:
    """Block-diagonal M' with (b1-1)/(d1-1) = (b2-1)/(d2-1) and the matching correlation condition"""

    b1: float
    b2: float
    d1: float
    d2: float
    c1: float
    c2: float

    def as_state(self):
        return from_elements(self.b1, self.b2, self.d1, self.d2, self.c1, self.c2)

    def ratio_residual(self):
        return (self.b1 - 1.0) * (self.d2 - 1.0) - (self.b2 - 1.0) * (self.d1 - 1.0)

    def correlation_residual(self):
        radical_1 = math.sqrt(max((self.b1 - 1.0) * (self.d1 - 1.0), 0.0))
        radical_2 = math.sqrt(max((self.b2 - 1.0) * (self.d2 - 1.0), 0.0))
        return abs(self.c1) - abs(self.c2) - (radical_1 - radical_2)

    def as_dict(self):
        return {name: getattr(self, name) for name in ("b1", "b2", "d1", "d2", "c1", "c2")}


@dataclass
class LocalTransform:
    """Composite local symplectic map L with M' = L^T M L, plus the steps that built it"""

    matrix: np.ndarray = field(default_factory=lambda: np.eye(4))
    steps: List[Tuple[str, tuple]] = field(default_factory=list)

    def then(self, name, local_matrix, params=()):
        self.matrix = self.matrix @ local_matrix
        self.steps.append((name, tuple(float(p) for p in params)))
        return self

    def apply(self, state):
        return GaussianState(self.matrix.T @ state.matrix @ self.matrix)


def _williamson_local(block):
    # rotation + squeeze taking a 2x2 block to sqrt(det) * identity
    eigenvalues, vectors = np.linalg.eigh(block)
    if np.linalg.det(vectors) < 0:
        vectors[:, 1] *= -1.0
    nu = math.sqrt(eigenvalues[0] * eigenvalues[1])
    return vectors @ np.diag(np.sqrt(nu / eigenvalues)), nu


def _proper_svd(block):
    # C = U diag(s1, s2) V^T with U, V rotations; |s2| <= s1
    u, singular, vt = np.linalg.svd(block)
    v = vt.T
    singular = singular.copy()
    if np.linalg.det(u) < 0:
        u[:, 1] *= -1.0
        singular[1] *= -1.0
    if np.linalg.det(v) < 0:
        v[:, 1] *= -1.0
        singular[1] *= -1.0
    return u, singular, v


def _curve_y(x, n, m):
    """Squeeze of mode b keeping (n x - 1)/(m y - 1) = (n/x - 1)/(m/y - 1), branch through (1, 1)"""
    # m (x - n) y^2 - n (x^2 - 1) y + m x (n x - 1) = 0
    linear = n * (x * x - 1.0)
    constant = m * x * (n * x - 1.0)
    discriminant = linear * linear - 4.0 * m * (x - n) * constant
    if discriminant < 0:
        return None
    denominator = linear + math.sqrt(discriminant)
    if denominator == 0:
        return None
    y = 2.0 * constant / denominator
    return y if y > 0 else None


def _signed_radical(product):
    return math.sqrt(product) if product >= 0 else None


def _correlation_gap(x, n, m, c, c_prime):
    y = _curve_y(x, n, m)
    if y is None:
        return None
    scale = math.sqrt(x * y)
    radical_1 = _signed_radical((n * x - 1.0) * (m * y - 1.0))
    radical_2 = _signed_radical((n / x - 1.0) * (m / y - 1.0))
    if radical_1 is None or radical_2 is None:
        return None
    return abs(c) * scale - abs(c_prime) / scale - radical_1 + radical_2


def _scan_for_root(n, m, c, c_prime):
    gap = lambda x: _correlation_gap(x, n, m, c, c_prime)
    start = gap(1.0)
    if start is None:
        raise NumericalGuardError("standard-form curve is undefined at the normal form")
    if abs(start) <= ALGEBRA_TOL * max(1.0, abs(c)):
        return 1.0, 1.0

    def defined_gap(x):
        value = gap(x)
        if value is None:
            raise NumericalGuardError(f"standard-form curve left its domain at x={x:.12g}")
        return value

    upward = np.geomspace(1.0, 10.0 ** ROOT_SCAN_DECADES, ROOT_SCAN_POINTS)
    downward = np.geomspace(1.0, max(1.0 / n, 10.0 ** -ROOT_SCAN_DECADES), ROOT_SCAN_POINTS)[:-1]
    for scan in (upward, downward):
        previous_x, previous_gap = 1.0, start
        for x in scan[1:]:
            value = gap(x)
            if value is None:
                break
            if value == 0.0 or (value < 0) != (previous_gap < 0):
                low, high = sorted((previous_x, x))
                root = brentq(defined_gap, low, high, xtol=ROOT_XTOL, rtol=4 * np.finfo(float).eps)
                return root, _curve_y(root, n, m)
            previous_x, previous_gap = x, value
    raise NumericalGuardError("no local squeezing satisfies the standard-form conditions")


def _solve_squeezes(n, m, c, c_prime):
    """Squeezes (x, y) for modes a and b; both conditions are symmetric under (n, x) <-> (m, y)"""
    # the curve stays defined when parametrised by the mode with the larger block
    if m > n:
        y, x = _scan_for_root(m, n, c, c_prime)
    else:
        x, y = _scan_for_root(n, m, c, c_prime)
    logger.debug(f"standard form squeezes x={x:.12g} y={y:.12g}")
    return x, y


def to_standard_form(state):
    """Reduce a two-mode state to M' by local rotations and squeezers

    Steps: (i) rotate and squeeze each mode so its block is proportional to the
    identity, (ii) rotate both modes so the correlation block is diagonal,
    (iii) squeeze both modes along the curve where the two (b-1)/(d-1) ratios
    agree until the correlation condition holds, (iv) rotate mode b by pi if
    needed so that c1 <= 0.
    """
    state._require_two_modes()
    record = LocalTransform()

    local_a, n = _williamson_local(state.block_a)
    local_b, m = _williamson_local(state.block_b)
    record.then("normalise-blocks", block_diag(local_a, local_b), (n, m))

    correlation = (record.matrix.T @ state.matrix @ record.matrix)[:2, 2:]
    u, singular, v = _proper_svd(correlation)
    record.then("diagonalise-correlations", block_diag(u, v))
    c, c_prime = singular

    if n - 1.0 <= PHYSICALITY_TOL or m - 1.0 <= PHYSICALITY_TOL or abs(c) <= ALGEBRA_TOL:
        # a pure marginal admits no correlations; what is left is a product state
        form = StandardForm(n, n, m, m, float(c), float(c_prime))
        if n - 1.0 <= PHYSICALITY_TOL and m - 1.0 <= PHYSICALITY_TOL:
            raise StandardFormDegenerate("product of vacuum-like modes", form, record)
        raise StandardFormDegenerate("uncorrelated product state", form, record)

    x, y = _solve_squeezes(n, m, c, c_prime)
    record.then(
        "squeeze",
        np.diag([math.sqrt(x), 1.0 / math.sqrt(x), math.sqrt(y), 1.0 / math.sqrt(y)]),
        (x, y),
    )
    reduced = record.matrix.T @ state.matrix @ record.matrix
    if reduced[0, 2] > 0:
        record.then("flip-mode-b", block_diag(np.eye(2), -np.eye(2)))
        reduced = record.matrix.T @ state.matrix @ record.matrix

    pattern = np.array([[0, 1, 0, 1], [1, 0, 1, 0], [0, 1, 0, 1], [1, 0, 1, 0]], dtype=bool)
    scale = max(1.0, np.abs(reduced).max())
    if np.abs(reduced[pattern]).max() > 1e-8 * scale:
        raise NumericalGuardError("local reduction left off-diagonal structure")

    form = StandardForm(
        b1=reduced[0, 0], b2=reduced[1, 1], d1=reduced[2, 2], d2=reduced[3, 3],
        c1=reduced[0, 2], c2=reduced[1, 3],
    )
    if abs(form.ratio_residual()) > 1e-9 * scale ** 2 or abs(form.correlation_residual()) > 1e-9 * scale:
        raise NumericalGuardError(
            f"standard form residuals too large: {form.ratio_residual():.3e}, {form.correlation_residual():.3e}"
        )
    logger.debug(f"standard form {form.as_dict()} after steps {[step[0] for step in record.steps]}")
    return form, record


# --- Duan criterion --------------------------------------------------------------------

class Separability(str, enum.Enum):
    SEPARABLE = "separable"
    ENTANGLED = "entangled"


@dataclass(frozen=True)
class SeparabilityVerdict:
    decision: Separability
    duan_lhs: float
    duan_rhs: float
    ppt_min_symplectic: float
    branch: str
    standard_form: Optional[StandardForm] = None

    @property
    def entangled(self):
        return self.decision is Separability.ENTANGLED

    def to_dict(self):
        payload = {
            "decision": self.decision.value,
            "duan_lhs": self.duan_lhs,
            "duan_rhs": self.duan_rhs,
            "ppt_min_symplectic": self.ppt_min_symplectic,
            "branch": self.branch,
        }
        if self.standard_form is not None:
            payload["standard_form"] = self.standard_form.as_dict()
        return payload


def _common_ratio(form):
    # (d-1)/(b-1) from the better-conditioned quadrature; both must agree
    gaps = [(form.b1 - 1.0, form.d1 - 1.0), (form.b2 - 1.0, form.d2 - 1.0)]
    usable = [(b, d) for b, d in gaps if abs(b) > PHYSICALITY_TOL]
    if not usable:
        raise NumericalGuardError("both (b - 1) gaps vanish; q0 is undefined")
    ratios = [d / b for b, d in usable]
    if len(ratios) == 2 and abs(ratios[0] - ratios[1]) > 1e-6 * max(1.0, abs(ratios[0])):
        raise NumericalGuardError(f"standard-form ratios disagree: {ratios[0]:.12g} vs {ratios[1]:.12g}")
    b, d = max(usable, key=lambda pair: abs(pair[0]))
    ratio = d / b
    if ratio <= 0:
        raise NumericalGuardError("state falls outside both separability branches (negative ratio)")
    return ratio


def duan_separability(state):
    """Necessary and sufficient separability test for a two-mode Gaussian state"""
    state._require_two_modes()
    ppt_value = partial_transpose_min_eigenvalue(state)
    try:
        form, _ = to_standard_form(state)
    except StandardFormDegenerate as degenerate:
        logger.debug(f"degenerate standard form: {degenerate}")
        return SeparabilityVerdict(Separability.SEPARABLE, 2.0, 2.0, ppt_value, "degenerate", degenerate.form)

    q0_squared = math.sqrt(_common_ratio(form))
    # <(du)^2> + <(dv)^2> for u = q0 x_a - sgn(c1) x_b / q0, v = q0 p_a - sgn(c2) p_b / q0
    lhs = 0.5 * (
        q0_squared * (form.b1 + form.b2)
        + (form.d1 + form.d2) / q0_squared
        - 2.0 * abs(form.c1)
        - 2.0 * abs(form.c2)
    )
    rhs = q0_squared + 1.0 / q0_squared
    positive = min(form.b1, form.b2, form.d1, form.d2) >= 1.0 - PHYSICALITY_TOL
    decision = Separability.SEPARABLE if lhs >= rhs - DECISION_TOL else Separability.ENTANGLED
    branch = "positive" if positive else "negative"
    logger.debug(f"duan: lhs={lhs:.12g} rhs={rhs:.12g} branch={branch} -> {decision.value}")
    return SeparabilityVerdict(decision, lhs, rhs, ppt_value, branch, form)


# --- case studies ----------------------------------------------------------------------

def squeezed_thermal_pair_elements(nbar, s):
    """Printed element set for two equal squeezed thermal inputs at a 50:50 splitter, phi = pi/2"""
    scale = 2.0 * nbar + 1.0
    diagonal = 0.5 * scale * (math.exp(2 * s) + math.exp(-2 * s))
    c1 = 0.5 * scale * (math.exp(-2 * s) - math.exp(2 * s))
    return from_elements(diagonal, diagonal, diagonal, diagonal, c1, -c1)


def squeezed_thermal_vacuum_elements(nbar, s, bs):
    """Printed element set for a squeezed thermal state and vacuum, phi = pi/2"""
    t2, r2, tr = bs.t ** 2, bs.r ** 2, bs.t * bs.r
    minus = (2.0 * nbar + 1.0) * math.exp(-2 * s)
    plus = (2.0 * nbar + 1.0) * math.exp(2 * s)
    return from_elements(
        r2 * minus + t2, r2 * plus + t2,
        t2 * minus + r2, t2 * plus + r2,
        tr * (minus - 1.0), tr * (plus - 1.0),
    )


def squeezed_vacuum_thermal_elements(nbar, s, bs):
    """Printed element set for a squeezed vacuum and a thermal state"""
    t2, r2, tr = bs.t ** 2, bs.r ** 2, bs.t * bs.r
    scale = 2.0 * nbar + 1.0
    minus, plus = math.exp(-2 * s), math.exp(2 * s)
    return from_elements(
        scale * r2 + minus * t2, scale * r2 + plus * t2,
        scale * t2 + minus * r2, scale * t2 + plus * r2,
        tr * (scale - minus), tr * (scale - plus),
    )


def case_inputs(preset, nbar, s):
    """Input pair for one of the three mixed-state case studies"""
    if preset == "sq-thermal-pair":
        return tensor(squeezed_thermal(nbar, s), squeezed_thermal(nbar, s))
    if preset == "sq-thermal+vacuum":
        return tensor(squeezed_thermal(nbar, s), vacuum())
    if preset == "sq-vacuum+thermal":
        return tensor(squeezed_thermal(0.0, s), thermal(nbar))
    raise PreconditionError(f"unknown preset {preset!r}; expected one of {', '.join(PRESETS)}")


def case_output(preset, nbar, s, bs):
    return beam_split(case_inputs(preset, nbar, s), bs)


def reduce_squeezed_vacuum_thermal(output, s, bs):
    """Local squeezing that maps the squeezed-vacuum/thermal output onto the
    squeezed-thermal/vacuum element set with squeezing -s"""
    return local_squeeze(aligned_frame(output, bs), -s, -s)
