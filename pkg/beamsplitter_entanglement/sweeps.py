# Parameter sweeps behind the entropy tables and verdict grids

import concurrent.futures
import logging
import math
from dataclasses import dataclass

import pandas as pd

from .config import DEFAULT_MAX_WORKERS, DEFAULT_SWEEP_STEPS
from .entanglement import von_neumann_entropy
from .errors import PreconditionError
from .fock import BeamSplitter, fock_output
from .gaussian import case_output, duan_separability
from .squeezing import squeezed_output_entropy
from .utils import grid, nats_to_bits

logger = logging.getLogger(__name__)

SWEEP_VARIABLES = ("reflectance", "s2", "nbar", "phi", "s")


@dataclass(frozen=True)
class SweepSpec:
    """Inclusive grid over one parameter"""

    variable: str
    lo: float
    hi: float
    steps: int = DEFAULT_SWEEP_STEPS

    def __post_init__(self):
        if self.variable not in SWEEP_VARIABLES:
            raise PreconditionError(f"unknown sweep variable {self.variable!r}")
        if not float(self.steps).is_integer():
            raise PreconditionError(f"sweep steps must be a whole number, got {self.steps}")
        object.__setattr__(self, "steps", int(self.steps))
        if self.steps < 2:
            raise PreconditionError(f"a sweep needs at least 2 steps, got {self.steps}")
        if not self.lo < self.hi:
            raise PreconditionError(f"sweep range must satisfy lo < hi, got [{self.lo}, {self.hi}]")
        if self.variable == "reflectance" and not (0.0 <= self.lo and self.hi <= 1.0):
            raise PreconditionError("reflectance must stay within [0, 1]")
        if self.variable in ("s2", "nbar", "s") and self.lo < 0:
            raise PreconditionError(f"{self.variable} must be non-negative")

    def values(self):
        return grid(self.lo, self.hi, self.steps)

    @classmethod
    def reflectance(cls, steps=DEFAULT_SWEEP_STEPS):
        return cls("reflectance", 0.0, 1.0, steps)


def _evaluate(function, points, max_workers):
    # executor.map keeps grid order regardless of completion order
    if max_workers is None or max_workers <= 1:
        return [function(point) for point in points]
    with concurrent.futures.ThreadPoolExecutor(max_workers=max_workers) as executor:
        return list(executor.map(function, points))


def _add_bits(frame, bits):
    if bits:
        frame["entropy_bits"] = frame["entropy_nats"].map(nats_to_bits)
    return frame


def figure2_sweep(total=10, reflectance=None, phi=0.0, max_workers=DEFAULT_MAX_WORKERS, bits=False):
    """Entropy of B|k, N-k> over reflectance for k = 0..N//2"""
    if total < 0:
        raise PreconditionError(f"total photon number must be non-negative, got {total}")
    reflectance = reflectance or SweepSpec.reflectance()
    points = [(k, float(R)) for k in range(total // 2 + 1) for R in reflectance.values()]
    logger.info(f"Fock reflectance sweep: N={total}, {len(points)} grid points")

    def entropy_at(point):
        k, R = point
        state = fock_output(k, total - k, BeamSplitter.from_reflectance(R, phi))
        return von_neumann_entropy(state).nats

    entropies = _evaluate(entropy_at, points, max_workers)
    frame = pd.DataFrame(
        {
            "k": [k for k, _ in points],
            "n1": [k for k, _ in points],
            "n2": [total - k for k, _ in points],
            "R": [R for _, R in points],
            "entropy_nats": entropies,
        }
    )
    return _add_bits(frame, bits)


def figure3_sweep(s1=0.5, phi=0.0, s2=None, reflectance=None, max_workers=DEFAULT_MAX_WORKERS, bits=False):
    """Entropy surface over (s2, R) for squeezed vacua with s1 fixed"""
    s2 = s2 or SweepSpec("s2", 0.0, 1.0, 21)
    reflectance = reflectance or SweepSpec.reflectance(21)
    points = [(float(b), float(R)) for b in s2.values() for R in reflectance.values()]
    logger.info(f"Squeezed-vacuum sweep: s1={s1}, phi={phi:.6g}, {len(points)} grid points")

    def entropy_at(point):
        b, R = point
        return squeezed_output_entropy(s1, b, BeamSplitter.from_reflectance(R, phi)).nats

    entropies = _evaluate(entropy_at, points, max_workers)
    frame = pd.DataFrame(
        {
            "s2": [b for b, _ in points],
            "R": [R for _, R in points],
            "entropy_nats": entropies,
        }
    )
    return _add_bits(frame, bits)


def phase_sweep(s1, s2, reflectance=0.5, phi=None, max_workers=DEFAULT_MAX_WORKERS, bits=False):
    """Entropy of the squeezed-vacuum output as the splitter phase varies"""
    phi = phi or SweepSpec("phi", 0.0, 2.0 * math.pi, 65)
    points = [float(p) for p in phi.values()]

    def entropy_at(p):
        return squeezed_output_entropy(s1, s2, BeamSplitter.from_reflectance(reflectance, p)).nats

    frame = pd.DataFrame({"phi": points, "entropy_nats": _evaluate(entropy_at, points, max_workers)})
    return _add_bits(frame, bits)


def separability_sweep(preset, s, nbar, bs, max_workers=DEFAULT_MAX_WORKERS):
    """Duan verdict for a Gaussian case study across a grid of thermal photon numbers"""
    points = [float(n) for n in nbar.values()]
    logger.info(f"Separability sweep: {preset}, s={s}, {len(points)} grid points")

    def verdict_at(n):
        return duan_separability(case_output(preset, n, s, bs))

    verdicts = _evaluate(verdict_at, points, max_workers)
    return pd.DataFrame(
        {
            "nbar": points,
            "s": [s] * len(points),
            "decision": [v.decision.value for v in verdicts],
            "duan_lhs": [v.duan_lhs for v in verdicts],
            "duan_rhs": [v.duan_rhs for v in verdicts],
            "ppt_min_symplectic": [v.ppt_min_symplectic for v in verdicts],
        }
    )
