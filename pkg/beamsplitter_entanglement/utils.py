# Utility functions for the beam-splitter entanglement toolkit

import logging
import math
import sys
from datetime import datetime

import numpy as np

from .errors import PreconditionError


def setup_logging(level=logging.INFO, log_file=None):
    """Setup logging configuration; stdout is left free for CSV/JSON output"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if log_file:
        handlers.append(logging.FileHandler(log_file))
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )
    return logging.getLogger(__name__)


def nats_to_bits(nats):
    """Convert an entropy in nats to bits"""
    return nats / math.log(2)


def reduce_phase(phi):
    """Phase reduced to [0, 2pi)"""
    phi = float(np.mod(phi, 2 * np.pi))
    # np.mod of a tiny negative value rounds up to exactly 2pi
    return 0.0 if phi >= 2 * np.pi else phi


def phi_from_pi_units(phi_pi):
    """Phase given in units of pi, reduced to [0, 2pi)"""
    return reduce_phase(phi_pi * np.pi)


def grid(lo, hi, steps):
    """Inclusive linear grid; endpoints are exact"""
    values = np.linspace(lo, hi, steps)
    values[0], values[-1] = lo, hi
    return values


def check_symmetric(matrix, tol):
    """Return the symmetrised matrix if it is symmetric within tol"""
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1]:
        raise PreconditionError(f"expected a square matrix, got shape {matrix.shape}")
    if not np.allclose(matrix, matrix.T, rtol=0.0, atol=tol * max(1.0, np.abs(matrix).max())):
        raise PreconditionError("matrix is not symmetric")
    return 0.5 * (matrix + matrix.T)


def get_timestamp():
    """Get current timestamp for report watermarks"""
    return datetime.now().strftime("%Y-%m-%d %H:%M:%S")
