# This file marks the beamsplitter_entanglement directory as a Python package.

"""
Beam-Splitter Entanglement Package

This package quantifies the entanglement a lossless beam splitter creates:
- Exact Fock-basis output amplitudes and Schmidt-spectrum entropies
- Squeezed-vacuum inputs reduced to an effective two-mode squeezer
- Gaussian (pure or mixed) inputs through characteristic-function matrices,
  the standard form and the Duan separability criterion
- Entropy tables as CSV/Excel, states and verdicts as JSON

Main modules:
- fock: Beam splitter, two-mode Fock states, closed form and matrix exponential
- entanglement: Von Neumann entropy (Schmidt and symplectic routes)
- gaussian: Gaussian states, beam splitting, standard form, Duan verdict
- squeezing: Squeezing-phase reduction and two-mode squeezing equivalent
- oracle: Truncated density matrices and the PPT test used as ground truth
- sweeps: Entropy and verdict parameter grids
- reporting: CSV/JSON/Excel export
- cli: Command-line entry point
"""

__version__ = "1.0.0"

# Import main functions for easy access
from .cli import main
from .entanglement import gaussian_entropy, von_neumann_entropy
from .fock import BeamSplitter, TwoModeFockState, bs_coefficient, fock_output
from .gaussian import GaussianState, beam_split, duan_separability, to_standard_form
from .squeezing import effective_two_mode_squeezing, squeezed_output_entropy
from .utils import setup_logging

__all__ = [
    'BeamSplitter',
    'TwoModeFockState',
    'GaussianState',
    'bs_coefficient',
    'fock_output',
    'von_neumann_entropy',
    'gaussian_entropy',
    'beam_split',
    'to_standard_form',
    'duan_separability',
    'effective_two_mode_squeezing',
    'squeezed_output_entropy',
    'main',
    'setup_logging',
]
