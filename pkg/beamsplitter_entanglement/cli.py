# Command-line front end: entropy tables as CSV, states and verdicts as JSON

import argparse
import logging
import math
import sys

import pandas as pd

from .config import DEFAULT_MAX_WORKERS, DEFAULT_SWEEP_STEPS, MAX_CLI_PHOTONS
from .entanglement import von_neumann_entropy
from .errors import BeamSplitterError, PreconditionError
from .fock import BeamSplitter, fock_output
from .gaussian import PRESETS, GaussianState, case_inputs, case_output, duan_separability, is_nonclassical
from .reporting import write_csv, write_json, write_xlsx
from .squeezing import (
    SqueezeParams,
    canonicalize_phases,
    decomposition_applies,
    effective_two_mode_squeezing,
    squeezed_output_entropy,
)
from .sweeps import SweepSpec, figure2_sweep, figure3_sweep, separability_sweep
from .utils import nats_to_bits, phi_from_pi_units, setup_logging

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_NUMERICAL = 3

_SPLITTER_KEYS = {"theta": "number", "phi": "number", "reflectance": "number", "entropy_nats": "number"}

# JSON payload layout per subcommand. "required" keys are always present, "optional"
# ones only when requested or applicable; "nested" describes object values and array items.
PAYLOAD_SCHEMAS = {
    "fock": {
        "required": {"n1": "integer", "n2": "integer", "amplitudes": "array", **_SPLITTER_KEYS},
        "optional": {"entropy_bits": "number"},
        "nested": {
            "amplitudes": {"N1": "integer", "N2": "integer", "re": "number", "im": "number", "probability": "number"},
        },
    },
    "squeezed": {
        "required": {
            "s1": "number",
            "s2": "number",
            "canonical_phi": "number",
            "local_rotations": "array",
            **_SPLITTER_KEYS,
        },
        "optional": {"entropy_bits": "number", "two_mode_squeezing": "object"},
        "nested": {"two_mode_squeezing": {"re": "number", "im": "number", "magnitude": "number"}},
    },
    "gaussian": {
        "required": {
            "preset": "string",
            "nbar": "number",
            "s": "number",
            "theta": "number",
            "phi": "number",
            "reflectance": "number",
            "decision": "string",
            "duan_lhs": "number",
            "duan_rhs": "number",
            "ppt_min_symplectic": "number",
            "branch": "string",
            "input_a_nonclassical": "boolean",
        },
        "optional": {"standard_form": "object"},
        "nested": {"standard_form": {name: "number" for name in ("b1", "b2", "d1", "d2", "c1", "c2")}},
    },
}


def _splitter(args):
    phi = phi_from_pi_units(args.phi_pi) if args.phi_pi is not None else args.phi
    return BeamSplitter.from_reflectance(args.reflectance, phi)


def _entropy_fields(nats, bits):
    fields = {"entropy_nats": nats}
    if bits:
        fields["entropy_bits"] = nats_to_bits(nats)
    return fields


def _splitter_fields(bs):
    return {"theta": bs.theta, "phi": bs.phi, "reflectance": bs.reflectance}


def _emit_table(frame, args, sheet):
    if args.format == "json":
        write_json(frame.to_dict(orient="records"), args.output)
    elif args.format == "xlsx":
        if args.output in (None, "-"):
            raise PreconditionError("--format xlsx needs --output PATH")
        write_xlsx({sheet: frame}, args.output)
    else:
        write_csv(frame, args.output)


def _emit_record(payload, args, sheet):
    if args.format == "json":
        write_json(payload, args.output)
    else:
        flat = {key: value for key, value in payload.items() if not isinstance(value, (dict, list))}
        _emit_table(pd.DataFrame([flat]), args, sheet)


def cmd_fock(args):
    if min(args.n1, args.n2) < 0 or args.n1 + args.n2 > MAX_CLI_PHOTONS:
        raise PreconditionError(f"need 0 <= n1, n2 and n1 + n2 <= {MAX_CLI_PHOTONS}")
    bs = _splitter(args)
    state = fock_output(args.n1, args.n2, bs)
    entropy = von_neumann_entropy(state)
    amplitudes = [
        {
            "N1": n1,
            "N2": n2,
            "re": state.amplitude(n1, n2).real,
            "im": state.amplitude(n1, n2).imag,
            "probability": abs(state.amplitude(n1, n2)) ** 2,
        }
        for n1, n2 in state.support()
    ]
    logger.info(f"B|{args.n1},{args.n2}>: {len(amplitudes)} output components, entropy {entropy.nats:.6g} nats")
    if args.format == "json":
        payload = {"n1": args.n1, "n2": args.n2, "amplitudes": amplitudes}
        payload.update(_splitter_fields(bs))
        payload.update(_entropy_fields(entropy.nats, args.bits))
        write_json(payload, args.output)
    else:
        _emit_table(pd.DataFrame(amplitudes), args, "Fock output")


def cmd_figure2(args):
    frame = figure2_sweep(
        total=args.total,
        reflectance=SweepSpec.reflectance(args.steps),
        phi=phi_from_pi_units(args.phi_pi) if args.phi_pi is not None else args.phi,
        max_workers=args.max_workers,
        bits=args.bits,
    )
    _emit_table(frame, args, "Fock entropy")


def cmd_figure3(args):
    frame = figure3_sweep(
        s1=args.s1,
        phi=phi_from_pi_units(args.phi_pi) if args.phi_pi is not None else args.phi,
        s2=SweepSpec("s2", args.s2_min, args.s2_max, args.s2_steps),
        reflectance=SweepSpec.reflectance(args.steps),
        max_workers=args.max_workers,
        bits=args.bits,
    )
    _emit_table(frame, args, "Squeezed entropy")


def cmd_squeezed(args):
    params = SqueezeParams(args.s1, args.s2, args.varphi1, args.varphi2)
    canonical = canonicalize_phases(params, _splitter(args))
    entropy = squeezed_output_entropy(canonical.params.s1, canonical.params.s2, canonical.bs)
    payload = {
        "s1": args.s1,
        "s2": args.s2,
        "canonical_phi": canonical.bs.phi,
        "local_rotations": list(canonical.local_rotations),
    }
    payload.update(_splitter_fields(canonical.bs))
    payload.update(_entropy_fields(entropy.nats, args.bits))
    if decomposition_applies(canonical.bs):
        zeta = effective_two_mode_squeezing(canonical.params.s1, canonical.params.s2, canonical.bs.phi)
        payload["two_mode_squeezing"] = {"re": zeta.real, "im": zeta.imag, "magnitude": abs(zeta)}
    _emit_record(payload, args, "Squeezed inputs")


def cmd_gaussian(args):
    bs = _splitter(args)
    if args.sweep_nbar:
        lo, hi, steps = args.sweep_nbar
        frame = separability_sweep(args.preset, args.s, SweepSpec("nbar", lo, hi, steps), bs, args.max_workers)
        _emit_table(frame, args, "Separability")
        return

    verdict = duan_separability(case_output(args.preset, args.nbar, args.s, bs))
    logger.info(f"{args.preset}: nbar={args.nbar}, s={args.s} -> {verdict.decision.value}")
    payload = {"preset": args.preset, "nbar": args.nbar, "s": args.s}
    payload.update(_splitter_fields(bs))
    payload.update(verdict.to_dict())
    input_a = GaussianState(case_inputs(args.preset, args.nbar, args.s).block_a)
    payload["input_a_nonclassical"] = is_nonclassical(input_a)
    _emit_record(payload, args, "Separability")


def _add_output_options(parser, default_format):
    parser.add_argument("--output", default="-", help="Output path, '-' for stdout (default)")
    parser.add_argument("--format", choices=("csv", "json", "xlsx"), default=default_format,
                        help=f"Output format (default {default_format})")
    parser.add_argument("--bits", action="store_true", help="Also report entropies in bits")


def _add_splitter_options(parser, phi_default=0.0, with_reflectance=True):
    if with_reflectance:
        parser.add_argument("--reflectance", type=float, default=0.5, help="Reflectance R = r^2 (default 0.5)")
    phase = parser.add_mutually_exclusive_group()
    phase.add_argument("--phi", type=float, default=phi_default, help="Splitter phase in radians")
    phase.add_argument("--phi-pi", type=float, help="Splitter phase in units of pi")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true", help="Log debug details to stderr")
    common.add_argument("--log-file", help="Also write the log to this file")
    common.add_argument("--max-workers", type=int, default=DEFAULT_MAX_WORKERS,
                        help="Maximum number of concurrent workers for sweeps")

    parser = argparse.ArgumentParser(
        prog="beamsplitter-entanglement",
        description="Entanglement of beam-splitter outputs for Fock, squeezed and Gaussian inputs",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s fock 1 1 --reflectance 0.5 --phi 0
  %(prog)s figure2 --total 10 --steps 101 > figure2.csv
  %(prog)s figure3 --s1 0.5 --phi-pi 0.5 --format xlsx --output figure3.xlsx
  %(prog)s squeezed --s1 0.5 --s2 0.5 --phi-pi 0.5
  %(prog)s gaussian --preset sq-thermal-pair --nbar 0 --s 0.5
        """,
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    fock = subparsers.add_parser("fock", parents=[common], help="Output of B|n1, n2> and its entropy")
    fock.add_argument("n1", type=int)
    fock.add_argument("n2", type=int)
    _add_splitter_options(fock)
    _add_output_options(fock, "json")
    fock.set_defaults(handler=cmd_fock)

    figure2 = subparsers.add_parser("figure2", parents=[common], help="Entropy of |k, N-k> inputs over reflectance")
    figure2.add_argument("--total", type=int, default=10, help="Total photon number N (default 10)")
    figure2.add_argument("--steps", type=int, default=DEFAULT_SWEEP_STEPS, help="Reflectance grid points")
    _add_splitter_options(figure2, with_reflectance=False)
    _add_output_options(figure2, "csv")
    figure2.set_defaults(handler=cmd_figure2)

    figure3 = subparsers.add_parser("figure3", parents=[common], help="Entropy surface for two squeezed vacua")
    figure3.add_argument("--s1", type=float, default=0.5, help="Squeezing of input a (default 0.5)")
    figure3.add_argument("--s2-min", type=float, default=0.0)
    figure3.add_argument("--s2-max", type=float, default=1.0)
    figure3.add_argument("--s2-steps", type=int, default=21)
    figure3.add_argument("--steps", type=int, default=21, help="Reflectance grid points")
    _add_splitter_options(figure3, with_reflectance=False)
    _add_output_options(figure3, "csv")
    figure3.set_defaults(handler=cmd_figure3)

    squeezed = subparsers.add_parser("squeezed", parents=[common], help="Entropy for two squeezed-vacuum inputs")
    squeezed.add_argument("--s1", type=float, required=True)
    squeezed.add_argument("--s2", type=float, required=True)
    squeezed.add_argument("--varphi1", type=float, default=0.0, help="Squeezing phase of input a (radians)")
    squeezed.add_argument("--varphi2", type=float, default=0.0, help="Squeezing phase of input b (radians)")
    _add_splitter_options(squeezed)
    _add_output_options(squeezed, "json")
    squeezed.set_defaults(handler=cmd_squeezed)

    gaussian = subparsers.add_parser("gaussian", parents=[common], help="Separability verdict for a mixed Gaussian case")
    gaussian.add_argument("--preset", choices=PRESETS, required=True)
    gaussian.add_argument("--nbar", type=float, default=0.0, help="Thermal mean photon number")
    gaussian.add_argument("--s", type=float, default=0.0, help="Squeezing parameter")
    gaussian.add_argument("--sweep-nbar", nargs=3, type=float, metavar=("LO", "HI", "STEPS"),
                          help="Tabulate verdicts over a grid of nbar instead")
    _add_splitter_options(gaussian, phi_default=math.pi / 2)
    _add_output_options(gaussian, "json")
    gaussian.set_defaults(handler=cmd_gaussian)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logging(logging.DEBUG if args.verbose else logging.WARNING, args.log_file)

    try:
        args.handler(args)
    except PreconditionError as e:
        logger.error(f"Invalid parameters: {e}")
        return EXIT_USAGE
    except BeamSplitterError as e:
        logger.error(f"Numerical failure: {e}")
        return EXIT_NUMERICAL
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
