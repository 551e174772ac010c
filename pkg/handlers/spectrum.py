"""
spectrum and table commands.
"""
import argparse
import logging

from core.errors import ParameterError
from core.utils import non_negative_int, output_flags_parser, positive_int, write_output
from services.data_exporter import render_multiplicity_table, render_spectrum
from services.spectrum import hypercube_spectrum, johnson_spectrum, middle_cube_spectrum

logger = logging.getLogger(__name__)


def cmd_spectrum(args: argparse.Namespace) -> int:
    """Closed-form spectrum of a middle-cube, Johnson graph or hypercube."""
    if args.family == "middle":
        if args.k is None:
            raise ParameterError("--k is required for the middle family", source="spectrum")
        table = middle_cube_spectrum(args.k)
    elif args.family == "johnson":
        if args.n is None or args.m is None:
            raise ParameterError("--n and --m are required for the johnson family", source="spectrum")
        table = johnson_spectrum(args.n, args.m)
    else:
        if args.n is None:
            raise ParameterError("--n is required for the hypercube family", source="spectrum")
        table = hypercube_spectrum(args.n)

    logger.info(f"Spectrum of {args.family}: {table.distinct} distinct eigenvalues, order {table.order}")
    write_output(render_spectrum(table, args.format), args.out)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    """Multiplicity table for n = 3, 5, ..., 2*kmax+1, optionally with the concatenated sequence."""
    write_output(render_multiplicity_table(args.kmax, args.format, with_sequence=args.oeis), args.out)
    return 0


def setup_spectrum_handlers(subparsers) -> None:
    common = output_flags_parser()

    spectrum = subparsers.add_parser("spectrum", parents=[common],
                                     help="print the closed-form spectrum of a graph family")
    spectrum.add_argument("--family", choices=("middle", "johnson", "hypercube"), default="middle")
    spectrum.add_argument("--k", type=non_negative_int, help="middle-cube half-dimension, n = 2k+1")
    spectrum.add_argument("--n", type=positive_int, help="ground-set size (johnson, hypercube)")
    spectrum.add_argument("--m", type=positive_int, help="subset size (johnson)")
    spectrum.set_defaults(handler=cmd_spectrum)

    table = subparsers.add_parser("table", parents=[common],
                                  help="print the multiplicity table of M_3 .. M_{2kmax+1}")
    table.add_argument("--kmax", type=positive_int, default=4)
    table.add_argument("--oeis", action="store_true",
                       help="append the multiplicity sequence and compare its published prefix")
    table.set_defaults(handler=cmd_table)
