"""
eigenbasis command: writes one eigenspace block of M_{2k+1} in the matrix text format.
"""
import argparse
import logging

from config import Config
from core.errors import CapExceededError, ParameterError
from core.exactla import RationalMatrix
from core.utils import apply_flag_overrides, integral_scale, non_negative_int, output_flags_parser, write_output
from models.spectrum import EigenbasisBlock
from services.data_exporter import render_block
from services.eigenbasis import lift_block, sign_flip

logger = logging.getLogger(__name__)


def integral_rows(block: EigenbasisBlock) -> RationalMatrix:
    """Each row multiplied by the lcm of its denominators; the rows stay eigenvectors."""
    rows = []
    for i in range(block.dimension):
        row = block.vectors.row(i)
        scale = integral_scale(row)
        rows.append([value * scale for value in row])
    return RationalMatrix.from_rows(rows, cols=block.vectors.cols)


def cmd_eigenbasis(args: argparse.Namespace) -> int:
    apply_flag_overrides({Config.MAX_K: args.max_k})
    limit = Config.get_int(Config.MAX_K)
    if args.k < 1 or not 0 <= args.r <= args.k:
        raise ParameterError(f"need 0 <= r <= k and k >= 1, got k={args.k}, r={args.r}", source="eigenbasis")
    if args.k > limit:
        raise CapExceededError(f"k={args.k} exceeds the eigenbasis cap {limit}", source="eigenbasis")

    block = lift_block(args.k, args.r)
    if args.negative:
        block = sign_flip(block, args.k)

    vectors = integral_rows(block) if args.integral else None
    write_output(render_block(block, vectors), args.out)

    summary = f"eigenvalue {block.eigenvalue}, dimension {block.dimension}"
    if args.out:
        write_output(summary + "\n")
    else:
        logger.info(summary)
    return 0


def setup_eigenbasis_handlers(subparsers) -> None:
    eigenbasis = subparsers.add_parser("eigenbasis", parents=[output_flags_parser()],
                                       help="write the eigenvectors lifted from level r")
    eigenbasis.add_argument("--k", type=non_negative_int, required=True)
    eigenbasis.add_argument("--r", type=non_negative_int, required=True)
    eigenbasis.add_argument("--negative", action="store_true",
                            help="negate the upper layer, giving the eigenvalue -(k+1-r)")
    eigenbasis.add_argument("--integral", action="store_true",
                            help="scale each row to integer entries")
    eigenbasis.add_argument("--max-k", type=non_negative_int, default=None,
                            help="override MIDSPEC_MAX_K")
    eigenbasis.set_defaults(handler=cmd_eigenbasis)
