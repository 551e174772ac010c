"""
verify command: runs the requested certification checks and reports pass / fail per check.
"""
import argparse
import logging

from config import Config
from core.utils import apply_flag_overrides, non_negative_int, output_flags_parser, positive_int, write_output
from services.check_processor import CheckProcessor, exit_code_for, parse_check_names
from services.data_exporter import render_report
from services.run_ledger import record_report
from services.verify_checks import get_all_checks

logger = logging.getLogger(__name__)


def cmd_verify(args: argparse.Namespace) -> int:
    """
    Run checks for M_{2k+1}.

    Returns:
        0 when every check passed, 2 on a failure or an over-cap skip (unless --allow-skip)
    """
    apply_flag_overrides({
        Config.MAX_K: args.max_k,
        Config.MOMENTS_MAX_K: args.moments_max_k,
        Config.CHARPOLY_MAX_N: args.charpoly_max_n,
        Config.WORKERS: args.workers,
    })
    names = parse_check_names(args.checks)
    processor = CheckProcessor(args.k, trials=args.trials, seed=args.seed)
    report = processor.run(names)

    exit_code = exit_code_for(report, allow_skip=args.allow_skip)
    record_report(report, exit_code)

    write_output(render_report(report, args.format), args.out)
    if exit_code:
        logger.warning(f"verify k={args.k}: failed {report.failed or '-'}, skipped {report.skipped or '-'}")
    return exit_code


def setup_verify_handlers(subparsers) -> None:
    verify = subparsers.add_parser("verify", parents=[output_flags_parser()],
                                   help="certify the spectrum of M_{2k+1} by independent checks")
    verify.add_argument("--k", type=positive_int, required=True)
    verify.add_argument("--checks", default=None,
                        help="comma-separated subset of: " + ", ".join(get_all_checks())
                             + " (default: eigen,msq,moments,rank,charpoly)")
    verify.add_argument("--allow-skip", action="store_true",
                        help="exit 0 even when some checks were skipped over their cap")
    verify.add_argument("--max-k", type=positive_int, default=None,
                        help="override MIDSPEC_MAX_K (eigenbasis, M^2, rank)")
    verify.add_argument("--moments-max-k", type=positive_int, default=None,
                        help="override MIDSPEC_MOMENTS_MAX_K")
    verify.add_argument("--charpoly-max-n", type=positive_int, default=None,
                        help="override MIDSPEC_CHARPOLY_MAX_N")
    verify.add_argument("--workers", type=positive_int, default=None,
                        help="threads for the eigenbasis construction")
    verify.add_argument("--trials", type=positive_int, default=1000,
                        help="random subsets per kernel vector for the lemmas check")
    verify.add_argument("--seed", type=non_negative_int, default=0)
    verify.set_defaults(handler=cmd_verify)
