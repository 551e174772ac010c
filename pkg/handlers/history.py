"""
history command: lists recent runs from the ledger.
"""
import argparse
import logging

from config import ConfigurationError
from core.db import ledger_enabled
from core.utils import output_flags_parser, positive_int, write_output
from services.run_ledger import DEFAULT_HISTORY_LIMIT, history_exporter, recent_runs

logger = logging.getLogger(__name__)


def cmd_history(args: argparse.Namespace) -> int:
    if not ledger_enabled():
        raise ConfigurationError("set MIDSPEC_DATABASE_URL to use the run ledger", source="history")
    runs = recent_runs(args.limit)
    write_output(history_exporter().render(runs, args.format), args.out)
    return 0


def setup_history_handlers(subparsers) -> None:
    history = subparsers.add_parser("history", parents=[output_flags_parser()],
                                    help="list recent verify / hamilton runs from the ledger")
    history.add_argument("--limit", type=positive_int, default=DEFAULT_HISTORY_LIMIT)
    history.set_defaults(handler=cmd_history)
