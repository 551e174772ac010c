"""
Main entry point for midspec: spectra, eigenbases and certificates for middle-cubes.
"""
import argparse
import logging
import sys
from typing import List, Optional

from config import Config, ConfigurationError
from core.errors import MidspecError
from handlers import register_all_handlers

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="midspec",
        description="Exact spectra, eigenbases and Hamiltonian cycles of middle-cube graphs."
    )
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True
    register_all_handlers(subparsers)
    return parser


def setup_logging(quiet: bool = False) -> None:
    level = logging.WARNING if quiet else getattr(logging, str(Config.get(Config.LOG_LEVEL)).upper(),
                                                  logging.INFO)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
        force=True
    )


def main(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments, load configuration and dispatch to a command handler.

    Returns:
        Exit code: 0 success, 1 usage or internal error, 2 verification failure or search exhaustion
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    try:
        Config.initialize_from_env()
        setup_logging(args.quiet)
        Config.validate_critical_keys()
    except ConfigurationError as e:
        setup_logging(args.quiet)
        logger.critical(f"Configuration error: {e}")
        print(str(e), file=sys.stderr)
        return EXIT_USAGE

    try:
        return args.handler(args)
    except (ConfigurationError, MidspecError) as e:
        logger.error(f"{args.command} failed: {e}")
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        logger.error(f"{args.command} could not write its output: {e}")
        print(str(e), file=sys.stderr)
        return EXIT_USAGE
    except Exception as e:
        logger.critical(f"Unexpected error in {args.command}: {e}", exc_info=True)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
