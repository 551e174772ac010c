"""
Utility functions shared by the command handlers.
"""
import argparse
import logging
import math
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, Optional, Sequence

from config import Config

logger = logging.getLogger(__name__)


def positive_int(raw: str) -> int:
    """argparse type: integer >= 1."""
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {value}")
    return value


def non_negative_int(raw: str) -> int:
    """argparse type: integer >= 0."""
    try:
        value = int(raw)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {raw!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def apply_flag_overrides(overrides: Dict[str, Optional[Any]]) -> None:
    """Store every flag that was given, so it wins over environment and defaults."""
    for key, value in overrides.items():
        if value is not None:
            Config.set(key, value, source="flag")


def write_output(text: str, path: Optional[str] = None) -> None:
    """
    Write command output to path, or to stdout when no path is given.

    Raises:
        OSError: If the file cannot be written
    """
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    target = Path(path)
    if target.parent and not target.parent.exists():
        target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding="utf-8")
    logger.info(f"Wrote {len(text)} characters to {target}")


def integral_scale(values: Sequence[Fraction]) -> int:
    """Smallest positive integer making every value integral."""
    return math.lcm(*(Fraction(v).denominator for v in values)) if values else 1


def output_flags_parser() -> argparse.ArgumentParser:
    """Parent parser with the flags every command accepts."""
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=("table", "csv", "json"), default="table",
                        help="output format (default: table)")
    parent.add_argument("--out", metavar="PATH", default=None,
                        help="write the result to PATH instead of stdout")
    parent.add_argument("--quiet", action="store_true",
                        help="log warnings and errors only")
    return parent
