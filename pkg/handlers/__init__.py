"""
Handlers initialization module.
"""
import logging

from .spectrum import setup_spectrum_handlers
from .verify import setup_verify_handlers
from .eigenbasis import setup_eigenbasis_handlers
from .hamilton import setup_hamilton_handlers
from .export import setup_export_handlers
from .history import setup_history_handlers

logger = logging.getLogger(__name__)


def register_all_handlers(subparsers):
    """
    Register every command with the argument parser.

    Args:
        subparsers: Result of ArgumentParser.add_subparsers
    """
    setup_spectrum_handlers(subparsers)
    setup_verify_handlers(subparsers)
    setup_eigenbasis_handlers(subparsers)
    setup_hamilton_handlers(subparsers)
    setup_export_handlers(subparsers)
    setup_history_handlers(subparsers)

    logger.debug("All handlers have been registered")
