"""
Database connection and session management for the run ledger.
"""
import logging
from contextlib import contextmanager

from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker

from config import Config, ConfigurationError
from models.base import Base

logger = logging.getLogger(__name__)

# Database engines and session factories, keyed by URL
_ENGINES = {}
_SESSION_FACTORIES = {}


def ledger_enabled() -> bool:
    return bool(Config.get(Config.DATABASE_URL))


def get_db_session(db_url: str = None):
    """
    Create (once per URL) and return the SQLAlchemy session factory and engine.

    Args:
        db_url: Database URL; defaults to the configured MIDSPEC_DATABASE_URL

    Returns:
        Tuple of session factory and engine

    Raises:
        ConfigurationError: If no database URL is configured
    """
    db_url = db_url or Config.get(Config.DATABASE_URL)
    if not db_url:
        raise ConfigurationError("DATABASE_URL is not set or empty", source="MIDSPEC_DATABASE_URL")

    if db_url not in _ENGINES:
        connect_args = {}
        if db_url.startswith('sqlite'):
            connect_args["check_same_thread"] = False

        engine = create_engine(db_url, connect_args=connect_args)
        Base.metadata.create_all(engine)
        _ENGINES[db_url] = engine
        _SESSION_FACTORIES[db_url] = sessionmaker(bind=engine, expire_on_commit=False)
        logger.info(f"Run ledger database initialized at {db_url}")

    return _SESSION_FACTORIES[db_url], _ENGINES[db_url]


@contextmanager
def get_db_session_ctx(db_url: str = None):
    """
    Context manager for database sessions with automatic commit/rollback.

    Yields:
        SQLAlchemy Session object

    Raises:
        ConfigurationError: If database is not configured
    """
    session_factory, _ = get_db_session(db_url)
    session = session_factory()

    try:
        yield session
        session.commit()
    except Exception as e:
        session.rollback()
        logger.error(f"Database session error: {e}")
        raise
    finally:
        session.close()


def dispose_engines() -> None:
    """Close every engine. Used by the test-suite."""
    for engine in _ENGINES.values():
        engine.dispose()
    _ENGINES.clear()
    _SESSION_FACTORIES.clear()
