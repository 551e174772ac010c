"""
Centralized configuration for midspec.
Every tunable cap and default lives here; commands read them through Config.get.
"""
import os
import logging
from typing import Dict, Any, Optional
from datetime import datetime
from dotenv import load_dotenv

logger = logging.getLogger(__name__)

ENV_PREFIX = "MIDSPEC_"


class ConfigurationError(Exception):
    """
    Exception raised for invalid configuration values.

    Attributes:
        message -- explanation of the error
        source -- variable or component where the error occurred
    """

    def __init__(self, message, source=None):
        self.message = message
        self.source = source
        super().__init__(self.message)

    def __str__(self):
        if self.source:
            return f"Configuration Error in {self.source}: {self.message}"
        return f"Configuration Error: {self.message}"


class Config:
    """
    Single access point for application settings.
    Values resolve as: command-line flag > MIDSPEC_* environment > built-in default.
    """
    # Desk-scale caps
    MAX_K = "max_k"
    GRAPH_MAX_K = "graph_max_k"
    MOMENTS_MAX_K = "moments_max_k"
    CHARPOLY_MAX_N = "charpoly_max_n"

    # Search and execution
    BUDGET = "budget"
    WORKERS = "workers"

    # Run ledger
    DATABASE_URL = "database_url"

    # System
    LOG_LEVEL = "log_level"
    SYSTEM_VERSION = "system_version"
    SYSTEM_START_TIME = "system_start_time"

    # Hard limits that no flag or variable can raise
    HARD_GRAPH_MAX_K = 12
    HARD_HYPERCUBE_MAX_N = 24
    HARD_JOHNSON_MAX_N = 20
    HARD_TRACE_MAX_P = 128

    DEFAULTS: Dict[str, Any] = {
        MAX_K: 5,
        GRAPH_MAX_K: 8,
        MOMENTS_MAX_K: 6,
        CHARPOLY_MAX_N: 80,
        BUDGET: 2_000_000,
        WORKERS: 1,
        DATABASE_URL: None,
        LOG_LEVEL: "INFO",
    }

    # Keys parsed as positive integers when read from the environment
    INTEGER_KEYS = [MAX_K, GRAPH_MAX_K, MOMENTS_MAX_K, CHARPOLY_MAX_N, BUDGET, WORKERS]

    _values: Dict[str, Any] = {}
    _sources: Dict[str, str] = {}
    _last_updates: Dict[str, datetime] = {}
    _initialized = False

    @classmethod
    def get(cls, key: str, default: Any = None) -> Any:
        """
        Get a configuration value by key.

        Args:
            key: Configuration key
            default: Value used when neither a set value nor a built-in default exists

        Returns:
            The configuration value or default
        """
        if key in cls._values:
            return cls._values[key]
        if key in cls.DEFAULTS and cls.DEFAULTS[key] is not None:
            return cls.DEFAULTS[key]
        return default

    @classmethod
    def get_int(cls, key: str, override: Optional[int] = None) -> int:
        """Integer setting, with a command-line override taking precedence."""
        if override is not None:
            return int(override)
        return int(cls.get(key))

    @classmethod
    def set(cls, key: str, value: Any, source: str = "manual") -> None:
        """
        Set a configuration value.

        Args:
            key: Configuration key
            value: Configuration value
            source: Source of the value for tracking
        """
        cls._values[key] = value
        cls._sources[key] = source
        cls._last_updates[key] = datetime.utcnow()
        logger.debug(f"Set {key}={value} from {source}")

    @classmethod
    def source_of(cls, key: str) -> str:
        """Where the current value of key came from."""
        if key in cls._sources:
            return cls._sources[key]
        return "default" if key in cls.DEFAULTS else "unknown"

    @classmethod
    def initialize_from_env(cls) -> None:
        """
        Initialize configuration values from the environment (and .env if present).
        Must run before any command reads a cap.
        """
        if cls._initialized:
            logger.debug("Config already initialized from environment")
            return

        load_dotenv()

        for key in cls.DEFAULTS:
            env_name = ENV_PREFIX + key.upper()
            raw = os.getenv(env_name)
            if raw is None or not raw.strip():
                continue

            if key in cls.INTEGER_KEYS:
                cls.set(key, cls._parse_positive_int(raw, env_name), source="env")
            else:
                cls.set(key, raw.strip(), source="env")

        cls.set(cls.SYSTEM_VERSION, "1.0.0", source="system")
        cls.set(cls.SYSTEM_START_TIME, datetime.utcnow(), source="system")

        cls._initialized = True
        logger.info("Configuration initialized from environment")

    @classmethod
    def validate_critical_keys(cls) -> None:
        """
        Check cross-key consistency.
        Raises ConfigurationError if a cap exceeds its hard limit.
        """
        graph_max_k = cls.get(cls.GRAPH_MAX_K)
        if graph_max_k > cls.HARD_GRAPH_MAX_K:
            raise ConfigurationError(
                f"graph cap k={graph_max_k} exceeds hard limit {cls.HARD_GRAPH_MAX_K}",
                source=ENV_PREFIX + "GRAPH_MAX_K"
            )
        charpoly_max_n = cls.get(cls.CHARPOLY_MAX_N)
        if charpoly_max_n > cls.HARD_TRACE_MAX_P:
            raise ConfigurationError(
                f"characteristic polynomial cap {charpoly_max_n} exceeds hard limit {cls.HARD_TRACE_MAX_P}",
                source=ENV_PREFIX + "CHARPOLY_MAX_N"
            )
        for key in (cls.MAX_K, cls.MOMENTS_MAX_K):
            if cls.get(key) > graph_max_k:
                logger.warning(f"{key}={cls.get(key)} is above the graph cap {graph_max_k}; "
                               f"larger k will still be refused by the generator")

    @classmethod
    def describe(cls) -> Dict[str, Dict[str, Any]]:
        """
        Get information about all configuration values.

        Returns:
            Dictionary with value and source for each known key
        """
        keys = set(cls.DEFAULTS) | set(cls._values)
        return {
            key: {
                "value": cls.get(key),
                "source": cls.source_of(key),
                "last_update": cls._last_updates.get(key),
            }
            for key in sorted(keys)
        }

    @classmethod
    def reset(cls) -> None:
        """Drop every set value. Used by the test-suite."""
        cls._values = {}
        cls._sources = {}
        cls._last_updates = {}
        cls._initialized = False

    @staticmethod
    def _parse_positive_int(raw: str, name: str) -> int:
        try:
            value = int(raw.strip())
        except ValueError:
            raise ConfigurationError(f"expected an integer, got {raw!r}", source=name)
        if value < 1:
            raise ConfigurationError(f"expected a positive integer, got {value}", source=name)
        return value
