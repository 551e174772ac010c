import argparse
from fractions import Fraction

import pytest

from config import Config, ConfigurationError
from core.utils import apply_flag_overrides, integral_scale, positive_int


def test_defaults():
    assert Config.get(Config.MAX_K) == 5
    assert Config.get(Config.CHARPOLY_MAX_N) == 80
    assert Config.get(Config.BUDGET) == 2_000_000
    assert Config.get(Config.DATABASE_URL) is None
    assert Config.source_of(Config.MAX_K) == "default"


def test_environment_values_are_parsed(monkeypatch):
    monkeypatch.setenv("MIDSPEC_MAX_K", " 3 ")
    monkeypatch.setenv("MIDSPEC_LOG_LEVEL", "debug")
    Config.initialize_from_env()
    assert Config.get(Config.MAX_K) == 3
    assert Config.source_of(Config.MAX_K) == "env"
    assert Config.get(Config.LOG_LEVEL) == "debug"
    assert Config.get(Config.SYSTEM_VERSION) == "1.0.0"


@pytest.mark.parametrize("raw", ["abc", "0", "-4", "2.5"])
def test_bad_integer_values_raise(monkeypatch, raw):
    monkeypatch.setenv("MIDSPEC_BUDGET", raw)
    with pytest.raises(ConfigurationError) as excinfo:
        Config.initialize_from_env()
    assert excinfo.value.source == "MIDSPEC_BUDGET"
    assert "MIDSPEC_BUDGET" in str(excinfo.value)


def test_flags_win_over_environment(monkeypatch):
    monkeypatch.setenv("MIDSPEC_BUDGET", "100")
    Config.initialize_from_env()
    apply_flag_overrides({Config.BUDGET: 7, Config.MAX_K: None})
    assert Config.get_int(Config.BUDGET) == 7
    assert Config.source_of(Config.BUDGET) == "flag"
    assert Config.source_of(Config.MAX_K) == "default"
    assert Config.get_int(Config.BUDGET, 9) == 9


def test_validate_critical_keys():
    Config.validate_critical_keys()
    Config.set(Config.GRAPH_MAX_K, Config.HARD_GRAPH_MAX_K + 1)
    with pytest.raises(ConfigurationError):
        Config.validate_critical_keys()

    Config.reset()
    Config.set(Config.CHARPOLY_MAX_N, Config.HARD_TRACE_MAX_P + 1)
    with pytest.raises(ConfigurationError):
        Config.validate_critical_keys()


def test_describe_lists_sources():
    Config.set(Config.WORKERS, 4, source="flag")
    described = Config.describe()
    assert described[Config.WORKERS]["value"] == 4
    assert described[Config.WORKERS]["source"] == "flag"
    assert described[Config.BUDGET]["source"] == "default"


def test_positive_int_argument_type():
    assert positive_int("12") == 12
    with pytest.raises(argparse.ArgumentTypeError):
        positive_int("0")


def test_integral_scale():
    assert integral_scale([Fraction(1, 2), Fraction(2, 3), 5]) == 6
    assert integral_scale([]) == 1
