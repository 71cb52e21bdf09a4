import logging

import pytest

from core.config import Settings, load_settings
from core.errors import ConfigError
from core.logger import get_logger


def test_defaults():
    s = load_settings({})
    assert s == Settings()
    assert (s.threads, s.bipartite_guard, s.general_guard) == (1, 12, 9)
    assert s.orbit_cap is None and s.automorphism_pruning


def test_environment_overrides():
    s = load_settings({"ELC_THREADS": "4", "ELC_ORBIT_CAP": "5000", "ELC_AUTOMORPHISM_PRUNING": "false"})
    assert s.threads == 4 and s.orbit_cap == 5000 and not s.automorphism_pruning
    assert load_settings({"ELC_ORBIT_CAP": "none"}).orbit_cap is None


def test_bad_values_name_the_variable():
    with pytest.raises(ConfigError) as info:
        load_settings({"ELC_THREADS": "zero", "ELC_BIPARTITE_GUARD": "100"})
    assert "ELC_THREADS" in str(info.value) and "ELC_BIPARTITE_GUARD" in str(info.value)
    assert info.value.code == "bad-config"


def test_logger_is_configured_once():
    log = get_logger("ELC-test")
    again = get_logger("ELC-test")
    assert log is again
    assert len(log.handlers) == len(again.handlers)
    assert not log.propagate
    assert any(isinstance(h, logging.StreamHandler) for h in log.handlers)
