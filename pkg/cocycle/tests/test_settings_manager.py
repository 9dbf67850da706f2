"""
Tests del administrador de configuración (data/settings.yaml).
"""

import os
import sys
import tempfile

import yaml

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from cocycle.config import FLOAT_TOLERANCE, RANDOM_SUITE_DEFAULTS, SETTINGS_FILENAME
from cocycle.managers.settings_manager import (
    DEFAULT_SETTINGS,
    SettingsManager,
    VerifySettings,
    get_global_settings,
    set_global_settings_manager,
)


def _raises(exc_type, func, *args):
    try:
        func(*args)
    except exc_type:
        return True
    return False


def _write(directory, payload):
    with open(os.path.join(directory, SETTINGS_FILENAME), "w", encoding="utf-8") as fh:
        fh.write(payload)


def test_defaults_when_missing():
    with tempfile.TemporaryDirectory() as tmp:
        manager = SettingsManager(tmp)
        assert manager.data == DEFAULT_SETTINGS
        settings = manager.settings
        assert settings.float_tolerance == FLOAT_TOLERANCE
        assert settings.cases == RANDOM_SUITE_DEFAULTS["cases"]
        assert settings.output_format == "text"
        assert not os.path.exists(manager.file_path)


def test_partial_file_is_merged():
    with tempfile.TemporaryDirectory() as tmp:
        _write(tmp, "random_suite:\n  cases: 12\n  seed: 5\noutput:\n  format: json\n")
        settings = SettingsManager(tmp).settings
        assert settings.cases == 12
        assert settings.seed == 5
        assert settings.max_v == RANDOM_SUITE_DEFAULTS["max_v"]
        assert settings.output_format == "json"
        assert settings.show_matrices is True


def test_unreadable_yaml_falls_back():
    with tempfile.TemporaryDirectory() as tmp:
        _write(tmp, "random_suite: [unclosed\n")
        assert SettingsManager(tmp).data == DEFAULT_SETTINGS


def test_invalid_values_are_rejected():
    with tempfile.TemporaryDirectory() as tmp:
        _write(tmp, "tolerances:\n  float: -1\n")
        assert _raises(ValueError, SettingsManager, tmp)
        _write(tmp, "random_suite:\n  lab_max_n: 1\n")
        assert _raises(ValueError, SettingsManager, tmp)


def test_set_value_validates_and_saves():
    with tempfile.TemporaryDirectory() as tmp:
        manager = SettingsManager(tmp)
        manager.set_value("random_suite", "cases", 3)
        assert SettingsManager(tmp).settings.cases == 3

        assert _raises(ValueError, manager.set_value, "nope", "cases", 3)
        assert _raises(ValueError, manager.set_value, "random_suite", "nope", 3)
        assert _raises(ValueError, manager.set_value, "random_suite", "cases", -1)
        assert _raises(ValueError, manager.set_value, "output", "format", "xml")
        assert _raises(ValueError, manager.set_value, "output", "show_matrices", "yes")
        assert manager.settings.cases == 3

        with open(manager.file_path, "r", encoding="utf-8") as fh:
            stored = yaml.safe_load(fh)
        assert stored["random_suite"]["cases"] == 3


def test_reset_defaults():
    with tempfile.TemporaryDirectory() as tmp:
        manager = SettingsManager(tmp)
        manager.set_value("limits", "spanning_tree_guard", 10)
        manager.reset_defaults()
        assert SettingsManager(tmp).data == DEFAULT_SETTINGS


def test_verify_settings_round_trip():
    settings = VerifySettings(cases=7, show_matrices=False, unit_window=1e-4)
    assert VerifySettings.from_dict(settings.to_dict()) == settings
    assert VerifySettings.from_dict(None) == VerifySettings()


def test_global_manager():
    with tempfile.TemporaryDirectory() as tmp:
        manager = SettingsManager(tmp)
        set_global_settings_manager(manager)
        assert get_global_settings(tmp) is manager
        set_global_settings_manager(None)
