from src.config import (
    APP_NAME,
    SUPPORTED_BUILDERS,
    get_builder_config,
    get_config,
    get_preset,
    get_setting,
    is_feature_enabled,
    list_presets,
)
from src.core import SchemeToolkit


def test_defaults(monkeypatch):
    monkeypatch.delenv("SCHEMEMATE_SEED", raising=False)
    assert get_setting("seed") == 0
    assert get_setting("max_wfdf_d") == 3
    assert get_setting("json_indent") is None
    assert get_setting("unknown", "fallback") == "fallback"
    assert is_feature_enabled("verify_builds")
    assert not is_feature_enabled("no_such_flag")


def test_environment_overrides(monkeypatch):
    monkeypatch.setenv("SCHEMEMATE_SEED", "42")
    monkeypatch.setenv("SCHEMEMATE_LOG_LEVEL", "debug")
    monkeypatch.setenv("SCHEMEMATE_ALLOW_LARGE_D", "true")
    assert get_setting("seed") == 42
    assert get_setting("log_level") == "DEBUG"
    assert is_feature_enabled("allow_large_d")


def test_bad_integer_override_falls_back(monkeypatch):
    monkeypatch.setenv("SCHEMEMATE_SEED", "many")
    assert get_setting("seed") == 0


def test_builder_registry_matches_toolkit():
    assert set(SchemeToolkit().builders) == set(SUPPORTED_BUILDERS)
    assert get_builder_config("wfdf")["family"] == "jordan"
    assert get_builder_config("nope") == {}
    assert get_config()["app"]["name"] == APP_NAME


def test_presets():
    assert list_presets() == ["four-point", "four-point-broken", "pentagon"]
    assert get_preset("pentagon")["labels"] == ["1", "A", "B"]
    assert get_preset("hexagon") is None
