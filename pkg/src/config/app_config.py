"""
Application Configuration for SchemeMate

This module contains the main application configuration including:
- App metadata
- Default settings
- Feature flags
- Environment configuration
"""

import os
from typing import Any, Dict

# App Metadata
APP_NAME = "SchemeMate"
APP_VERSION = "1.0.0"
APP_DESCRIPTION = "Building, verification and closure of coherent configurations and Jordan schemes"
APP_AUTHOR = "SchemeMate Team"

# Default Settings
DEFAULT_SETTINGS = {
    "seed": 0,
    "max_wfdf_d": 3,
    "log_level": "WARNING",
    "json_indent": None,
    # products of count matrices must stay below this bound (int64 headroom)
    "int_limit": 2 ** 62,
    "diamond_count_max_r": 3,
}

# Feature Flags
FEATURE_FLAGS = {
    "verify_builds": True,
    "allow_large_d": False,
    "cross_check_fusion": True,
}

# Environment overrides: setting/flag -> variable name
ENV_OVERRIDES = {
    "seed": "SCHEMEMATE_SEED",
    "log_level": "SCHEMEMATE_LOG_LEVEL",
    "allow_large_d": "SCHEMEMATE_ALLOW_LARGE_D",
}

# Supported Builders
SUPPORTED_BUILDERS = {
    "wfdf": {
        "name": "WFDF rank-five construction",
        "family": "jordan",
        "options": ["d", "diamond", "sigma", "theta", "seed"],
    },
    "cover": {
        "name": "Cyclotomic antipodal cover base scheme",
        "family": "coherent",
        "options": ["q", "m"],
    },
    "switch": {
        "name": "Switched Jordan scheme",
        "family": "jordan",
        "options": ["q", "m", "fiber"],
    },
    "thin": {
        "name": "Thin scheme of a cyclic group",
        "family": "coherent",
        "options": ["k"],
    },
    "example": {
        "name": "Named reference colouring",
        "family": "any",
        "options": ["name"],
    },
}


def get_config() -> Dict[str, Any]:
    """Get the complete application configuration."""
    return {
        "app": {
            "name": APP_NAME,
            "version": APP_VERSION,
            "description": APP_DESCRIPTION,
            "author": APP_AUTHOR,
        },
        "settings": {key: get_setting(key) for key in DEFAULT_SETTINGS},
        "features": {flag: is_feature_enabled(flag) for flag in FEATURE_FLAGS},
        "builders": SUPPORTED_BUILDERS,
    }


def get_setting(key: str, default: Any = None) -> Any:
    """Get a specific setting value, honouring environment overrides."""
    env_name = ENV_OVERRIDES.get(key)
    if env_name and os.getenv(env_name):
        raw = os.getenv(env_name, "")
        base = DEFAULT_SETTINGS.get(key, default)
        if isinstance(base, int) and not isinstance(base, bool):
            try:
                return int(raw)
            except ValueError:
                return base
        return raw.upper() if key == "log_level" else raw
    return DEFAULT_SETTINGS.get(key, default)


def is_feature_enabled(feature: str) -> bool:
    """Check if a feature is enabled."""
    env_name = ENV_OVERRIDES.get(feature)
    if env_name and os.getenv(env_name):
        return os.getenv(env_name, "false").lower() == "true"
    return FEATURE_FLAGS.get(feature, False)


def get_builder_config(builder: str) -> Dict[str, Any]:
    """Get configuration for a specific builder."""
    return SUPPORTED_BUILDERS.get(builder, {})
