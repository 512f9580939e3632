"""
Configuration Management for SchemeMate

This package contains configuration files and settings including:
- App configuration
- Feature flags
- Reference colourings
- Environment variables
"""

from .app_config import *
from .presets import *

__version__ = "1.0.0"
__author__ = "SchemeMate Team"
