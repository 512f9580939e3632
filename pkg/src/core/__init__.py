"""
Core Business Logic for SchemeMate

This package contains the core business logic including:
- Rainbows and exact matrix arithmetic
- Coherent / Jordan verification and intersection tensors
- Coherent and Jordan closures, properness
- Constructions of proper Jordan schemes
"""

from .errors import *
from .rainbow import *
from .verify import *
from .closure import *
from .constructions import *
from .toolkit import SchemeToolkit

__version__ = "1.0.0"
__author__ = "SchemeMate Team"
