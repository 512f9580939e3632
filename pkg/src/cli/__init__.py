"""
Command Line Front End for SchemeMate

This package contains the command-line surface including:
- Argument parsing and verb handlers
- Rainbow, report and tensor file formats
- pandas summary tables
"""

from .commands import configure_logging, create_parser, run
from .formats import (
    closure_report_to_json,
    format_rainbow,
    parse_rainbow,
    properness_report_to_json,
    rainbow_to_json,
    rainbow_to_text,
    read_rainbow,
    tensor_dump,
)
from .reporting import create_fiber_table, create_valency_table, render_params

__version__ = "1.0.0"
__author__ = "SchemeMate Team"
