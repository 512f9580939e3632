#!/usr/bin/env python3
"""
SchemeMate - Toolkit

This module provides the orchestrator the command line drives:
- Builder registry (WFDF, cyclotomic base, switched, thin, preset examples)
- Property checks with (holds, message, payload) results
- Closures, properness and parameter summaries
"""

from __future__ import annotations

import logging
from typing import Any, Dict, Optional, Tuple

from ..config import SUPPORTED_BUILDERS
from .closure import (
    ClosureReport,
    PropernessReport,
    is_proper,
    jordan_closure,
    seed_from_rainbow,
    wl_closure,
)
from .constructions import CoverBuilder, ExampleBuilder, SwitchBuilder, ThinBuilder, WfdfBuilder
from .errors import SpecInvalid
from .rainbow import Rainbow, fibers, relation_of, structure_report, symmetrize
from .verify import (
    SrgParams,
    check_fusion_p3,
    is_coherent_configuration,
    is_jordan_configuration,
    srg_check,
)

logger = logging.getLogger(__name__)

VERIFY_KINDS = ("cc", "jc", "fusion")


class SchemeToolkit:
    """
    Main orchestrator for building, verifying and closing schemes.

    Provides one entry point per command-line verb over the registry of
    builders.
    """

    def __init__(self):
        """Initialize the toolkit with all supported builders."""
        self.builders = {
            "wfdf": WfdfBuilder(),
            "cover": CoverBuilder(),
            "switch": SwitchBuilder(),
            "thin": ThinBuilder(),
            "example": ExampleBuilder(),
        }

    def build(self, builder: str, **options: Any) -> Rainbow:
        """
        Run a registered builder.

        Args:
            builder: builder id (see SUPPORTED_BUILDERS)
            **options: builder options, None values dropped

        Returns:
            The constructed rainbow
        """
        if builder not in self.builders:
            raise SpecInvalid(f"Unsupported builder: {builder}")
        options = {key: value for key, value in options.items() if value is not None}
        logger.info("building %s with %s", SUPPORTED_BUILDERS[builder]["name"], options)
        return self.builders[builder].build(**options)

    def verify(self, rainbow: Rainbow, kind: str) -> Tuple[bool, str, Optional[Any]]:
        """
        Check a property of a rainbow.

        Args:
            rainbow: the rainbow to check
            kind: "cc", "jc" or "fusion"

        Returns:
            Tuple of (holds, message, tensor or witness)
        """
        if kind == "cc":
            holds, payload = is_coherent_configuration(rainbow)
            name = "coherent configuration"
        elif kind == "jc":
            holds, payload = is_jordan_configuration(rainbow)
            name = "Jordan configuration"
        elif kind == "fusion":
            holds, payload = check_fusion_p3(rainbow), None
            name = "rank-five fusion condition"
        else:
            raise SpecInvalid(f"Unsupported check: {kind}")
        if holds:
            return True, f"{name}: holds", payload
        detail = f" ({payload.describe()})" if payload is not None else ""
        return False, f"{name}: fails{detail}", payload

    def closure(self, rainbow: Rainbow, kind: str) -> ClosureReport:
        seed = seed_from_rainbow(rainbow)
        if kind == "wl":
            return wl_closure(seed)
        if kind == "jordan":
            return jordan_closure(seed)
        raise SpecInvalid(f"Unsupported closure: {kind}")

    def proper(self, rainbow: Rainbow) -> PropernessReport:
        return is_proper(rainbow)

    def symmetrize(self, rainbow: Rainbow) -> Rainbow:
        return symmetrize(rainbow)

    def srg(self, rainbow: Rainbow, color: int) -> Optional[SrgParams]:
        if not 0 <= color < rainbow.rank:
            raise SpecInvalid(f"colour {color} outside [0, {rainbow.rank - 1}]")
        return srg_check(relation_of(rainbow, color))

    def params(self, rainbow: Rainbow) -> Dict[str, Any]:
        """
        Gather the structure report, fibers and intersection tensor.

        The tensor is the coherent one when the rainbow is a coherent
        configuration, else the doubled Jordan one when it is Jordan.
        """
        coherent, tensor = is_coherent_configuration(rainbow)
        if not coherent:
            jordan, tensor = is_jordan_configuration(rainbow)
            if not jordan:
                tensor = None
        return {
            "structure": structure_report(rainbow),
            "fibers": fibers(rainbow),
            "tensor": tensor,
        }
