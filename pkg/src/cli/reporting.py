"""
Human-readable summaries rendered through pandas DataFrames.
"""

from __future__ import annotations

from typing import Any, Dict, List, Optional, Sequence, Tuple

import pandas as pd

from ..core.closure import PropernessReport
from ..core.rainbow import Rainbow, StructureReport
from ..core.verify import IntersectionTensor, tensor_table


def create_valency_table(rainbow: Rainbow, report: StructureReport) -> pd.DataFrame:
    """One row per colour: label, transpose, cell count and valency."""
    sizes = [int((rainbow.colors == c).sum()) for c in range(rainbow.rank)]
    rows = []
    for color, marker in enumerate(report.valency_markers()):
        rows.append(
            {
                "color": color,
                "label": rainbow.label(color),
                "transpose": rainbow.transpose[color],
                "cells": sizes[color],
                "valency": marker,
            }
        )
    return pd.DataFrame(rows, columns=["color", "label", "transpose", "cells", "valency"])


def create_fiber_table(parts: Sequence[Tuple[int, ...]]) -> pd.DataFrame:
    return pd.DataFrame(
        [{"fiber": i, "size": len(part), "points": " ".join(map(str, part))} for i, part in enumerate(parts)],
        columns=["fiber", "size", "points"],
    )


def render_params(rainbow: Rainbow, summary: Dict[str, Any]) -> str:
    """
    Render the params summary as plain text.

    Args:
        rainbow: the rainbow summarised
        summary: output of SchemeToolkit.params

    Returns:
        Text with flags, valency, fiber and tensor tables
    """
    report: StructureReport = summary["structure"]
    tensor: Optional[IntersectionTensor] = summary["tensor"]
    lines: List[str] = [
        f"order {rainbow.order} rank {rainbow.rank}",
        f"symmetric {str(report.symmetric).lower()} "
        f"homogeneous {str(report.homogeneous).lower()} "
        f"regular {str(report.regular).lower()}",
        "",
        create_valency_table(rainbow, report).to_string(index=False),
        "",
        create_fiber_table(summary["fibers"]).to_string(index=False),
        "",
    ]
    if tensor is None:
        lines.append("tensor: none (neither coherent nor Jordan)")
    else:
        lines.append(f"tensor: {tensor.kind}{' (doubled)' if tensor.doubled else ''}")
        lines.append(tensor_table(tensor, rainbow.labels).to_string(index=False))
    return "\n".join(lines) + "\n"


def render_properness(report: PropernessReport) -> str:
    verdict = "proper" if report.proper else "improper"
    line = (
        f"{verdict}: jordan rank {report.jordan_rank}, "
        f"symmetrized WL rank {report.symmetrized_wl_rank}"
    )
    if report.witness_color is not None:
        line += f", colour {report.witness_color} splits colour {report.witness_parent}"
    return line
