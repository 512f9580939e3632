"""
Readers and writers for the file formats the command line speaks.

Rainbow JSON:  {"order": n, "rank": r, "colors": [[...]...], "labels": [...]}
               (labels only when the rainbow carries them)
Rainbow text:  "n r" followed by n rows of n space-separated colour ids
Tensor dump:   header "doubled=true|false", then "F C D value" lines for the
               non-zero entries in lexicographic order
All writers end with a single LF and contain no timestamps.
"""

from __future__ import annotations

import json
import logging
from dataclasses import asdict
from pathlib import Path
from typing import Any, Dict, Optional

import numpy as np

from ..config import get_setting
from ..core.closure import ClosureReport, PropernessReport
from ..core.constructions import CoverSpec, WfdfSpec
from ..core.errors import FormatError, NonSquare
from ..core.rainbow import Rainbow, is_canonical, rainbow_from_colors
from ..core.verify import IntersectionTensor, SrgParams

logger = logging.getLogger(__name__)


def _dumps(payload: Any) -> str:
    return json.dumps(payload, indent=get_setting("json_indent")) + "\n"


def rainbow_to_dict(rainbow: Rainbow) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "order": rainbow.order,
        "rank": rainbow.rank,
        "colors": rainbow.to_rows(),
    }
    if rainbow.labels:
        payload["labels"] = list(rainbow.labels)
    return payload


def rainbow_to_json(rainbow: Rainbow) -> str:
    return _dumps(rainbow_to_dict(rainbow))


def rainbow_to_text(rainbow: Rainbow) -> str:
    lines = [f"{rainbow.order} {rainbow.rank}"]
    lines += [" ".join(str(c) for c in row) for row in rainbow.to_rows()]
    return "\n".join(lines) + "\n"


def format_rainbow(rainbow: Rainbow, path: Optional[str] = None) -> str:
    """JSON unless ``path`` ends in .txt."""
    if path and path.endswith(".txt"):
        return rainbow_to_text(rainbow)
    return rainbow_to_json(rainbow)


def _check_entries(colors, labels, source: str) -> None:
    if not isinstance(colors, list) or not all(isinstance(row, list) for row in colors):
        raise FormatError(f"{source}: colours must be a list of rows")
    for row in colors:
        for value in row:
            # bool is an int subclass; JSON true/false are not colour ids
            if isinstance(value, bool) or not isinstance(value, int):
                raise FormatError(f"{source}: colour id {value!r} is not an integer")
    if labels is not None and (
        not isinstance(labels, list) or not all(isinstance(name, str) for name in labels)
    ):
        raise FormatError(f"{source}: labels must be a list of strings")


def _rainbow_from_payload(colors, labels=None, source: str = "input") -> Rainbow:
    _check_entries(colors, labels, source)
    try:
        colors = np.array(colors, dtype=np.int64)
    except OverflowError:
        raise FormatError(f"{source}: colour id outside the 64-bit range")
    except (ValueError, TypeError) as e:
        raise FormatError(f"{source}: colour rows are not integer rows of equal length: {e}")
    if colors.ndim != 2 or colors.shape[0] != colors.shape[1] or colors.size == 0:
        raise NonSquare(f"{source}: colour matrix has shape {colors.shape}")
    if not is_canonical(colors):
        logger.warning("%s: colours are not canonically numbered; renumbering", source)
    return rainbow_from_colors(colors, labels)


def parse_rainbow(text: str, source: str = "input") -> Rainbow:
    """
    Parse rainbow JSON or text.

    Args:
        text: file contents
        source: name used in messages

    Returns:
        Canonically numbered Rainbow
    """
    stripped = text.strip()
    if not stripped:
        raise FormatError(f"{source}: empty file")
    if stripped.startswith("{"):
        try:
            data = json.loads(stripped)
            colors = data["colors"]
        except (ValueError, KeyError, TypeError) as e:
            raise FormatError(f"{source}: malformed rainbow JSON: {e}")
        rainbow = _rainbow_from_payload(colors, data.get("labels"), source)
        if "order" in data and data["order"] != rainbow.order:
            raise FormatError(f"{source}: order {data['order']} but {rainbow.order} rows")
        if "rank" in data and data["rank"] != rainbow.rank:
            raise FormatError(f"{source}: declared rank {data['rank']} but found {rainbow.rank}")
        return rainbow
    lines = stripped.splitlines()
    try:
        order, rank = (int(x) for x in lines[0].split())
        colors = [[int(x) for x in line.split()] for line in lines[1:]]
    except ValueError as e:
        raise FormatError(f"{source}: malformed rainbow text: {e}")
    if len(colors) != order:
        raise FormatError(f"{source}: header says {order} rows, found {len(colors)}")
    rainbow = _rainbow_from_payload(colors, source=source)
    if rainbow.rank != rank:
        raise FormatError(f"{source}: declared rank {rank} but found {rainbow.rank}")
    return rainbow


def read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e.strerror}")


def read_rainbow(path: str) -> Rainbow:
    return parse_rainbow(read_text(path), source=path)


def read_json(path: str) -> Dict[str, Any]:
    try:
        return json.loads(read_text(path))
    except ValueError as e:
        raise FormatError(f"{path}: malformed JSON: {e}")


def read_wfdf_spec(path: str) -> WfdfSpec:
    return WfdfSpec.from_dict(read_json(path))


def read_cover_spec(path: str) -> CoverSpec:
    return CoverSpec.from_dict(read_json(path))


def closure_report_to_json(report: ClosureReport) -> str:
    return _dumps(
        {
            "kind": report.kind,
            "rounds": report.rounds,
            "rank_history": list(report.rank_history),
            "result": rainbow_to_dict(report.result),
        }
    )


def properness_report_to_json(report: PropernessReport) -> str:
    return _dumps(asdict(report))


def tensor_dump(tensor: IntersectionTensor) -> str:
    lines = [f"doubled={'true' if tensor.doubled else 'false'}"]
    lines += [f"{f} {c} {d} {value}" for f, c, d, value in tensor.sorted_entries()]
    return "\n".join(lines) + "\n"


def srg_line(params: SrgParams) -> str:
    return " ".join(str(x) for x in params.as_tuple()) + "\n"
