#!/usr/bin/env python3
"""
Reference colourings for SchemeMate

Small hand-written rainbows used as fixtures by the test suite and exposed
through ``build example --name <preset>``.
"""

from typing import Dict, List, Optional

X, Y, Z, W = 0, 1, 2, 3

# Homogeneous, non-regular Jordan configuration on four points
FOUR_POINT = [
    [X, Y, Z, Z],
    [Y, X, Z, Z],
    [W, W, X, Y],
    [W, W, Y, X],
]

# Same colouring with (0,2) and (2,0) moved into Y; fails the Jordan condition
FOUR_POINT_BROKEN = [
    [X, Y, Y, Z],
    [Y, X, Z, Z],
    [Y, W, X, Y],
    [W, W, Y, X],
]

# Symmetrised thin scheme of Z5: identity, distance 1, distance 2
PENTAGON = [
    [(min((b - a) % 5, (a - b) % 5)) for b in range(5)]
    for a in range(5)
]

PRESETS: Dict[str, Dict] = {
    "four-point": {
        "colors": FOUR_POINT,
        "labels": ["X", "Y", "Z", "W"],
        "description": "Homogeneous but non-regular Jordan configuration",
    },
    "four-point-broken": {
        "colors": FOUR_POINT_BROKEN,
        "labels": ["X", "Y", "Z", "W"],
        "description": "Recoloured four-point example violating the Jordan condition",
    },
    "pentagon": {
        "colors": PENTAGON,
        "labels": ["1", "A", "B"],
        "description": "Pentagon scheme (symmetrised thin Z5)",
    },
}


def list_presets() -> List[str]:
    """Names of all presets."""
    return sorted(PRESETS)


def get_preset(name: str) -> Optional[Dict]:
    """Get a preset colouring by name."""
    return PRESETS.get(name)
