"""Named built-in run configurations.

Each preset is a plain JSON-able dict in the same schema accepted by
``--config`` files, so ``--preset NAME`` and a config file are fully
interchangeable.  The three primary presets instantiate the standard
worked examples (sl(2) Borel; sl(3) Borel; sl(3) with abelian
nilradical, Levi generated by the second simple root); the remaining
presets cover the loop-algebra mode, tensor products, and a
deliberately non-generic eigenvalue family.
"""

from __future__ import annotations

import copy

GEO2 = {"kind": "geometric", "j": "2"}
GEO3 = {"kind": "geometric", "j": "3"}
DELTA1 = {"kind": "finite", "entries": {"1": "1"}}
CONST1 = {"kind": "recurrence", "v": {"0": "-1", "1": "1"}, "initial": ["1"]}

PRESETS = {
    # sl(2), Borel nilradical, geometric eigenvalues, level 1
    "sl2": {
        "algebra": {"type": "A", "rank": 1, "levi": []},
        "lam": {"a1": GEO2},
        "theta": "1",
        "mode": "affine",
        "cocycle": "standard",
        "truncation": {"D": 2, "E": 2, "J": 3},
    },
    # sl(3), Borel nilradical (two-step nilpotent loop radical)
    "sl3-borel": {
        "algebra": {"type": "A", "rank": 2, "levi": []},
        "lam": {"a1": GEO2, "a2": GEO3},
        "theta": "1",
        "mode": "affine",
        "cocycle": "standard",
        "truncation": {"D": 2, "E": 1, "J": 2},
    },
    # sl(3), Levi = {second simple root}, abelian nilradical
    "sl3-abelian": {
        "algebra": {"type": "A", "rank": 2, "levi": [2]},
        "lam": {"a1": GEO2, "a1+a2": GEO3},
        "theta": "1",
        "mode": "affine",
        "cocycle": "standard",
        "truncation": {"D": 2, "E": 1, "J": 2},
    },
    # loop algebra only (no central element, no derivation), merely
    # generic finite-support eigenvalues
    "sl2-loop": {
        "algebra": {"type": "A", "rank": 1, "levi": []},
        "lam": {"a1": DELTA1},
        "theta": "0",
        "mode": "loop_only",
        "cocycle": "standard",
        "truncation": {"D": 2, "E": 2, "J": 3},
    },
    # non-generic eigenvalues: constant sequence (recurrence a_{i+1}=a_i)
    "sl2-const": {
        "algebra": {"type": "A", "rank": 1, "levi": []},
        "lam": {"a1": CONST1},
        "theta": "1",
        "mode": "affine",
        "cocycle": "standard",
        "truncation": {"D": 1, "E": 0, "J": 0},
    },
    # tensor product of two sl(2) modules with distinct geometric ratios
    "tensor-sl2": {
        "left": {
            "algebra": {"type": "A", "rank": 1, "levi": []},
            "lam": {"a1": GEO2},
            "theta": "1",
            "mode": "affine",
            "cocycle": "standard",
        },
        "right": {
            "algebra": {"type": "A", "rank": 1, "levi": []},
            "lam": {"a1": GEO3},
            "theta": "2",
            "mode": "affine",
            "cocycle": "standard",
        },
        "truncation": {"D": 1, "E": 1, "J": 2},
    },
    # tensor product with the opposite eigenvalue family: Lam' = -Lam,
    # theta' = -theta (the classical non-simplicity probe)
    "tensor-sl2-neg": {
        "left": {
            "algebra": {"type": "A", "rank": 1, "levi": []},
            "lam": {"a1": GEO2},
            "theta": "1",
            "mode": "affine",
            "cocycle": "standard",
        },
        "right": {
            "algebra": {"type": "A", "rank": 1, "levi": []},
            "lam": {"a1": dict(GEO2, scale="-1")},
            "theta": "-1",
            "mode": "affine",
            "cocycle": "standard",
        },
        "truncation": {"D": 1, "E": 1, "J": 2},
    },
    # sequence-suite preset for the check-seq subcommand
    "geo-family": {
        "sequences": [GEO2, GEO3, {"kind": "geometric", "j": "5/2"}],
        "S": 6,
        "W": 20,
        "weighted": True,
    },
}

MODULE_PRESETS = ("sl2", "sl3-borel", "sl3-abelian", "sl2-loop", "sl2-const")
TENSOR_PRESETS = ("tensor-sl2", "tensor-sl2-neg")


def preset_names():
    return sorted(PRESETS)


def get_preset(name: str) -> dict:
    if name not in PRESETS:
        raise KeyError(
            f"unknown preset {name!r}; available: {', '.join(preset_names())}"
        )
    return copy.deepcopy(PRESETS[name])
