"""Tabulated generator matrices for every signature with n = 1..5 plus the
Dirac form of (1,3).

The tables are fixture data (entries in {0, +-1, +-i}) written in a compact
row notation mirroring the source layout; the verification suites recompute
the representations from the tabulated ideal bases and compare entrywise.
"""

from __future__ import annotations

import numpy as np

_TOKENS = {"0": 0, "1": 1, "-1": -1, "i": 1j, "-i": -1j}


def _mat(*rows: str) -> np.ndarray:
    data = [[_TOKENS[tok] for tok in row.split()] for row in rows]
    m = np.array(data, dtype=np.complex128)
    m.setflags(write=False)
    return m


_E1_N2 = _mat("1 0", "0 -1")

_E1_N4 = _mat("1 0 0 0", "0 1 0 0", "0 0 -1 0", "0 0 0 -1")
_E2_N4 = _mat("0 0 1 0", "0 0 0 1", "1 0 0 0", "0 1 0 0")
_E3_N4 = _mat("0 0 i 0", "0 0 0 -i", "-i 0 0 0", "0 i 0 0")
_E4_40 = _mat("0 0 0 1", "0 0 -1 0", "0 -1 0 0", "1 0 0 0")
_E4_31 = _mat("0 0 0 -1", "0 0 -1 0", "0 1 0 0", "1 0 0 0")
_E2_13 = _mat("0 0 -1 0", "0 0 0 1", "1 0 0 0", "0 -1 0 0")
_E3_13 = _mat("0 0 i 0", "0 0 0 i", "i 0 0 0", "0 i 0 0")

_E1_N3 = _mat("1 0 0 0", "0 -1 0 0", "0 0 -1 0", "0 0 0 1")
_E2_N3 = _mat("0 1 0 0", "1 0 0 0", "0 0 0 1", "0 0 1 0")

_E1_50 = _mat("1 0 0 0 0 0 0 0", "0 1 0 0 0 0 0 0", "0 0 -1 0 0 0 0 0", "0 0 0 -1 0 0 0 0",
              "0 0 0 0 -1 0 0 0", "0 0 0 0 0 -1 0 0", "0 0 0 0 0 0 1 0", "0 0 0 0 0 0 0 1")
_E2_50 = _mat("0 0 1 0 0 0 0 0", "0 0 0 1 0 0 0 0", "1 0 0 0 0 0 0 0", "0 1 0 0 0 0 0 0",
              "0 0 0 0 0 0 1 0", "0 0 0 0 0 0 0 1", "0 0 0 0 1 0 0 0", "0 0 0 0 0 1 0 0")
_E3_50 = _mat("0 0 i 0 0 0 0 0", "0 0 0 -i 0 0 0 0", "-i 0 0 0 0 0 0 0", "0 i 0 0 0 0 0 0",
              "0 0 0 0 0 0 i 0", "0 0 0 0 0 0 0 -i", "0 0 0 0 -i 0 0 0", "0 0 0 0 0 i 0 0")
_E4_50 = _mat("0 0 0 1 0 0 0 0", "0 0 -1 0 0 0 0 0", "0 -1 0 0 0 0 0 0", "1 0 0 0 0 0 0 0",
              "0 0 0 0 0 0 0 1", "0 0 0 0 0 0 -1 0", "0 0 0 0 0 -1 0 0", "0 0 0 0 1 0 0 0")
_E5_50 = _mat("0 0 0 -i 0 0 0 0", "0 0 -i 0 0 0 0 0", "0 i 0 0 0 0 0 0", "i 0 0 0 0 0 0 0",
              "0 0 0 0 0 0 0 -i", "0 0 0 0 0 0 -i 0", "0 0 0 0 0 i 0 0", "0 0 0 0 i 0 0 0")
_E5_41 = _mat("0 0 0 1 0 0 0 0", "0 0 1 0 0 0 0 0", "0 -1 0 0 0 0 0 0", "-1 0 0 0 0 0 0 0",
              "0 0 0 0 0 0 0 1", "0 0 0 0 0 0 1 0", "0 0 0 0 0 -1 0 0", "0 0 0 0 -1 0 0 0")

_E1_32 = _mat("1 0 0 0 0 0 0 0", "0 -1 0 0 0 0 0 0", "0 0 -1 0 0 0 0 0", "0 0 0 1 0 0 0 0",
              "0 0 0 0 1 0 0 0", "0 0 0 0 0 -1 0 0", "0 0 0 0 0 0 -1 0", "0 0 0 0 0 0 0 1")
_E2_32 = _mat("0 1 0 0 0 0 0 0", "1 0 0 0 0 0 0 0", "0 0 0 1 0 0 0 0", "0 0 1 0 0 0 0 0",
              "0 0 0 0 0 1 0 0", "0 0 0 0 1 0 0 0", "0 0 0 0 0 0 0 1", "0 0 0 0 0 0 1 0")
_E3_32 = _mat("0 i 0 0 0 0 0 0", "-i 0 0 0 0 0 0 0", "0 0 0 i 0 0 0 0", "0 0 -i 0 0 0 0 0",
              "0 0 0 0 0 -i 0 0", "0 0 0 0 i 0 0 0", "0 0 0 0 0 0 0 -i", "0 0 0 0 0 0 i 0")
_E4_32 = _mat("0 0 -1 0 0 0 0 0", "0 0 0 1 0 0 0 0", "1 0 0 0 0 0 0 0", "0 -1 0 0 0 0 0 0",
              "0 0 0 0 0 0 -1 0", "0 0 0 0 0 0 0 1", "0 0 0 0 1 0 0 0", "0 0 0 0 0 -1 0 0")
_E5_32 = _mat("0 0 -i 0 0 0 0 0", "0 0 0 i 0 0 0 0", "-i 0 0 0 0 0 0 0", "0 i 0 0 0 0 0 0",
              "0 0 0 0 0 0 -i 0", "0 0 0 0 0 0 0 i", "0 0 0 0 -i 0 0 0", "0 0 0 0 0 i 0 0")
_E3_23 = _mat("0 -1 0 0 0 0 0 0", "1 0 0 0 0 0 0 0", "0 0 0 -1 0 0 0 0", "0 0 1 0 0 0 0 0",
              "0 0 0 0 0 1 0 0", "0 0 0 0 -1 0 0 0", "0 0 0 0 0 0 0 1", "0 0 0 0 0 0 -1 0")
_E2_14 = _E3_23
_E3_14 = _mat("0 i 0 0 0 0 0 0", "i 0 0 0 0 0 0 0", "0 0 0 i 0 0 0 0", "0 0 i 0 0 0 0 0",
              "0 0 0 0 0 i 0 0", "0 0 0 0 i 0 0 0", "0 0 0 0 0 0 0 i", "0 0 0 0 0 0 i 0")
_E1_05 = _mat("-i 0 0 0 0 0 0 0", "0 i 0 0 0 0 0 0", "0 0 i 0 0 0 0 0", "0 0 0 -i 0 0 0 0",
              "0 0 0 0 -i 0 0 0", "0 0 0 0 0 i 0 0", "0 0 0 0 0 0 i 0", "0 0 0 0 0 0 0 -i")

# (p, q, preset) -> generator matrices e^1 .. e^n
_GOLDEN: dict[tuple[int, int, str], tuple[np.ndarray, ...]] = {
    (1, 0, "paper"): (_E1_N2,),
    (0, 1, "paper"): (_mat("i 0", "0 -i"),),
    (2, 0, "paper"): (_E1_N2, _mat("0 1", "1 0")),
    (1, 1, "paper"): (_E1_N2, _mat("0 -1", "1 0")),
    (0, 2, "paper"): (_mat("-i 0", "0 i"), _mat("0 -1", "1 0")),
    (3, 0, "paper"): (_E1_N3, _E2_N3,
                      _mat("0 -i 0 0", "i 0 0 0", "0 0 0 -i", "0 0 i 0")),
    (2, 1, "paper"): (_E1_N3, _E2_N3,
                      _mat("0 -1 0 0", "1 0 0 0", "0 0 0 -1", "0 0 1 0")),
    (1, 2, "paper"): (_E1_N3,
                      _mat("0 -1 0 0", "1 0 0 0", "0 0 0 1", "0 0 -1 0"),
                      _mat("0 -i 0 0", "-i 0 0 0", "0 0 0 i", "0 0 i 0")),
    (0, 3, "paper"): (_mat("-i 0 0 0", "0 i 0 0", "0 0 i 0", "0 0 0 -i"),
                      _mat("0 -1 0 0", "1 0 0 0", "0 0 0 1", "0 0 -1 0"),
                      _mat("0 -i 0 0", "-i 0 0 0", "0 0 0 i", "0 0 i 0")),
    (4, 0, "paper"): (_E1_N4, _E2_N4, _E3_N4, _E4_40),
    (3, 1, "paper"): (_E1_N4, _E2_N4, _E3_N4, _E4_31),
    (2, 2, "paper"): (_E1_N4, _E2_N4,
                      _mat("0 0 -1 0", "0 0 0 1", "1 0 0 0", "0 -1 0 0"), _E4_31),
    (1, 3, "paper"): (_E1_N4, _E2_13, _E3_13, _E4_31),
    (0, 4, "paper"): (_mat("-i 0 0 0", "0 -i 0 0", "0 0 i 0", "0 0 0 i"),
                      _E2_13, _E3_13, _E4_31),
    (1, 3, "dirac"): (_E1_N4,
                      _mat("0 0 0 1", "0 0 1 0", "0 -1 0 0", "-1 0 0 0"),
                      _mat("0 0 0 -i", "0 0 i 0", "0 i 0 0", "-i 0 0 0"),
                      _mat("0 0 1 0", "0 0 0 -1", "-1 0 0 0", "0 1 0 0")),
    (5, 0, "paper"): (_E1_50, _E2_50, _E3_50, _E4_50, _E5_50),
    (4, 1, "paper"): (_E1_50, _E2_50, _E3_50, _E4_50, _E5_41),
    (3, 2, "paper"): (_E1_32, _E2_32, _E3_32, _E4_32, _E5_32),
    (2, 3, "paper"): (_E1_32, _E2_32, _E3_23, _E4_32, _E5_32),
    (1, 4, "paper"): (_E1_32, _E2_14, _E3_14, _E4_32, _E5_32),
    (0, 5, "paper"): (_E1_05, _E2_14, _E3_14, _E4_32, _E5_32),
}


def golden_matrices(sig, preset: str = "paper") -> list[np.ndarray]:
    """Tabulated generator matrices for a listed (signature, preset) pair."""
    key = (sig.p, sig.q, preset)
    if key not in _GOLDEN:
        raise ValueError(f"no tabulated matrices for signature ({sig.p},{sig.q}) preset {preset!r}")
    return [m.copy() for m in _GOLDEN[key]]


def golden_cases() -> list[tuple[int, int, str]]:
    """All (p, q, preset) keys with tabulated matrices, in table order."""
    return sorted(_GOLDEN.keys(), key=lambda k: (k[0] + k[1], -k[0], k[2]))
