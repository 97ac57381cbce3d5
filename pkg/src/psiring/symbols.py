"""Variable symbols for the presentations.

Two kinds of generators appear:
  Alpha(i, j)  written a[i,j]:   value of the i-th section at the j-th marked point,
  Phi(r, i)    written phi[r,i]: value of the i-th section at the r-th extra point.
Both carry multidegree e_i (block i).  Indices are 1-based everywhere.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


@dataclass(frozen=True, order=True)
class Alpha:
    i: int
    j: int

    @property
    def block(self) -> int:
        return self.i

    def text(self) -> str:
        return f"a[{self.i},{self.j}]"


@dataclass(frozen=True, order=True)
class Phi:
    r: int
    i: int

    @property
    def block(self) -> int:
        return self.i

    def text(self) -> str:
        return f"phi[{self.r},{self.i}]"


VarIndex = Alpha | Phi

_ALPHA_RE = re.compile(r"^a\[(\d+),(\d+)\]$")
_PHI_RE = re.compile(r"^phi\[(\d+),(\d+)\]$")


def parse_var(text: str) -> VarIndex:
    """Inverse of .text(); round-trips exactly."""
    m = _ALPHA_RE.match(text)
    if m:
        return Alpha(int(m.group(1)), int(m.group(2)))
    m = _PHI_RE.match(text)
    if m:
        return Phi(int(m.group(1)), int(m.group(2)))
    raise ValueError(f"unrecognized variable {text!r}")
