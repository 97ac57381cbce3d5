"""Truncated multivariate power series and the closed-form Hilbert series.

The multigraded Hilbert series of A_n is

    h_n(q) = (1 + sum_i q_i/(1-q_i))^(n-3) / prod_i (1-q_i)

and adjoining m extra evaluation points raises the exponent to n+m-3 while
keeping only the first n variables.  Two independent evaluators are kept:
series arithmetic with explicit truncation bounds, and a per-coefficient
closed form via multinomials; the tests check them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb, factorial

from .errors import UsageError


# -- truncation bounds ----------------------------------------------------------

@dataclass(frozen=True)
class TotalBound:
    """Keep every multidegree with total degree <= limit."""

    limit: int

    def contains(self, a: tuple[int, ...]) -> bool:
        return sum(a) <= self.limit

    def degrees(self, nvars: int) -> tuple[tuple[int, ...], ...]:
        return _simplex_degrees(nvars, self.limit)


@dataclass(frozen=True)
class BoxBound:
    """Keep every multidegree below the per-coordinate caps."""

    caps: tuple[int, ...]

    def contains(self, a: tuple[int, ...]) -> bool:
        return all(x <= c for x, c in zip(a, self.caps))

    def degrees(self, nvars: int) -> tuple[tuple[int, ...], ...]:
        assert nvars == len(self.caps)
        return _box_degrees(self.caps)


Bound = TotalBound | BoxBound


@lru_cache(maxsize=None)
def _simplex_degrees(nvars: int, limit: int) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], left: int):
        if len(prefix) == nvars:
            out.append(prefix)
            return
        for v in range(left + 1):
            rec(prefix + (v,), left - v)

    rec((), limit)
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def _box_degrees(caps: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    out: list[tuple[int, ...]] = [()]
    for c in caps:
        out = [pre + (v,) for pre in out for v in range(c + 1)]
    out.sort()
    return tuple(out)


# -- the series type -------------------------------------------------------------

class TruncatedSeries:
    """Integer-coefficient series on a fixed truncation bound.

    Coefficients outside the bound are not stored and asking for one raises:
    truncation is always explicit, never silent.
    """

    __slots__ = ("nvars", "bound", "coeffs")

    def __init__(self, nvars: int, bound: Bound, coeffs: dict | None = None):
        self.nvars = nvars
        self.bound = bound
        self.coeffs = coeffs if coeffs is not None else {}

    @staticmethod
    def zero(nvars: int, bound: Bound) -> "TruncatedSeries":
        return TruncatedSeries(nvars, bound)

    @staticmethod
    def one(nvars: int, bound: Bound) -> "TruncatedSeries":
        return TruncatedSeries(nvars, bound, {(0,) * nvars: 1})

    @staticmethod
    def monomial(nvars: int, bound: Bound, a: tuple[int, ...], c: int = 1) -> "TruncatedSeries":
        s = TruncatedSeries(nvars, bound)
        if c and bound.contains(a):
            s.coeffs[a] = c
        return s

    def coefficient(self, a: tuple[int, ...]) -> int:
        if len(a) != self.nvars:
            raise UsageError(f"degree vector length {len(a)} != {self.nvars} variables")
        if not self.bound.contains(a):
            raise UsageError(f"degree {a} outside truncation bound {self.bound}")
        return self.coeffs.get(tuple(a), 0)

    def _check(self, other: "TruncatedSeries"):
        if self.nvars != other.nvars or self.bound != other.bound:
            raise UsageError("series bounds or variable counts differ")

    def add(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            v = out.get(a, 0) + c
            if v:
                out[a] = v
            else:
                out.pop(a, None)
        return TruncatedSeries(self.nvars, self.bound, out)

    def sub(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self.add(other.scale(-1))

    def scale(self, c: int) -> "TruncatedSeries":
        if c == 0:
            return TruncatedSeries(self.nvars, self.bound)
        return TruncatedSeries(self.nvars, self.bound, {a: c * v for a, v in self.coeffs.items()})

    def mul(self, other: "TruncatedSeries") -> "TruncatedSeries":
        """Plain truncated product; quadratic in term counts, fine at desk scale."""
        self._check(other)
        bound = self.bound
        out: dict = {}
        for a1, c1 in self.coeffs.items():
            for a2, c2 in other.coeffs.items():
                a = tuple(x + y for x, y in zip(a1, a2))
                if bound.contains(a):
                    out[a] = out.get(a, 0) + c1 * c2
        return TruncatedSeries(self.nvars, self.bound, {a: c for a, c in out.items() if c})

    def mul_geometric(self, axis: int) -> "TruncatedSeries":
        """Multiply by 1/(1-q_axis): a prefix sum along the axis, linear time."""
        out: dict = {}
        for a in self.bound.degrees(self.nvars):  # lexicographic: a - e_axis comes first
            below = out.get(_dec(a, axis), 0) if a[axis] else 0
            v = self.coeffs.get(a, 0) + below
            if v:
                out[a] = v
        return TruncatedSeries(self.nvars, self.bound, out)

    def mul_shift_geometric(self, axis: int) -> "TruncatedSeries":
        """Multiply by q_axis/(1-q_axis)."""
        geom = self.mul_geometric(axis)
        out: dict = {}
        for a, c in geom.coeffs.items():
            up = list(a)
            up[axis] += 1
            t = tuple(up)
            if self.bound.contains(t):
                out[t] = c
        return TruncatedSeries(self.nvars, self.bound, out)

    def mul_one_plus_all_shift_geometric(self) -> "TruncatedSeries":
        """Multiply by (1 + sum_i q_i/(1-q_i)) in one pass over the axes."""
        out = self
        for axis in range(self.nvars):
            out = out.add(self.mul_shift_geometric(axis))
        return out

    def total_degree_sums(self, limit: int) -> list[int]:
        """Coefficient sums per total degree, 0..limit; requires the bound to cover them."""
        probe = tuple([limit] + [0] * (self.nvars - 1))
        if not self.bound.contains(probe):
            raise UsageError("bound does not cover the requested total degree")
        out = [0] * (limit + 1)
        for a, c in self.coeffs.items():
            d = sum(a)
            if d <= limit:
                out[d] += c
        return out

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and self.nvars == other.nvars
            and self.bound == other.bound
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"TruncatedSeries({self.nvars} vars, {len(self.coeffs)} terms, {self.bound})"


def _dec(a: tuple[int, ...], axis: int) -> tuple[int, ...]:
    out = list(a)
    out[axis] -= 1
    return tuple(out)


# -- the Hilbert series builders --------------------------------------------------

def psi_series(nvars: int, exponent: int, bound: Bound) -> TruncatedSeries:
    """(1 + sum g_i)^exponent / prod(1 - q_i) with g_i = q_i/(1-q_i), truncated."""
    if exponent < 0:
        raise UsageError(f"negative exponent {exponent}")
    s = TruncatedSeries.one(nvars, bound)
    for axis in range(nvars):
        s = s.mul_geometric(axis)
    for _ in range(exponent):
        s = s.mul_one_plus_all_shift_geometric()
    return s


def lee_series(n: int, bound: Bound) -> TruncatedSeries:
    """Multigraded Hilbert series of A_n, truncated to the bound."""
    if n < 3:
        raise UsageError(f"lee_series needs n >= 3, got {n}")
    return psi_series(n, n - 3, bound)


def lee_series_restricted(n: int, m: int, bound: Bound) -> TruncatedSeries:
    """Hilbert series of B_{n,m} in the n marked-point gradings."""
    if n < 2 or m < 0 or n + m < 3:
        raise UsageError(f"lee_series_restricted needs n >= 2, m >= 0, n+m >= 3; got ({n},{m})")
    return psi_series(n, n + m - 3, bound)


def curve_module_series(n: int, bound: Bound) -> TruncatedSeries:
    """Series of the universal-curve coordinate ring over A_{n-1}:
    (1 + sum_{i<n} q_i/(1-q_i)) * lee_series(n-1), an (n-1)-variable series."""
    if n < 4:
        raise UsageError(f"curve_module_series needs n >= 4, got {n}")
    return lee_series(n - 1, bound).mul_one_plus_all_shift_geometric()


def lee_coefficient(n: int, a: tuple[int, ...], m: int = 0) -> int:
    """Closed-form coefficient of q^a: sum over k of multinomial(N; k, N-|k|) * prod C(a_i, k_i),
    with N = n+m-3.  Independent of the series-arithmetic evaluator."""
    if len(a) != n:
        raise UsageError(f"degree vector length {len(a)} != n = {n}")
    if any(x < 0 for x in a):
        return 0
    N = n + m - 3
    if N < 0:
        raise UsageError(f"lee_coefficient needs n+m >= 3, got ({n},{m})")
    fN = factorial(N)
    total = 0
    stack = [(0, N, 1, 1)]  # (index, budget left, prod C(a_i,k_i), prod k_i!)
    while stack:
        i, left, prod_c, prod_f = stack.pop()
        if i == n:
            total += prod_c * (fN // (prod_f * factorial(left)))
            continue
        for k in range(min(left, a[i]) + 1):
            stack.append((i + 1, left - k, prod_c * comb(a[i], k), prod_f * factorial(k)))
    return total


def total_hilbert(n: int, limit: int) -> list[int]:
    """Total-degree Hilbert function of A_n via (1+(n-1)t)^(n-3) / (1-t)^(2n-3)."""
    if n < 3:
        raise UsageError(f"total_hilbert needs n >= 3, got {n}")
    num = [comb(n - 3, j) * (n - 1) ** j for j in range(n - 2)]
    out = []
    for d in range(limit + 1):
        s = sum(num[j] * comb(d - j + 2 * n - 4, 2 * n - 4) for j in range(min(d, n - 3) + 1))
        out.append(s)
    return out


def invert_unit_series(h: list[int]) -> list[int]:
    """Coefficients of 1/h(t) up to the same truncation; h[0] must be 1."""
    if not h or h[0] != 1:
        raise UsageError("series inversion needs constant term 1")
    out = [1]
    for d in range(1, len(h)):
        out.append(-sum(out[j] * h[d - j] for j in range(d)))
    return out
