"""Exact dimensions of single multigraded slices of a quadratic quotient.

In multidegree a the ideal slice is spanned by relation * monomial products,
so the quotient dimension is  #monomials(a) - rank(product rows)  and the rank
is plain linear algebra: no Groebner basis is involved.  Ranks run over a word
size prime field and, when the slice is small enough, are confirmed by exact
rational elimination; otherwise a second prime stands in as the cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .errors import UsageError
from .exactla import rank_mod_p, rank_sparse_rational
from .fields import DEFAULT_PRIME, RETRY_PRIMES
from .presentation import PresentationSpec
from .series import lee_coefficient

# above this many columns the rational confirmation is skipped in auto mode
RATIONAL_VERIFY_MAX_COLS = 250


def count_monomials(spec: PresentationSpec, a: tuple[int, ...]) -> int:
    """Number of monomials of multidegree a: a product of stars-and-bars counts."""
    _check_degree(spec, a)
    out = 1
    for ai, size in zip(a, spec.block_sizes()):
        if ai and size == 0:
            return 0
        out *= comb(ai + size - 1, size - 1) if size else 1
    return out


def enumerate_monomials(spec: PresentationSpec, a: tuple[int, ...]) -> list[tuple[int, ...]]:
    """All exponent tuples of multidegree a, ascending in the presentation order."""
    _check_degree(spec, a)
    positions = spec.block_positions()
    chunks: list[list[list[int]]] = []
    for ai, pos in zip(a, positions):
        if not pos:
            if ai:
                return []
            chunks.append([[]])
            continue
        chunks.append([list(c) for c in _compositions(ai, len(pos))])
    out: list[tuple[int, ...]] = []
    exp = [0] * spec.nvars

    def rec(b: int):
        if b == len(chunks):
            out.append(tuple(exp))
            return
        pos = positions[b]
        for c in chunks[b]:
            for p, v in zip(pos, c):
                exp[p] = v
            rec(b + 1)
        for p in pos:
            exp[p] = 0

    rec(0)
    order = spec.default_order()
    out.sort(key=order.key)
    return out


def _compositions(total: int, parts: int) -> list[tuple[int, ...]]:
    if parts == 0:
        return [()] if total == 0 else []
    if parts == 1:
        return [(total,)]
    out = []
    for v in range(total + 1):
        out.extend((v,) + rest for rest in _compositions(total - v, parts - 1))
    return out


def _check_degree(spec: PresentationSpec, a: tuple[int, ...]):
    if len(a) != spec.nblocks:
        raise UsageError(f"multidegree length {len(a)} != {spec.nblocks} blocks")
    if any(x < 0 for x in a):
        raise UsageError(f"negative multidegree {a}")


def relation_product_rows(spec: PresentationSpec, a: tuple[int, ...]) -> tuple[list[dict[int, int]], int]:
    """Integer rows of every relation * monomial landing in multidegree a,
    in the basis enumerate_monomials(spec, a).  Returns (rows, ncols)."""
    _check_degree(spec, a)
    basis = enumerate_monomials(spec, a)
    col = {m: i for i, m in enumerate(basis)}
    rows: list[dict[int, int]] = []
    for rel in spec.relations:
        rdeg = rel.poly_multidegree(spec.blocks, spec.nblocks)
        assert rdeg is not None
        rem = tuple(x - y for x, y in zip(a, rdeg))
        if any(x < 0 for x in rem):
            continue
        for mono in enumerate_monomials(spec, rem):
            row: dict[int, int] = {}
            for exp, coeff in rel.terms.items():
                target = tuple(x + y for x, y in zip(exp, mono))
                c = col[target]
                v = row.get(c, 0) + _as_int(coeff, spec)
                if v:
                    row[c] = v
                else:
                    row.pop(c, None)
            if row:
                rows.append(row)
    return rows, len(basis)


def _as_int(coeff, spec: PresentationSpec) -> int:
    v = spec.field.to_int(coeff)
    if v is None:
        raise UsageError("slice ranks need integer relation coefficients")
    return v


@dataclass(frozen=True)
class SliceReport:
    """Outcome of one graded-slice dimension computation."""

    multidegree: tuple[int, ...]
    monomials: int
    rows: int
    rank: int
    dimension: int
    predicted: int
    method: str

    @property
    def matches(self) -> bool:
        return self.dimension == self.predicted


def predicted_dimension(spec: PresentationSpec, a: tuple[int, ...]) -> int:
    """Closed-form coefficient of the matching Hilbert series."""
    _check_degree(spec, a)
    return lee_coefficient(spec.n, a, m=spec.m)


def slice_dimension(
    spec: PresentationSpec,
    a: tuple[int, ...],
    method: str = "auto",
    prime: int = DEFAULT_PRIME,
) -> SliceReport:
    """Exact dimension of the multidegree-a slice of the quotient.

    method: 'auto' (prime rank, rational confirmation when narrow enough,
    second prime otherwise), 'rational' (exact only), 'modular' (one prime).
    """
    if method not in ("auto", "rational", "modular"):
        raise UsageError(f"unknown slice method {method!r}")
    rows, ncols = relation_product_rows(spec, a)
    nmon = count_monomials(spec, a)
    assert nmon == ncols
    pred = predicted_dimension(spec, a)
    if not rows:
        return SliceReport(tuple(a), nmon, 0, 0, nmon, pred, "empty")

    if method == "rational":
        rank = rank_sparse_rational([dict(r) for r in rows])
        how = "rational"
    else:
        rank = _prime_rank(rows, ncols, prime)
        how = f"modular({prime})"
        if method == "auto":
            if ncols <= RATIONAL_VERIFY_MAX_COLS:
                qrank = rank_sparse_rational([dict(r) for r in rows])
                if qrank != rank:  # unlucky prime: the rational answer wins
                    rank = qrank
                    how = "rational(after-bad-prime)"
                else:
                    how = f"modular({prime})+rational"
            else:
                p2 = next(p for p in RETRY_PRIMES if p != prime)
                r2 = _prime_rank(rows, ncols, p2)
                if r2 != rank:
                    rank = max(rank, r2)  # rank mod p only ever drops
                    how = f"modular(max {prime},{p2})"
                else:
                    how = f"modular({prime},{p2})"
    return SliceReport(tuple(a), nmon, len(rows), rank, nmon - rank, pred, how)


def _prime_rank(rows: list[dict[int, int]], ncols: int, p: int) -> int:
    mat = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for c, v in row.items():
            mat[i, c] = v % p
    return rank_mod_p(mat, p)


def sweep_dimensions(
    spec: PresentationSpec,
    limit: int,
    method: str = "auto",
) -> list[SliceReport]:
    """Slice reports for every multidegree of total degree <= limit."""
    out = []
    for a in degree_grid(spec.nblocks, limit):
        out.append(slice_dimension(spec, a, method=method))
    return out


def degree_grid(nblocks: int, limit: int) -> list[tuple[int, ...]]:
    """Every multidegree with total degree <= limit, in report order."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: tuple[int, ...], left: int):
        if len(prefix) == nblocks:
            out.append(prefix)
            return
        for v in range(left + 1):
            rec(prefix + (v,), left - v)

    rec((), limit)
    out.sort(key=lambda a: (sum(a), a))
    return out
