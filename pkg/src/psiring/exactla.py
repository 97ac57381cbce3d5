"""Exact rank and nullspace computations.

Three lanes, used as independent routes and cross-checked in the tests:

  * rank_sparse_rational: sparse integer elimination with gcd stripping.
    Row operations over Z with per-row content removal compute the rank
    over Q exactly; pivots are chosen by row sparsity to limit fill-in.

  * the int64 lane: dense per-pivot elimination mod p.  Requires
    (p-1)^2 < 2^63, satisfied by the default prime just below 2^31.

  * the float64 lane: panel LU with BLAS Schur updates mod p.  Exact as long
    as every accumulated dot product stays below 2^53, which the panel-width
    and back-substitution guards enforce; needs p below 2^20.  This is what
    makes the big tensor ranks in the Koszul computations fast.
"""

from __future__ import annotations

from math import gcd

import numpy as np

from .errors import UsageError

FLOAT_LANE_MAX_PRIME = 1 << 20
_MANTISSA = 1 << 53
_PANEL = 128


# -- rational lane -------------------------------------------------------------

def rank_sparse_rational(rows: list[dict]) -> int:
    """Rank over Q of a matrix given as sparse integer rows {col: coeff}."""
    work = [dict(r) for r in rows if r]
    for r in work:
        _strip_content(r)
    rank = 0
    while work:
        # pivot row: fewest nonzeros, ties by smallest column then insertion order
        best = min(range(len(work)), key=lambda k: (len(work[k]), min(work[k])))
        prow = work.pop(best)
        pcol = min(prow)
        pval = prow[pcol]
        rank += 1
        nxt = []
        for row in work:
            v = row.get(pcol)
            if v is not None:
                merged: dict = {}
                for c, x in row.items():
                    merged[c] = pval * x
                for c, x in prow.items():
                    merged[c] = merged.get(c, 0) - v * x
                row = {c: x for c, x in merged.items() if x}
                if row:
                    _strip_content(row)
                    nxt.append(row)
            else:
                nxt.append(row)
        work = nxt
    return rank


def _strip_content(row: dict) -> None:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return
    if g > 1:
        for c in row:
            row[c] //= g


def rank_rational(rows: list[dict]) -> int:
    """Rank over Q; accepts Fraction entries by clearing denominators per row."""
    cleaned: list[dict] = []
    for row in rows:
        denom = 1
        for v in row.values():
            d = int(getattr(v, "denominator", 1))
            denom = denom * d // gcd(denom, d)
        cleaned.append({
            c: int(getattr(v, "numerator", v)) * (denom // int(getattr(v, "denominator", 1)))
            for c, v in row.items()
        })
    return rank_sparse_rational(cleaned)


def bareiss_rank(mat: list[list[int]]) -> int:
    """Fraction-free dense elimination over Z; reference implementation for tests."""
    m = [list(map(int, row)) for row in mat]
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = m[r][c]
        r += 1
        rank += 1
        if r == nrows:
            break
    return rank


# -- modular lanes --------------------------------------------------------------

def as_mod_array(a, p: int) -> np.ndarray:
    """Copy input into an int64 array with entries reduced into [0, p)."""
    arr = np.asarray(a)
    if arr.dtype == object:
        arr = np.array([[int(x) % p for x in row] for row in a], dtype=np.int64)
        return arr
    arr = arr.astype(np.int64, copy=True)
    np.mod(arr, p, out=arr)
    return arr


def rows_to_dense(rows: list[dict], ncols: int, p: int | None = None) -> np.ndarray:
    """Materialize sparse integer rows as a dense int64 array, reduced mod p if given."""
    out = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for c, v in row.items():
            out[i, c] = v % p if p else v
    return out


def _use_float_lane(shape: tuple[int, int], p: int) -> bool:
    return p < FLOAT_LANE_MAX_PRIME and min(shape) >= 64


def echelon_mod_p(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Row echelon form mod p with pivot entries scaled to 1.

    Returns (U, pivot columns); pivot t sits at row t.  Rows below the last
    pivot are zero.  Dispatches to the float64 panel lane when profitable.
    """
    A = as_mod_array(a, p)
    if A.size == 0:
        return A, []
    if _use_float_lane(A.shape, p):
        U, piv = _echelon_float(A.astype(np.float64), p)
        return U.astype(np.int64), piv
    return _echelon_int(A, p)


def rank_mod_p(a, p: int) -> int:
    return len(echelon_mod_p(a, p)[1])


def rref_mod_p(a, p: int) -> tuple[np.ndarray, list[int]]:
    """Fully reduced row echelon form (Jordan); int64 lane, small inputs only."""
    A = as_mod_array(a, p)
    if A.size == 0:
        return A, []
    if (p - 1) ** 2 >= (1 << 63):
        raise UsageError(f"prime {p} too large for the int64 lane")
    U, pivots = _echelon_int(A, p)
    for t in range(len(pivots) - 1, 0, -1):
        c = pivots[t]
        above = np.nonzero(U[:t, c])[0]
        if above.size:
            U[above] = (U[above] - np.outer(U[above, c], U[t])) % p
    return U, pivots


def nullspace_mod_p(a, p: int) -> np.ndarray:
    """Columns form a basis of the right kernel mod p (int64, shape ncols x nullity)."""
    A = as_mod_array(a, p)
    ncols = A.shape[1]
    U, pivots = echelon_mod_p(A, p)
    r = len(pivots)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    N = np.zeros((ncols, len(free)), dtype=np.int64)
    if not free:
        return N
    for j, fc in enumerate(free):
        N[fc, j] = 1
    if r == 0:
        return N
    # back-substitution, vectorized across all free columns at once
    if _use_float_lane(A.shape, p) and r * (p - 1) ** 2 < _MANTISSA:
        Uf = U[:r].astype(np.float64)
        X = np.zeros((r, len(free)), dtype=np.float64)
        freecols = np.array(free, dtype=np.intp)
        pivcols = np.array(pivots, dtype=np.intp)
        for t in range(r - 1, -1, -1):
            rhs = Uf[t, freecols].copy()
            if t + 1 < r:
                rhs = (rhs + Uf[t, pivcols[t + 1:]] @ X[t + 1:]) % p
            X[t] = (-rhs) % p
        Xi = X.astype(np.int64)
    else:
        Xi = np.zeros((r, len(free)), dtype=np.int64)
        freecols = np.array(free, dtype=np.intp)
        pivcols = np.array(pivots, dtype=np.intp)
        for t in range(r - 1, -1, -1):
            rhs = U[t, freecols].copy()
            if t + 1 < r:
                prods = (U[t, pivcols[t + 1:]][:, None] * Xi[t + 1:]) % p
                rhs = (rhs + prods.sum(axis=0)) % p
            Xi[t] = (-rhs) % p
    for t, pc in enumerate(pivots):
        N[pc] = Xi[t]
    return N


def mod_matmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """Exact (a @ b) % p for int64 inputs with entries in [0, p).

    Picks the fastest lane whose accumulated dot products provably fit the
    arithmetic: float64 BLAS under the 2^53 mantissa bound, plain int64 under
    2^63, and chunked int64 accumulation beyond that.
    """
    if a.ndim != 2 or b.ndim != 2 or a.shape[1] != b.shape[0]:
        raise UsageError(f"shape mismatch in mod_matmul: {a.shape} x {b.shape}")
    inner = a.shape[1]
    bound = (p - 1) ** 2
    if inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if inner * bound < _MANTISSA:
        out = (a.astype(np.float64) @ b.astype(np.float64)) % p
        return out.astype(np.int64)
    if inner * bound < (1 << 63):
        return (a @ b) % p
    if bound >= (1 << 63):
        raise UsageError(f"modulus {p} too large for exact int64 products")
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    step = max(1, ((1 << 63) - 1) // (bound + 1))
    for s in range(0, inner, step):
        # reduce each chunk before accumulating so out + chunk stays below 2^63
        out = (out + a[:, s:s + step] @ b[s:s + step] % p) % p
    return out


def _echelon_int(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Per-pivot forward elimination in int64.  Safe for p < 2^31.5."""
    if (p - 1) ** 2 >= (1 << 63):
        raise UsageError(f"prime {p} too large for the int64 lane")
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        below = np.nonzero(A[r + 1:, c])[0]
        if below.size:
            idx = r + 1 + below
            A[idx] = (A[idx] - np.outer(A[idx, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A, pivots


def _echelon_float(A: np.ndarray, p: int, panel: int = _PANEL) -> tuple[np.ndarray, list[int]]:
    """Right-looking panel LU mod p in float64; pivot rows end up scaled to 1.

    Multipliers are stored in place below each pivot (classic LU storage), the
    trailing pivot-row blocks are brought up to date with a small triangular
    solve, and the rows below the panel get one BLAS Schur update per panel.
    """
    assert panel * (p - 1) ** 2 < _MANTISSA, "panel too wide for exact float64"
    nrows, ncols = A.shape
    pivots: list[int] = []
    r = 0
    c0 = 0
    while c0 < ncols and r < nrows:
        c1 = min(c0 + panel, ncols)
        ppiv: list[tuple[int, int]] = []  # (pivot row, pivot col) of this panel
        pinv: list[float] = []
        for c in range(c0, c1):
            rr = r + len(ppiv)
            if rr == nrows:
                break
            nz = np.nonzero(A[rr:, c])[0]
            if nz.size == 0:
                continue
            piv = rr + int(nz[0])
            if piv != rr:
                A[[rr, piv]] = A[[piv, rr]]
            inv = float(pow(int(A[rr, c]), -1, p))
            # scale the panel part of the pivot row to a unit pivot right away;
            # the trailing part is scaled in the triangular phase below
            A[rr, c:c1] = np.mod(A[rr, c:c1] * inv, p)
            below = np.nonzero(A[rr + 1:, c])[0]
            if below.size:
                idx = rr + 1 + below
                mult = A[idx, c].copy()  # multiplier w.r.t. the scaled pivot row
                if c + 1 < c1:
                    A[idx, c + 1:c1] = np.mod(A[idx, c + 1:c1] - np.outer(mult, A[rr, c + 1:c1]), p)
                A[idx, c] = mult
            ppiv.append((rr, c))
            pinv.append(inv)
        if ppiv:
            k = len(ppiv)
            prows = [pr for pr, _ in ppiv]
            pcols = [pc for _, pc in ppiv]
            # bring the pivot rows' trailing blocks up to date (unit triangular solve,
            # ascending so every row used is already final), then scale them
            for t in range(k):
                pr = prows[t]
                if c1 < ncols:
                    if t > 0:
                        coeffs = A[pr, pcols[:t]]
                        nzc = np.nonzero(coeffs)[0]
                        if nzc.size:
                            rows_used = [prows[s] for s in nzc]
                            A[pr, c1:] = np.mod(A[pr, c1:] - coeffs[nzc] @ A[rows_used, c1:], p)
                    A[pr, c1:] = np.mod(A[pr, c1:] * pinv[t], p)
                A[pr, pcols[:t]] = 0.0
            lo = prows[-1] + 1
            if lo < nrows:
                L = A[np.ix_(range(lo, nrows), pcols)]
                if c1 < ncols and np.any(L):
                    A[lo:, c1:] = np.mod(A[lo:, c1:] - L @ A[prows, c1:], p)
                A[np.ix_(range(lo, nrows), pcols)] = 0.0
            pivots.extend(pcols)
            r += k
        c0 = c1
    return A, pivots
