"""Rational point configurations and the geometry-side checks.

A point of the variety comes from a configuration: distinct points z_1..z_n
(plus extra points q_1..q_m for the B family) on the affine line and nonzero
weights lam_1..lam_n.  The building block is the pole value

    atilde(i, j) = lam_i / (z_j - z_i)

and the presentation variables are differences of these against the pivot
channel, so every relation vanishes at every configuration: that is the
point-sampling side of presentation correctness, checked in exact rational
arithmetic.

The same values drive the local analysis: Jacobian rank at sampled smooth
points, and the singular locus as the vanishing of the relations plus the
codimension-sized minors of the Jacobian.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import BudgetError, UsageError
from .fields import QQ
from .groebner import GroebnerBasis, buchberger, groebner_for, krull_dimension, linear_interreduce
from .poly import Poly
from .presentation import Alpha, PresentationSpec
from .rng import SplitMix64

DEFAULT_MINOR_BUDGET = 20_000


@dataclass(frozen=True)
class PointConfig:
    """Distinct marked points, extra points, and nonzero weights, all rational."""

    z: tuple[Fraction, ...]
    q: tuple[Fraction, ...]
    lam: tuple[Fraction, ...]

    def validate(self):
        pts = list(self.z) + list(self.q)
        if len(set(pts)) != len(pts):
            raise UsageError("marked and extra points must be pairwise distinct")
        if any(l == 0 for l in self.lam):
            raise UsageError("weights must be nonzero")
        if len(self.lam) != len(self.z):
            raise UsageError("need one weight per marked point")


def sample_config(n: int, m: int, seed: int) -> PointConfig:
    """Deterministic small-integer configuration: distinct points, nonzero weights."""
    rng = SplitMix64(seed)
    pts = rng.distinct_ints(n + m, -50, 50)
    lam = tuple(Fraction(rng.nonzero_int(20)) for _ in range(n))
    return PointConfig(
        z=tuple(Fraction(v) for v in pts[:n]),
        q=tuple(Fraction(v) for v in pts[n:]),
        lam=lam,
    )


def pole_value(cfg: PointConfig, i: int, j: int) -> Fraction:
    """atilde(i,j) = lam_i / (z_j - z_i), 1-based indices."""
    return cfg.lam[i - 1] / (cfg.z[j - 1] - cfg.z[i - 1])


def alpha_values(spec: PresentationSpec, cfg: PointConfig) -> list[Fraction]:
    """Coordinates of the configuration's point, one value per presentation variable.

    A_n uses the pivot-channel difference; B_(n,m) measures everything against
    the last extra point.
    """
    cfg.validate()
    if len(cfg.z) != spec.n or len(cfg.q) != spec.m:
        raise UsageError(
            f"configuration has ({len(cfg.z)},{len(cfg.q)}) points, spec needs ({spec.n},{spec.m})"
        )
    out: list[Fraction] = []
    if spec.kind == "an":
        for var in spec.variables:
            i, j = var.i, var.j
            p = spec.pivot.pivot_of(i, spec.n)
            out.append(pole_value(cfg, i, j) - pole_value(cfg, i, p))
        return out
    base = cfg.q[spec.m - 1]
    for var in spec.variables:
        if isinstance(var, Alpha):
            i, j = var.i, var.j
            li, zi = cfg.lam[i - 1], cfg.z[i - 1]
            out.append(li / (cfg.z[j - 1] - zi) - li / (base - zi))
        else:
            r, i = var.r, var.i
            li, zi = cfg.lam[i - 1], cfg.z[i - 1]
            out.append(li / (cfg.q[r - 1] - zi) - li / (base - zi))
    return out


def random_point(spec: PresentationSpec, seed: int) -> list[Fraction]:
    return alpha_values(spec, sample_config(spec.n, spec.m, seed))


def verify_vanishing(spec: PresentationSpec, values: list[Fraction]) -> list[int]:
    """Indices of relations that fail to vanish at the point (empty = all vanish)."""
    if spec.field != QQ:
        raise UsageError("vanishing checks run in exact rational arithmetic")
    bad = []
    for t, rel in enumerate(spec.relations):
        if rel.evaluate(values) != 0:
            bad.append(t)
    return bad


def scale_point(spec: PresentationSpec, values: list[Fraction],
                t: tuple[Fraction, ...]) -> list[Fraction]:
    """Act by the grading torus: multiply each variable by t[its block]."""
    if len(t) != spec.nblocks:
        raise UsageError(f"need {spec.nblocks} torus factors, got {len(t)}")
    return [v * t[b] for v, b in zip(values, spec.blocks)]


# -- consistency of the pair products across channels ------------------------------

def cij_values(cfg: PointConfig, i: int, j: int) -> list[Fraction]:
    """For each k outside {i,j}: atilde(i,k)atilde(j,k) - atilde(i,j)atilde(j,k)
    - atilde(j,i)atilde(i,k).  Channel independence means one common value."""
    n = len(cfg.z)
    out = []
    for k in range(1, n + 1):
        if k in (i, j):
            continue
        aik, ajk = pole_value(cfg, i, k), pole_value(cfg, j, k)
        aij, aji = pole_value(cfg, i, j), pole_value(cfg, j, i)
        out.append(aik * ajk - aij * ajk - aji * aik)
    return out


def cij_consistency(n: int, seed: int, trials: int = 5) -> bool:
    """Channel independence of every pair product over several random configurations.

    For pole values the common value is 0 on the nose; the check asserts the
    stronger constancy-in-k statement that makes the relations well defined.
    """
    rng = SplitMix64(seed)
    for _ in range(trials):
        cfg = sample_config(n, 0, rng.next_u64())
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                vals = cij_values(cfg, i, j)
                if len(set(vals)) > 1:
                    return False
    return True


def cij_witness(n: int, seed: int) -> bool:
    """Perturbing a single pole value must break channel independence (n >= 4)."""
    if n < 4:
        raise UsageError("a channel-dependence witness needs n >= 4")
    cfg = sample_config(n, 0, seed)

    def perturbed(i, j):
        v = pole_value(cfg, i, j)
        return v + 1 if (i, j) == (1, 2) else v

    i, j = 1, 2
    vals = []
    for k in range(1, n + 1):
        if k in (i, j):
            continue
        aik, ajk = perturbed(i, k), perturbed(j, k)
        aij, aji = perturbed(i, j), perturbed(j, i)
        vals.append(aik * ajk - aij * ajk - aji * aik)
    return len(set(vals)) > 1


# -- Jacobian and the singular locus ----------------------------------------------

def jacobian(spec: PresentationSpec) -> list[list[Poly]]:
    """Rows per relation, columns per variable; entries are linear forms."""
    return [[rel.derivative(v) for v in range(spec.nvars)] for rel in spec.relations]


def jacobian_rank_at(spec: PresentationSpec, values: list[Fraction]) -> int:
    """Rank of the Jacobian at a point of the variety, over Q.

    Refuses points off the variety: rank there says nothing about smoothness.
    """
    bad = verify_vanishing(spec, values)
    if bad:
        raise UsageError(f"point is not on the variety (relations {bad} do not vanish)")
    from .exactla import rank_rational

    rows = []
    for rel in spec.relations:
        row = {}
        for v in range(spec.nvars):
            x = rel.derivative(v).evaluate(values)
            if x != 0:
                row[v] = x
        rows.append(row)
    return rank_rational(rows)


def poly_det(mat: list[list[Poly]]) -> Poly:
    """Determinant by cofactor expansion along the first row."""
    c = len(mat)
    if c == 0:
        raise UsageError("poly_det needs a nonempty matrix")
    if c == 1:
        return mat[0][0]
    field, nvars = mat[0][0].field, mat[0][0].nvars
    out = Poly.zero(field, nvars)
    for col in range(c):
        entry = mat[0][col]
        if entry.is_zero():
            continue
        sub = [[row[x] for x in range(c) if x != col] for row in mat[1:]]
        term = entry.mul(poly_det(sub))
        out = out.add(term) if col % 2 == 0 else out.sub(term)
    return out


def singular_minors(spec: PresentationSpec, c: int,
                    budget: int = DEFAULT_MINOR_BUDGET) -> list[Poly]:
    """All c x c minors of the Jacobian; c = 0 yields the unit (empty locus)."""
    if c < 0:
        raise UsageError(f"negative minor size {c}")
    if c == 0:
        return [Poly.const(spec.field, spec.nvars, spec.field.one())]
    nrel, nv = len(spec.relations), spec.nvars
    count = comb(nrel, c) * comb(nv, c)
    if count > budget:
        raise BudgetError(
            f"{count} minors of size {c} exceed the budget {budget}",
            estimate=count, budget=budget,
        )
    jac = jacobian(spec)
    out = []
    for rsel in combinations(range(nrel), c):
        for csel in combinations(range(nv), c):
            d = poly_det([[jac[r][x] for x in csel] for r in rsel])
            if not d.is_zero():
                out.append(d)
    return out


@dataclass(frozen=True)
class SingularReport:
    """Dimensions of the variety and of its singular locus (-1 = empty)."""

    algebra: str
    variety_dim: int
    codim: int
    minors: int
    singular_dim: int

    @property
    def bound_met(self) -> bool:
        # the locus must be a proper closed subset of positive codimension,
        # i.e. strictly smaller than the variety itself
        return self.singular_dim < self.variety_dim


def singular_locus_dim(
    spec: PresentationSpec,
    gb: GroebnerBasis | None = None,
    budget: int = DEFAULT_MINOR_BUDGET,
) -> SingularReport:
    """Krull dimension of (relations + codim-sized Jacobian minors).

    Works over the spec's own field; a prime-field spec keeps the Groebner
    run cheap and the minors are integer polynomials either way.
    """
    gb = gb or groebner_for(spec)
    dim = krull_dimension(gb)
    c = spec.nvars - dim
    minors = singular_minors(spec, c, budget=budget)
    gens = list(spec.relations) + minors
    order = spec.default_order()
    gens = linear_interreduce(gens, order)
    sgb = buchberger(gens, order)
    sdim = krull_dimension(sgb)
    return SingularReport(
        algebra=spec.name(),
        variety_dim=dim,
        codim=c,
        minors=len(minors),
        singular_dim=sdim,
    )
