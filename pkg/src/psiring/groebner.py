"""Buchberger completion, normal forms, and leading-term combinatorics.

The engine is a plain Buchberger loop with the Gebauer-Moller pair filters and
the normal selection strategy.  An optional total-degree cap makes the run a
truncated completion: for homogeneous input every discarded S-pair lives above
the cap, so normal forms below the cap are still those of the full basis.

Krull dimension comes from the leading terms alone: the dimension of the
quotient is the largest variable set that contains no leading-term support,
computed as variables minus a minimum hitting set.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import UsageError
from .fields import Field
from .orders import MonomialOrder, exp_degree, exp_divides, exp_div, exp_lcm, exp_mul
from .poly import Poly
from .presentation import PresentationSpec
from .rng import SplitMix64


@dataclass
class GroebnerBasis:
    """An interreduced, monic basis; complete means no S-pair was discarded."""

    field: Field
    nvars: int
    order: MonomialOrder
    basis: list[Poly]
    complete: bool
    cap: int | None = None

    def leading_exponents(self) -> list[tuple[int, ...]]:
        return [g.leading(self.order)[0] for g in self.basis]

    def __len__(self):
        return len(self.basis)


def normal_form(p: Poly, basis: list[Poly], order: MonomialOrder,
                perm: list[int] | None = None) -> Poly:
    """Full remainder of p on division by the basis.

    perm reorders reducer preference; for a complete basis the result is
    independent of it, which the confluence tests exercise directly.
    """
    field = p.field
    idx = perm if perm is not None else range(len(basis))
    lts = [basis[i].leading(order) for i in idx]
    gs = [basis[i] for i in idx]
    work = dict(p.terms)
    remainder: dict = {}
    while work:
        e = max(work, key=order.key)
        c = work.pop(e)
        hit = -1
        for t, (lt, _) in enumerate(lts):
            if exp_divides(lt, e):
                hit = t
                break
        if hit < 0:
            remainder[e] = c
            continue
        g = gs[hit]
        lt, lc = lts[hit]
        scale = field.div(c, lc)
        shift = exp_div(e, lt)
        for ge, gc in g.terms.items():
            te = exp_mul(ge, shift)
            if te == e:
                continue  # the leading term cancels exactly
            v = field.sub(work.get(te, field.zero()), field.mul(scale, gc))
            if field.is_zero(v):
                work.pop(te, None)
            else:
                work[te] = v
    return Poly(field, p.nvars, remainder)


def s_poly(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    field = f.field
    ef, cf = f.leading(order)
    eg, cg = g.leading(order)
    l = exp_lcm(ef, eg)
    a = f.mul_term(exp_div(l, ef), field.inv(cf))
    b = g.mul_term(exp_div(l, eg), field.inv(cg))
    return a.sub(b)


def buchberger(
    polys: list[Poly],
    order: MonomialOrder,
    cap: int | None = None,
) -> GroebnerBasis:
    """Complete the generating set to a Groebner basis under the order.

    cap discards S-pairs whose lcm total degree exceeds it; this requires
    homogeneous input (checked) and yields a basis valid up to the cap.
    """
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise UsageError("empty generating set")
    field = polys[0].field
    nvars = polys[0].nvars
    if any(p.field != field or p.nvars != nvars for p in polys):
        raise UsageError("mixed fields or variable counts in generating set")
    if cap is not None:
        for p in polys:
            if not _is_homogeneous(p):
                raise UsageError("degree-capped completion needs homogeneous input")

    G: list[Poly] = []
    lts: list[tuple[int, ...]] = []
    pairs: list[tuple[int, int, tuple[int, ...]]] = []
    truncated = False

    def add(p: Poly):
        nonlocal pairs, truncated
        t = len(G)
        G.append(p.monic(order))
        lts.append(p.leading(order)[0])
        cand = [(i, exp_lcm(lts[i], lts[t])) for i in range(t)]
        # pair filter: drop (i,t) when some other new pair's lcm strictly divides
        kept = []
        for i, l in cand:
            tight = all(lj == l or not exp_divides(lj, l) for j, lj in cand if j != i)
            if tight:
                kept.append((i, l))
        # group equal lcms: a coprime member kills the class, else keep one
        classes: dict[tuple[int, ...], list[int]] = {}
        for i, l in kept:
            classes.setdefault(l, []).append(i)
        fresh = []
        for l in sorted(classes, key=order.key):
            members = classes[l]
            if any(exp_mul(lts[i], lts[t]) == l for i in members):
                continue
            fresh.append((members[0], t, l))
        # chain filter on the old queue
        old = []
        for i, j, l in pairs:
            if (exp_divides(lts[t], l)
                    and exp_lcm(lts[i], lts[t]) != l
                    and exp_lcm(lts[j], lts[t]) != l):
                continue
            old.append((i, j, l))
        if cap is not None:
            for item in fresh:
                if exp_degree(item[2]) > cap:
                    truncated = True
            fresh = [it for it in fresh if exp_degree(it[2]) <= cap]
        pairs = old + fresh

    for p in sorted(polys, key=lambda q: order.key(q.leading(order)[0])):
        add(p)

    while pairs:
        best = min(range(len(pairs)),
                   key=lambda t: (exp_degree(pairs[t][2]), order.key(pairs[t][2]),
                                  pairs[t][1], pairs[t][0]))
        i, j, _ = pairs.pop(best)
        h = normal_form(s_poly(G[i], G[j], order), G, order)
        if not h.is_zero():
            add(h)

    return GroebnerBasis(field, nvars, order, _interreduce(G, order, field),
                         complete=not truncated, cap=cap)


def _is_homogeneous(p: Poly) -> bool:
    return len({sum(e) for e in p.terms}) <= 1


def _interreduce(G: list[Poly], order: MonomialOrder, field: Field) -> list[Poly]:
    """Drop redundant members, then fully reduce each tail; sort for determinism."""
    lts = [g.leading(order)[0] for g in G]
    keep = []
    for t, lt in enumerate(lts):
        redundant = any(
            exp_divides(lts[s], lt) and (lts[s] != lt or s < t)
            for s in range(len(G)) if s != t
        )
        if not redundant:
            keep.append(t)
    kept = [G[t] for t in keep]
    out = []
    for t, g in enumerate(kept):
        others = out + kept[t + 1:]
        lt, lc = g.leading(order)
        tail = Poly(field, g.nvars, {e: c for e, c in g.terms.items() if e != lt})
        red = normal_form(tail, others, order) if others else tail
        terms = dict(red.terms)
        terms[lt] = lc
        out.append(Poly(field, g.nvars, terms).monic(order))
    out.sort(key=lambda g: order.key(g.leading(order)[0]))
    return out


def groebner_for(spec: PresentationSpec, order: MonomialOrder | None = None,
                 cap: int | None = None) -> GroebnerBasis:
    order = order or spec.default_order()
    if not spec.relations:  # the zero ideal: its basis is empty (A_3 has no relations)
        return GroebnerBasis(spec.field, spec.nvars, order, [], complete=True, cap=cap)
    return buchberger(list(spec.relations), order, cap=cap)


def reduces_to_zero(p: Poly, gb: GroebnerBasis) -> bool:
    if gb.cap is not None and p.degree() > gb.cap:
        raise UsageError("polynomial degree exceeds the truncation cap")
    return normal_form(p, gb.basis, gb.order).is_zero()


def confluence_probe(gb: GroebnerBasis, p: Poly, shuffles: int, seed: int) -> bool:
    """Normal forms under several reducer orderings; True iff all agree."""
    base = normal_form(p, gb.basis, gb.order)
    rng = SplitMix64(seed)
    perm = list(range(len(gb.basis)))
    for _ in range(shuffles):
        rng.shuffle(perm)
        if normal_form(p, gb.basis, gb.order, perm=perm).terms != base.terms:
            return False
    return True


# -- leading-term combinatorics ---------------------------------------------------

def krull_dimension(gb: GroebnerBasis) -> int:
    """Dimension of the quotient from the leading terms of a complete basis.

    Equals nvars minus a minimum hitting set of the leading-term supports;
    -1 for the unit ideal.
    """
    if not gb.complete:
        raise UsageError("Krull dimension needs a complete basis (no degree cap cuts)")
    supports = []
    for e in gb.leading_exponents():
        s = frozenset(i for i, v in enumerate(e) if v)
        if not s:
            return -1
        supports.append(s)
    # minimal antichain
    supports = sorted(set(supports), key=len)
    minimal = []
    for s in supports:
        if not any(t <= s for t in minimal):
            minimal.append(s)
    return gb.nvars - _min_hitting_set(minimal)


def _min_hitting_set(supports: list[frozenset]) -> int:
    best = [sum(len(s) for s in supports) + 1]

    def rec(count: int, remaining: list[frozenset]):
        if count >= best[0]:
            return
        if not remaining:
            best[0] = count
            return
        pivot = min(remaining, key=len)
        for v in sorted(pivot):
            rec(count + 1, [s for s in remaining if v not in s])

    if not supports:
        return 0
    rec(0, supports)
    return best[0]


def standard_monomial_count(gb: GroebnerBasis, spec: PresentationSpec,
                            a: tuple[int, ...]) -> int:
    """Monomials of multidegree a not divisible by any leading term."""
    from .slices import enumerate_monomials

    if gb.cap is not None and sum(a) > gb.cap:
        raise UsageError(f"total degree {sum(a)} exceeds the truncation cap {gb.cap}")
    lts = gb.leading_exponents()
    count = 0
    for mono in enumerate_monomials(spec, a):
        if not any(exp_divides(lt, mono) for lt in lts):
            count += 1
    return count


def leading_terms_agree(g1: GroebnerBasis, g2: GroebnerBasis) -> bool:
    """Same leading-term sets: the cross-field (prime vs rational) comparison."""
    return sorted(g1.leading_exponents()) == sorted(g2.leading_exponents())


# -- linear preprocessing for large generator sets --------------------------------

def linear_interreduce(polys: list[Poly], order: MonomialOrder) -> list[Poly]:
    """Row-reduce each same-degree batch of generators; returns independent rows.

    Cuts redundant members before Buchberger when the input is very linearly
    dependent (minor expansions, spanning relation families).
    """
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return []
    field = polys[0].field
    groups: dict[tuple, list[Poly]] = {}
    for p in polys:
        groups.setdefault(tuple(sorted({sum(e) for e in p.terms})), []).append(p)
    out: list[Poly] = []
    for key in sorted(groups):
        batch = groups[key]
        monos = sorted({e for p in batch for e in p.terms}, key=order.key, reverse=True)
        pos = {e: c for c, e in enumerate(monos)}
        echelon: dict[int, dict[int, object]] = {}  # pivot col -> row
        for p in batch:
            row = {pos[e]: c for e, c in p.terms.items()}
            while row:
                lead = min(row)
                piv = echelon.get(lead)
                if piv is None:
                    inv = field.inv(row[lead])
                    echelon[lead] = {c: field.mul(inv, v) for c, v in row.items()}
                    break
                f = row[lead]
                for c, v in piv.items():
                    w = field.sub(row.get(c, field.zero()), field.mul(f, v))
                    if field.is_zero(w):
                        row.pop(c, None)
                    else:
                        row[c] = w
        for lead in sorted(echelon):
            row = echelon[lead]
            out.append(Poly(field, batch[0].nvars, {monos[c]: v for c, v in row.items()}))
    return out
