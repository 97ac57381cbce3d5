"""Monomial orders on dense exponent tuples.

Orders are exposed as key functions: key(e1) > key(e2) exactly when the
monomial e1 is larger.  All three kinds are total, multiplicative and have
1 as the minimal element, which the test suite checks on random triples.
"""

from __future__ import annotations

from dataclasses import dataclass, field

GREVLEX = "grevlex"
LEX = "lex"
BLOCK_GREVLEX = "block-then-grevlex"

KINDS = (GREVLEX, LEX, BLOCK_GREVLEX)


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order: kind, variable priority, and (for block orders) the grading.

    `perm` lists variable positions from most to least significant; identity
    when omitted.  `blocks` maps each variable position to its block, needed
    only for block-then-grevlex, where monomials compare first by multidegree
    (lexicographically by block) and then by grevlex.
    """

    kind: str = GREVLEX
    perm: tuple[int, ...] | None = None
    blocks: tuple[int, ...] | None = None
    nblocks: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.kind == BLOCK_GREVLEX and self.blocks is None:
            raise ValueError("block-then-grevlex needs the block map")

    def _reordered(self, e: tuple[int, ...]) -> tuple[int, ...]:
        if self.perm is None:
            return e
        return tuple(e[p] for p in self.perm)

    def key(self, e: tuple[int, ...]):
        r = self._reordered(e)
        if self.kind == LEX:
            return r
        grevlex_key = (sum(r), tuple(-x for x in reversed(r)))
        if self.kind == GREVLEX:
            return grevlex_key
        mdeg = [0] * self.nblocks
        for pos, exp in enumerate(e):
            if exp:
                mdeg[self.blocks[pos]] += exp
        return (tuple(mdeg), grevlex_key)

    def gt(self, e1: tuple[int, ...], e2: tuple[int, ...]) -> bool:
        return self.key(e1) > self.key(e2)

    def max_exponent(self, exps):
        return max(exps, key=self.key)

    def sorted_desc(self, exps):
        return sorted(exps, key=self.key, reverse=True)


# -- exponent tuple helpers ---------------------------------------------------

def exp_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))

def exp_divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    """True when monomial a divides monomial b."""
    return all(x <= y for x, y in zip(a, b))

def exp_div(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    """Quotient exponent a/b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))

def exp_lcm(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(max(x, y) for x, y in zip(a, b))

def exp_degree(a: tuple[int, ...]) -> int:
    return sum(a)

def exp_one(nvars: int) -> tuple[int, ...]:
    return (0,) * nvars
