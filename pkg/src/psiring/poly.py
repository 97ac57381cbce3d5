"""Sparse multivariate polynomials over an exact field context.

A Poly stores {exponent tuple: nonzero coefficient payload}.  The exponent
tuple is dense over a fixed variable list whose meaning (names, blocks) lives
in the owning presentation; the polynomial itself only knows nvars and the
field.  All arithmetic is exact.
"""

from __future__ import annotations

from .fields import Field, same_field
from .orders import MonomialOrder, exp_mul


def multidegree(exp: tuple[int, ...], blocks: tuple[int, ...], nblocks: int) -> tuple[int, ...]:
    """Sum exponents block-wise: the Z^n degree of a monomial."""
    out = [0] * nblocks
    for pos, e in enumerate(exp):
        if e:
            out[blocks[pos]] += e
    return tuple(out)


class Poly:
    __slots__ = ("field", "nvars", "terms")

    def __init__(self, field: Field, nvars: int, terms: dict | None = None):
        self.field = field
        self.nvars = nvars
        self.terms = terms if terms is not None else {}

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def zero(field: Field, nvars: int) -> "Poly":
        return Poly(field, nvars)

    @staticmethod
    def const(field: Field, nvars: int, c) -> "Poly":
        p = Poly(field, nvars)
        if not field.is_zero(c):
            p.terms[(0,) * nvars] = c
        return p

    @staticmethod
    def variable(field: Field, nvars: int, pos: int) -> "Poly":
        e = [0] * nvars
        e[pos] = 1
        return Poly(field, nvars, {tuple(e): field.one()})

    @staticmethod
    def from_int_terms(field: Field, nvars: int, int_terms: dict) -> "Poly":
        """Build from integer coefficients, mapping them into the field."""
        terms = {}
        for exp, c in int_terms.items():
            v = field.from_int(c)
            if not field.is_zero(v):
                terms[exp] = v
        return Poly(field, nvars, terms)

    # -- queries --------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def poly_multidegree(self, blocks: tuple[int, ...], nblocks: int):
        """The common multidegree of all terms, or None if inhomogeneous or zero."""
        degs = {multidegree(e, blocks, nblocks) for e in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def leading(self, order: MonomialOrder) -> tuple[tuple[int, ...], object]:
        """(leading exponent, leading coefficient) under the given order."""
        assert self.terms, "zero polynomial has no leading term"
        e = max(self.terms, key=order.key)
        return e, self.terms[e]

    def coefficient(self, exp: tuple[int, ...]):
        return self.terms.get(exp, self.field.zero())

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.nvars, frozenset(self.terms.items())))

    def __repr__(self):
        return f"Poly({len(self.terms)} terms over {self.field!r})"

    # -- arithmetic -----------------------------------------------------------

    def _check(self, other: "Poly"):
        same_field(self.field, other.field)
        if self.nvars != other.nvars:
            raise ValueError("variable count mismatch")

    def add(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = F.add(terms.get(e, F.zero()), c)
            if F.is_zero(s):
                terms.pop(e, None)
            else:
                terms[e] = s
        return Poly(F, self.nvars, terms)

    def neg(self) -> "Poly":
        F = self.field
        return Poly(F, self.nvars, {e: F.neg(c) for e, c in self.terms.items()})

    def sub(self, other: "Poly") -> "Poly":
        return self.add(other.neg())

    def scale(self, c) -> "Poly":
        F = self.field
        if F.is_zero(c):
            return Poly(F, self.nvars)
        return Poly(F, self.nvars, {e: F.mul(v, c) for e, v in self.terms.items()})

    def mul_term(self, exp: tuple[int, ...], c) -> "Poly":
        """Multiply by the single term c * x^exp."""
        F = self.field
        if F.is_zero(c):
            return Poly(F, self.nvars)
        return Poly(F, self.nvars, {exp_mul(e, exp): F.mul(v, c) for e, v in self.terms.items()})

    def mul(self, other: "Poly") -> "Poly":
        self._check(other)
        F = self.field
        terms: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = exp_mul(e1, e2)
                s = F.add(terms.get(e, F.zero()), F.mul(c1, c2))
                if F.is_zero(s):
                    terms.pop(e, None)
                else:
                    terms[e] = s
        return Poly(F, self.nvars, terms)

    def monic(self, order: MonomialOrder) -> "Poly":
        if not self.terms:
            return self
        _, lc = self.leading(order)
        return self.scale(self.field.inv(lc))

    def derivative(self, pos: int) -> "Poly":
        F = self.field
        terms = {}
        for e, c in self.terms.items():
            k = e[pos]
            if k == 0:
                continue
            v = F.mul(c, F.from_int(k))
            if F.is_zero(v):
                continue  # characteristic divides the exponent
            e2 = list(e)
            e2[pos] = k - 1
            terms[tuple(e2)] = v
        return Poly(F, self.nvars, terms)

    def evaluate(self, values: list):
        """Evaluate at a point given as a list of field payloads, one per variable."""
        assert len(values) == self.nvars
        F = self.field
        total = F.zero()
        for e, c in self.terms.items():
            v = c
            for pos, k in enumerate(e):
                for _ in range(k):
                    v = F.mul(v, values[pos])
            total = F.add(total, v)
        return total

    def map_field(self, field: Field) -> "Poly":
        """Reinterpret integer-valued coefficients in another field (QQ -> GF(p) and back).

        Prime-field coefficients lift through the signed representative, so a
        residue standing for -1 maps back to -1 rather than to p - 1.
        """
        terms = {}
        for e, c in self.terms.items():
            n = self.field.to_int(c)
            if n is None:
                raise ValueError("map_field requires integer coefficients")
            v = field.from_int(n)
            if not field.is_zero(v):
                terms[e] = v
        return Poly(field, self.nvars, terms)

    def sorted_terms(self, order: MonomialOrder):
        """Terms as (exp, coeff) pairs, descending in the order: canonical form."""
        return [(e, self.terms[e]) for e in sorted(self.terms, key=order.key, reverse=True)]


def poly_text(p: Poly, names: list[str], order: MonomialOrder) -> str:
    """Render terms descending in the order, with exact coefficient strings."""
    if p.is_zero():
        return "0"
    F = p.field
    parts = []
    for e, c in p.sorted_terms(order):
        factors = []
        for pos, k in enumerate(e):
            if k == 1:
                factors.append(names[pos])
            elif k > 1:
                factors.append(f"{names[pos]}^{k}")
        mono = "*".join(factors) if factors else "1"
        cs = F.to_str(c)
        if cs == "1" and factors:
            term = mono
        elif cs == "-1" and factors:
            term = "-" + mono
        else:
            term = f"{cs}*{mono}" if factors else cs
        parts.append(term)
    out = parts[0]
    for t in parts[1:]:
        out += " - " + t[1:] if t.startswith("-") else " + " + t
    return out
