"""Completing a presentation to a Groebner basis and reading off invariants.

Run:  python3 demos/groebner_walkthrough.py
"""

from psiring.fields import QQ, PrimeField
from psiring.groebner import (
    confluence_probe,
    groebner_for,
    krull_dimension,
    leading_terms_agree,
    normal_form,
    standard_monomial_count,
)
from psiring.poly import poly_text
from psiring.presentation import build_an, build_bnm, general_pair_relation
from psiring.series import TotalBound, lee_series


def main():
    spec = build_an(4)
    gb = groebner_for(spec)
    names = spec.var_names()
    print(f"A(4): {len(spec.relations)} quadric generators complete to"
          f" {len(gb)} basis elements over QQ")
    for g in gb.basis:
        print(f"  {poly_text(g, names, gb.order)}")

    print(f"\nKrull dimension from the leading-term ideal: {krull_dimension(gb)}")

    print("\nstandard monomials per degree match the series")
    series = lee_series(4, TotalBound(3))
    for a in [(1, 0, 0, 0), (1, 1, 0, 0), (1, 1, 1, 0), (2, 1, 0, 0)]:
        std = standard_monomial_count(gb, spec, a)
        print(f"  {a}: {std} standard monomials, series {series.coefficient(a)}")

    print("\nthe general pair relation on four distinct points reduces to zero")
    r = general_pair_relation(spec, 1, 3, 2, 4)
    print(f"  relation: {poly_text(r, names, gb.order)}")
    print(f"  normal form is zero: {normal_form(r, gb.basis, gb.order).is_zero()}")

    print("\nnormal forms are confluent under shuffled reducer orders")
    probe = confluence_probe(gb, r, shuffles=8, seed=42)
    print(f"  agree across 8 shuffles: {probe}")

    print("\nprime-field and rational completions have the same leading terms")
    gp = groebner_for(spec.to_field(PrimeField(32003)))
    print(f"  agree: {leading_terms_agree(gb, gp)}")

    print("\nKrull dimensions across the families (expect 2n + m - 3)")
    for builder, label in [(lambda: build_an(5), "A(5)"),
                           (lambda: build_bnm(2, 2), "B(2,2)"),
                           (lambda: build_bnm(3, 1), "B(3,1)")]:
        s = builder()
        d = krull_dimension(groebner_for(s.to_field(PrimeField(32003))))
        print(f"  {label}: {d} (predicted {2 * s.n + s.m - 3})")


if __name__ == "__main__":
    main()
