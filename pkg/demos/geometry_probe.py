"""Points on the varieties from pole values of rational configurations.

Run:  python3 demos/geometry_probe.py
"""

from fractions import Fraction

from psiring.fields import PrimeField
from psiring.geometry import (
    alpha_values,
    cij_values,
    cij_witness,
    jacobian_rank_at,
    sample_config,
    scale_point,
    singular_locus_dim,
    verify_vanishing,
)
from psiring.presentation import build_an, build_bnm


def main():
    spec = build_an(4)
    cfg = sample_config(4, 0, seed=7)
    print(f"configuration: z = {cfg.z}, weights = {cfg.lam}")
    vals = alpha_values(spec, cfg)
    for name, v in zip(spec.var_names(), vals):
        print(f"  {name} = {v}")
    print(f"all {len(spec.relations)} relations vanish:"
          f" {verify_vanishing(spec, vals) == []}")

    print("\npair products are channel independent (same value for every k)")
    for (i, j) in [(1, 2), (1, 3), (2, 4)]:
        print(f"  c({i},{j}) values: {cij_values(cfg, i, j)}")
    print(f"perturbing one pole value breaks independence: {cij_witness(4, seed=7)}")

    print("\nthe grading torus acts on points")
    t = (Fraction(2), Fraction(1, 3), Fraction(-1), Fraction(5))
    scaled = scale_point(spec, vals, t)
    print(f"  scaled point still on the variety:"
          f" {verify_vanishing(spec, scaled) == []}")

    print("\nJacobian rank at sampled points equals the codimension")
    for n, want in [(4, 3), (5, 8)]:
        s = build_an(n)
        v = alpha_values(s, sample_config(n, 0, seed=11))
        print(f"  A({n}): rank {jacobian_rank_at(s, v)} (codimension {want})")

    print("\nsingular locus dimensions (-1 means empty)")
    for builder, label in [(lambda: build_an(4), "A(4)"),
                           (lambda: build_bnm(2, 2), "B(2,2)"),
                           (lambda: build_an(3), "A(3)")]:
        r = singular_locus_dim(builder().to_field(PrimeField(32003)))
        print(f"  {label}: variety dim {r.variety_dim},"
              f" singular dim {r.singular_dim}, proper subset: {r.bound_met}")


if __name__ == "__main__":
    main()
