"""Brute-force slice dimensions against the series, degree by degree.

Each multidegree slice is spanned by the monomials of that degree; relation
multiples give linear constraints, and the dimension is monomials minus rank.

Run:  python3 demos/slice_census.py
"""

from psiring.presentation import build_an
from psiring.reports import degree_sort_key
from psiring.series import TotalBound, lee_series
from psiring.slices import slice_dimension, sweep_dimensions


def main():
    spec = build_an(4)
    series = lee_series(4, TotalBound(4))

    print("A(4) slices up to total degree 4")
    print(f"{'degree':>14} {'monomials':>10} {'rank':>6} {'dim':>5} {'series':>7}")
    for rep in sweep_dimensions(spec, 4):
        want = series.coefficient(rep.multidegree)
        mark = "" if rep.dimension == want else "  <-- MISMATCH"
        print(f"{str(rep.multidegree):>14} {rep.monomials:>10} {rep.rank:>6}"
              f" {rep.dimension:>5} {want:>7}{mark}")

    print("\none slice in detail, with the verification lane it used")
    rep = slice_dimension(spec, (2, 1, 1, 0))
    print(f"  multidegree {rep.multidegree}: {rep.monomials} monomials,"
          f" {rep.rows} constraint rows of rank {rep.rank}")
    print(f"  dimension {rep.dimension}, series predicts {rep.predicted}")
    print(f"  method: {rep.method}")

    print("\nhigh-degree spot checks on A(5)")
    spec5 = build_an(5)
    series5 = lee_series(5, TotalBound(5))
    grid = [(2, 1, 1, 1, 0), (1, 1, 1, 1, 1), (3, 2, 0, 0, 0)]
    for a in sorted(grid, key=degree_sort_key):
        rep = slice_dimension(spec5, a)
        print(f"  {a}: dim {rep.dimension} vs series {series5.coefficient(a)}")


if __name__ == "__main__":
    main()
