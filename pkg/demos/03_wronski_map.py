"""The Wronski map on the projective line.

1. Takes a pencil of cubics, finds its ramification points and checks that the
   weights add up to (r+1)(d-r).
2. Rebuilds a basis of the pencil from its intermediate Wronskians alone.
3. Inverts the Wronski map: finds every pencil of cubics whose Wronskian has
   four prescribed roots, exactly, and checks that each one is a critical point
   of the master function.
"""

import warnings
from fractions import Fraction

import numpy as np

from wronski_schubert.exactalg import UniPoly
from wronski_schubert.wmap import (
    DegreeFormulaWarning,
    LinearSystemP1,
    RamificationConfig,
    critical_residual,
    find_planes_r1_report,
    intermediate_wronskians,
    nondegenerate,
    ramification_profile,
    reconstruct_basis_series,
    span_check,
    t_polys,
    wronskian_of_system,
)


def main() -> None:
    V = LinearSystemP1([UniPoly((1, 0, 1)), UniPoly((0, 0, 0, 1))], 3)
    print("system:", V)
    print("Wronskian:", wronskian_of_system(V))
    prof = ramification_profile(V)
    for datum in prof.points:
        print(f"  point {datum.point}: orders {datum.orders}, partition {tuple(datum.partition)}")
    print(f"  irrational remainder degree {prof.irrational_degree}; total {prof.total_weight} = {prof.expected_total}")

    flag = intermediate_wronskians(V)
    a = Fraction(1)
    g = reconstruct_basis_series(flag, a, 10)
    print("rebuilt basis at x = 1 spans V:", span_check(V, g, a) == (2, 2))

    roots = [0, 1, 3, -2]
    report = find_planes_r1_report(roots, 3)
    print(f"pencils with Wronskian proportional to prod(x - z), z in {roots}: "
          f"{len(report.planes)} found, {report.expected} expected")
    for P in report.planes:
        print("  ", P)
        config = RamificationConfig.of_system(P)
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", DegreeFormulaWarning)
            T1 = t_polys(P, config).t[1]
            ok = nondegenerate(P, config).ok
        t = np.roots([complex(c) for c in reversed(T1.coeffs)])
        print(f"     non-degenerate: {ok}; Bethe residual {np.linalg.norm(critical_residual(config, t)):.1e}")


if __name__ == "__main__":
    main()
