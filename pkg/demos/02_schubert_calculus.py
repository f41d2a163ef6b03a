"""Schubert calculus on Grassmannians of polynomial subspaces.

Counts how many (r+1)-dimensional spaces of polynomials of degree <= d have a
prescribed Wronskian (the Plucker degree), multiplies Schubert classes, and
checks Poincare duality.
"""

from wronski_schubert.grasscalc import class_of, intersection_number, multiply, plucker_degree
from wronski_schubert.partitions import complement, rect_enumerate


def main() -> None:
    print("Plucker degrees N_{r,d}:")
    for r in range(0, 4):
        row = [plucker_degree(r, d) for d in range(r, r + 5)]
        print(f"  r={r}: {row}")

    r, d = 1, 3
    power = (r + 1) * (d - r)
    print(f"sigma_1^{power} on G({r + 1},{d + 1}) =", intersection_number([(1,)] * power, r, d))

    r, d = 2, 5
    s1 = class_of((1,), r, d)
    s21 = class_of((2, 1), r, d)
    print(f"s(1) * s(2,1) on G({r + 1},{d + 1}) = {multiply(s1, s21)}")

    rows, cols = 2, 3
    pairs = [(tuple(lam), tuple(complement(lam, (rows, cols)))) for lam in rect_enumerate(rows, cols)]
    ok = all(intersection_number([a, b], rows - 1, rows - 1 + cols) == 1 for a, b in pairs)
    print(f"duality in the {rows}x{cols} rectangle holds for all {len(pairs)} classes: {ok}")


if __name__ == "__main__":
    main()
