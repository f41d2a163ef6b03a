"""Generalized Wronskians of the fundamental solutions of a universal linear ODE.

The equation D^{r+1} y = e_1 D^r y - e_2 D^{r-1} y + ... is solved with symbolic
coefficients.  Its fundamental solutions u_i have coefficients h_{n-i}, and their
generalized Wronskians turn out to be Schur determinants times the classical
Wronskian: exact identities, checked here to a fixed order.
"""

from wronski_schubert.odeuniv import CauchyData, MonicOperator, fundamental_basis, solve_cauchy
from wronski_schubert.partitions import rect_enumerate
from wronski_schubert.schur import schur_delta
from wronski_schubert.wronsk import gen_wronskian, giambelli_residual, liouville_residual, pieri_residual


def main() -> None:
    r, N = 1, 8
    op = MonicOperator.universal(r)
    print(f"operator: {op}")

    u = fundamental_basis(op, N)
    for i, s in enumerate(u):
        print(f"u_{i} coefficients:", [str(c) for c in s][:6], "...")

    W0 = gen_wronskian((), u)
    print("classical Wronskian W_0(u):", [str(c) for c in W0][:4], "...")

    h = op.h(N)
    for lam in rect_enumerate(2, 2):
        residual = giambelli_residual(lam, op, N)
        print(f"W_{tuple(lam)}(u) = Delta_{tuple(lam)}(h) * W_0(u)?  residual zero: {not residual};"
              f"  Delta = {schur_delta(lam, h, r)}")

    for k in range(1, r + 2):
        print(f"Liouville k={k}: W_(1^{k})(u) = e_{k} W_0(u)?  {not liouville_residual(op, k, N)}")
    print("Pieri h_1 * W_(1)(u) = W_(2)(u) + W_(1,1)(u)?", not pieri_residual(1, (1,), op, N))

    # a concrete Cauchy problem: y'' = 3 y' - 2 y, y(0) = 1, y'(0) = 0  ->  2 e^t - e^{2t}
    y = solve_cauchy(CauchyData(MonicOperator([3, 2]), [1, 0], None, 6))
    print("2e^t - e^{2t} derivatives at 0:", [str(c) for c in y])


if __name__ == "__main__":
    main()
