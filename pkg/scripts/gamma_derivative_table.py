"""Compare Gamma_p'(a)/Gamma_p(a) mod p with the closed form c + H_{p-<-a>_p-1}.

Prints, for each residue a, the finite-difference value and the closed form
with c = 1 and with c = Gamma_p'(0).
"""

import argparse

from supercong.gamma_p import (
    GammaArgument,
    derivative_ratio_formula,
    gamma_p_derivative_ratio,
    gamma_p_log_derivative_at_zero,
)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, default=13)
    p = ap.parse_args().p
    c0 = gamma_p_log_derivative_at_zero(p)
    print(f"p = {p}, Gamma_p'(0) = {c0} (mod p)")
    print(f"{'a':>4} {'ratio':>6} {'c=1':>6} {'c=G(0)':>7}")
    for a in range(p):
        arg = GammaArgument(a, p)
        print(f"{a:>4} {gamma_p_derivative_ratio(arg).residue:>6} "
              f"{derivative_ratio_formula(arg).residue:>6} {derivative_ratio_formula(arg, c0).residue:>7}")


if __name__ == "__main__":
    main()
