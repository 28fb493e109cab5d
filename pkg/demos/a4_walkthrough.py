"""Walk through the full A4 pipeline step by step.

Builds the Saito matrix and the symplectic period matrix, forms the skew
Gram matrix M = chi W chi^t, cuts out the Severi strata by Pfaffians, and
checks ranks at constructed nodal parameter points.

Run: python3 demos/a4_walkthrough.py
"""

from severi.groebner import Budget
from severi.matrixops import det
from severi.milnor_algebra import saito_matrix
from severi.periods import omega_matrix
from severi.resolution import is_cohen_macaulay
from severi.ring import QQ
from severi.singularities import singularity
from severi.strata import (PoissonStructure, is_poisson_closed,
                           nodal_parameters, pfaffian, rank_at, severi_ideal,
                           skew_gram)


def show_matrix(name, M):
    print(f"{name} =")
    for row in M:
        print("   [" + ", ".join(e.format() for e in row) + "]")


def main():
    s = singularity("A4")
    print(s, "invariants:", s.invariants())
    print("versal deformation F =", s.F.format())

    chi = saito_matrix(s)
    show_matrix("chi", chi)
    print("det chi (discriminant equation) =", det(chi).format())

    W = omega_matrix(s)
    show_matrix("W", W)

    M = skew_gram(s, chi, W)
    print("Pf(M) == Pf(W) * det(chi):", pfaffian(M) == pfaffian(W) * det(chi))

    ps = PoissonStructure(s, W)
    for k in (1, 2):
        I = severi_ideal(s, M, k)
        info = is_cohen_macaulay(I, Budget(60))
        print(f"D({k}): codim {info['codim']}, betti {info['betti']}, "
              f"CM {info['cohen_macaulay']}, "
              f"Poisson-closed {is_poisson_closed(ps, I, Budget(60))}")

    # two nodes at x = 1, -1: the fiber is delta-constant, rank drops to 0
    point, m = nodal_parameters(s, [1, -1])
    print(f"{m}-nodal point {point}: rank", rank_at(M, point))
    point, m = nodal_parameters(s, [2], cofactor=[1, 1, 4, 1])
    print(f"{m}-nodal point: rank", rank_at(M, point))
    generic = dict(zip(s.param_names, [QQ(1)] * s.mu))
    print("generic point: rank", rank_at(M, generic))


if __name__ == "__main__":
    main()
