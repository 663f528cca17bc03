"""Wall-crossing for the Kronecker quivers, one step at a time.

Run with ``python demos/kronecker_wall_crossing.py``.
"""

from dtcol.dtpipeline import attractor_dt, omega_bar, rational_dt, stacky_dt, wallcross
from dtcol.exactalg import render
from dtcol.quiver import Quiver, skew_form, stacky_A
from dtcol.semigroup import vectors_up_to
from dtcol.stability import CentralCharge

BOUND = 4

for m in (1, 2):
    Q = Quiver.kronecker(m)
    A, B = stacky_A(Q), skew_form(Q)
    print("=== Kronecker quiver with %d arrow%s ===" % (m, "s" if m > 1 else ""))
    print("stacky A(1,1) =", render(A((1, 1))))

    # Two chambers: the source vertex heavier, then lighter.
    left, right = CentralCharge((1, 0)), CentralCharge((0, 1))
    for name, Z in (("theta=(1,0)", left), ("theta=(0,1)", right)):
        AZ = stacky_dt(A, Z, BOUND)
        print("%s: A_Z(1,1) = %s" % (name, render(AZ((1, 1)))))

    # Rational invariants on one side, carried across the wall.
    abar = rational_dt(A, left, BOUND)
    moved = wallcross(abar, left, right, BOUND)
    direct = rational_dt(A, right, BOUND)
    same = all(moved(g) == direct(g) for g in vectors_up_to(2, BOUND))
    print("wall-crossed invariants match a direct computation:", same)

    print("Omega_bar on the theta=(1,0) side:")
    for g in sorted(vectors_up_to(2, BOUND)):
        w = omega_bar(abar(g))
        if w:
            print("  %-6s %s" % (g, render(w)))

    # Attractor invariants live only on the axes for an acyclic quiver.
    star_ = attractor_dt(A, B, BOUND)
    support = sorted(g for g in vectors_up_to(2, BOUND) if star_(g))
    print("support of the attractor invariants:", support)
    print()
