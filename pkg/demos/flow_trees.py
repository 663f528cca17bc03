"""Flow tree contributions for the 2-Kronecker quiver.

For each dimension vector the flow tree sum runs over tuples of attractor
degrees, their orderings and binary trees.  Only a few triples survive the
positivity and stability tests; this script lists them and compares the
total with the attractor tree formula.
"""

from itertools import permutations

from dtcol.dtpipeline import attractor_dt, attractor_tree_eval, omega_bar
from dtcol.exactalg import render
from dtcol.lie import flow_tree_coeff, flow_tree_dt, multiset_representatives
from dtcol.quiver import Quiver, skew_form, stacky_A
from dtcol.semigroup import box
from dtcol.stability import CentralCharge
from dtcol.trees import enumerate_binary

Q = Quiver.kronecker(2)
A, B = stacky_A(Q), skew_form(Q)
Z = CentralCharge((1, 0))
star_ = attractor_dt(A, B, 4)
omega_star = lambda g: omega_bar(star_(g))
tree = attractor_tree_eval(star_, Z, B, 0, 4)

for gamma in box((2, 2)):
    print("gamma = %s" % (gamma,))
    for alpha in multiset_representatives(gamma):
        if len(alpha) < 2 or any(not omega_star(a) for a in alpha):
            continue
        for sigma in permutations(range(len(alpha))):
            for T in enumerate_binary(len(alpha)):
                if flow_tree_coeff(T, alpha, sigma, Z, B):
                    print("   contributes: tree %s on %s" % (T, tuple(alpha[s] for s in sigma)))
    flow = flow_tree_dt(omega_star, Z, B, gamma)
    print("   flow tree: %s   attractor tree: %s" % (render(flow), render(omega_bar(tree(gamma)))))
