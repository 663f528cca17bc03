"""Plethystic inverses from plane trees, compared with closed forms.

The free construction sums over plane trees whose vertices have at least
two children.  Feeding it ``1 - s`` for the Harder-Narasimhan collection
``s`` gives the inverse, which also has a sign formula in terms of the
partial sums ``alpha_1 + ... + alpha_k``.
"""

from dtcol import batch
from dtcol.collection import exp_log_family, hn, hn_inverse
from dtcol.stability import CentralCharge
from dtcol.trees import enumerate_trees, plethystic_inverse, tree_eval

Z = CentralCharge((2, -1), (1, 3))
alpha = ((1, 0), (1, 1), (0, 1))

print("plane trees on 3 leaves:")
for T in enumerate_trees(3):
    print("  ", T)

s = hn(Z)
print("\nHN collection on", alpha, "->", s(alpha))
via_trees = plethystic_inverse(s)
print("inverse via trees:", via_trees(alpha), " closed form:", hn_inverse(Z)(alpha))

for n in range(1, 7):
    bad = batch.first_disagreement(via_trees, hn_inverse(Z), 2, n, 2, min_len=n)
    print("length %d, entries <= 2: %s" % (n, "agree" if bad is None else "differ at %r" % (bad,)))

# The exponential collection inverts to the logarithm in rank 1.
exp, log = exp_log_family("exp"), exp_log_family("log")
inv = plethystic_inverse(exp)
row = ((1,),) * 5
print("\nT(1 - exp) on five ones: %s, log gives %s" % (inv(row), log(row)))
print("a single tree value, log on ((1,2),3):", tree_eval(log, ((1, 2), 3), ((1,), (1,), (1,))))
