"""Acceptance battery A1-A12.

Each check returns ``(passed, detail)``.  ``quick=True`` shrinks the tuple
bounds (lengths at most 4) for a fast smoke run; the default uses the full
bounds.  The CLI ``selftest`` command and the test suite both call
:func:`run`.
"""

import time
from fractions import Fraction

from . import batch
from .collection import (Collection, col_sub, exp_log_family, g_theta, g_theta_t, geometric, hn,
                         hn_inv_geometric, hn_inverse, identity_collection, plethysm,
                         pseudorandom_collection, transition)
from .dtpipeline import (attractor_dt, attractor_series_check, attractor_tree_eval,
                         is_simple_multiple, omega_bar, rational_dt, self_stability_check,
                         series_log_check, stacky_dt, stacky_dt_recursive, wallcross_collection)
from .exactalg import RatFunc, neg_y_power
from .lie import collection_component, flow_tree_dt, is_lie
from .quiver import Quiver, poincare_gl, skew_form, stacky_A
from .semigroup import box, splits, vectors_up_to
from .stability import GREATER, LESS, CentralCharge
from .trees import free_construction, plethystic_inverse

CHARGES = (
    CentralCharge((1, 0)),
    CentralCharge((2, -1), (1, 3)),
    CentralCharge((-1, 1), (2, 1)),
)
CHARGE_PAIRS = (
    (CHARGES[0], CentralCharge((0, 1))),
    (CHARGES[1], CHARGES[2]),
    (CentralCharge((1, -1), (1, 2)), CentralCharge((-3, 1), (2, 5))),
)


def _agree(F, G, r, max_len, max_entry):
    """``None`` if ``F`` and ``G`` agree on the grid, else the first bad tuple."""
    return batch.first_disagreement(F, G, r, max_len, max_entry)


def _grid_checks(pairs, r, max_len, max_entry):
    for label, F, G in pairs:
        bad = _agree(F, G, r, max_len, max_entry)
        if bad is not None:
            return False, "%s differs at %r" % (label, bad)
    return True, "%d identities on rank %d, n <= %d, entries <= %d" % (len(pairs), r, max_len, max_entry)


def a1(quick=False):
    n = 4 if quick else 5
    one = identity_collection()
    pairs = []
    for seed in (11, 23, 37):
        F = pseudorandom_collection(seed)
        TF, one_minus = free_construction(F), col_sub(one, F)
        pairs.append(("(1-F)oTF seed %d" % seed, plethysm(one_minus, TF), one))
        pairs.append(("TFo(1-F) seed %d" % seed, plethysm(TF, one_minus), one))
    return _grid_checks(pairs, 2, n, 2)


def a2(quick=False):
    n = 4 if quick else 6
    pairs = []
    for Z in CHARGES[:2]:
        pairs.append(("hn_inverse vs T(1-s) at %r" % (Z,), hn_inverse(Z), plethystic_inverse(hn(Z))))
        pairs.append(("s^-1 o s at %r" % (Z,), plethysm(hn_inverse(Z), hn(Z)), identity_collection()))
    return _grid_checks(pairs, 2, n, 3)


def a3(quick=False):
    one = identity_collection()
    exp, log = exp_log_family("exp"), exp_log_family("log")
    ok, detail = _grid_checks([("exp o log", plethysm(exp, log), one),
                               ("log o exp", plethysm(log, exp), one)], 1, 5 if quick else 7, 3)
    if not ok:
        return ok, detail
    pairs = [("exp_par o log_par", plethysm(exp_log_family("exp_par"), exp_log_family("log_par")), one),
             ("log_par o exp_par", plethysm(exp_log_family("log_par"), exp_log_family("exp_par")), one)]
    for Z in CHARGES[:2]:
        e, l = exp_log_family("exp_theta", Z), exp_log_family("log_theta", Z)
        pairs.append(("exp_theta o log_theta", plethysm(e, l), one))
        pairs.append(("log_theta o exp_theta", plethysm(l, e), one))
    ok, detail2 = _grid_checks(pairs, 2, 4 if quick else 5, 2)
    return ok, detail if not ok else detail + "; " + detail2


def a4(quick=False):
    pairs = [("transition %r -> %r" % (Z, Z2), transition(Z, Z2), plethysm(hn_inverse(Z2), hn(Z)))
             for Z, Z2 in CHARGE_PAIRS]
    return _grid_checks(pairs, 2, 4 if quick else 5, 2)


def _half_closed_form(Z):
    """``(-1)^{n_+} / 2^n * (1 + (-1)^{n_0}) / (n_0 + 1)`` from the split comparisons of ``Z``."""

    def rule(alpha):
        signs = [Z.compare(a, b) for a, b in splits(alpha)]
        n_plus = signs.count(GREATER)
        n0 = len(signs) - n_plus - signs.count(LESS)
        return (Fraction((-1) ** n_plus, 2 ** len(alpha)) * (1 + (-1) ** n0)) / (n0 + 1)

    return Collection(rule, "g_Z,1/2 closed form")


def a5(quick=False):
    n = 4 if quick else 5
    pairs = []
    for Z in CHARGES[:2]:
        for t in (0, 1, Fraction(1, 2), 2, -1):
            pairs.append(("hn_inv_geometric t=%s" % t, hn_inv_geometric(Z, t),
                          plethysm(hn_inverse(Z), geometric(t))))
            pairs.append(("g_theta_t t=%s" % t, g_theta_t(Z, t), plethysm(g_theta(Z), geometric(t))))
        pairs.append(("t=1/2 closed form", g_theta_t(Z, Fraction(1, 2)), _half_closed_form(Z)))
    return _grid_checks(pairs, 2, n, 2)


K1, K2 = Quiver.kronecker(1), Quiver.kronecker(2)


def a6(quick=False):
    A = stacky_A(K1)
    checks = []
    for theta, want in (((1, 0), 1), ((0, 1), 0)):
        Z = CentralCharge(theta)
        got = omega_bar(rational_dt(A, Z, 2)((1, 1)))
        checks.append(got == RatFunc(want))
    bound = 4 if quick else 6
    for Q in (K1, K2):
        A = stacky_A(Q)
        for Z in CHARGES[:2]:
            closed, rec = stacky_dt(A, Z, bound), stacky_dt_recursive(A, Z, bound)
            checks.append(all(closed(g) == rec(g) for g in vectors_up_to(2, bound)))
    return all(checks), "Omega_bar(1,1) values and closed vs recursive A_Z for |gamma| <= %d" % bound


def a7(quick=False):
    bound = 4 if quick else 6
    for Q in (K1, K2):
        A, B = stacky_A(Q), skew_form(Q)
        star_ = attractor_dt(A, B, bound)
        for g in vectors_up_to(2, bound):
            if not is_simple_multiple(g) and star_(g):
                return False, "Abar_*%r = %s is nonzero for %r" % (g, star_(g), Q)
        rec = attractor_series_check(A, B, 3)
        for g, v in rec.items():
            n = max(g)
            if v != neg_y_power(n * n) / RatFunc(poincare_gl(n)):
                return False, "recombined A_*%r = %s" % (g, v)
    return True, "off-axis zeros up to degree %d, A_*(n e_i) for n <= 3" % bound


def a8(quick=False):
    Q = K2
    A, B = stacky_A(Q), skew_form(Q)
    corner = (2, 2) if quick else (3, 3)
    bound = sum(corner)
    abar_star = attractor_dt(A, B, bound)
    gammas = box(corner)
    for Z in CHARGES[:2]:
        target = rational_dt(A, Z, bound)
        for t in (0, 1, Fraction(1, 2), 3):
            H = attractor_tree_eval(abar_star, Z, B, t, bound)
            for g in gammas:
                if H(g) != target(g):
                    return False, "t=%s differs at %r for %r" % (t, g, Z)
    return True, "t in {0, 1, 1/2, 3} agree with rational_dt up to %r" % (corner,)


def a9(quick=False):
    bound = 3 if quick else 4
    for Z, Z2 in CHARGE_PAIRS[:2]:
        W = wallcross_collection(Z, Z2)
        for g in vectors_up_to(2, bound):
            if not is_lie(collection_component(W, g)):
                return False, "degree %r component is not Lie for %r -> %r" % (g, Z, Z2)
    return True, "all degree components with |gamma| <= %d are Lie" % bound


def a10(quick=False):
    corner = (2, 1) if quick else (2, 2)
    gammas = box(corner)
    bound = sum(corner)
    for Q in (K1, K2):
        A, B = stacky_A(Q), skew_form(Q)
        abar_star = attractor_dt(A, B, bound)
        omega_star = lambda g: omega_bar(abar_star(g))
        for Z in CHARGES[:2]:
            tree = attractor_tree_eval(abar_star, Z, B, 0, bound)
            for g in gammas:
                if flow_tree_dt(omega_star, Z, B, g) != omega_bar(tree(g)):
                    return False, "flow tree differs at %r for %r, %r" % (g, Q, Z)
    return True, "flow tree = attractor tree on K1, K2 for gamma <= %r" % (corner,)


def a11(quick=False):
    bound = 4 if quick else 5
    for Q in (K1, K2, Quiver.loops(2)):
        A, B = stacky_A(Q), skew_form(Q)
        for g in vectors_up_to(Q.rank, bound):
            if not self_stability_check(A, B, g):
                return False, "self-stability fails at %r for %r" % (g, Q)
    return True, "|gamma| <= %d on K1, K2 and the 2-loop quiver" % bound


def a12(quick=False):
    bound = 3 if quick else 4
    for Q in (K1, K2):
        A = stacky_A(Q)
        for Z in CHARGES[:2]:
            if not series_log_check(A, Z, bound):
                return False, "series law fails for %r at %r" % (Q, Z)
    return True, "K1, K2 at bound %d" % bound


CRITERIA = [("A%d" % i, f) for i, f in enumerate((a1, a2, a3, a4, a5, a6, a7, a8, a9, a10, a11, a12), 1)]


def run(quick=False, only=None, report=print):
    """Run the battery; returns ``{name: (passed, detail, seconds)}``."""
    results = {}
    for name, fn in CRITERIA:
        if only and name not in only:
            continue
        start = time.perf_counter()
        try:
            ok, detail = fn(quick)
        except Exception as exc:  # a crash counts as a failure with its message
            ok, detail = False, "%s: %s" % (type(exc).__name__, exc)
        elapsed = time.perf_counter() - start
        results[name] = (ok, detail, elapsed)
        if report:
            report("%-4s %s  %s (%.1fs)" % (name, "PASS" if ok else "FAIL", detail, elapsed))
    return results
