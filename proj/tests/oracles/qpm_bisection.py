"""Bisection oracle for quasi-phase-matching poling periods.

Independent of the C++ implementation: evaluates the Sellmeier fits directly
and finds the poling period that zeroes k_in - k_pump - k_out - 2*pi*m/period
by bracketed bisection in the period. Values printed here are pinned in
tests/test_qfc_planner.cpp.
"""
import math

C = 299_792_458.0

# n^2 = a + sum b_i l^2 / (l^2 - c_i) - d l^2, l in micrometres
LN_E = dict(a=1.0, terms=[(2.9804, 0.02047), (0.5981, 0.0666), (8.9543, 416.08)], d=0.0)
KTP_Z = dict(a=2.25411, terms=[(1.06543, 0.05486)], d=0.02140)


def index(model, nm):
    l2 = (nm * 1e-3) ** 2
    n2 = model["a"] - model["d"] * l2
    for b, c in model["terms"]:
        n2 += b * l2 / (l2 - c)
    return math.sqrt(n2)


def k(model, nm):
    return 2 * math.pi * index(model, nm) / (nm * 1e-9)


def dfg_out_nm(in_nm, pump_nm):
    nu = C / (in_nm * 1e-9) - C / (pump_nm * 1e-9)
    return C / nu * 1e9


def residual(model, in_nm, pump_nm, out_nm, order, period_m):
    return k(model, in_nm) - k(model, pump_nm) - k(model, out_nm) - 2 * math.pi * order / period_m


def bisect_period(model, in_nm, pump_nm, order):
    out_nm = dfg_out_nm(in_nm, pump_nm)
    lo, hi = 0.1e-6, 1e-2  # residual(lo) < 0 < residual(hi)
    f = lambda p: residual(model, in_nm, pump_nm, out_nm, order, p)
    assert f(lo) < 0 < f(hi)
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi) * 1e6


if __name__ == "__main__":
    for name, model, i, p in [
        ("ppktp 493.41/1343", KTP_Z, 493.41, 1343.0),
        ("ppln 649.87/1343", LN_E, 649.87, 1343.0),
        ("ppln 780.24/1569", LN_E, 780.24, 1569.0),
        ("ppln 650/1343", LN_E, 650.0, 1343.0),
    ]:
        print(f"{name}: out {dfg_out_nm(i, p):.6f} nm  period m=1 {bisect_period(model, i, p, 1):.12f} um"
              f"  m=3 {bisect_period(model, i, p, 3):.12f} um")
    print("n_e LN 1064", index(LN_E, 1064), "n_z KTP 1064", index(KTP_Z, 1064))
