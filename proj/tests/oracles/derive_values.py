"""Independent high-precision oracle for the frozen expected values used in
the C++ test suites. Run with `python3 tests/oracles/derive_values.py`.

Uses mpmath at 50 digits and evaluates the textbook formulas directly
(entropy of the four-outcome distribution, piecewise degree function),
without sharing any code path with the library.
"""
import itertools

import mpmath as mp

mp.mp.dps = 50
LN2 = mp.log(2)


def entropy(theta):
    def xlnx(x):
        return mp.mpf(0) if x == 0 else x * mp.log(x)
    half = mp.mpf(1) / 2
    return -2 * xlnx(theta) - 2 * xlnx(half - theta)


def degree(theta):
    if theta <= mp.mpf(1) / 4:
        return -2 + entropy(theta) / LN2
    return 2 - entropy(theta) / LN2


def theta_of(mu, nu):
    return mp.sin((mu - nu) / 2) ** 2 / 2


def config_summary(name, m1, m2, n1, n2):
    thetas = [theta_of(m, n) for m in (m1, m2) for n in (n1, n2)]
    es = [degree(t) for t in thetas]
    b = mp.cos(m1 - n1) + mp.cos(m1 - n2) + mp.cos(m2 - n1) - mp.cos(m2 - n2)
    print(f"{name}: b={mp.nstr(b, 17)}")
    print("   thetas", [mp.nstr(t, 17) for t in thetas])
    print("   degrees", [mp.nstr(e, 17) for e in es])
    print("   sum e", mp.nstr(sum(es), 17), " sum|e|", mp.nstr(sum(abs(e) for e in es), 17))
    print("   I", mp.nstr(LN2 * sum(abs(e) for e in es), 17),
          " Is", mp.nstr(LN2 * sum(es), 17))


pi = mp.pi
print("E(0.375) =", mp.nstr(entropy(mp.mpf("0.375")), 17))
print("e(0.375) =", mp.nstr(degree(mp.mpf("0.375")), 17))
print("e(0.0334936) =", mp.nstr(degree(mp.mpf("0.0334936")), 17))
print("info_flow(0.0190301) =", mp.nstr(abs(degree(mp.mpf("0.0190301"))) * LN2, 17))
print("signed_flow(0.125) =", mp.nstr(degree(mp.mpf("0.125")) * LN2, 17))
print("ln2 * 0.1887219 =", mp.nstr(LN2 * mp.mpf("0.1887219"), 17))

config_summary("aspect", pi / 8, 3 * pi / 8, pi / 4, 0)
config_summary("example2", pi, 2 * pi / 3, 0, pi / 3)
config_summary("tsirelson", pi / 2, 0, pi / 4, 3 * pi / 4)
config_summary("example4", pi, 0, 0, pi)
config_summary("example5", 5 * pi / 6, 2 * pi / 3, pi / 3, pi / 2)

# Brute-force grid maximum of |b| over a 41^4 lattice on [0, pi]^4.
import numpy as np
g = np.linspace(0.0, np.pi, 41)
m1, m2, n1, n2 = np.meshgrid(g, g, g, g, indexing="ij", sparse=True)
b = np.cos(m1 - n1) + np.cos(m1 - n2) + np.cos(m2 - n1) - np.cos(m2 - n2)
print("max |b| on 41^4 grid =", float(np.abs(b).max()))
