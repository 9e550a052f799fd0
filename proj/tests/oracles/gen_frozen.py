#!/usr/bin/env python3
"""Regenerates frozen.hpp: high-precision reference values used by the C++ tests.

Everything here is computed with mpmath at 60 digits, independently of the
library under test. Run from the repo root:

    python3 tests/oracles/gen_frozen.py > tests/oracles/frozen.hpp
"""

import mpmath as mp

mp.mp.dps = 60

SPACES = {
    # name: (d, m)
    "RH2": (1, 2),
    "RH3": (1, 3),
    "CH2": (2, 2),
    "HH2": (4, 2),
    "OH2": (8, 2),
}


def dims(name):
    d, m = SPACES[name]
    return d, m * d


def phi_prime(name, r):
    d, n = dims(name)
    return mp.sinh(r) ** (n - 1) * mp.cosh(r) ** (d - 1)


def phi(name, r):
    return mp.quad(lambda t: phi_prime(name, t), [0, r])


def psi(name, r):
    return mp.quad(lambda t: t * phi_prime(name, t), [0, r])


def unit_ball_volume(n):
    return mp.pi ** (mp.mpf(n) / 2) / mp.gamma(mp.mpf(n) / 2 + 1)


def sphere_monomial_moment(n, exps):
    if any(a % 2 for a in exps):
        return mp.mpf(0)
    num = mp.mpf(2)
    for a in exps:
        num *= mp.gamma(mp.mpf(a + 1) / 2)
    total = sum(exps)
    return num / mp.gamma(mp.mpf(n + total) / 2)


def emit(name, value):
    print(f"inline constexpr double {name} = {mp.nstr(value, 17)};")


print("// Generated by gen_frozen.py; do not edit by hand.")
print("#pragma once")
print()
print("namespace frozen {")
print()

# volume density examples
emit("kVolumeDensityCH2At1", mp.sinh(1) ** 3 * mp.cosh(1))
emit("kVolumeDensityHH2At07", mp.sinh(0.7) ** 7 * mp.cosh(0.7) ** 3 / mp.mpf("0.7") ** 7)

# phi / psi samples
for nm, r in [("RH2", "0.7"), ("RH3", "1.1"), ("CH2", "0.5"), ("HH2", "0.7"), ("OH2", "0.5"), ("OH2", "1.0")]:
    rv = mp.mpf(r)
    emit(f"kPhi{nm}At{r.replace('.', '_')}", phi(nm, rv))
    emit(f"kPsi{nm}At{r.replace('.', '_')}", psi(nm, rv))

# geodesic ball volume/perimeter, CH2 closed forms at the acceptance radii
for r in ["0.25", "0.5", "1"]:
    rv = mp.mpf(r)
    w4 = unit_ball_volume(4)
    emit(f"kBallVolCH2At{r.replace('.', '_')}", w4 * mp.sinh(rv) ** 4)
    emit(f"kBallPerCH2At{r.replace('.', '_')}", 4 * w4 * mp.sinh(rv) ** 3 * mp.cosh(rv))

# ball volume for HH2 via quadrature of phi (independent of the closed-form sums)
emit("kBallVolHH2At0_7", 8 * unit_ball_volume(8) * phi("HH2", mp.mpf("0.7")))
emit("kBallPerOH2At0_5", 16 * unit_ball_volume(16) * phi_prime("OH2", mp.mpf("0.5")))

# phi'' at HH2, r = 0.7 (n = 8, d = 4)
r = mp.mpf("0.7")
emit("kPhi2HH2At0_7", 7 * mp.sinh(r) ** 6 * mp.cosh(r) ** 4 + 3 * mp.sinh(r) ** 8 * mp.cosh(r) ** 2)

# Euclidean unit-ball volumes
for n in [2, 3, 4, 8, 16]:
    emit(f"kUnitBallVol{n}", unit_ball_volume(n))

# sphere monomial moments used by the quadrature exactness tests
emit("kMomentX1sqX2sqS3", sphere_monomial_moment(4, [2, 2, 0, 0]))
emit("kMomentX1sqS15", sphere_monomial_moment(16, [2] + [0] * 15))
emit("kMomentX1p4S7", sphere_monomial_moment(8, [4] + [0] * 7))
emit("kMomentX1sqX2sqX3sqS7", sphere_monomial_moment(8, [2, 2, 2] + [0] * 5))

# lambda_1 closed form samples: ((d-1) + (n-d) cosh^2 R) / (sinh^2 R cosh^2 R)
for nm, r in [("RH3", "1"), ("CH2", "0.5"), ("OH2", "0.5")]:
    d, n = dims(nm)
    rv = mp.mpf(r)
    lam1 = ((d - 1) + (n - d) * mp.cosh(rv) ** 2) / (mp.sinh(rv) ** 2 * mp.cosh(rv) ** 2)
    emit(f"kLambda1{nm}At{r.replace('.', '_')}", lam1)

print()
print("}  // namespace frozen")
