#!/usr/bin/env python3
"""Symbolic reference values for the manufactured-solution forcings.

Differentiates the manufactured fields with sympy and evaluates every forcing
term (and the exact energy at a few times) at reproducible random points.
The C++ forcing code is written independently; tests compare against the
frozen CSV produced here.

Usage: python3 mms_oracle.py > ../data/mms_forcing_points.csv
       python3 mms_oracle.py --energy > ../data/mms_energy_points.csv
"""
import random
import sys

import sympy as sp

x, y, t = sp.symbols("x y t", real=True)
(rho_b, mu_b, lam_b, c0, alpha, k11, k12, k22, gamma, rho_p, c0_p, alpha_p,
 kappa_p, bendD, gamma_p, rho_f, mu_f, H) = sp.symbols(
    "rho_b mu_b lambda_b c0 alpha k11 k12 k22 gamma rho_p c0_p alpha_p "
    "kappa_p bendD gamma_p rho_f mu_f H", real=True)

pi = sp.pi
p = 2 * pi * y * sp.cos(2 * pi * x) * sp.cos(y) * (t + 1)
q = sp.cos(2 * pi * x) * sp.sin(2 * pi * y) * (t + 1)
eta = sp.Matrix([
    sp.sin(2 * pi * x) * sp.sin(2 * pi * y) * (t + 1),
    2 * pi * sp.cos(2 * pi * x) * sp.cos(2 * pi * y) * (t**2 / 2 + t + 1),
])
u = sp.Matrix([
    sp.cos(x) * sp.exp(-(y + 1)) * (t + 1),
    sp.sin(x) * (1 - sp.exp(-(y + 1))) * (t + 1),
])
pres_f = 2 * sp.sin(x) * sp.cos(2 * pi * y) * (t + 1)

kappa = sp.Matrix([[k11, k12], [k12, k22]])


def grad(f):
    return sp.Matrix([sp.diff(f, x), sp.diff(f, y)])


def div(v):
    return sp.diff(v[0], x) + sp.diff(v[1], y)


def jac(v):
    return sp.Matrix([[sp.diff(v[0], x), sp.diff(v[0], y)],
                      [sp.diff(v[1], x), sp.diff(v[1], y)]])


def div_tensor(s):
    return sp.Matrix([sp.diff(s[0, 0], x) + sp.diff(s[0, 1], y),
                      sp.diff(s[1, 0], x) + sp.diff(s[1, 1], y)])


def sym(a):
    return (a + a.T) / 2


I2 = sp.eye(2)
u_b = -kappa * grad(p)
u_p = -kappa_p * sp.diff(q, y)
xi = sp.diff(eta, t)
w = eta[1].subs(y, 0)
v = sp.diff(w, t)
Lam = -sp.diff(w, x, 2)

sigma_b = 2 * mu_b * sym(jac(eta)) + lam_b * div(eta) * I2 - alpha * p * I2
sigma_f = 2 * mu_f * sym(jac(u)) - pres_f * I2

F_b = rho_b * sp.diff(eta, t, 2) - div_tensor(sigma_b) + gamma * eta
G_b = c0 * sp.diff(p, t) + alpha * div(xi) + div(u_b)
G_p = c0_p * sp.diff(q, t) - alpha_p * (y + H / 2) * sp.diff(v, x, 2) + sp.diff(u_p, y)
zq_avg = sp.integrate((y + H / 2) * q, (y, -H, 0)) / H
F_p = (H * rho_p * sp.diff(v, t) - H**3 * bendD * sp.diff(Lam, x, 2) + H * gamma_p * w
       + H * alpha_p * sp.diff(zq_avg, x, 2)
       - sigma_b[1, 1].subs(y, 0) - q.subs(y, -H))
F_f = rho_f * sp.diff(u, t) - div_tensor(sigma_f)

PARAM_SETS = {
    "unit": {rho_b: 1, mu_b: 1, lam_b: 1, c0: 1, alpha: 1, k11: 1, k12: 0, k22: 1,
             gamma: 0, rho_p: 1, c0_p: 1, alpha_p: 1, kappa_p: 1, bendD: 1,
             gamma_p: 0, rho_f: 1, mu_f: 1, H: 1},
    "general": {rho_b: sp.Rational(13, 10), mu_b: sp.Rational(7, 10),
                lam_b: sp.Rational(21, 10), c0: sp.Rational(2, 5),
                alpha: sp.Rational(9, 10), k11: sp.Rational(6, 5),
                k12: sp.Rational(3, 10), k22: sp.Rational(4, 5),
                gamma: sp.Rational(1, 2), rho_p: sp.Rational(11, 10),
                c0_p: sp.Rational(3, 5), alpha_p: sp.Rational(4, 5),
                kappa_p: sp.Rational(3, 2), bendD: sp.Rational(9, 10),
                gamma_p: sp.Rational(3, 10), rho_f: sp.Rational(6, 5),
                mu_f: sp.Rational(3, 5), H: 1},
}


def forcing_table():
    rng = random.Random(20240917)
    exprs = {}
    for name, subs in PARAM_SETS.items():
        exprs[name] = [sp.lambdify((x, y, t), sp.simplify(e.subs(subs)), "mpmath")
                       for e in (F_b[0], F_b[1], G_b, F_p, G_p, F_f[0], F_f[1])]
    print("set,x,y_b,y_p,y_f,t,F_b_x,F_b_y,G_b,F_p,G_p,F_f_x,F_f_y")
    for name in PARAM_SETS:
        fb0, fb1, gb, fp, gp, ff0, ff1 = exprs[name]
        for _ in range(500):
            xv = rng.uniform(0, 1)
            yb = rng.uniform(0, 1)
            yp = rng.uniform(-1, 0)
            yf = rng.uniform(-2, -1)
            tv = rng.uniform(0, 1)
            vals = [fb0(xv, yb, tv), fb1(xv, yb, tv), gb(xv, yb, tv),
                    fp(xv, 0, tv), gp(xv, yp, tv), ff0(xv, yf, tv), ff1(xv, yf, tv)]
            row = [name] + ["%.17g" % val for val in (xv, yb, yp, yf, tv)]
            row += ["%.17g" % float(val) for val in vals]
            print(",".join(row))


def energy_table():
    """Exact energy of the manufactured solution for the unit parameter set."""
    import mpmath
    mpmath.mp.dps = 20
    s = PARAM_SETS["unit"]
    area = {
        (y, 0, 1): (s[rho_b] * (xi[0]**2 + xi[1]**2) + s[lam_b] * div(eta)**2
                    + 2 * s[mu_b] * sum(sym(jac(eta))[i, j]**2
                                        for i in range(2) for j in range(2))
                    + s[gamma] * (eta[0]**2 + eta[1]**2) + s[c0] * p**2),
        (y, -1, 0): s[c0_p] * q**2,
        (y, -2, -1): s[rho_f] * (u[0]**2 + u[1]**2),
    }
    line = (s[H] * s[rho_p] * v**2 + s[H]**3 * s[bendD] * Lam**2
            + s[H] * s[gamma_p] * w**2)
    print("t,E")
    for tv in (0.0, 0.5, 1.0, 2.5, 5.0, 10.0):
        total = mpmath.mpf(0)
        for (_, lo, hi), dens in area.items():
            f = sp.lambdify((x, y), dens.subs(s).subs(t, tv), "mpmath")
            total += mpmath.quad(f, [0, 0.25, 0.5, 0.75, 1],
                                 [lo, lo + 0.25, lo + 0.5, lo + 0.75, hi])
        g = sp.lambdify(x, line.subs(s).subs(t, tv), "mpmath")
        total += mpmath.quad(g, [0, 0.25, 0.5, 0.75, 1])
        print("%.17g,%.17g" % (tv, float(total)))


if __name__ == "__main__":
    if "--energy" in sys.argv:
        energy_table()
    else:
        forcing_table()
