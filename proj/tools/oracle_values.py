#!/usr/bin/env python3
"""Independent high-precision values frozen into the unit tests.

Every value is computed here with mpmath from first principles (direct
products, direct sums, numerical quadrature), not from the C++ library.
Run: python3 tools/oracle_values.py
"""
import mpmath as mp

mp.mp.dps = 40


def poch(a, q, k):
    r = mp.mpf(1)
    for j in range(k):
        r *= 1 - a * q**j
    return r


def poch_inf(a, q):
    r, j = mp.mpf(1), 0
    while True:
        f = a * q**j
        if abs(f) < mp.mpf(10) ** (-mp.mp.dps - 5):
            return r
        r *= 1 - f
        j += 1


def qgamma(u, q):
    return poch_inf(q, q) / poch_inf(q**u, q) * (1 - q) ** (1 - u)


def aw_weight(z, q, tp):
    num = poch_inf(z**2, q) * poch_inf(z**-2, q)
    den = mp.mpf(1)
    for t in tp:
        den *= poch_inf(t * z, q) * poch_inf(t / z, q)
    return num / den


def aw_monic(n, z, q, tp):
    """Monic one-variable Askey-Wilson polynomial by its terminating 4phi3."""
    a, b, c, d = tp
    s = mp.mpf(0)
    for k in range(n + 1):
        s += (poch(q**-n, q, k) * poch(a * b * c * d * q ** (n - 1), q, k) * poch(a * z, q, k)
              * poch(a / z, q, k)) / (poch(a * b, q, k) * poch(a * c, q, k) * poch(a * d, q, k)
                                      * poch(q, q, k)) * q**k
    p = a**-n * poch(a * b, q, n) * poch(a * c, q, n) * poch(a * d, q, n) * s
    return p / poch(a * b * c * d * q ** (n - 1), q, n)


def torus_average(f):
    return mp.quad(lambda th: f(mp.expj(th)), [0, mp.pi / 2, mp.pi, 3 * mp.pi / 2, 2 * mp.pi]) / (2 * mp.pi)


def main():
    q = mp.mpf("0.5")
    print("qpoch_inf(0.3; 0.5)           =", mp.nstr(poch_inf(mp.mpf("0.3"), q), 20))
    z = mp.mpc("0.2", "0.4")
    print("qpoch(0.2+0.4i; 0.5, 5)       =", mp.nstr(poch(z, q, 5), 20))
    x = mp.mpf("-1.7")
    print("theta(-1.7; 0.5)              =", mp.nstr(poch_inf(q, q) * poch_inf(x, q) * poch_inf(q / x, q), 20))
    print("Gamma_q(2.5; 0.5)             =", mp.nstr(qgamma(mp.mpf("2.5"), q), 20))
    print("Gamma_q(0.3; 0.7)             =", mp.nstr(qgamma(mp.mpf("0.3"), mp.mpf("0.7")), 20))

    q = mp.mpf("0.4")
    tp = [mp.mpf("0.5"), mp.mpf("-0.35"), mp.mpc("0.2", "0.3"), mp.mpc("0.2", "-0.3")]
    zz = mp.mpf("1.1") * mp.expj(mp.mpf("0.7"))
    print("P_2(1.1 e^{0.7i}) aw n=1      =", mp.nstr(aw_monic(2, zz, q, tp), 20))
    print("<1,1> aw n=1 torus            =", mp.nstr(mp.re(torus_average(lambda w: aw_weight(w, q, tp))), 20))
    print("<P2,P2> aw n=1 torus          =",
          mp.nstr(mp.re(torus_average(lambda w: aw_monic(2, w, q, tp) ** 2 * aw_weight(w, q, tp))), 20))

    # Little q-Jacobi, one variable: sum_k q^k (1-q) q^{k alpha} (q^{k+1})_inf/(b q^{k+1})_inf.
    q, a, b = mp.mpf("0.5"), mp.mpf("0.3"), mp.mpf("0.2")
    s = mp.mpf(0)
    for k in range(200):
        s += (1 - q) * q**k * a**k * poch_inf(q ** (k + 1), q) / poch_inf(b * q ** (k + 1), q)
    print("little n=1 <1,1>              =", mp.nstr(s, 20))

    # Plain Jackson integral over [-d, c] of (qx/c, -qx/d)_inf/(qax/c, -qbx/d)_inf.
    c, d = mp.mpf(1), mp.mpf("0.7")
    s = mp.mpf(0)
    for k in range(200):
        for e, m in ((c, c), (-d, d)):
            xx = e * q**k
            s += (1 - q) * m * q**k * poch_inf(q * xx / c, q) * poch_inf(-q * xx / d, q) / (
                poch_inf(q * a * xx / c, q) * poch_inf(-q * b * xx / d, q))
    print("big n=1 plain integral        =", mp.nstr(s, 20))


if __name__ == "__main__":
    main()
