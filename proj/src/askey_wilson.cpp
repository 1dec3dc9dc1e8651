#include "bcq/askey_wilson.hpp"

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "bcq/errors.hpp"

namespace bcq {

namespace {

// q^a t^b t0t1t2t3.
ParamMonomial qtT(int a, int b) {
    ParamMonomial m;
    m.q = a;
    m.t = b;
    m.tp = {1, 1, 1, 1};
    return m;
}

// q^a t^b.
ParamMonomial qt(int a, int b) {
    ParamMonomial m;
    m.q = a;
    m.t = b;
    return m;
}

// q^a t^b t_i t_j.
ParamMonomial qt2(int a, int b, int i, int j) {
    ParamMonomial m = qt(a, b);
    m.tp[i] += 1;
    m.tp[j] += 1;
    return m;
}

}  // namespace

double hyperoctahedral_order(int n) {
    double r = 1.0;
    for (int i = 1; i <= n; ++i) r *= 2.0 * i;
    return r;
}

cplx AWPolynomial::coefficient(const Partition& mu) const {
    for (std::size_t i = 0; i < support.size(); ++i) {
        if (support[i] == mu) return coeffs[i];
    }
    return 0.0;
}

LaurentPolynomial AWPolynomial::expand() const {
    LaurentPolynomial out(static_cast<int>(degree.size()));
    for (std::size_t i = 0; i < support.size(); ++i) out += monomial_w(support[i]) * coeffs[i];
    return out;
}

AWPolynomial aw_polynomial(const Partition& lambda, const AWParams& p, const OpMatrixOptions& opt) {
    require_separated(lambda, p);
    return aw_polynomial(lambda, p, op_matrix(lambda, p, opt));
}

AWPolynomial aw_polynomial(const Partition& lambda, const AWParams& p, const TriangularOpMatrix& M) {
    require_separated(lambda, p);
    AWPolynomial P;
    P.degree = lambda;
    P.params = p;
    P.support = partitions_dominated_by(lambda);
    const int N = static_cast<int>(P.support.size());
    std::vector<int> pos(N);
    for (int i = 0; i < N; ++i) pos[i] = M.position(P.support[i]);
    P.coeffs.assign(N, 0.0);
    P.coeffs[N - 1] = 1.0;
    const cplx el = eigenvalue_E(lambda, p);
    // Graded-lex refines dominance, so every nu > mu comes later in the list.
    for (int i = N - 2; i >= 0; --i) {
        cplx acc = 0.0;
        for (int k = i + 1; k < N; ++k) acc += M.entries(pos[k], pos[i]) * P.coeffs[k];
        P.coeffs[i] = acc / (el - eigenvalue_E(P.support[i], p));
    }
    return P;
}

SymbolicPochProduct norm_plus_symbolic(const Partition& lambda) {
    const int n = static_cast<int>(lambda.size());
    SymbolicPochProduct s;
    for (int i = 1; i <= n; ++i) {
        const int li = lambda[i - 1];
        s.num(qtT(2 * li - 1, 2 * (n - i)));
        s.den(qtT(li - 1, n - i));
        for (int k = 1; k <= 3; ++k) s.den(qt2(li, n - i, 0, k));
    }
    for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            const int lj = lambda[j - 1], lk = lambda[k - 1];
            s.num(qtT(lj + lk - 1, 2 * n - j - k));
            s.num(qt(lj - lk, k - j));
            s.den(qtT(lj + lk - 1, 2 * n - j - k + 1));
            s.den(qt(lj - lk, k - j + 1));
        }
    }
    return s;
}

SymbolicPochProduct norm_minus_symbolic(const Partition& lambda) {
    const int n = static_cast<int>(lambda.size());
    SymbolicPochProduct s;
    for (int i = 1; i <= n; ++i) {
        const int li = lambda[i - 1];
        s.num(qtT(2 * li, 2 * (n - i)));
        s.den(qt(li + 1, n - i));
        s.den(qt2(li, n - i, 1, 2));
        s.den(qt2(li, n - i, 1, 3));
        s.den(qt2(li, n - i, 2, 3));
    }
    for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            const int lj = lambda[j - 1], lk = lambda[k - 1];
            s.num(qtT(lj + lk, 2 * n - j - k));
            s.num(qt(lj - lk + 1, k - j));
            s.den(qtT(lj + lk, 2 * n - j - k - 1));
            s.den(qt(lj - lk + 1, k - j - 1));
        }
    }
    return s;
}

SymbolicPochProduct aw_norm_symbolic(const Partition& lambda) {
    SymbolicPochProduct s = norm_plus_symbolic(lambda);
    s.mul(norm_minus_symbolic(lambda));
    return s;
}

cplx aw_norm(const Partition& lambda, const AWParams& p) {
    p.validate();
    const int n = static_cast<int>(lambda.size());
    return hyperoctahedral_order(n) * aw_norm_symbolic(lambda).evaluate(p.values());
}

cplx gustafson_constant(int n, const AWParams& p) {
    p.validate();
    const double q = p.q, t = p.t;
    const cplx T = p.T();
    cplx r = hyperoctahedral_order(n);
    for (int i = 1; i <= n; ++i) {
        r *= qpoch_inf(t, q) * qpoch_inf(std::pow(t, 2 * n - i - 1) * T, q);
        r /= qpoch_inf_nonzero(q, q) * qpoch_inf_nonzero(std::pow(t, n - i + 1), q);
        for (int j = 0; j < 4; ++j) {
            for (int k = j + 1; k < 4; ++k) r /= qpoch_inf_nonzero(std::pow(t, n - i) * p.tp[j] * p.tp[k], q);
        }
    }
    return r;
}

namespace {

using mpc = boost::multiprecision::cpp_complex_50;
using mpr = boost::multiprecision::cpp_bin_float_50;

mpc mp(cplx x) { return mpc(mpr(x.real()), mpr(x.imag())); }

cplx to_cplx(const mpc& x) { return {static_cast<double>(x.real()), static_cast<double>(x.imag())}; }

mpc mp_qpoch(const mpc& a, const mpr& q, int k) {
    mpc r(1);
    mpc aj = a;
    for (int i = 0; i < k; ++i) {
        r *= mpc(1) - aj;
        aj *= q;
    }
    return r;
}

mpr mp_qpow(const mpr& q, int k) {
    mpr r(1);
    for (int i = 0; i < std::abs(k); ++i) r *= q;
    return k < 0 ? mpr(1) / r : r;
}

// Terms of the one-variable 4phi3 series; the terminating sum cancels
// heavily at higher degree, so it runs in 50-digit arithmetic.
struct Series4phi3 {
    Series4phi3(int lambda, const AWParams& p) : lambda(lambda), q(p.q), t0(mp(p.tp[0])) {
        const mpc T = mp(p.tp[0]) * mp(p.tp[1]) * mp(p.tp[2]) * mp(p.tp[3]);
        for (int k = 1; k <= 3; ++k) a[k - 1] = t0 * mp(p.tp[k]);
        upper = mp_qpow(q, lambda - 1) * T;
        const mpc pre_den = mp_qpoch(upper, q, lambda) * pow(t0, lambda);
        if (abs(pre_den) < kPoleGuard) throw PoleError("4phi3: prefactor pole");
        prefactor = mp_qpoch(a[0], q, lambda) * mp_qpoch(a[1], q, lambda) * mp_qpoch(a[2], q, lambda) / pre_den;
    }

    // Coefficient of (t0 z, t0/z; q)_m.
    mpc weight(int m) const {
        const mpc den = mp_qpoch(a[0], q, m) * mp_qpoch(a[1], q, m) * mp_qpoch(a[2], q, m) *
                        mp_qpoch(mpc(q), q, m);
        if (abs(den) < kPoleGuard) throw PoleError("4phi3: series denominator vanishes");
        return mp_qpoch(mpc(mp_qpow(q, -lambda)), q, m) * mp_qpoch(upper, q, m) / den * mp_qpow(q, m);
    }

    int lambda;
    mpr q;
    mpc t0;
    mpc a[3];
    mpc upper;
    mpc prefactor;
};

}  // namespace

cplx aw1_oracle(int lambda, cplx z, const AWParams& p) {
    if (lambda < 0) throw DomainError("aw1_oracle: negative degree");
    const Series4phi3 s(lambda, p);
    const mpc zz = mp(z);
    mpc sum(0);
    for (int m = 0; m <= lambda; ++m) {
        sum += s.weight(m) * mp_qpoch(s.t0 * zz, s.q, m) * mp_qpoch(s.t0 / zz, s.q, m);
    }
    return to_cplx(s.prefactor * sum);
}

LaurentPolynomial aw1_expansion(int lambda, const AWParams& p) {
    if (lambda < 0) throw DomainError("aw1_expansion: negative degree");
    const Series4phi3 s(lambda, p);
    // Work in x = z + 1/z: (t0 z, t0/z; q)_m = prod_i (1 + t0^2 q^{2i} - t0 q^i x).
    std::vector<mpc> total(lambda + 1, mpc(0)), chain{mpc(1)};
    mpc c = s.t0;
    for (int m = 0; m <= lambda; ++m) {
        if (m > 0) {
            std::vector<mpc> next(chain.size() + 1, mpc(0));
            for (std::size_t k = 0; k < chain.size(); ++k) {
                next[k] += chain[k] * (mpc(1) + c * c);
                next[k + 1] -= chain[k] * c;
            }
            chain = std::move(next);
            c *= s.q;
        }
        const mpc w = s.weight(m);
        for (std::size_t k = 0; k < chain.size(); ++k) total[k] += w * chain[k];
    }
    // x^k = sum_j C(k,j) z^{k-2j}; collect by exponent before rounding.
    std::vector<mpc> byexp(2 * lambda + 1, mpc(0));
    for (int k = 0; k <= lambda; ++k) {
        mpr binom(1);
        for (int j = 0; j <= k; ++j) {
            byexp[k - 2 * j + lambda] += total[k] * binom;
            binom = binom * (k - j) / (j + 1);
        }
    }
    const mpc lead = byexp[2 * lambda];
    if (abs(lead) < kPoleGuard) throw PoleError("aw1_expansion: vanishing leading coefficient");
    LaurentPolynomial out(1);
    for (int e = -lambda; e <= lambda; ++e) out.add_term({e}, to_cplx(byexp[e + lambda] / lead));
    return out;
}

cplx renorm_constant(const Partition& lambda, const AWParams& p) {
    p.validate();
    const int n = static_cast<int>(lambda.size());
    SymbolicPochProduct s = norm_plus_symbolic(Partition(n, 0));
    s.divide(norm_plus_symbolic(lambda));
    cplx r = s.evaluate(p.values());
    for (int j = 1; j <= n; ++j) r *= ipow(p.tp[0] * std::pow(p.t, n - j), lambda[j - 1]);
    return r;
}

}  // namespace bcq
