#include "bcq/qracah.hpp"

#include <cmath>

#include "bcq/askey_wilson.hpp"
#include "bcq/errors.hpp"

namespace bcq {

namespace {

cplx checked_div(cplx num, cplx den, const char* what) {
    if (std::abs(den) < kPoleGuard) throw PoleError(what);
    return num / den;
}

// q^a t^b t0^c.
ParamMonomial qtt0(int a, int b, int c) {
    ParamMonomial m;
    m.q = a;
    m.t = b;
    m.tp[0] = c;
    return m;
}

}  // namespace

cplx QRacahParams::t3() const { return std::pow(t, 1 - n) / t0 * std::pow(q, -N); }

AWParams QRacahParams::aw() const { return AWParams{q, t, {t0, t1, t2, t3()}}; }

ParamMonomial QRacahParams::t3_monomial() const { return qtt0(-N, 1 - n, -1); }

cplx weight_qR(const AscendingIndex& lambda, const AWParams& p) {
    if (!is_ascending(lambda)) throw DomainError("weight_qR: labels must be ascending");
    const int r = static_cast<int>(lambda.size());
    const double q = p.q, t = p.t;
    const cplx T = p.T();
    auto rho = [&](int i) { return p.tp[0] * std::pow(t, i - 1); };
    cplx w = 1.0;
    for (int i = 1; i <= r; ++i) {
        const int li = lambda[i - 1];
        const cplx ri = rho(i);
        cplx num = qpoch(q * ri * ri, q, 2 * li);
        cplx den = qpoch(ri * ri, q, 2 * li) * ipow(T * std::pow(t, 2 * i - 2) / q, li);
        for (cplx tj : p.tp) {
            num *= qpoch(tj * ri, q, li);
            den *= qpoch(q * ri / tj, q, li);
        }
        w *= checked_div(num, den, "weight_qR: vanishing denominator");
    }
    for (int k = 1; k <= r; ++k) {
        for (int l = k + 1; l <= r; ++l) {
            const int lk = lambda[k - 1], ll = lambda[l - 1];
            const cplx pp = rho(k) * rho(l), pm = rho(l) / rho(k);
            const cplx num = qpoch(q * pp, q, lk + ll) * qpoch(t * pp, q, lk + ll) * qpoch(q * pm, q, ll - lk) *
                             qpoch(t * pm, q, ll - lk);
            const cplx den = qpoch(q * pp / t, q, lk + ll) * qpoch(pp, q, lk + ll) * qpoch(q * pm / t, q, ll - lk) *
                             qpoch(pm, q, ll - lk);
            w *= checked_div(num, den, "weight_qR: vanishing pair denominator");
        }
    }
    return w;
}

cplx K_r_form1(int r, const AWParams& p) {
    const double q = p.q, t = p.t;
    auto rho = [&](int i) { return p.tp[0] * std::pow(t, i - 1); };
    cplx k = 1.0;
    for (int i = 1; i <= r; ++i) {
        const cplx ri = rho(i);
        cplx den = qpoch_inf_nonzero(q, q);
        for (int j = 1; j <= 3; ++j) den *= qpoch_inf_nonzero(ri * p.tp[j], q) * qpoch_inf_nonzero(p.tp[j] / ri, q);
        k *= qpoch_inf(1.0 / (ri * ri), q) / den;
    }
    for (int a = 1; a <= r; ++a) {
        for (int b = a + 1; b <= r; ++b) {
            k *= qpoch_real(rho(b) / rho(a), q, t) * qpoch_real(1.0 / (rho(a) * rho(b)), q, t);
        }
    }
    return k;
}

cplx K_r_form2(int r, const AWParams& p) {
    const double q = p.q, t = p.t;
    const cplx t0 = p.tp[0];
    cplx k = 1.0;
    for (int i = 1; i <= r; ++i) {
        const cplx ri = t0 * std::pow(t, i - 1);
        const cplx num = qpoch_inf(1.0 / (ri * ri), q) * qpoch_inf(t, q) *
                         qpoch_inf(std::pow(t, 2 - i - r) / (t0 * t0), q);
        cplx den = qpoch_inf_nonzero(q, q) * qpoch_inf_nonzero(std::pow(t, i), q) *
                   qpoch_inf_nonzero(std::pow(t, 2 - 2 * i) / (t0 * t0), q);
        for (int j = 1; j <= 3; ++j) den *= qpoch_inf_nonzero(ri * p.tp[j], q) * qpoch_inf_nonzero(p.tp[j] / ri, q);
        k *= num / den;
    }
    return k;
}

cplx K_r_constant(int r, const AWParams& p) {
    p.validate();
    if (r < 0) throw DomainError("K_r: negative r");
    const cplx a = K_r_form1(r, p), b = K_r_form2(r, p);
    if (std::abs(a - b) > 1e-10 * std::max(std::abs(a), std::abs(b))) {
        throw FormMismatch("K_r: the two product forms disagree");
    }
    return a;
}

SymbolicPochProduct K_r_symbolic(int r) {
    SymbolicPochProduct s;
    for (int i = 1; i <= r; ++i) {
        s.num(qtt0(0, 2 - 2 * i, -2));
        s.num(mono_t(1));
        s.num(qtt0(0, 2 - i - r, -2));
        s.den(mono_q(1));
        s.den(mono_t(i));
        s.den(qtt0(0, 2 - 2 * i, -2));
        for (int j = 1; j <= 3; ++j) {
            s.den(qtt0(0, i - 1, 1) * mono_tp(j));
            s.den(qtt0(0, 1 - i, -1) * mono_tp(j));
        }
    }
    return s;
}

std::vector<AscendingIndex> qracah_support(const QRacahParams& p) { return ascending_indices(p.n, p.N); }

std::vector<cplx> qracah_point(const AscendingIndex& lambda, const QRacahParams& p) {
    std::vector<cplx> z;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        z.push_back(p.t0 * std::pow(p.t, static_cast<int>(i)) * std::pow(p.q, lambda[i]));
    }
    return z;
}

Eigen::MatrixXcd gram_qR(const std::vector<LaurentPolynomial>& polys, const QRacahParams& p) {
    const AWParams a = p.aw();
    a.validate();
    const int np = static_cast<int>(polys.size());
    Eigen::MatrixXcd G = Eigen::MatrixXcd::Zero(np, np);
    std::vector<cplx> v(np);
    for (const auto& lam : qracah_support(p)) {
        const auto z = qracah_point(lam, p);
        const cplx w = weight_qR(lam, a);
        for (int i = 0; i < np; ++i) v[i] = eval(polys[i], z);
        for (int i = 0; i < np; ++i) {
            for (int j = i; j < np; ++j) G(i, j) += w * (v[i] * v[j]);
        }
    }
    for (int i = 0; i < np; ++i) {
        for (int j = 0; j < i; ++j) G(i, j) = G(j, i);
    }
    return G;
}

cplx bilinear_qR(const LaurentPolynomial& f, const LaurentPolynomial& g, const QRacahParams& p) {
    return gram_qR({f, g}, p)(0, 1);
}

cplx norm_qR(const Partition& lambda, const QRacahParams& p) {
    if (static_cast<int>(lambda.size()) != p.n) throw DomainError("norm_qR: length mismatch");
    SymbolicPochProduct s = aw_norm_symbolic(lambda);
    s.divide(K_r_symbolic(p.n));
    s.substitute(3, p.t3_monomial());
    ParamValues v{p.q, p.t, {p.t0, p.t1, p.t2, 1.0}};
    return s.evaluate(v);
}

cplx summation_formula_qR(const QRacahParams& p) {
    const double q = p.q, t = p.t;
    const int n = p.n, N = p.N;
    cplx r = 1.0;
    for (int i = 1; i <= n; ++i) {
        const cplx num = qpoch(q * p.t0 * p.t0 * std::pow(t, 2 * n - i - 1), q, N) *
                         qpoch(q / (p.t1 * p.t2) * std::pow(t, i - n), q, N);
        const cplx den = qpoch(q * p.t0 / p.t1 * std::pow(t, n - i), q, N) *
                         qpoch(q * p.t0 / p.t2 * std::pow(t, n - i), q, N);
        r *= checked_div(num, den, "summation formula: vanishing denominator");
    }
    return r;
}

cplx norm_qR_zero(int n, const AWParams& p) {
    const double q = p.q, t = p.t;
    const cplx t0 = p.tp[0];
    cplx r = 1.0;
    for (int i = 1; i <= n; ++i) {
        cplx num = qpoch_inf(p.T() * std::pow(t, 2 * n - i - 1), q);
        for (int j = 1; j <= 3; ++j) num *= qpoch_inf(p.tp[j] / t0 * std::pow(t, 1 - i), q);
        cplx den = qpoch_inf_nonzero(std::pow(t, 1 + i - 2 * n) / (t0 * t0), q);
        for (int j = 1; j <= 3; ++j) {
            for (int k = j + 1; k <= 3; ++k) den *= qpoch_inf_nonzero(p.tp[j] * p.tp[k] * std::pow(t, i - 1), q);
        }
        r *= num / den;
    }
    return r;
}

std::vector<Partition> lambda_N(int n, int N) {
    std::vector<Partition> out;
    for (auto& l : partitions_up_to(n, n * N)) {
        if (n == 0 || l[0] <= N) out.push_back(l);
    }
    return out;
}

}  // namespace bcq
