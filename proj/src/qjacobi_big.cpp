#include "bcq/qjacobi_big.hpp"

#include <cmath>

#include "bcq/errors.hpp"
#include "bcq/qseries.hpp"

namespace bcq {

namespace {

double choose(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

double theta_r(double x, double q) {
    const double v = theta(x, q).real();
    if (std::abs(v) < kPoleGuard) throw PoleError("theta factor vanishes");
    return v;
}

double powr(double x, double e) { return std::exp(e * std::log(x)); }

double poch_inf_r(double x, double q) { return qpoch_inf(x, q).real(); }

double poch_inf_nz(double x, double q) { return qpoch_inf_nonzero(x, q).real(); }

}  // namespace

void BigParams::validate() const {
    require_base(q);
    if (!(t > 0.0 && t < 1.0)) throw DomainError("big q-Jacobi: t must lie in (0,1)");
    if (!(c > 0.0 && d > 0.0)) throw DomainError("big q-Jacobi: c and d must be positive");
    if (!(a > -c / (d * q) && a < 1.0 / q)) throw DomainError("big q-Jacobi: a outside (-c/(dq), 1/q)");
    if (!(b > -d / (c * q) && b < 1.0 / q)) throw DomainError("big q-Jacobi: b outside (-d/(cq), 1/q)");
    if (n < 1) throw DomainError("big q-Jacobi: n must be >= 1");
}

double BigParams::tau() const { return log_base(t, q); }

std::vector<double> big_point(const BigSupportPoint& pt, const BigParams& p) {
    std::vector<double> z;
    for (std::size_t i = 0; i < pt.nu.size(); ++i) z.push_back(p.c * std::pow(p.t, i) * std::pow(p.q, pt.nu[i]));
    for (std::size_t i = 0; i < pt.nu_prime.size(); ++i) {
        z.push_back(-p.d * std::pow(p.t, i) * std::pow(p.q, pt.nu_prime[i]));
    }
    return z;
}

std::vector<double> c_weights_product(const BigParams& p) {
    const int n = p.n;
    const double q = p.q, t = p.t, tau = p.tau();
    double cB = std::pow(poch_inf_r(q, q), n) * powr(q, -2.0 * tau * tau * choose(n, 3)) *
                powr(p.d, -2.0 * tau * choose(n, 2) - n) * powr(t, -choose(n, 2));
    for (int i = 1; i <= n; ++i) cB /= theta_r(-std::pow(t, 1 - i) * p.c / p.d, q);
    std::vector<double> out(n + 1);
    for (int j = 0; j <= n; ++j) {
        double dj = 1.0;
        for (int k = 1; k <= j; ++k) {
            for (int m = k + 1; m <= n; ++m) dj *= psi_t(-std::pow(t, n - m - k + 1) * p.d / p.c, q, t);
        }
        out[j] = cB * dj;
    }
    return out;
}

std::vector<double> c_weights_closed(const BigParams& p) {
    const int n = p.n;
    const double q = p.q, t = p.t, tau = p.tau();
    const double qq = poch_inf_r(q, q);
    std::vector<double> out(n + 1);
    for (int j = 0; j <= n; ++j) {
        double v = std::pow(qq, n);
        for (int i = 1; i <= j; ++i) {
            v *= theta_r(-std::pow(t, i + j - n) * p.c / p.d, q) /
                 (theta_r(-std::pow(t, 1 - i) * p.d / p.c, q) * theta_r(-std::pow(t, i) * p.c / p.d, q));
        }
        for (int i = 1; i <= n - j; ++i) v /= theta_r(-std::pow(t, 1 - i) * p.c / p.d, q);
        v *= powr(q, -2.0 * tau * tau * ((n - j) * choose(j, 2) + choose(j, 3) + choose(n - j, 3)));
        v *= powr(t, -choose(j, 2) - choose(n - j, 2));
        v *= powr(p.c, -2.0 * tau * (j * (n - j) + choose(j, 2)) - j);
        v *= powr(p.d, -2.0 * tau * choose(n - j, 2) + j - n);
        out[j] = v;
    }
    return out;
}

std::vector<double> c_weights(const BigParams& p) {
    p.validate();
    const auto a = c_weights_product(p), b = c_weights_closed(p);
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (std::abs(a[j] - b[j]) > 1e-9 * std::max(std::abs(a[j]), std::abs(b[j]))) {
            throw FormMismatch("c_B weights: the two expressions disagree at j=" + std::to_string(j));
        }
    }
    return b;
}

double c_B_natural(const BigParams& p, int k) {
    const int n = p.n;
    const double q = p.q, c = p.c, d = p.d;
    const double e = choose(k, 2) * choose(n, 2) - k * k * choose(n, 3);
    const double den = std::pow(poch_inf_r(-d / c, q) * poch_inf_r(-c / d, q), n) *
                       std::pow(c * d, n + choose(n, 2) * k);
    return std::pow(q, e) * std::pow(c + d, n) / den;
}

double v_big(double x, const BigParams& p) {
    const double q = p.q;
    const double num = poch_inf_r(q * x / p.c, q) * poch_inf_r(-q * x / p.d, q);
    const double den = poch_inf_nz(q * p.a * x / p.c, q) * poch_inf_nz(-q * p.b * x / p.d, q);
    return num / den;
}

double weight_big(const BigSupportPoint& pt, const BigParams& p) {
    if (!is_ascending(pt.nu) || !is_ascending(pt.nu_prime)) throw DomainError("big weight: labels must be ascending");
    if (static_cast<int>(pt.nu.size() + pt.nu_prime.size()) != p.n) throw DomainError("big weight: dimension mismatch");
    const auto z = big_point(pt, p);
    double w = delta_qJ(z, p.q, p.t);
    for (double x : z) w *= v_big(x, p);
    return w;
}

std::vector<JacksonSplit> big_splits(const BigParams& p) {
    const auto cw = c_weights(p);
    std::vector<JacksonSplit> s;
    for (int j = 0; j <= p.n; ++j) {
        JacksonSplit sp;
        sp.coefficient = cw[j];
        for (int i = 0; i < j; ++i) sp.xi.push_back(p.c * std::pow(p.t, i));
        for (int i = 0; i < p.n - j; ++i) sp.eta.push_back(-p.d * std::pow(p.t, i));
        s.push_back(std::move(sp));
    }
    return s;
}

JacksonGram gram_big(const std::vector<LaurentPolynomial>& polys, const BigParams& p, const JacksonTolerance& tol) {
    p.validate();
    return jackson_gram(polys, big_splits(p), p.q,
                        [&](const JacksonPoint& pt) {
                            return weight_big(BigSupportPoint{pt.split, pt.nu, pt.nu_prime}, p);
                        },
                        tol);
}

MeasureReport bilinear_big(const LaurentPolynomial& f, const LaurentPolynomial& g, const BigParams& p,
                           const JacksonTolerance& tol) {
    const JacksonGram r = gram_big({f, g}, p, tol);
    MeasureReport m;
    m.value = r.gram(0, 1);
    m.abs_error_estimate = r.error(0, 1);
    m.discrete_points_used = static_cast<int>(r.points);
    m.truncation_depth = r.depth;
    return m;
}

GramSchmidtResult big_polynomial(const Partition& lambda, const BigParams& p, const JacksonTolerance& tol) {
    if (static_cast<int>(lambda.size()) != p.n) throw DomainError("big_polynomial: length mismatch");
    return orthogonalize(lambda, gram_big(symmetric_monomials(lambda), p, tol).gram);
}

double norm_big(const Partition& lambda, const BigParams& p) {
    p.validate();
    const int n = p.n;
    if (static_cast<int>(lambda.size()) != n) throw DomainError("norm_big: length mismatch");
    const double q = p.q, t = p.t;
    double v = std::pow(p.c * p.d, weight(lambda));
    for (int i = 1; i <= n; ++i) {
        const int li = lambda[i - 1];
        v *= std::pow(q, li * (li - 1) / 2) * std::pow(t, (n - i) * li);
        const double s = std::pow(q, li + 1) * std::pow(t, n - i);
        v /= poch_inf_nz(-s * p.b * p.c / p.d, q) * poch_inf_nz(-s * p.a * p.d / p.c, q);
    }
    return v * norm_qJ_product(lambda, q, t, p.a, p.b);
}

double selberg_big(const BigParams& p) {
    p.validate();
    double v = selberg_qJ_product(p.n, p.q, p.t, p.a, p.b);
    for (int j = 1; j <= p.n; ++j) {
        const double s = p.q * std::pow(p.t, j - 1);
        v /= poch_inf_nz(-s * p.a * p.d / p.c, p.q) * poch_inf_nz(-s * p.b * p.c / p.d, p.q);
    }
    return v;
}

double askey_evans_rhs(const BigParams& p, int k) {
    if (k < 1) throw DomainError("Askey-Evans evaluation needs k >= 1");
    const int n = p.n;
    const double q = p.q, c = p.c, d = p.d;
    QGammaProduct g(q, std::pow(q, k), p.a, p.b);
    double v = std::pow(q, k * k * choose(n, 3) - choose(k, 2) * choose(n, 2));
    const double edge = poch_inf_r(-d / c, q) * poch_inf_r(-c / d, q);
    for (int i = 1; i <= n; ++i) {
        g.mul({1 + (i - 1) * k, 0, 1, 0});
        g.mul({1 + (i - 1) * k, 0, 0, 1});
        g.mul({i * k + 1, 0, 0, 0});
        g.div({2 + (n + i - 2) * k, 0, 1, 1});
        g.div({k + 1, 0, 0, 0});
        const double s = std::pow(q, 1 + (i - 1) * k);
        v *= edge * std::pow(c * d, 1 + (i - 1) * k) /
             (poch_inf_nz(-s * p.a * d / c, q) * poch_inf_nz(-s * p.b * c / d, q) * (c + d));
    }
    return v * g.value();
}

double askey_evans_from_selberg(const BigParams& p, int k) {
    BigParams pk = p;
    pk.t = std::pow(p.q, k);
    double v = selberg_big(pk) / c_B_natural(pk, k);
    for (int i = 1; i <= p.n; ++i) v *= (1.0 - std::pow(p.q, i * k)) / (1.0 - std::pow(p.q, k));
    return v;
}

MeasureReport askey_evans_lhs(const BigParams& p, int k, int depth) {
    p.validate();
    if (k < 1 || depth < 1) throw DomainError("Askey-Evans sum needs k >= 1 and depth >= 1");
    const int n = p.n;
    const double q = p.q;
    // Grid of one variable: c q^nu (measure c q^nu) and -d q^nu (measure d q^nu).
    std::vector<double> x, mass;
    std::vector<int> level;
    for (int nu = 0; nu <= depth; ++nu) {
        for (double e : {p.c, -p.d}) {
            x.push_back(e * std::pow(q, nu));
            mass.push_back((1.0 - q) * std::abs(e) * std::pow(q, nu));
            level.push_back(nu);
        }
    }
    std::vector<double> vb(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) vb[i] = v_big(x[i], p);
    const int g = static_cast<int>(x.size());
    std::vector<int> idx(n, 0);
    double sum = 0.0, last_shell = 0.0;
    long points = 0;
    while (true) {
        double f = 1.0;
        int top = 0;
        for (int i = 0; i < n; ++i) {
            f *= vb[idx[i]] * mass[idx[i]];
            top = std::max(top, level[idx[i]]);
        }
        for (int i = 0; i < n && f != 0.0; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double zi = x[idx[i]], zj = x[idx[j]];
                for (int m = 1 - k; m <= k; ++m) f *= zi - std::pow(q, m) * zj;
            }
        }
        sum += f;
        if (top == depth) last_shell += std::abs(f);
        ++points;
        int i = 0;
        while (i < n && ++idx[i] == g) idx[i++] = 0;
        if (i == n) break;
    }
    MeasureReport r;
    r.value = sum;
    r.abs_error_estimate = last_shell / (1.0 - q);
    r.discrete_points_used = static_cast<int>(points);
    r.truncation_depth = depth;
    return r;
}

double asymptotic_match(int j, const AscendingIndex& lambda, const AscendingIndex& mu, const BigParams& p, int L) {
    p.validate();
    if (j < 1 || j > p.n) throw DomainError("asymptotic_match: j must lie in 1..n");
    if (static_cast<int>(lambda.size()) != j - 1 || static_cast<int>(mu.size()) != p.n - j) {
        throw DomainError("asymptotic_match: label lengths must be j-1 and n-j");
    }
    if ((!lambda.empty() && L < lambda.back()) || (!mu.empty() && L < mu.back())) {
        throw DomainError("asymptotic_match: probe depth below the fixed labels");
    }
    const auto cw = c_weights(p);
    BigSupportPoint plus{j, lambda, mu}, minus{j - 1, lambda, mu};
    plus.nu.push_back(L);
    minus.nu_prime.push_back(L);
    return cw[j] * weight_big(plus, p) / (cw[j - 1] * weight_big(minus, p));
}

}  // namespace bcq
