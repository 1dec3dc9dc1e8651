#include "bcq/limits.hpp"

#include <cmath>

#include "bcq/errors.hpp"
#include "bcq/measures.hpp"

namespace bcq {

namespace {

void finish(LimitTable& t) {
    std::vector<double> d;
    for (const auto& r : t.rows) {
        if (!r.skipped) d.push_back(r.distance);
    }
    if (d.empty()) return;
    t.final_distance = d.back();
    if (t.final_distance < LimitTable::kFloor) {
        t.eventually_decreasing = true;
        return;
    }
    const int m = LimitTable::kTrendRows;
    if (static_cast<int>(d.size()) < m) return;
    bool dec = true;
    for (std::size_t i = d.size() - m + 1; i < d.size(); ++i) dec = dec && d[i] < d[i - 1];
    t.eventually_decreasing = dec;
}

template <class Fn>
LimitTable scan(double eps0, double q, int kmin, int kmax, Fn&& distance_at) {
    if (!(eps0 > 0.0)) throw DomainError("limit scan: eps0 must be positive");
    if (kmin < 0 || kmax < kmin) throw DomainError("limit scan: bad k range");
    LimitTable t;
    for (int k = kmin; k <= kmax; ++k) {
        LimitRow r;
        r.k = k;
        r.eps = eps0 * std::pow(q, k);
        try {
            r.distance = distance_at(r.eps);
        } catch (const Error& e) {
            r.skipped = true;
            r.note = e.what();
        }
        t.rows.push_back(r);
    }
    finish(t);
    return t;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

}  // namespace

AWParams little_to_aw(const LittleParams& p, double eps) {
    const double s = std::sqrt(p.q);
    return AWParams{p.q, p.t, {s / eps, -p.a * s, eps * p.b * s, -s}};
}

double little_scale(const LittleParams& p, double eps) { return eps / std::sqrt(p.q); }

AWParams big_to_aw(const BigParams& p, double eps) {
    const double r = std::sqrt(p.q * p.c / p.d), s = std::sqrt(p.q * p.d / p.c);
    return AWParams{p.q, p.t, {r / eps, -s / eps, eps * p.a * s, -eps * p.b * r}};
}

double big_scale(const BigParams& p, double eps) { return eps * std::sqrt(p.c * p.d / p.q); }

LaurentPolynomial rescaled_aw_polynomial(const Partition& lambda, const AWParams& p, double u) {
    OpMatrixOptions opt;
    opt.sample_scale = 1.0 / u;
    const AWPolynomial P = aw_polynomial(lambda, p, opt);
    return rescale_variables(P.expand(), u, weight(lambda));
}

LimitTable limit_scan_little(const Partition& lambda, const LittleParams& p, double eps0, int kmax) {
    p.validate();
    const LaurentPolynomial target = little_polynomial(lambda, p).poly;
    return scan(eps0, p.q, 0, kmax, [&](double eps) {
        return coefficient_distance(rescaled_aw_polynomial(lambda, little_to_aw(p, eps), little_scale(p, eps)), target);
    });
}

LimitTable limit_scan_big(const Partition& lambda, const BigParams& p, double eps0, int kmax) {
    p.validate();
    const LaurentPolynomial target = big_polynomial(lambda, p).poly;
    return scan(eps0, p.q, 0, kmax, [&](double eps) {
        return coefficient_distance(rescaled_aw_polynomial(lambda, big_to_aw(p, eps), big_scale(p, eps)), target);
    });
}

double limit_measure_constant(int n, double q) {
    const double qq = qpoch_inf(cplx(q), q).real();
    return std::pow(2.0, n) * factorial(n) * std::pow(qq, -2 * n) * std::pow(1.0 - q, -n);
}

LimitTable measure_limit_little(const Partition& lambda, const Partition& mu, const LittleParams& p, double eps0,
                                int kmin, int kmax, int M) {
    p.validate();
    const int n = p.n;
    const double target = limit_measure_constant(n, p.q) *
                          bilinear_little(monomial_s(lambda), monomial_s(mu), p).value.real();
    const LaurentPolynomial ml = monomial_w(lambda), mm = monomial_w(mu);
    return scan(eps0, p.q, kmin, kmax, [&](double eps) {
        const AWParams aw = little_to_aw(p, eps);
        cplx v = partial_bilinear(ml, mm, aw, M).value;
        for (int i = 1; i <= n; ++i) {
            const double s = p.q * std::pow(p.t, i - 1) / eps;
            v *= qpoch_inf(cplx(-s), p.q) * qpoch_inf(cplx(-s * p.a), p.q);
        }
        v *= std::pow(little_scale(p, eps), weight(lambda) + weight(mu));
        return std::abs(v / target - 1.0);
    });
}

LimitTable measure_limit_big(const Partition& lambda, const Partition& mu, const BigParams& p, double eps0, int kmin,
                             int kmax, int M) {
    p.validate();
    const int n = p.n;
    const double target =
        limit_measure_constant(n, p.q) * bilinear_big(monomial_s(lambda), monomial_s(mu), p).value.real();
    const LaurentPolynomial ml = monomial_w(lambda), mm = monomial_w(mu);
    return scan(eps0, p.q, kmin, kmax, [&](double eps) {
        const AWParams aw = big_to_aw(p, eps);
        cplx v = partial_bilinear(ml, mm, aw, M).value;
        for (int i = 1; i <= n; ++i) v *= qpoch_inf(cplx(-p.q * std::pow(p.t, i - 1) / (eps * eps)), p.q);
        v *= std::pow(big_scale(p, eps), weight(lambda) + weight(mu));
        return std::abs(v / target - 1.0);
    });
}

}  // namespace bcq
