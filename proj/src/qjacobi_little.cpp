#include "bcq/qjacobi_little.hpp"

#include <cmath>

#include "bcq/errors.hpp"
#include "bcq/qseries.hpp"

namespace bcq {

namespace {

long choose(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

JacksonGram jackson_gram(const std::vector<LaurentPolynomial>& polys, const std::vector<JacksonSplit>& splits,
                         double q, const std::function<double(const JacksonPoint&)>& weight,
                         const JacksonTolerance& tol) {
    const int np = static_cast<int>(polys.size());
    const int nc = np * (np + 1) / 2;
    std::vector<double> v(np);
    std::vector<cplx> zc;
    const JacksonIntegrand f = [&](const JacksonPoint& pt, std::span<double> out) {
        const double w = weight(pt);
        zc.assign(pt.z.begin(), pt.z.end());
        for (int i = 0; i < np; ++i) v[i] = eval(polys[i], zc).real();
        int c = 0;
        for (int i = 0; i < np; ++i) {
            for (int j = i; j < np; ++j) out[c++] = w * v[i] * v[j];
        }
    };
    const JacksonResult r = jackson_adaptive(splits, q, nc, f, tol.tol, tol.start_depth, tol.max_depth);
    JacksonGram g;
    g.gram.resize(np, np);
    g.error.resize(np, np);
    int c = 0;
    for (int i = 0; i < np; ++i) {
        for (int j = i; j < np; ++j, ++c) {
            g.gram(i, j) = g.gram(j, i) = r.value[c];
            g.error(i, j) = g.error(j, i) = r.tail[c];
        }
    }
    g.depth = r.depth;
    g.points = r.points;
    return g;
}

void LittleParams::validate() const {
    require_base(q);
    if (!(t > 0.0 && t < 1.0)) throw DomainError("little q-Jacobi: t must lie in (0,1)");
    if (!(a > 0.0 && a < 1.0 / q)) throw DomainError("little q-Jacobi: a must lie in (0,1/q)");
    if (!(b < 1.0 / q)) throw DomainError("little q-Jacobi: b must be below 1/q");
    if (n < 1) throw DomainError("little q-Jacobi: n must be >= 1");
}

double LittleParams::alpha() const { return log_base(a, q); }

double LittleParams::tau() const { return log_base(t, q); }

double delta_qJ(std::span<const double> z, double q, double t) {
    const double e = 2.0 * log_base(t, q) - 1.0;
    const double shift = t * t / q;  // q^{2 tau - 1}
    double r = 1.0;
    const std::size_t n = z.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double x = q / t * z[j] / z[i];
            r *= std::abs(z[i] - z[j]) * std::exp(e * std::log(std::abs(z[i]))) * qpoch_ratio(x, q, shift).real();
        }
    }
    return r;
}

double v_little(int i, int nu, const LittleParams& p) {
    const double q = p.q;
    const double x = std::pow(p.t, i - 1) * std::pow(q, nu);
    // x^alpha = a^nu (t^alpha)^{i-1}.
    const double xa = std::pow(p.a, nu) * std::exp((i - 1) * p.alpha() * std::log(p.t));
    const cplx den = qpoch_inf_nonzero(q * p.b * x, q);
    return (qpoch_inf(q * x, q) / den).real() * xa;
}

double weight_little(const AscendingIndex& nu, const LittleParams& p) {
    const int n = static_cast<int>(nu.size());
    if (!is_ascending(nu)) throw DomainError("little weight: labels must be ascending");
    const double tau = p.tau();
    double w = std::exp(-2.0 * tau * tau * choose(n, 3) * std::log(p.q)) *
               std::exp(-(p.alpha() + 1.0) * choose(n, 2) * std::log(p.t));
    std::vector<double> z(n);
    for (int i = 1; i <= n; ++i) {
        w *= v_little(i, nu[i - 1], p);
        z[i - 1] = std::pow(p.t, i - 1) * std::pow(p.q, nu[i - 1]);
    }
    return w * delta_qJ(z, p.q, p.t);
}

JacksonGram gram_little(const std::vector<LaurentPolynomial>& polys, const LittleParams& p,
                        const JacksonTolerance& tol) {
    p.validate();
    std::vector<double> xi(p.n);
    for (int i = 0; i < p.n; ++i) xi[i] = std::pow(p.t, i);
    return jackson_gram(polys, {JacksonSplit{1.0, xi, {}}}, p.q,
                        [&](const JacksonPoint& pt) { return weight_little(pt.nu, p); }, tol);
}

MeasureReport bilinear_little(const LaurentPolynomial& f, const LaurentPolynomial& g, const LittleParams& p,
                              const JacksonTolerance& tol) {
    const JacksonGram r = gram_little({f, g}, p, tol);
    MeasureReport m;
    m.value = r.gram(0, 1);
    m.abs_error_estimate = r.error(0, 1);
    m.discrete_points_used = static_cast<int>(r.points);
    m.truncation_depth = r.depth;
    return m;
}

std::vector<LaurentPolynomial> symmetric_monomials(const Partition& lambda) {
    std::vector<LaurentPolynomial> out;
    for (const auto& mu : partitions_dominated_by(lambda)) out.push_back(monomial_s(mu));
    return out;
}

GramSchmidtResult orthogonalize(const Partition& lambda, const Eigen::MatrixXd& gram) {
    GramSchmidtResult r;
    r.basis = partitions_dominated_by(lambda);
    const int N = static_cast<int>(r.basis.size());
    if (gram.rows() != N || gram.cols() != N) throw DomainError("orthogonalize: Gram size mismatch");
    r.coeffs.assign(N, 0.0);
    r.coeffs[N - 1] = 1.0;
    if (N > 1) {
        const int k = N - 1;
        // Equilibrate so the condition number reflects the basis, not its scaling.
        Eigen::VectorXd s = gram.diagonal().head(k).cwiseAbs().cwiseSqrt().cwiseInverse();
        const Eigen::MatrixXd A = s.asDiagonal() * gram.topLeftCorner(k, k) * s.asDiagonal();
        const Eigen::VectorXd rhs = -(s.asDiagonal() * gram.col(k).head(k));
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
        const auto& sv = svd.singularValues();
        r.condition = sv(0) / sv(k - 1);
        if (!(r.condition < 1e12)) throw IllConditioned("Gram-Schmidt: monomial Gram matrix is near singular");
        const Eigen::VectorXd c = s.asDiagonal() * svd.solve(rhs);
        for (int i = 0; i < k; ++i) r.coeffs[i] = c(i);
    }
    r.poly = LaurentPolynomial(static_cast<int>(lambda.size()));
    for (int i = 0; i < N; ++i) r.poly += monomial_s(r.basis[i]) * r.coeffs[i];
    return r;
}

GramSchmidtResult little_polynomial(const Partition& lambda, const LittleParams& p, const JacksonTolerance& tol) {
    if (static_cast<int>(lambda.size()) != p.n) throw DomainError("little_polynomial: length mismatch");
    return orthogonalize(lambda, gram_little(symmetric_monomials(lambda), p, tol).gram);
}

namespace {

void add_norm_factors(QGammaProduct& g, const Partition& lambda) {
    const int n = static_cast<int>(lambda.size());
    for (int i = 1; i <= n; ++i) {
        const int li = lambda[i - 1];
        // N+ part.
        g.mul({li + 1, n - i, 1, 1});
        g.mul({li + 1, n - i, 1, 0});
        g.div({2 * li + 1, 2 * (n - i), 1, 1});
        // N- part.
        g.mul({li + 1, n - i, 0, 0});
        g.mul({li + 1, n - i, 0, 1});
        g.div({2 * li + 2, 2 * (n - i), 1, 1});
    }
    for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
            const int lj = lambda[j - 1], lk = lambda[k - 1];
            g.mul({lj + lk + 1, 2 * n - j - k + 1, 1, 1});
            g.div({lj + lk + 1, 2 * n - j - k, 1, 1});
            g.mul({lj - lk, k - j + 1, 0, 0});
            g.div({lj - lk, k - j, 0, 0});
            g.mul({lj + lk + 2, 2 * n - j - k - 1, 1, 1});
            g.div({lj + lk + 2, 2 * n - j - k, 1, 1});
            g.mul({lj - lk + 1, k - j - 1, 0, 0});
            g.div({lj - lk + 1, k - j, 0, 0});
        }
    }
}

}  // namespace

double norm_qJ_product(const Partition& lambda, double q, double t, double a, double b) {
    QGammaProduct g(q, t, a, b);
    add_norm_factors(g, lambda);
    return g.value();
}

double norm_little(const Partition& lambda, const LittleParams& p) {
    p.validate();
    if (static_cast<int>(lambda.size()) != p.n) throw DomainError("norm_little: length mismatch");
    double pre = 1.0;
    for (int i = 1; i <= p.n; ++i) {
        const int li = lambda[i - 1];
        pre *= std::pow(p.q, li * li) * std::pow(p.a, li) * std::pow(p.t, 2 * (p.n - i) * li);
    }
    return pre * norm_qJ_product(lambda, p.q, p.t, p.a, p.b);
}

double selberg_qJ_product(int n, double q, double t, double a, double b) {
    QGammaProduct g(q, t, a, b);
    for (int j = 1; j <= n; ++j) {
        g.mul({1, j - 1, 1, 0});
        g.mul({1, j - 1, 0, 1});
        g.mul({0, j, 0, 0});
        g.div({2, n + j - 2, 1, 1});
        g.div({0, 1, 0, 0});
    }
    return g.value();
}

double selberg_little(const LittleParams& p) {
    p.validate();
    return selberg_qJ_product(p.n, p.q, p.t, p.a, p.b);
}

}  // namespace bcq
