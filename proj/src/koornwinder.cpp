#include "bcq/koornwinder.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "bcq/errors.hpp"

namespace bcq {

namespace {

constexpr double kPhiGuard = 1e-12;
constexpr double kRealTol = 1e-14;

bool is_real(cplx x) { return std::abs(x.imag()) <= kRealTol * std::max(1.0, std::abs(x)); }

bool real_at_least_one(cplx x) { return is_real(x) && x.real() >= 1.0 - kRealTol; }

double arg01(cplx x) {
    double a = std::arg(x);
    if (a < 0) a += 2.0 * std::numbers::pi;
    return a;
}

cplx guarded(cplx den) {
    if (std::abs(den) < kPhiGuard) throw PoleError("difference operator coefficient near pole");
    return den;
}

std::string str(const Partition& p) {
    std::string s = "(";
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}

}  // namespace

void AWParams::validate() const {
    require_base(q);
    if (!(t > 0.0 && t < 1.0)) throw DomainError("t must lie in (0,1)");
    for (cplx x : tp) {
        if (x == 0.0) throw DomainError("Askey-Wilson parameters must be nonzero");
    }
}

bool AWParams::in_V() const {
    std::vector<double> args;
    for (cplx x : tp) {
        if (x == 0.0) return false;
        args.push_back(arg01(x));
        args.push_back(arg01(1.0 / x));
    }
    std::sort(args.begin(), args.end());
    for (std::size_t i = 1; i < args.size(); ++i) {
        if (args[i] - args[i - 1] < 1e-12) return false;
    }
    return !real_at_least_one(T());
}

bool AWParams::in_V_AW() const {
    std::array<bool, 4> used{};
    for (int i = 0; i < 4; ++i) {
        if (used[i] || is_real(tp[i])) continue;
        bool paired = false;
        for (int j = 0; j < 4 && !paired; ++j) {
            if (j == i || used[j]) continue;
            if (std::abs(tp[j] - std::conj(tp[i])) <= kRealTol * std::max(1.0, std::abs(tp[i]))) {
                used[i] = used[j] = true;
                paired = true;
            }
        }
        if (!paired) return false;
    }
    for (int k = 0; k < 4; ++k) {
        for (int l = k + 1; l < 4; ++l) {
            if (real_at_least_one(tp[k] * tp[l])) return false;
        }
    }
    return true;
}

cplx phi_plus(int j, std::span<const cplx> z, const AWParams& p) {
    const int n = static_cast<int>(z.size());
    if (j < 0 || j >= n) throw DomainError("phi_plus: axis out of range");
    const cplx zj = z[j];
    cplx num = 1.0;
    for (cplx ti : p.tp) num *= 1.0 - ti * zj;
    cplx val = num / (guarded(1.0 - zj * zj) * guarded(1.0 - p.q * zj * zj));
    for (int l = 0; l < n; ++l) {
        if (l == j) continue;
        const cplx zl = z[l];
        val *= (1.0 - p.t * zl * zj) * (1.0 - p.t * zj / zl);
        val /= guarded(1.0 - zl * zj) * guarded(1.0 - zj / zl);
    }
    return val;
}

cplx phi_minus(int j, std::span<const cplx> z, const AWParams& p) {
    std::vector<cplx> inv(z.begin(), z.end());
    for (auto& x : inv) x = 1.0 / x;
    return phi_plus(j, inv, p);
}

cplx apply_D(const LaurentPolynomial& f, std::span<const cplx> z, const AWParams& p) {
    const int n = static_cast<int>(z.size());
    const cplx f0 = eval(f, z);
    std::vector<cplx> w(z.begin(), z.end());
    cplx sum = 0.0;
    for (int j = 0; j < n; ++j) {
        w[j] = z[j] * p.q;
        const cplx up = eval(f, w);
        w[j] = z[j] / p.q;
        const cplx down = eval(f, w);
        w[j] = z[j];
        sum += phi_plus(j, z, p) * (up - f0) + phi_minus(j, z, p) * (down - f0);
    }
    return sum;
}

cplx eigenvalue_E(const Partition& lambda, const AWParams& p) {
    const int n = static_cast<int>(lambda.size());
    const cplx lead = p.T() / p.q;
    cplx e = 0.0;
    for (int j = 1; j <= n; ++j) {
        const int lj = lambda[j - 1];
        e += lead * std::pow(p.t, 2 * n - j - 1) * (std::pow(p.q, lj) - 1.0);
        e += std::pow(p.t, j - 1) * (std::pow(p.q, -lj) - 1.0);
    }
    return e;
}

int TriangularOpMatrix::position(const Partition& mu) const {
    auto it = std::find(index.begin(), index.end(), mu);
    if (it == index.end()) throw DomainError("op matrix: partition " + str(mu) + " not indexed");
    return static_cast<int>(it - index.begin());
}

cplx TriangularOpMatrix::at(const Partition& row, const Partition& col) const {
    return entries(position(row), position(col));
}

TriangularOpMatrix op_matrix(const Partition& lambda, const AWParams& p, const OpMatrixOptions& opt) {
    p.validate();
    const int n = static_cast<int>(lambda.size());
    TriangularOpMatrix out;
    out.index = partitions_dominated_by(lambda);
    const int N = static_cast<int>(out.index.size());
    out.entries = Eigen::MatrixXcd::Zero(N, N);

    std::vector<LaurentPolynomial> mono;
    for (const auto& mu : out.index) mono.push_back(monomial_w(mu));

    std::mt19937_64 rng(opt.seed);
    std::uniform_real_distribution<double> radius(0.7 * opt.sample_scale, 1.4 * opt.sample_scale);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    auto draw = [&]() {
        std::vector<cplx> z(n);
        for (auto& x : z) x = std::polar(radius(rng), angle(rng));
        return z;
    };

    for (int row = 0; row < N; ++row) {
        std::vector<int> cols;
        for (int c = 0; c < N; ++c) {
            if (dominance_leq(out.index[c], out.index[row])) cols.push_back(c);
        }
        const int m = static_cast<int>(cols.size());
        const int d = static_cast<int>(std::find(cols.begin(), cols.end(), row) - cols.begin());
        const cplx e_row = eigenvalue_E(out.index[row], p);
        // Least squares on twice as many samples as unknowns. The full fit
        // checks the diagonal against E; the stored row is refitted with the
        // diagonal fixed to E.
        const int samples = 2 * m;
        bool accepted = false;
        for (int attempt = 0; attempt < opt.max_attempts && !accepted; ++attempt) {
            Eigen::MatrixXcd A(samples, m);
            Eigen::VectorXcd b(samples);
            try {
                for (int s = 0; s < samples; ++s) {
                    const auto z = draw();
                    for (int k = 0; k < m; ++k) A(s, k) = eval(mono[cols[k]], z);
                    b(s) = apply_D(mono[row], z, p);
                }
            } catch (const PoleError&) {
                continue;
            }
            Eigen::VectorXd scale(m);
            for (int k = 0; k < m; ++k) {
                scale(k) = A.col(k).cwiseAbs().maxCoeff();
                A.col(k) /= scale(k);
            }
            Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
            const auto& sv = svd.singularValues();
            const double cond = sv(0) / sv(m - 1);
            if (!(cond <= opt.cond_limit)) continue;
            const Eigen::VectorXcd full = svd.solve(b);
            if (std::abs(full(d) / scale(d) - e_row) > 1e-8 * std::max(1.0, std::abs(e_row))) {
                throw FormMismatch("op_matrix: diagonal at " + str(out.index[row]) + " disagrees with E");
            }
            Eigen::VectorXcd x(m);
            x(d) = e_row;
            if (m > 1) {
                Eigen::MatrixXcd B(samples, m - 1);
                for (int k = 0, j = 0; k < m; ++k) {
                    if (k != d) B.col(j++) = A.col(k);
                }
                const Eigen::VectorXcd y = B.colPivHouseholderQr().solve(b - A.col(d) * (e_row * scale(d)));
                for (int k = 0, j = 0; k < m; ++k) {
                    if (k != d) x(k) = y(j++) / scale(k);
                }
            }

            // Out-of-sample residual of the interpolated row.
            double resid = 0.0;
            try {
                for (int s = 0; s < opt.check_points; ++s) {
                    const auto z = draw();
                    const cplx lhs = apply_D(mono[row], z, p);
                    cplx rhs = 0.0;
                    double mag = std::abs(lhs);
                    for (int k = 0; k < m; ++k) {
                        const cplx term = x(k) * eval(mono[cols[k]], z);
                        rhs += term;
                        mag = std::max(mag, std::abs(term));
                    }
                    resid = std::max(resid, std::abs(lhs - rhs) / std::max(mag, 1e-300));
                }
            } catch (const PoleError&) {
                continue;
            }
            for (int k = 0; k < m; ++k) out.entries(row, cols[k]) = x(k);
            out.residual = std::max(out.residual, resid);
            out.condition = std::max(out.condition, cond);
            accepted = true;
        }
        if (!accepted) {
            throw IllConditioned("op_matrix: no acceptable sample set for row " + str(out.index[row]));
        }
    }
    return out;
}

Separation eigenvalue_separation(const Partition& lambda, const AWParams& p) {
    Separation s;
    s.gap = std::numeric_limits<double>::infinity();
    const cplx el = eigenvalue_E(lambda, p);
    for (const auto& mu : partitions_dominated_by(lambda)) {
        if (mu == lambda) continue;
        const double g = std::abs(el - eigenvalue_E(mu, p));
        if (g < s.gap) {
            s.gap = g;
            s.nearest = mu;
        }
    }
    return s;
}

void require_separated(const Partition& lambda, const AWParams& p) {
    const auto s = eigenvalue_separation(lambda, p);
    const double el = std::abs(eigenvalue_E(lambda, p));
    if (!s.nearest.empty() && s.gap <= 1e-8 * std::max(1.0, el)) {
        throw EigenvalueCollision("eigenvalues of " + str(lambda) + " and " + str(s.nearest) + " collide");
    }
}

}  // namespace bcq
