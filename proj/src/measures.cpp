#include "bcq/measures.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "bcq/errors.hpp"

namespace bcq {

namespace {

constexpr double kWeightGuard = 1e-12;
constexpr double kPositivityTol = 1e-9;

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

std::vector<cplx> unit_roots(int M) {
    std::vector<cplx> r(M);
    for (int k = 0; k < M; ++k) r[k] = std::polar(1.0, 2.0 * std::numbers::pi * k / M);
    return r;
}

// (a b, b/a, a/b, 1/(a b); q)_tau.
cplx pair_factor(cplx a, cplx b, double q, double t) {
    return qpoch_real(a * b, q, t) * qpoch_real(b / a, q, t) * qpoch_real(a / b, q, t) * qpoch_real(1.0 / (a * b), q, t);
}

// Same with the integer exponent k (t = q^k).
cplx pair_factor_k(cplx a, cplx b, double q, int k) {
    return qpoch(a * b, q, k) * qpoch(b / a, q, k) * qpoch(a / b, q, k) * qpoch(1.0 / (a * b), q, k);
}

// Pair table over the uniform grid: entry (k1,k2) is g(k1+k2) g(k2-k1)
// g(k1-k2) g(-k1-k2) with g(s) = (e^{2 pi i s/M}; q)_x for the given one-point
// function.
Eigen::MatrixXcd pair_table(int M, const std::function<cplx(cplx)>& g1) {
    const auto roots = unit_roots(M);
    std::vector<cplx> g(M);
    for (int s = 0; s < M; ++s) g[s] = g1(roots[s]);
    auto at = [&](int s) { return g[((s % M) + M) % M]; };
    Eigen::MatrixXcd P(M, M);
    for (int a = 0; a < M; ++a) {
        for (int b = a; b < M; ++b) {
            const cplx v = at(a + b) * at(b - a) * at(a - b) * at(-a - b);
            P(a, b) = v;
            P(b, a) = v;
        }
    }
    return P;
}

struct CompiledPoly {
    std::vector<cplx> coef;
    std::vector<std::vector<int>> exps;
};

CompiledPoly compile(const LaurentPolynomial& f) {
    CompiledPoly c;
    for (const auto& [e, v] : f.terms()) {
        c.coef.push_back(v);
        c.exps.push_back(e);
    }
    return c;
}

struct GridResult {
    Eigen::MatrixXcd full;
    Eigen::MatrixXcd half;
    double max_abs_w = 0.0;
    double min_re_w = 0.0;
    double max_im_w = 0.0;
};

// Average of W f_a f_b over the dims-dimensional uniform grid, where
// W = prod_d axis_w[idx_d] prod_{d<e} pair(idx_d, idx_e). The M/2 grid is
// accumulated on the even indices in the same pass.
GridResult grid_gram(const std::vector<LaurentPolynomial>& polys, int dims, const std::vector<cplx>& axis_w,
                     const Eigen::MatrixXcd* pair, int M) {
    const int np = static_cast<int>(polys.size());
    GridResult res;
    res.full = Eigen::MatrixXcd::Zero(np, np);
    res.half = Eigen::MatrixXcd::Zero(np, np);
    std::vector<CompiledPoly> cp;
    for (const auto& f : polys) {
        if (f.nvars() != dims) throw DomainError("grid_gram: polynomial variable count mismatch");
        cp.push_back(compile(f));
    }
    const auto roots = unit_roots(M);
    std::vector<int> idx(dims, 0);
    std::vector<cplx> v(np);
    const long total = static_cast<long>(std::pow(static_cast<double>(M), dims));
    for (long point = 0; point < total; ++point) {
        cplx w = 1.0;
        bool even = true;
        for (int d = 0; d < dims; ++d) {
            w *= axis_w[idx[d]];
            even = even && (idx[d] % 2 == 0);
            for (int e = d + 1; e < dims; ++e) w *= (*pair)(idx[d], idx[e]);
        }
        res.max_abs_w = std::max(res.max_abs_w, std::abs(w));
        res.min_re_w = std::min(res.min_re_w, w.real());
        res.max_im_w = std::max(res.max_im_w, std::abs(w.imag()));
        for (int a = 0; a < np; ++a) {
            cplx s = 0.0;
            const auto& c = cp[a];
            for (std::size_t t = 0; t < c.coef.size(); ++t) {
                cplx m = c.coef[t];
                for (int d = 0; d < dims; ++d) {
                    const long e = static_cast<long>(idx[d]) * c.exps[t][d];
                    m *= roots[((e % M) + M) % M];
                }
                s += m;
            }
            v[a] = s;
        }
        for (int a = 0; a < np; ++a) {
            for (int b = a; b < np; ++b) {
                const cplx term = w * (v[a] * v[b]);
                res.full(a, b) += term;
                if (even) res.half(a, b) += term;
            }
        }
        for (int d = dims - 1; d >= 0; --d) {
            if (++idx[d] < M) break;
            idx[d] = 0;
        }
    }
    const double nf = std::pow(static_cast<double>(M), dims);
    const double nh = std::pow(static_cast<double>(M / 2), dims);
    for (int a = 0; a < np; ++a) {
        for (int b = a; b < np; ++b) {
            res.full(a, b) /= nf;
            res.half(a, b) /= nh;
            res.full(b, a) = res.full(a, b);
            res.half(b, a) = res.half(a, b);
        }
    }
    return res;
}

void check_grid(int M, const std::vector<LaurentPolynomial>& polys) {
    if (M < 4 || M % 2 != 0) throw DomainError("quadrature needs an even number of points per axis");
    int deg = 0;
    for (const auto& f : polys) deg = std::max(deg, f.max_abs_exponent());
    if (M < 2 * (2 * deg) + 8) throw DomainError("quadrature grid too coarse for the polynomial degree");
}

void check_positive(const GridResult& g, const char* what) {
    const double scale = g.max_abs_w;
    if (g.min_re_w < -kPositivityTol * scale || g.max_im_w > kPositivityTol * scale) {
        throw NonPositiveWeight(std::string(what) + ": weight not positive on the torus");
    }
}

void check_positive(cplx c, const char* what) {
    if (!(c.real() > 0.0) || std::abs(c.imag()) > kPositivityTol * std::abs(c)) {
        throw NonPositiveWeight(std::string(what) + ": discrete weight not positive");
    }
}

std::vector<cplx> continuous_axis(const AWParams& p, int M) {
    const auto roots = unit_roots(M);
    std::vector<cplx> w(M);
    for (int k = 0; k < M; ++k) w[k] = w_c(roots[k], p);
    return w;
}

std::vector<LaurentPolynomial> specialize_all(const std::vector<LaurentPolynomial>& polys, std::span<const cplx> omega) {
    std::vector<LaurentPolynomial> out;
    for (const auto& f : polys) out.push_back(f.specialize_leading(omega));
    return out;
}

// The other three parameters of t_i, in increasing index order.
std::array<cplx, 3> others(const AWParams& p, int param) {
    std::array<cplx, 3> o;
    int k = 0;
    for (int i = 0; i < 4; ++i) {
        if (i != param) o[k++] = p.tp[i];
    }
    return o;
}

MeasureReport pairing(const GramReport& g, int M) {
    MeasureReport r;
    r.value = g.gram(0, 1);
    r.abs_error_estimate = g.error(0, 1);
    r.quadrature_points_per_axis = M;
    r.discrete_points_used = g.discrete_points_used;
    return r;
}

}  // namespace

cplx w_c(cplx x, const AWParams& p) {
    if (x == 0.0) throw DomainError("w_c: zero argument");
    const double q = p.q;
    cplx den = 1.0;
    for (cplx ti : p.tp) den *= qpoch_inf(ti * x, q) * qpoch_inf(ti / x, q);
    if (std::abs(den) < kWeightGuard) throw PoleError("w_c: argument at a weight pole");
    return qpoch_inf(x * x, q) * qpoch_inf(1.0 / (x * x), q) / den;
}

cplx delta_interaction(std::span<const cplx> z, double q, double t) {
    cplx r = 1.0;
    for (std::size_t i = 0; i < z.size(); ++i) {
        for (std::size_t j = i + 1; j < z.size(); ++j) r *= pair_factor(z[i], z[j], q, t);
    }
    return r;
}

cplx weight_continuous(std::span<const cplx> z, const AWParams& p) {
    cplx r = delta_interaction(z, p.q, p.t);
    for (cplx x : z) r *= w_c(x, p);
    return r;
}

GramReport torus_gram(const std::vector<LaurentPolynomial>& polys, const AWParams& p, int M) {
    p.validate();
    check_grid(M, polys);
    const int n = polys.empty() ? 0 : polys.front().nvars();
    const auto axis = continuous_axis(p, M);
    Eigen::MatrixXcd pair;
    if (n >= 2) pair = pair_table(M, [&](cplx x) { return qpoch_real(x, p.q, p.t); });
    const auto g = grid_gram(polys, n, axis, &pair, M);
    if (p.in_V_AW()) check_positive(g, "torus_gram");
    GramReport r;
    r.gram = g.full;
    r.error = (g.full - g.half).cwiseAbs();
    r.quadrature_points_per_axis = M;
    return r;
}

MeasureReport torus_bilinear(const LaurentPolynomial& f, const LaurentPolynomial& g, const AWParams& p, int M) {
    return pairing(torus_gram({f, g}, p, M), M);
}

cplx wd_residue_weight(int i, cplx tau0, cplx tau1, cplx tau2, cplx tau3, double q) {
    if (i < 0) throw DomainError("w_d: negative index");
    require_base(q);
    if (tau0 == 0.0 || tau1 == 0.0 || tau2 == 0.0 || tau3 == 0.0) throw DomainError("w_d: zero parameter");
    const std::array<cplx, 3> o{tau1, tau2, tau3};
    cplx den = qpoch_inf_nonzero(q, q);
    for (cplx x : o) den *= qpoch_inf_nonzero(tau0 * x, q) * qpoch_inf_nonzero(x / tau0, q);
    cplx val = qpoch_inf(1.0 / (tau0 * tau0), q) / den;
    cplx num_i = qpoch(tau0 * tau0, q, i), den_i = qpoch(q, q, i);
    for (cplx x : o) {
        num_i *= qpoch(tau0 * x, q, i);
        den_i *= qpoch(tau0 * q / x, q, i);
    }
    const cplx edge = 1.0 - tau0 * tau0;
    if (std::abs(den_i) < kPoleGuard || std::abs(edge) < kPoleGuard) throw PoleError("w_d: vanishing denominator");
    val *= num_i / den_i * (1.0 - tau0 * tau0 * std::pow(q, 2 * i)) / edge;
    val *= ipow(q / (tau0 * tau1 * tau2 * tau3), i);
    return val;
}

cplx discrete_interaction(const AscendingIndex& lambda, int param, const AWParams& p) {
    if (!is_ascending(lambda)) throw DomainError("discrete chain labels must be ascending");
    const int r = static_cast<int>(lambda.size());
    const double q = p.q, t = p.t;
    auto rho = [&](int j) { return p.tp[param] * std::pow(t, j - 1); };
    auto lam = [&](int j) { return j == 0 ? 0 : lambda[j - 1]; };
    cplx val = 1.0;
    for (int k = 1; k <= r; ++k) {
        for (int l = k + 1; l <= r; ++l) {
            const cplx rk = rho(k), rl = rho(l);
            val *= qpoch_real(rl / rk * std::pow(q, lam(l) - lam(k)), q, t);
            val *= qpoch_real(1.0 / (rk * rl) * std::pow(q, -lam(k) - lam(l)), q, t);
            const int len = lam(k) - lam(k - 1);
            const cplx den = qpoch(rk * rl * std::pow(q, lam(k - 1) + lam(l)), q, len) *
                             qpoch(rk / rl * std::pow(q, lam(k - 1) - lam(l)), q, len);
            if (std::abs(den) < kPoleGuard) throw PoleError("delta_d: vanishing denominator");
            val /= den;
        }
    }
    return val;
}

cplx multi_discrete_weight(const AscendingIndex& lambda, int param, const AWParams& p) {
    if (param < 0 || param > 3) throw DomainError("parameter index out of range");
    const int r = static_cast<int>(lambda.size());
    const auto o = others(p, param);
    cplx val = discrete_interaction(lambda, param, p);
    for (int j = 1; j <= r; ++j) {
        const int prev = j == 1 ? 0 : lambda[j - 2];
        const cplx tau0 = p.tp[param] * std::pow(p.t, j - 1) * std::pow(p.q, prev);
        val *= wd_residue_weight(lambda[j - 1] - prev, tau0, o[0], o[1], o[2], p.q);
    }
    return val;
}

cplx interaction_c(std::span<const cplx> omega, std::span<const cplx> z, const AWParams& p) {
    cplx r = 1.0;
    for (cplx w : omega) {
        for (cplx x : z) r *= pair_factor(w, x, p.q, p.t);
    }
    return r;
}

std::vector<int> large_parameters(const AWParams& p) {
    std::vector<int> idx;
    for (int i = 0; i < 4; ++i) {
        if (std::abs(p.tp[i]) >= 1.0) idx.push_back(i);
    }
    if (idx.size() > 2) throw DomainError("more than two parameters with modulus >= 1");
    return idx;
}

namespace {

// D_param(l): ascending labels with |t_param t^{l-1} q^{nu_l}| > 1.
std::vector<AscendingIndex> chain_labels(int l, int param, const AWParams& p) {
    if (l == 0) return {AscendingIndex{}};
    const double last = std::abs(p.tp[param]) * std::pow(p.t, l - 1);
    if (!(last > 1.0)) return {};
    int max_last = 0;
    while (last * std::pow(p.q, max_last + 1) > 1.0) ++max_last;
    return ascending_indices(l, max_last);
}

std::vector<cplx> chain_points(const AscendingIndex& nu, int param, const AWParams& p) {
    std::vector<cplx> w;
    for (std::size_t j = 0; j < nu.size(); ++j) {
        w.push_back(p.tp[param] * std::pow(p.t, static_cast<int>(j)) * std::pow(p.q, nu[j]));
    }
    return w;
}

}  // namespace

std::vector<DiscreteSupportPoint> support_F(int r, int n, const AWParams& p) {
    if (r < 1 || r > n) throw DomainError("support_F: r out of range");
    const auto large = large_parameters(p);
    std::vector<DiscreteSupportPoint> out;
    if (large.empty()) return out;
    const int pi = large[0];
    const int pj = large.size() > 1 ? large[1] : -1;
    for (int l = 0; l <= r; ++l) {
        const int m = r - l;
        if (m > 0 && pj < 0) continue;
        const auto di = chain_labels(l, pi, p);
        const auto dj = m > 0 ? chain_labels(m, pj, p) : std::vector<AscendingIndex>{AscendingIndex{}};
        for (const auto& nu : di) {
            for (const auto& nup : dj) {
                DiscreteSupportPoint pt;
                pt.l = l;
                pt.m = m;
                pt.param_i = pi;
                pt.param_j = pj;
                pt.nu = nu;
                pt.nu_prime = nup;
                pt.omega = chain_points(nu, pi, p);
                const auto wj = m > 0 ? chain_points(nup, pj, p) : std::vector<cplx>{};
                pt.omega.insert(pt.omega.end(), wj.begin(), wj.end());
                out.push_back(std::move(pt));
            }
        }
    }
    return out;
}

cplx discrete_constant(const DiscreteSupportPoint& pt, const AWParams& p) {
    cplx c = 1.0;
    if (pt.l > 0) c *= multi_discrete_weight(pt.nu, pt.param_i, p);
    if (pt.m > 0) c *= multi_discrete_weight(pt.nu_prime, pt.param_j, p);
    if (pt.l > 0 && pt.m > 0) {
        const std::span<const cplx> wi(pt.omega.data(), pt.l);
        const std::span<const cplx> wj(pt.omega.data() + pt.l, pt.m);
        c *= interaction_c(wi, wj, p);
    }
    return c;
}

GramReport partial_gram(const std::vector<LaurentPolynomial>& polys, const AWParams& p, int M) {
    p.validate();
    check_grid(M, polys);
    const bool positive = p.in_V_AW();
    const int n = polys.empty() ? 0 : polys.front().nvars();
    const int np = static_cast<int>(polys.size());
    const auto roots = unit_roots(M);
    const auto axis = continuous_axis(p, M);
    Eigen::MatrixXcd pair;
    if (n >= 2) pair = pair_table(M, [&](cplx x) { return qpoch_real(x, p.q, p.t); });

    GramReport rep;
    rep.quadrature_points_per_axis = M;
    {
        const auto g = grid_gram(polys, n, axis, &pair, M);
        if (positive) check_positive(g, "partial_gram");
        rep.gram = g.full;
        rep.error = (g.full - g.half).cwiseAbs();
    }
    for (int r = 1; r <= n; ++r) {
        const double comb = std::pow(2.0, r) * factorial(n) / factorial(n - r);
        for (const auto& pt : support_F(r, n, p)) {
            const cplx c = discrete_constant(pt, p);
            if (positive) check_positive(c, "partial_gram");
            const auto sp = specialize_all(polys, pt.omega);
            const int dims = n - r;
            std::vector<cplx> w(M);
            for (int k = 0; k < M && dims > 0; ++k) {
                const cplx zk = roots[k];
                w[k] = axis[k] * interaction_c(pt.omega, std::span<const cplx>(&zk, 1), p);
            }
            Eigen::MatrixXcd full(np, np), half(np, np);
            if (dims == 0) {
                for (int a = 0; a < np; ++a) {
                    for (int b = 0; b < np; ++b) full(a, b) = sp[a].coefficient({}) * sp[b].coefficient({});
                }
                half = full;
            } else {
                const auto g = grid_gram(sp, dims, w, &pair, M);
                if (positive) check_positive(g, "partial_gram");
                full = g.full;
                half = g.half;
            }
            rep.gram += comb * c * full;
            rep.error += (std::abs(comb * c) * (full - half).cwiseAbs());
            ++rep.discrete_points_used;
        }
    }
    return rep;
}

MeasureReport partial_bilinear(const LaurentPolynomial& f, const LaurentPolynomial& g, const AWParams& p, int M) {
    return pairing(partial_gram({f, g}, p, M), M);
}

GramReport natural_t_gram(const std::vector<LaurentPolynomial>& polys, const AWParams& p, int k, int M) {
    p.validate();
    check_grid(M, polys);
    if (k < 1) throw DomainError("natural_t_gram needs k >= 1");
    const double q = p.q;
    if (std::abs(p.t - std::pow(q, k)) > 1e-15 * std::pow(q, k)) throw DomainError("natural_t_gram needs t = q^k");
    const int n = polys.empty() ? 0 : polys.front().nvars();
    const int np = static_cast<int>(polys.size());
    const auto roots = unit_roots(M);
    const auto axis = continuous_axis(p, M);
    Eigen::MatrixXcd pair;
    if (n >= 2) pair = pair_table(M, [&](cplx x) { return qpoch(x, q, k); });

    std::vector<int> large;
    for (int i = 0; i < 4; ++i) {
        if (std::abs(p.tp[i]) > 1.0) large.push_back(i);
    }
    // Chain of each large parameter: e q^j with |e q^j| > 1.
    struct Site {
        int param;
        int j;
        cplx z;
        cplx wd;
    };
    std::vector<Site> sites;
    for (int e : large) {
        const auto o = others(p, e);
        for (int j = 0; std::abs(p.tp[e]) * std::pow(q, j) > 1.0; ++j) {
            sites.push_back({e, j, p.tp[e] * std::pow(q, j), wd_residue_weight(j, p.tp[e], o[0], o[1], o[2], q)});
        }
    }

    GramReport rep;
    rep.quadrature_points_per_axis = M;
    rep.gram = Eigen::MatrixXcd::Zero(np, np);
    rep.error = Eigen::MatrixXd::Zero(np, np);
    const int S = static_cast<int>(sites.size());
    for (int r = 0; r <= n; ++r) {
        if (r > 0 && S == 0) break;
        const double comb = std::pow(2.0, r) * binomial(n, r);
        std::vector<int> pick(r, 0);
        long count = 1;
        for (int i = 0; i < r; ++i) count *= S;
        for (long c = 0; c < count; ++c) {
            long rest = c;
            for (int i = r - 1; i >= 0; --i) {
                pick[i] = static_cast<int>(rest % S);
                rest /= S;
            }
            // delta(z;q^k) vanishes when two discrete points of one chain
            // differ by q^l with |l| < k.
            bool vanishes = false;
            for (int a = 0; a < r && !vanishes; ++a) {
                for (int b = a + 1; b < r && !vanishes; ++b) {
                    const auto& sa = sites[pick[a]];
                    const auto& sb = sites[pick[b]];
                    vanishes = sa.param == sb.param && std::abs(sa.j - sb.j) < k;
                }
            }
            if (vanishes) continue;
            std::vector<cplx> zd(r);
            cplx cst = 1.0;
            for (int a = 0; a < r; ++a) {
                zd[a] = sites[pick[a]].z;
                cst *= sites[pick[a]].wd;
            }
            for (int a = 0; a < r; ++a) {
                for (int b = a + 1; b < r; ++b) cst *= pair_factor_k(zd[a], zd[b], q, k);
            }
            const int dims = n - r;
            const auto sp = r > 0 ? specialize_all(polys, zd) : polys;
            Eigen::MatrixXcd full(np, np), half(np, np);
            if (dims == 0) {
                for (int a = 0; a < np; ++a) {
                    for (int b = 0; b < np; ++b) full(a, b) = sp[a].coefficient({}) * sp[b].coefficient({});
                }
                half = full;
            } else {
                std::vector<cplx> w(M);
                for (int m = 0; m < M; ++m) {
                    w[m] = axis[m];
                    for (cplx x : zd) w[m] *= pair_factor_k(x, roots[m], q, k);
                }
                const auto g = grid_gram(sp, dims, w, &pair, M);
                full = g.full;
                half = g.half;
            }
            rep.gram += comb * cst * full;
            rep.error += std::abs(comb * cst) * (full - half).cwiseAbs();
            if (r > 0) ++rep.discrete_points_used;
        }
    }
    return rep;
}

MeasureReport natural_t_bilinear(const LaurentPolynomial& f, const LaurentPolynomial& g, const AWParams& p, int k,
                                 int M) {
    return pairing(natural_t_gram({f, g}, p, k, M), M);
}

ContourCheck residue_contour_check(const LaurentPolynomial& f, const AWParams& p, double R, int M,
                                   double small_radius) {
    p.validate();
    if (f.nvars() != 1) throw DomainError("residue_contour_check is one-variable");
    const double q = p.q;
    for (cplx ti : p.tp) {
        if (std::abs(ti) >= R) throw DomainError("contour radius must exceed every |t_i|");
    }
    auto integrand = [&](cplx z) {
        const std::array<cplx, 1> zz{z};
        return eval(f, zz) * w_c(z, p);
    };
    ContourCheck out;
    const auto roots = unit_roots(M);
    for (int k = 0; k < M; ++k) {
        out.contour += integrand(R * roots[k]);
        out.torus += integrand(roots[k]);
    }
    out.contour /= static_cast<double>(M);
    out.torus /= static_cast<double>(M);

    // Reciprocal poles 1/(t_i q^k) inside the circle must stay outside the
    // contour; remove them with small clockwise circles.
    std::vector<cplx> poles;
    for (cplx ti : p.tp) {
        for (int k = 0; std::abs(1.0 / (ti * std::pow(q, k))) < R; ++k) poles.push_back(1.0 / (ti * std::pow(q, k)));
    }
    for (cplx c : poles) {
        cplx s = 0.0;
        for (int k = 0; k < M; ++k) {
            const cplx z = c + small_radius * roots[k];
            s += integrand(z) * (z - c) / z;
        }
        out.contour -= s / static_cast<double>(M);
    }
    out.excluded_poles = static_cast<int>(poles.size());

    for (int i = 0; i < 4; ++i) {
        const auto o = others(p, i);
        for (int k = 0; std::abs(p.tp[i]) * std::pow(q, k) > 1.0; ++k) {
            const cplx x = p.tp[i] * std::pow(q, k);
            const std::array<cplx, 1> xx{x};
            out.residues += 2.0 * wd_residue_weight(k, p.tp[i], o[0], o[1], o[2], q) * eval(f, xx);
        }
    }
    return out;
}

int recommended_grid(const AWParams& p, int deg, int floor, double target) {
    p.validate();
    double rho = 0.0;
    for (cplx ti : p.tp) {
        for (int k = 0; k < 200; ++k) {
            const double r = std::abs(ti) * std::pow(p.q, k);
            if (r < 1e-3) break;
            if (r != 1.0) rho = std::max(rho, std::min(r, 1.0 / r));
        }
    }
    int M = std::max(floor, 2 * deg + 8);
    if (rho > 0.0 && rho < 1.0) M = std::max(M, static_cast<int>(std::ceil(std::log(target) / std::log(rho))));
    return M + (M % 2);
}

}  // namespace bcq
