#include "suites.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>

#include "bcq/askey_wilson.hpp"
#include "bcq/errors.hpp"
#include "bcq/koornwinder.hpp"
#include "bcq/limits.hpp"
#include "bcq/measures.hpp"
#include "bcq/qjacobi_big.hpp"
#include "bcq/qjacobi_little.hpp"
#include "bcq/qracah.hpp"
#include "bcq/qseries.hpp"

namespace bcq::tools {

namespace {

const std::vector<std::string> kSuites = {"aw", "qracah", "little", "big", "limits", "selberg"};

std::string num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string num(cplx z) {
    if (z.imag() == 0.0) return num(z.real());
    return num(z.real()) + (z.imag() < 0 ? "" : "+") + num(z.imag()) + "i";
}

std::string label(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    double x = 0.0;
    try {
        x = std::stod(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
    }
    if (pos != v.size()) throw ConfigError("config: '" + key + "' expects a number, got '" + v + "'");
    return x;
}

long long to_int(const std::string& key, const std::string& v) {
    std::size_t pos = 0;
    long long x = 0;
    try {
        x = std::stoll(v, &pos);
    } catch (const std::exception&) {
        throw ConfigError("config: '" + key + "' expects an integer, got '" + v + "'");
    }
    if (pos != v.size()) throw ConfigError("config: '" + key + "' expects an integer, got '" + v + "'");
    return x;
}

LaurentPolynomial one(int n) { return LaurentPolynomial::constant(n, 1.0); }

// Runs checks, times them and turns exceptions into failed records.
class Runner {
public:
    explicit Runner(double override_tol) : override_(override_tol) {}

    double tol(double def) const { return override_ > 0.0 ? override_ : def; }

    // f returns the pair (lhs, rhs).
    void check(const std::string& name, const std::string& anchor, double tol_default,
               const std::function<std::pair<cplx, cplx>()>& f) {
        const double tl = tol(tol_default);
        const auto t0 = std::chrono::steady_clock::now();
        CheckRecord c;
        try {
            const auto [lhs, rhs] = f();
            c = complex_check(name, anchor, lhs, rhs, tl);
        } catch (const std::exception& e) {
            c = failed_check(name, anchor, tl, e.what());
        }
        c.ms = elapsed(t0);
        report.checks.push_back(std::move(c));
    }

    // f appends several records through add(); an exception fails the block
    // as a whole under the block name.
    void block(const std::string& name, const std::string& anchor, double tol_default,
               const std::function<void()>& f) {
        const auto t0 = std::chrono::steady_clock::now();
        const std::size_t first = report.checks.size();
        try {
            f();
        } catch (const std::exception& e) {
            report.checks.resize(first);
            report.checks.push_back(failed_check(name, anchor, tol(tol_default), e.what()));
        }
        const double ms = elapsed(t0);
        for (std::size_t i = first; i < report.checks.size(); ++i) report.checks[i].ms = ms;
    }

    void add(const std::string& name, const std::string& anchor, cplx lhs, cplx rhs, double tol_default) {
        report.checks.push_back(complex_check(name, anchor, lhs, rhs, tol(tol_default)));
    }

    CertificationReport report;

private:
    static double elapsed(std::chrono::steady_clock::time_point t0) {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }

    // Errors come from the complex values; the record keeps the real parts.
    static CheckRecord complex_check(const std::string& name, const std::string& anchor, cplx lhs, cplx rhs,
                                     double tl) {
        CheckRecord c = make_check(name, anchor, lhs.real(), rhs.real(), tl);
        c.abs_err = std::abs(lhs - rhs);
        c.rel_err = rhs != 0.0 ? c.abs_err / std::abs(rhs) : c.abs_err;
        c.pass = c.rel_err <= tl;
        if (std::abs(lhs.imag()) + std::abs(rhs.imag()) > 1e-14 * (std::abs(lhs) + std::abs(rhs))) {
            c.note = "complex values: lhs=" + num(lhs) + " rhs=" + num(rhs);
        }
        return c;
    }

    double override_;
};

// Normalized off-diagonal entries and diagonal-versus-norm entries of a Gram
// matrix, one record each.
template <class Gram, class Norm>
void gram_records(Runner& run, const std::string& prefix, const std::vector<Partition>& parts, const Gram& G,
                  Norm&& norm, double off_tol, double diag_tol) {
    const int m = static_cast<int>(parts.size());
    for (int i = 0; i < m; ++i) {
        run.add(prefix + ".norm." + label(parts[i]), "squared norm equals the closed product", G(i, i),
                norm(parts[i]), diag_tol);
        for (int j = i + 1; j < m; ++j) {
            const double s = std::sqrt(std::abs(G(i, i)) * std::abs(G(j, j)));
            run.add(prefix + ".orthogonality." + label(parts[i]) + "|" + label(parts[j]),
                    "distinct degrees are orthogonal; |G_ij|/sqrt(|G_ii G_jj|)", std::abs(G(i, j)) / s, 0.0,
                    off_tol);
        }
    }
}

AWParams aw_params(const SuiteConfig& cfg) {
    return AWParams{cfg.q, cfg.t, cfg.tp};
}

int grid_for(const SuiteConfig& cfg, int n) {
    if (cfg.M > 0) return cfg.M;
    return n <= 2 ? 128 : 48;
}

std::vector<cplx> random_point(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> r(0.8, 1.25), th(0.1, 3.0);
    std::vector<cplx> z(n);
    for (auto& x : z) x = std::polar(r(rng), th(rng));
    return z;
}

// ---------------------------------------------------------------- aw

void run_aw(const SuiteConfig& cfg, Runner& run) {
    const int n = cfg.n, deg = cfg.max_degree;
    const AWParams p = aw_params(cfg);
    const int M = cfg.M > 0 ? cfg.M : recommended_grid(p, 2 * deg, grid_for(cfg, n));
    std::mt19937_64 rng(cfg.seed);
    bool discrete = false;
    try {
        discrete = !large_parameters(p).empty();
    } catch (const std::exception&) {
        // More than two large parameters: partial_gram reports the error.
        discrete = true;
    }
    auto gram = [&](const std::vector<LaurentPolynomial>& f) {
        return discrete ? partial_gram(f, p, M) : torus_gram(f, p, M);
    };
    const double form_tol = discrete ? 1e-6 : 1e-8;

    if (n == 1) {
        for (int k = 0; k <= deg; ++k) {
            run.check("aw.oracle.coefficients.lambda=" + std::to_string(k),
                      "one-variable polynomial equals the monic 4phi3 expansion; distance over max coefficient",
                      1e-10, [&] {
                          const LaurentPolynomial ref = aw1_expansion(k, p);
                          const double d = coefficient_distance(aw_polynomial({k}, p).expand(), ref);
                          return std::pair<cplx, cplx>(d / ref.max_abs_coefficient(), 0.0);
                      });
            run.check("aw.oracle.value.lambda=" + std::to_string(k), "one-variable polynomial equals the 4phi3 value",
                      1e-10, [&] {
                          const std::vector<cplx> z = {std::polar(1.1, 0.7)};
                          return std::pair<cplx, cplx>(eval(aw_polynomial({k}, p).expand(), z),
                                                       aw1_oracle(k, z[0], p));
                      });
        }
    }

    run.check("aw.constant_term", discrete ? "<1,1> equals the contour-free norm at lambda = 0"
                                           : "torus integral of the weight equals the Gustafson product",
              discrete ? 1e-6 : (n <= 2 ? 1e-8 : 1e-6), [&] {
                  if (discrete) {
                      return std::pair<cplx, cplx>(partial_bilinear(one(n), one(n), p, M).value,
                                                   aw_norm(Partition(n, 0), p));
                  }
                  return std::pair<cplx, cplx>(torus_bilinear(one(n), one(n), p, M).value,
                                               gustafson_constant(n, p));
              });

    const std::vector<Partition> parts = partitions_up_to(n, deg);
    run.block("aw.gram", "orthogonality and norms of the polynomials", form_tol, [&] {
        std::vector<LaurentPolynomial> polys;
        for (const auto& l : parts) polys.push_back(aw_polynomial(l, p).expand());
        const GramReport G = gram(polys);
        gram_records(run, "aw", parts, G.gram, [&](const Partition& l) { return aw_norm(l, p); }, form_tol,
                     1e-6);
    });

    Partition top(n, 0);
    top[0] = deg;
    run.check("aw.d_symmetry", "<Df,g> = <f,Dg> on the monomial basis; max |EG - (EG)^T| / max |EG|",
              form_tol, [&] {
                  const TriangularOpMatrix T = op_matrix(top, p);
                  std::vector<LaurentPolynomial> m;
                  for (const auto& mu : T.index) m.push_back(monomial_w(mu));
                  const Eigen::MatrixXcd EG = T.entries * gram(m).gram;
                  const Eigen::MatrixXcd A = EG - EG.transpose();
                  return std::pair<cplx, cplx>(A.cwiseAbs().maxCoeff() / EG.cwiseAbs().maxCoeff(), 0.0);
              });

    const std::vector<cplx> z = random_point(rng, n);
    run.check("aw.eigen_equation." + label(top), "D P = E_lambda P at a random point", 1e-8, [&] {
        const LaurentPolynomial P = aw_polynomial(top, p).expand();
        return std::pair<cplx, cplx>(apply_D(P, z, p), eigenvalue_E(top, p) * eval(P, z));
    });
    run.check("aw.w_invariance." + label(top), "P is invariant under z_1 -> 1/z_1 and a transposition", 1e-12,
              [&] {
                  const LaurentPolynomial P = aw_polynomial(top, p).expand();
                  std::vector<cplx> w = z;
                  w[0] = 1.0 / w[0];
                  if (n > 1) std::swap(w[0], w[n - 1]);
                  return std::pair<cplx, cplx>(eval(P, w), eval(P, z));
              });
}

// ---------------------------------------------------------------- qracah

void run_qracah(const SuiteConfig& cfg, Runner& run) {
    QRacahParams p;
    p.q = cfg.q;
    p.t = cfg.t;
    p.t0 = cfg.tp[0];
    p.t1 = cfg.tp[1];
    p.t2 = cfg.tp[2];
    p.n = cfg.n;
    p.N = cfg.N;
    const int n = cfg.n;

    run.check("qracah.summation", "finite sum <1,1> equals the closed product", 1e-10, [&] {
        return std::pair<cplx, cplx>(bilinear_qR(one(n), one(n), p), summation_formula_qR(p));
    });
    run.check("qracah.norm_zero", "symbolically truncated norm at lambda = 0 equals the single product", 1e-10,
              [&] { return std::pair<cplx, cplx>(norm_qR(Partition(n, 0), p), norm_qR_zero(n, p.aw())); });

    const std::vector<Partition> parts = lambda_N(n, p.N);
    run.block("qracah.gram", "orthogonality and norms on the finite support", 1e-9, [&] {
        std::vector<LaurentPolynomial> polys;
        for (const auto& l : parts) polys.push_back(aw_polynomial(l, p.aw()).expand());
        const Eigen::MatrixXcd G = gram_qR(polys, p);
        gram_records(run, "qracah", parts, G, [&](const Partition& l) { return norm_qR(l, p); }, 1e-9, 1e-8);
    });

    // Untruncated parameters: the configured t0..t2 and t3, then random ones.
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int s = 0; s < 20; ++s) {
        // Draw until both sides are finite (an admissible point).
        AWParams g{cfg.q, cfg.t, cfg.tp};
        int r = 1;
        AscendingIndex l;
        for (int tries = 0; tries < 100; ++tries) {
            if (s > 0 || tries > 0) {
                g.q = 0.3 + 0.4 * u(rng);
                g.t = 0.2 + 0.6 * u(rng);
                for (auto& x : g.tp) x = (u(rng) < 0.5 ? -1.0 : 1.0) * (0.1 + 0.6 * u(rng));
            }
            r = 1 + static_cast<int>(u(rng) * n);
            l.assign(r, 0);
            int last = 0;
            for (auto& x : l) last = x = last + static_cast<int>(u(rng) * 3);
            try {
                (void)multi_discrete_weight(l, 0, g);
                (void)weight_qR(l, g);
                (void)K_r_constant(r, g);
                break;
            } catch (const PoleError&) {
            }
        }
        char name[64];
        std::snprintf(name, sizeof name, "qracah.chain_weight.%02d", s);
        run.check(std::string(name) + ".r=" + std::to_string(r) + "." + label(l),
                  "discrete chain weight equals K_r times the finite weight", 1e-10, [&] {
                      return std::pair<cplx, cplx>(multi_discrete_weight(l, 0, g),
                                                   K_r_constant(r, g) * weight_qR(l, g));
                  });
    }
    for (int r = 1; r <= n; ++r) {
        const AWParams g{cfg.q, cfg.t, cfg.tp};
        run.check("qracah.K_r.forms.r=" + std::to_string(r), "two product forms of K_r agree", 1e-10,
                  [&] { return std::pair<cplx, cplx>(K_r_form1(r, g), K_r_form2(r, g)); });
    }
}

// ---------------------------------------------------------------- little

LittleParams little_params(const SuiteConfig& cfg, int n) { return LittleParams{cfg.q, cfg.t, cfg.a, cfg.b, n}; }

JacksonTolerance jackson_tol(const SuiteConfig& cfg) {
    JacksonTolerance j;
    if (cfg.depth > 0) j.max_depth = cfg.depth;
    return j;
}

void run_little(const SuiteConfig& cfg, Runner& run) {
    const int n = cfg.n;
    const LittleParams p = little_params(cfg, n);
    const JacksonTolerance jt = jackson_tol(cfg);
    run.check("little.selberg", "Jackson integral of the weight equals the q-Gamma product", 1e-8, [&] {
        return std::pair<cplx, cplx>(bilinear_little(one(n), one(n), p, jt).value, selberg_little(p));
    });
    const std::vector<Partition> parts = partitions_up_to(n, cfg.max_degree);
    run.block("little.gram", "orthogonality and norms of the polynomials", 1e-6, [&] {
        std::vector<LaurentPolynomial> polys;
        for (const auto& l : parts) polys.push_back(little_polynomial(l, p, jt).poly);
        const Eigen::MatrixXd G = gram_little(polys, p, jt).gram;
        gram_records(run, "little", parts, G, [&](const Partition& l) { return norm_little(l, p); }, 1e-6, 1e-6);
    });
    run.check("little.weight_positivity", "number of nonpositive weights on labels up to 8", 0.5, [&] {
        int bad = 0;
        for (const auto& nu : ascending_indices(n, 8)) bad += !(weight_little(nu, p) > 0.0);
        return std::pair<cplx, cplx>(bad, 0.0);
    });
}

// ---------------------------------------------------------------- big

BigParams big_params(const SuiteConfig& cfg, int n) {
    return BigParams{cfg.q, cfg.t, cfg.a, cfg.b, cfg.c, cfg.d, n};
}

void run_big(const SuiteConfig& cfg, Runner& run) {
    const int n = cfg.n;
    const BigParams p = big_params(cfg, n);
    const JacksonTolerance jt = jackson_tol(cfg);
    std::mt19937_64 rng(cfg.seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int s = 0; s < 10; ++s) {
        BigParams r;
        r.n = n;
        r.q = 0.3 + 0.4 * u(rng);
        r.t = 0.2 + 0.4 * u(rng);
        r.c = 0.5 + u(rng);
        r.d = 0.5 + u(rng);
        const double alo = -r.c / (r.d * r.q), blo = -r.d / (r.c * r.q), hi = 1.0 / r.q;
        r.a = alo + (0.05 + 0.9 * u(rng)) * (hi - alo);
        r.b = blo + (0.05 + 0.9 * u(rng)) * (hi - blo);
        char name[64];
        std::snprintf(name, sizeof name, "big.c_weights.dual_form.%02d", s);
        run.check(name, "c_{B,j} through Psi_t equals the closed theta form; worst j", 1e-9, [&] {
            r.validate();
            const auto x = c_weights_product(r), y = c_weights_closed(r);
            std::size_t w = 0;
            for (std::size_t j = 1; j < x.size(); ++j) {
                if (std::abs(x[j] - y[j]) / std::abs(y[j]) > std::abs(x[w] - y[w]) / std::abs(y[w])) w = j;
            }
            return std::pair<cplx, cplx>(x[w], y[w]);
        });
    }
    run.check("big.selberg", "c-weighted Jackson integral of the weight equals the q-Gamma product", 1e-7, [&] {
        return std::pair<cplx, cplx>(bilinear_big(one(n), one(n), p, jt).value, selberg_big(p));
    });
    const int depth = cfg.depth > 0 ? cfg.depth : 60;
    for (int k = 1; k <= 2; ++k) {
        const std::string ks = std::to_string(k);
        run.check("big.askey_evans.k=" + ks, "iterated q-integral over [-d,c]^n for t = q^k equals the product",
                  1e-7, [&] { return std::pair<cplx, cplx>(askey_evans_lhs(p, k, depth).value, askey_evans_rhs(p, k)); });
        run.check("big.askey_evans.translation.k=" + ks,
                  "product from the Selberg value after removing c_B equals the product", 1e-7, [&] {
                      return std::pair<cplx, cplx>(askey_evans_from_selberg(p, k), askey_evans_rhs(p, k));
                  });
    }
    for (int j = 1; j <= n; ++j) {
        AscendingIndex l(j - 1), m(n - j);
        for (int i = 0; i < j - 1; ++i) l[i] = i;
        for (int i = 0; i < n - j; ++i) m[i] = i;
        run.check("big.asymptotic_match.j=" + std::to_string(j),
                  "split weights match as the probe label grows; ratio at depth 25", 1e-5,
                  [&] { return std::pair<cplx, cplx>(asymptotic_match(j, l, m, p, 25), 1.0); });
    }
    const std::vector<Partition> parts = partitions_up_to(n, cfg.max_degree);
    run.block("big.gram", "orthogonality and norms of the polynomials", 1e-6, [&] {
        std::vector<LaurentPolynomial> polys;
        for (const auto& l : parts) polys.push_back(big_polynomial(l, p, jt).poly);
        const Eigen::MatrixXd G = gram_big(polys, p, jt).gram;
        gram_records(run, "big", parts, G, [&](const Partition& l) { return norm_big(l, p); }, 1e-6, 1e-6);
    });
}

// ---------------------------------------------------------------- limits

void scan_records(Runner& run, const std::string& prefix, const LimitTable& t, double tol) {
    std::string skipped;
    for (const auto& r : t.rows) {
        if (r.skipped) skipped += "k=" + std::to_string(r.k) + ": " + r.note + "; ";
    }
    run.add(prefix + ".final", "distance at the last eps", t.final_distance, 0.0, tol);
    run.add(prefix + ".decreasing", "0 when the last distances decrease, 1 otherwise",
            t.eventually_decreasing ? 0.0 : 1.0, 0.0, 0.5);
    if (!skipped.empty()) run.report.checks.back().note = "skipped rows: " + skipped;
}

void run_limits(const SuiteConfig& cfg, Runner& run) {
    const int n = cfg.n, M = cfg.M > 0 ? cfg.M : 64;
    const LittleParams lp = little_params(cfg, n);
    const BigParams bp = big_params(cfg, n);
    for (const auto& l : partitions_up_to(n, cfg.max_degree)) {
        run.block("limits.little." + label(l), "rescaled polynomials approach the little family", 1e-4,
                  [&] { scan_records(run, "limits.little." + label(l), limit_scan_little(l, lp, cfg.eps0, cfg.kmax), 1e-4); });
        run.block("limits.big." + label(l), "rescaled polynomials approach the big family", 1e-4,
                  [&] { scan_records(run, "limits.big." + label(l), limit_scan_big(l, bp, cfg.eps0, cfg.kmax), 1e-4); });
    }
    Partition l(n, 0), m(n, 0);
    l[0] = 1;
    const std::string pair = label(l) + "|" + label(m);
    const std::string anchor = "renormalized pairing over the little/big pairing tends to 2^n n! (q;q)^{-2n} (1-q)^{-n}";
    // Rows whose weights leave the double range are skipped and noted.
    run.block("limits.measure.little." + pair, anchor, 1e-3, [&] {
        scan_records(run, "limits.measure.little." + pair,
                     measure_limit_little(l, m, lp, cfg.eps0, 0, cfg.kmax, M), 1e-3);
    });
    run.block("limits.measure.big." + pair, anchor, 1e-3, [&] {
        scan_records(run, "limits.measure.big." + pair, measure_limit_big(l, m, bp, cfg.eps0, 0, cfg.kmax, M),
                     1e-3);
    });
}

// ---------------------------------------------------------------- selberg

void run_selberg(const SuiteConfig& cfg, Runner& run) {
    const JacksonTolerance jt = jackson_tol(cfg);
    if (cfg.n == 1) {
        run.check("selberg.q_beta", "one-variable Jackson integral equals B_q(alpha+1, beta+1)", 1e-10, [&] {
            const LittleParams p = little_params(cfg, 1);
            const double al = p.alpha(), be = log_base(p.b, p.q), q = p.q;
            const double B = qgamma(al + 1.0, p.a * q, q) * qgamma(be + 1.0, p.b * q, q) /
                             qgamma(al + be + 2.0, p.a * p.b * q * q, q);
            return std::pair<cplx, cplx>(bilinear_little(one(1), one(1), p, jt).value, B);
        });
    }
    for (int k = 1; k <= cfg.n; ++k) {
        const std::string ks = std::to_string(k);
        run.check("selberg.little.n=" + ks, "Jackson integral of the little weight equals the q-Gamma product",
                  1e-8, [&] {
                      const LittleParams p = little_params(cfg, k);
                      return std::pair<cplx, cplx>(bilinear_little(one(k), one(k), p, jt).value, selberg_little(p));
                  });
        run.check("selberg.big.n=" + ks, "c-weighted Jackson integral of the big weight equals the product", 1e-7,
                  [&] {
                      const BigParams p = big_params(cfg, k);
                      return std::pair<cplx, cplx>(bilinear_big(one(k), one(k), p, jt).value, selberg_big(p));
                  });
        run.check("selberg.gustafson.n=" + ks, "torus integral of the weight equals the Gustafson product",
                  k <= 2 ? 1e-8 : 1e-6, [&] {
                      const AWParams p = aw_params(cfg);
                      return std::pair<cplx, cplx>(torus_bilinear(one(k), one(k), p, grid_for(cfg, k)).value,
                                                   gustafson_constant(k, p));
                  });
    }
}

}  // namespace

void SuiteConfig::validate() const {
    if (std::find(kSuites.begin(), kSuites.end(), suite) == kSuites.end()) {
        throw ConfigError("config: unknown suite '" + suite + "'");
    }
    if (n < 1 || n > 3) throw ConfigError("config: n must lie in 1..3");
    if (max_degree < 0 || max_degree > 8) throw ConfigError("config: maxdeg must lie in 0..8");
    if (!(q > 0.0 && q < 1.0)) throw ConfigError("config: q must lie in (0,1)");
    if (!(t > 0.0 && t < 1.0)) throw ConfigError("config: t must lie in (0,1)");
    if (N < 0) throw ConfigError("config: N must be >= 0");
    if (M < 0 || M % 2 != 0) throw ConfigError("config: M must be even and >= 0");
    if (M > 0 && M < 8) throw ConfigError("config: M must be at least 8");
    if (depth < 0) throw ConfigError("config: depth must be >= 0");
    if (tol < 0.0 || !std::isfinite(tol)) throw ConfigError("config: tol must be positive (0 keeps the defaults)");
    if (kmax < 0 || kmax > 40) throw ConfigError("config: kmax must lie in 0..40");
    if (!(eps0 > 0.0)) throw ConfigError("config: eps0 must be positive");
    if (format != "json" && format != "text") throw ConfigError("config: format must be json or text");
}

std::map<std::string, std::string> SuiteConfig::echo() const {
    return {{"suite", suite},
            {"n", std::to_string(n)},
            {"maxdeg", std::to_string(max_degree)},
            {"q", num(q)},
            {"t", num(t)},
            {"t0", num(tp[0])},
            {"t1", num(tp[1])},
            {"t2", num(tp[2])},
            {"t3", num(tp[3])},
            {"a", num(a)},
            {"b", num(b)},
            {"c", num(c)},
            {"d", num(d)},
            {"N", std::to_string(N)},
            {"M", std::to_string(M)},
            {"depth", std::to_string(depth)},
            {"tol", num(tol)},
            {"seed", std::to_string(seed)},
            {"kmax", std::to_string(kmax)},
            {"eps0", num(eps0)}};
}

SuiteConfig default_config(const std::string& suite) {
    SuiteConfig c;
    c.suite = suite;
    if (suite == "aw") {
        // Conjugate pair (t2, t3) keeps the form real; |t_i| < 1.
        c.n = 2;
        c.max_degree = 4;
        c.q = 0.4;
        c.t = 0.3;
        c.tp = {0.5, -0.35, cplx(0.2, 0.3), cplx(0.2, -0.3)};
    } else if (suite == "qracah") {
        c.n = 2;
        c.N = 2;
        c.max_degree = 0;
        c.q = 0.5;
        c.t = 0.6;
        c.tp = {0.3, -0.4, 0.2, 0.45};
    } else if (suite == "little") {
        c.n = 2;
        c.max_degree = 3;
        c.q = 0.5;
        c.t = 0.35;
        c.a = 0.6;
        c.b = 0.2;
    } else if (suite == "big") {
        c.n = 2;
        c.max_degree = 2;
        c.q = 0.5;
        c.t = 0.35;
        c.a = 0.3;
        c.b = -0.4;
        c.c = 1.0;
        c.d = 0.7;
    } else if (suite == "limits") {
        c.n = 2;
        c.max_degree = 2;
        c.q = 0.5;
        c.t = 0.35;
        c.a = 0.3;
        c.b = 0.2;
        c.c = 1.0;
        c.d = 0.7;
        c.kmax = 20;
        c.eps0 = 1.0;
    } else if (suite == "selberg") {
        c.n = 2;
        c.q = 0.5;
        c.t = 0.35;
        c.a = 0.3;
        c.b = 0.2;
        c.c = 1.0;
        c.d = 0.7;
        c.tp = {0.5, -0.35, cplx(0.2, 0.3), cplx(0.2, -0.3)};
    } else {
        throw ConfigError("config: unknown suite '" + suite + "'");
    }
    return c;
}

cplx parse_complex(const std::string& text) {
    static const std::string f = R"((\d+\.?\d*(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?))";
    static const std::regex real_only("^([+-]?)" + f + "$");
    static const std::regex imag_only("^([+-]?)" + f + "?i$");
    static const std::regex both("^([+-]?)" + f + "([+-])" + f + "?i$");
    std::string s;
    for (char ch : text) {
        if (ch != ' ' && ch != '\t') s += ch;
    }
    auto sign = [](const std::ssub_match& g) { return g.str() == "-" ? -1.0 : 1.0; };
    auto mag = [](const std::ssub_match& g) { return g.matched ? std::stod(g.str()) : 1.0; };
    std::smatch m;
    if (std::regex_match(s, m, real_only)) return sign(m[1]) * std::stod(m[2].str());
    if (std::regex_match(s, m, imag_only)) return cplx(0.0, sign(m[1]) * mag(m[2]));
    if (std::regex_match(s, m, both)) return cplx(sign(m[1]) * std::stod(m[2].str()), sign(m[3]) * mag(m[4]));
    throw ConfigError("config: cannot parse '" + text + "' as a complex number");
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw IoError("config: cannot read '" + path + "'");
    std::map<std::string, std::string> out;
    std::string line;
    int lineno = 0;
    while (std::getline(f, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("config: line " + std::to_string(lineno) + " is not key=value");
        }
        const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("config: line " + std::to_string(lineno) + " has an empty key or value");
        }
        out[key] = value;
    }
    return out;
}

SuiteConfig make_config(const std::map<std::string, std::string>& entries) {
    const auto s = entries.find("suite");
    SuiteConfig c = default_config(s == entries.end() ? "aw" : s->second);
    for (const auto& [k, v] : entries) {
        if (k == "suite") continue;
        if (k == "n") c.n = static_cast<int>(to_int(k, v));
        else if (k == "maxdeg") c.max_degree = static_cast<int>(to_int(k, v));
        else if (k == "q") c.q = to_double(k, v);
        else if (k == "t") c.t = to_double(k, v);
        else if (k.size() == 2 && k[0] == 't' && k[1] >= '0' && k[1] <= '3') c.tp[k[1] - '0'] = parse_complex(v);
        else if (k == "a") c.a = to_double(k, v);
        else if (k == "b") c.b = to_double(k, v);
        else if (k == "c") c.c = to_double(k, v);
        else if (k == "d") c.d = to_double(k, v);
        else if (k == "N") c.N = static_cast<int>(to_int(k, v));
        else if (k == "M") c.M = static_cast<int>(to_int(k, v));
        else if (k == "depth") c.depth = static_cast<int>(to_int(k, v));
        else if (k == "tol") c.tol = to_double(k, v);
        else if (k == "seed") c.seed = static_cast<std::uint64_t>(to_int(k, v));
        else if (k == "kmax") c.kmax = static_cast<int>(to_int(k, v));
        else if (k == "eps0") c.eps0 = to_double(k, v);
        else if (k == "out") c.out = v;
        else if (k == "format") c.format = v;
        else throw ConfigError("config: unknown key '" + k + "'");
    }
    c.validate();
    return c;
}

CertificationReport run_suite(const SuiteConfig& cfg) {
    cfg.validate();
    Runner run(cfg.tol);
    if (cfg.suite == "aw") run_aw(cfg, run);
    else if (cfg.suite == "qracah") run_qracah(cfg, run);
    else if (cfg.suite == "little") run_little(cfg, run);
    else if (cfg.suite == "big") run_big(cfg, run);
    else if (cfg.suite == "limits") run_limits(cfg, run);
    else run_selberg(cfg, run);
    CertificationReport r = std::move(run.report);
    r.suite = cfg.suite;
    r.config_echo = cfg.echo();
    r.sort();
    return r;
}

}  // namespace bcq::tools
