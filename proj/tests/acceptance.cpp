// Acceptance run: one PASS/FAIL line per criterion with its tolerance and
// runtime budget. Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "bcq/askey_wilson.hpp"
#include "bcq/errors.hpp"
#include "bcq/limits.hpp"
#include "bcq/measures.hpp"
#include "bcq/qjacobi_big.hpp"
#include "bcq/qjacobi_little.hpp"
#include "bcq/qracah.hpp"

using namespace bcq;

namespace {

double rel(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

LaurentPolynomial one(int n) { return LaurentPolynomial::constant(n, 1.0); }

// Worst error relative to tolerance over the sub-checks of one criterion.
class Tally {
public:
    void add(const std::string& what, double err, double tol) {
        const double r = err / tol;
        if (!(r <= 1.0)) ++failures_;
        if (!(r <= worst_ratio_)) {
            worst_ratio_ = r;
            worst_ = what;
            worst_err_ = err;
            worst_tol_ = tol;
        }
        ++count_;
    }
    void fail(const std::string& what) {
        ++failures_;
        ++count_;
        worst_ = what;
        worst_ratio_ = INFINITY;
    }
    int failures_ = 0;
    int count_ = 0;
    double worst_ratio_ = 0.0;
    double worst_err_ = 0.0;
    double worst_tol_ = 0.0;
    std::string worst_;
};

struct Criterion {
    int id;
    const char* title;
    double budget_s;
    std::function<void(Tally&)> body;
};

void gram_checks(Tally& t, const std::string& tag, const std::vector<Partition>& parts, const Eigen::MatrixXcd& G,
                 const std::function<cplx(const Partition&)>& norm, double off_tol, double diag_tol) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        t.add(tag + " diagonal", rel(G(i, i), norm(parts[i])), diag_tol);
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            const double s = std::sqrt(std::abs(G(i, i) * G(j, j)));
            t.add(tag + " off-diagonal", std::abs(G(i, j)) / s, off_tol);
            t.add(tag + " off-diagonal", std::abs(G(j, i)) / s, off_tol);
        }
    }
}

const AWParams kBase{0.4, 0.3, {0.5, -0.35, cplx(0.2, 0.3), cplx(0.2, -0.3)}};
const AWParams kOne{0.5, 0.4, {1.1, 0.3, -0.25, 0.2}};
const AWParams kTwo{0.5, 0.4, {1.1, -1.05, 0.3, 0.2}};

void c1(Tally& t) {
    const AWParams sets[] = {kBase, AWParams{0.5, 0.5, {0.3, 0.6, -0.2, 0.45}},
                             AWParams{0.3, 0.4, {cplx(0.1, 0.5), cplx(0.1, -0.5), 0.7, -0.6}}};
    const std::vector<cplx> z = {cplx(0.8, 0.9)};
    for (const auto& p : sets) {
        for (int k = 0; k <= 6; ++k) {
            const LaurentPolynomial P = aw_polynomial({k}, p).expand();
            const LaurentPolynomial ref = aw1_expansion(k, p);
            t.add("coefficients", coefficient_distance(P, ref) / ref.max_abs_coefficient(), 1e-10);
            t.add("value", rel(eval(P, z), aw1_oracle(k, z[0], p)), 1e-10);
        }
    }
}

void c2(Tally& t) {
    for (int n = 1; n <= 3; ++n) {
        const int M = n <= 2 ? 128 : 48;
        const double tol = n <= 2 ? 1e-8 : 1e-6;
        t.add("n=" + std::to_string(n), rel(torus_bilinear(one(n), one(n), kBase, M).value, gustafson_constant(n, kBase)),
              tol);
    }
}

void c3(Tally& t) {
    const auto parts = partitions_up_to(2, 4);
    std::vector<LaurentPolynomial> polys;
    for (const auto& l : parts) polys.push_back(aw_polynomial(l, kBase).expand());
    const int M = recommended_grid(kBase, 8, 128);
    const Eigen::MatrixXcd G = torus_gram(polys, kBase, M).gram;
    gram_checks(t, "torus", parts, G, [](const Partition& l) { return aw_norm(l, kBase); }, 1e-8, 1e-6);
}

void c4(Tally& t) {
    const auto parts = partitions_up_to(2, 2);
    for (const AWParams& p : {kOne, kTwo}) {
        std::vector<LaurentPolynomial> polys;
        for (const auto& l : parts) polys.push_back(aw_polynomial(l, p).expand());
        const int M = recommended_grid(p, 4, 128);
        const Eigen::MatrixXcd G = partial_gram(polys, p, M).gram;
        const std::string tag = large_parameters(p).size() == 1 ? "one chain" : "two chains";
        gram_checks(t, tag, parts, G, [&](const Partition& l) { return aw_norm(l, p); }, 1e-6, 1e-6);
    }
}

void c5(Tally& t) {
    const LaurentPolynomial fs[] = {one(1), monomial_w({1}) + monomial_w({2}) * cplx(0.5), monomial_w({3})};
    for (const auto& f : fs) {
        const ContourCheck c = residue_contour_check(f, kOne, 1.3, 512);
        t.add("contour", rel(c.contour, c.torus + c.residues), 1e-9);
    }
}

void c6(Tally& t) {
    QRacahParams p;
    p.q = 0.5;
    p.t = 0.6;
    p.t0 = 0.3;
    p.t1 = -0.4;
    p.t2 = 0.2;
    p.n = 2;
    for (int N = 1; N <= 3; ++N) {
        p.N = N;
        const auto parts = lambda_N(2, N);
        std::vector<LaurentPolynomial> polys;
        for (const auto& l : parts) polys.push_back(aw_polynomial(l, p.aw()).expand());
        gram_checks(t, "N=" + std::to_string(N), parts, gram_qR(polys, p),
                    [&](const Partition& l) { return norm_qR(l, p); }, 1e-9, 1e-8);
    }
    for (auto [n, N] : {std::pair{1, 3}, std::pair{2, 2}, std::pair{3, 1}}) {
        p.n = n;
        p.N = N;
        t.add("summation", rel(bilinear_qR(one(n), one(n), p), summation_formula_qR(p)), 1e-10);
    }
}

void c7(Tally& t) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int done = 0;
    for (int tries = 0; done < 20 && tries < 2000; ++tries) {
        AWParams g;
        g.q = 0.3 + 0.4 * u(rng);
        g.t = 0.2 + 0.6 * u(rng);
        for (auto& x : g.tp) x = (u(rng) < 0.5 ? -1.0 : 1.0) * (0.1 + 0.6 * u(rng));
        const int r = 1 + static_cast<int>(u(rng) * 3);
        AscendingIndex l(r);
        int last = 0;
        for (auto& x : l) last = x = last + static_cast<int>(u(rng) * 3);
        cplx lhs, rhs;
        try {
            lhs = multi_discrete_weight(l, 0, g);
            rhs = K_r_constant(r, g) * weight_qR(l, g);
        } catch (const PoleError&) {
            continue;
        }
        ++done;
        t.add("chain weight", rel(lhs, rhs), 1e-10);
    }
    if (done < 20) t.fail("too few admissible points");
}

void c8(Tally& t) {
    for (int n = 1; n <= 3; ++n) {
        const LittleParams p{0.5, 0.25, 0.3, 0.2, n};
        t.add("n=" + std::to_string(n), rel(bilinear_little(one(n), one(n), p).value, selberg_little(p)), 1e-8);
    }
}

void c9(Tally& t) {
    const LittleParams p{0.5, 0.35, 0.6, 0.2, 2};
    const auto parts = partitions_up_to(2, 3);
    std::vector<LaurentPolynomial> polys;
    for (const auto& l : parts) polys.push_back(little_polynomial(l, p).poly);
    const Eigen::MatrixXcd G = gram_little(polys, p).gram.cast<cplx>();
    gram_checks(t, "little", parts, G, [&](const Partition& l) { return cplx(norm_little(l, p)); }, 1e-6, 1e-6);
}

void c10(Tally& t) {
    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int done = 0;
    for (int tries = 0; done < 10 && tries < 200; ++tries) {
        BigParams r;
        r.n = 1 + tries % 3;
        r.q = 0.3 + 0.4 * u(rng);
        r.t = 0.2 + 0.6 * u(rng);
        r.c = 0.5 + u(rng);
        r.d = 0.5 + u(rng);
        const double alo = -r.c / (r.d * r.q), blo = -r.d / (r.c * r.q), hi = 1.0 / r.q;
        r.a = alo + (0.05 + 0.9 * u(rng)) * (hi - alo);
        r.b = blo + (0.05 + 0.9 * u(rng)) * (hi - blo);
        std::vector<double> x, y;
        try {
            x = c_weights_product(r);
            y = c_weights_closed(r);
        } catch (const PoleError&) {
            continue;
        }
        ++done;
        for (std::size_t j = 0; j < x.size(); ++j) t.add("dual form", rel(x[j], y[j]), 1e-9);
    }
    if (done < 10) t.fail("too few admissible points");
    for (int n = 1; n <= 2; ++n) {
        const BigParams p{0.5, 0.35, 0.3, -0.4, 1.0, 0.7, n};
        t.add("selberg", rel(bilinear_big(one(n), one(n), p).value, selberg_big(p)), 1e-7);
        for (int k = 1; k <= 2; ++k) {
            BigParams pk{0.5, std::pow(0.5, k), 0.3, 0.2, 1.0, 0.7, n};
            const double rhs = askey_evans_rhs(pk, k);
            t.add("askey-evans translation", rel(askey_evans_from_selberg(pk, k), rhs), 1e-7);
            t.add("askey-evans sum", rel(askey_evans_lhs(pk, k, 60).value, rhs), 1e-7);
        }
        for (int j = 1; j <= n; ++j) {
            const AscendingIndex lam(j - 1, 0), mu(n - j, 0);
            t.add("asymptotic match", std::abs(asymptotic_match(j, lam, mu, p, 25) - 1.0), 1e-5);
        }
    }
}

void c11(Tally& t) {
    const auto add_table = [&](const std::string& tag, const LimitTable& tab, double tol) {
        t.add(tag + " final", tab.final_distance, tol);
        if (!tab.eventually_decreasing) t.fail(tag + " not decreasing");
    };
    for (int n = 1; n <= 2; ++n) {
        const LittleParams l{0.5, 0.35, 0.6, 0.2, n};
        const BigParams b{0.5, 0.35, 0.3, -0.4, 1.0, 0.7, n};
        for (const auto& lam : partitions_up_to(n, 2)) {
            if (weight(lam) == 0) continue;
            add_table("little", limit_scan_little(lam, l, 1.0, 20), 1e-4);
            add_table("big", limit_scan_big(lam, b, 1.0, 20), 1e-4);
        }
    }
    const LittleParams l{0.5, 0.35, 0.3, 0.2, 2};
    const BigParams b{0.5, 0.35, 0.3, 0.2, 1.0, 0.7, 2};
    add_table("little measure", measure_limit_little({1, 0}, {0, 0}, l, 1.0, 0, 20, 64), 1e-3);
    add_table("big measure", measure_limit_big({1, 0}, {0, 0}, b, 1.0, 0, 20, 64), 1e-3);
}

void c12(Tally& t) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const double q = 0.45;
    for (int s = 0; s < 20; ++s) {
        const cplx a(u(rng), u(rng));
        const int k = 1 + s % 5, m = 1 + s % 3;
        // Splitting and inversion of finite products.
        t.add("poch split", rel(qpoch(a, q, k + m), qpoch(a, q, k) * qpoch(a * std::pow(q, k), q, m)), 1e-13);
        const cplx inv = qpoch(std::pow(q, 1 - k) / a, q, k) * std::pow(-a, k) * std::pow(q, k * (k - 1) / 2.0);
        t.add("poch inversion", rel(qpoch(a, q, k), inv), 1e-12);
        t.add("poch infinite split", rel(qpoch_inf(a, q), qpoch(a, q, k) * qpoch_inf(a * std::pow(q, k), q)), 1e-13);
        // theta(qx) = -theta(x)/x and theta(q/x) = theta(x).
        const cplx x = std::polar(0.5 + 0.5 * (u(rng) + 1.0), 3.0 * u(rng));
        t.add("theta shift", rel(theta(q * x, q), -theta(x, q) / x), 1e-12);
        t.add("theta reflection", rel(theta(q / x, q), theta(x, q)), 1e-12);
        // Gamma_q(u+1) = [u]_q Gamma_q(u).
        const double v = 0.2 + 2.0 * (u(rng) + 1.0);
        t.add("Gamma_q recurrence", rel(qgamma(v + 1.0, q), (1.0 - std::pow(q, v)) / (1.0 - q) * qgamma(v, q)), 1e-13);
    }
    // Dominance closure: the dominated set is closed under dominance.
    for (int n = 1; n <= 3; ++n) {
        for (const auto& lam : partitions_up_to(n, 4)) {
            int bad = 0;
            for (const auto& mu : partitions_dominated_by(lam)) {
                bad += !dominance_leq(mu, lam) + (weight(mu) > weight(lam));
                for (const auto& nu : partitions_dominated_by(mu)) bad += !dominance_leq(nu, lam);
            }
            t.add("dominance closure", bad, 0.5);
        }
    }
    // <Df,g> = <f,Dg>: E G is symmetric on the monomial basis.
    for (int n = 1; n <= 2; ++n) {
        Partition top(n, 0);
        top[0] = 3;
        for (const AWParams& p : {kBase, kOne}) {
            const TriangularOpMatrix T = op_matrix(top, p);
            std::vector<LaurentPolynomial> m;
            for (const auto& mu : T.index) m.push_back(monomial_w(mu));
            const Eigen::MatrixXcd EG = T.entries * partial_gram(m, p, 256).gram;
            t.add("D symmetry", (EG - EG.transpose()).cwiseAbs().maxCoeff() / EG.cwiseAbs().maxCoeff(), 1e-8);
        }
    }
    // W-invariance of the polynomials.
    for (const auto& lam : partitions_up_to(3, 3)) {
        const LaurentPolynomial P = aw_polynomial(lam, kBase).expand();
        const std::vector<cplx> z = {std::polar(0.9, 0.3), std::polar(1.2, -1.1), std::polar(0.7, 2.0)};
        std::vector<cplx> w = {1.0 / z[2], z[0], 1.0 / z[1]};
        t.add("W invariance", rel(eval(P, w), eval(P, z)), 1e-12);
    }
}

}  // namespace

int main() {
    const std::vector<Criterion> crits = {
        {1, "one-variable polynomials equal the monic 4phi3", 1, c1},
        {2, "torus constant term equals the Gustafson product", 60, c2},
        {3, "continuous orthogonality and norms, n=2, |lambda|<=4", 120, c3},
        {4, "partially discrete orthogonality, one and two chains", 120, c4},
        {5, "contour integral equals torus plus residues", 1, c5},
        {6, "q-Racah orthogonality, norms and summation", 30, c6},
        {7, "discrete chain weight equals K_r times the finite weight", 1, c7},
        {8, "little constant term equals the q-Gamma product", 60, c8},
        {9, "little orthogonality and norms, n=2, |lambda|<=3", 120, c9},
        {10, "big theta weights, constant terms and asymptotic matching", 120, c10},
        {11, "limit transitions to the little and big families", 300, c11},
        {12, "structural invariants", 10, c12},
    };
    int failed = 0;
    for (const auto& c : crits) {
        Tally t;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            c.body(t);
        } catch (const std::exception& e) {
            t.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = t.failures_ == 0 && t.count_ > 0 && secs < c.budget_s;
        failed += !pass;
        std::printf("%s %2d  %-58s checks=%-4d worst=%-20s err=%.2e tol=%.0e  %.2fs/%gs\n", pass ? "PASS" : "FAIL", c.id,
                    c.title, t.count_, t.worst_.c_str(), t.worst_err_, t.worst_tol_, secs, c.budget_s);
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
