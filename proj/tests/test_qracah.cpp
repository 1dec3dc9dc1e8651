#include <random>

#include "bcq/askey_wilson.hpp"
#include "bcq/errors.hpp"
#include "bcq/measures.hpp"
#include "bcq/qracah.hpp"
#include "catch_amalgamated.hpp"
#include "test_util.hpp"

using namespace bcq;
using bcq::test::rel;

namespace {

QRacahParams params(int n, int N) {
    QRacahParams p;
    p.q = 0.5;
    p.t = 0.6;
    p.t0 = 0.3;
    p.t1 = -0.4;
    p.t2 = 0.2;
    p.n = n;
    p.N = N;
    return p;
}

// Textbook one-variable weight of the discrete Askey-Wilson measure at
// t0 q^x: (t0^2)_x (1 - t0^2 q^{2x}) / ((q)_x (1 - t0^2)) prod_j (t0 t_j)_x /
// (q t0/t_j)_x (q/(t0t1t2t3))^x.
cplx textbook_weight(int x, const AWParams& p) {
    const double q = p.q;
    const cplx t0 = p.tp[0];
    cplx w = qpoch(t0 * t0, q, x) * (1.0 - t0 * t0 * std::pow(q, 2 * x)) / (qpoch(q, q, x) * (1.0 - t0 * t0));
    for (int j = 1; j < 4; ++j) w *= qpoch(t0 * p.tp[j], q, x) / qpoch(q * t0 / p.tp[j], q, x);
    return w * std::pow(q / p.T(), x);
}

LaurentPolynomial one(int n) { return LaurentPolynomial::constant(n, 1.0); }

}  // namespace

TEST_CASE("qracah: one-variable weight equals the textbook weight", "[qracah]") {
    const AWParams g{0.5, 0.6, {0.3, -0.4, 0.2, 0.45}};
    for (int x = 0; x <= 6; ++x) CHECK(rel(weight_qR({x}, g), textbook_weight(x, g)) < 1e-13);
    CHECK(rel(weight_qR({0, 0}, g), 1.0) < 1e-15);
}

TEST_CASE("qracah: textbook total mass", "[qracah]") {
    // n = 1: sum_x w(x) = (q t0^2, q/(t1 t2))_N / (q t0/t1, q t0/t2)_N.
    for (int N = 1; N <= 4; ++N) {
        const QRacahParams p = params(1, N);
        const double q = p.q;
        const cplx t0 = p.t0, t1 = p.t1, t2 = p.t2;
        const cplx expect = qpoch(q * t0 * t0, q, N) * qpoch(q / (t1 * t2), q, N) /
                            (qpoch(q * t0 / t1, q, N) * qpoch(q * t0 / t2, q, N));
        cplx direct = 0.0;
        for (int x = 0; x <= N; ++x) direct += textbook_weight(x, p.aw());
        CHECK(rel(direct, expect) < 1e-13);
        CHECK(rel(bilinear_qR(one(1), one(1), p), expect) < 1e-13);
    }
}

TEST_CASE("qracah: truncation kills weights beyond N", "[qracah]") {
    const QRacahParams p = params(2, 2);
    CHECK(std::abs(weight_qR({0, 3}, p.aw())) < 1e-12 * std::abs(weight_qR({0, 2}, p.aw())));
    CHECK(qracah_support(p).size() == 6);
    CHECK(std::abs(norm_qR({3, 0}, p)) == 0.0);
}

TEST_CASE("qracah: K_r constants", "[qracah]") {
    const AWParams g{0.5, 0.25, {0.3, -0.4, cplx(0, 0.2), 0.45}};
    CHECK(rel(K_r_constant(0, g), 1.0) < 1e-15);
    // r = 1: (rho^-2)_inf / (q, rho t_j, t_j/rho)_inf, with rho = t0.
    const cplx r = g.tp[0];
    cplx den = qpoch_inf(g.q, g.q);
    for (int j = 1; j < 4; ++j) den *= qpoch_inf(r * g.tp[j], g.q) * qpoch_inf(g.tp[j] / r, g.q);
    CHECK(rel(K_r_constant(1, g), qpoch_inf(1.0 / (r * r), g.q) / den) < 1e-13);
    CHECK(rel(K_r_form1(2, g), K_r_form2(2, g)) < 1e-10);
}

TEST_CASE("qracah: chain weight equals K_r times the finite weight", "[qracah][property]") {
    std::mt19937_64 rng(61);
    int checked = 0;
    for (int trial = 0; checked < 20 && trial < 200; ++trial) {
        AWParams g;
        g.q = bcq::test::uniform(rng, 0.3, 0.7);
        g.t = bcq::test::uniform(rng, 0.2, 0.8);
        for (auto& x : g.tp) x = (bcq::test::uniform(rng, 0, 1) < 0.5 ? -1.0 : 1.0) * bcq::test::uniform(rng, 0.1, 0.7);
        const int r = 1 + trial % 3;
        AscendingIndex l(r);
        int last = 0;
        for (auto& x : l) last = x = last + static_cast<int>(bcq::test::uniform(rng, 0, 3));
        cplx lhs, rhs;
        try {
            lhs = multi_discrete_weight(l, 0, g);
            rhs = K_r_constant(r, g) * weight_qR(l, g);
        } catch (const PoleError&) {
            continue;  // not an admissible point
        }
        CHECK(rel(lhs, rhs) < 1e-10);
        ++checked;
    }
    CHECK(checked == 20);
}

TEST_CASE("qracah: summation formula", "[qracah]") {
    for (auto [n, N] : {std::pair{1, 1}, {1, 3}, {2, 2}, {3, 1}}) {
        const QRacahParams p = params(n, N);
        CHECK(rel(bilinear_qR(one(n), one(n), p), summation_formula_qR(p)) < 1e-10);
        CHECK(rel(norm_qR(Partition(n, 0), p), norm_qR_zero(n, p.aw())) < 1e-10);
        CHECK(rel(norm_qR(Partition(n, 0), p), summation_formula_qR(p)) < 1e-10);
    }
}

TEST_CASE("qracah: orthogonality on the finite support", "[qracah][property]") {
    for (int N = 1; N <= 3; ++N) {
        const QRacahParams p = params(2, N);
        const auto parts = lambda_N(2, N);
        std::vector<LaurentPolynomial> polys;
        for (const auto& l : parts) polys.push_back(aw_polynomial(l, p.aw()).expand());
        const Eigen::MatrixXcd G = gram_qR(polys, p);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            CHECK(rel(G(i, i), norm_qR(parts[i], p)) < 1e-8);
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                CHECK(std::abs(G(i, j)) <= 1e-9 * std::sqrt(std::abs(G(i, i) * G(j, j))));
                CHECK(G(i, j) == G(j, i));
            }
        }
    }
    const QRacahParams p = params(1, 2);
    const LaurentPolynomial P1 = aw_polynomial({1}, p.aw()).expand();
    CHECK(rel(bilinear_qR(P1, P1, p), norm_qR({1}, p)) < 1e-9);
}

TEST_CASE("qracah: Lambda_N", "[qracah]") {
    CHECK(lambda_N(2, 1) == std::vector<Partition>{{0, 0}, {1, 0}, {1, 1}});
    CHECK(lambda_N(1, 3).size() == 4);
}
