#include <random>

#include "bcq/errors.hpp"
#include "bcq/qjacobi_big.hpp"
#include "catch_amalgamated.hpp"
#include "test_util.hpp"

using namespace bcq;
using bcq::test::rel;
using bcq::test::uniform;

namespace {

LaurentPolynomial one(int n) { return LaurentPolynomial::constant(n, 1.0); }

double pinf(double x, double q) { return qpoch_inf(cplx(x), q).real(); }

// One-variable Jackson moments of v_B over [-d, c], summed directly.
double moment(int m, const BigParams& p) {
    double s = 0.0;
    for (int k = 0; k < 200; ++k) {
        for (double e : {p.c, -p.d}) {
            const double x = e * std::pow(p.q, k);
            const double v = pinf(p.q * x / p.c, p.q) * pinf(-p.q * x / p.d, p.q) /
                             (pinf(p.q * p.a * x / p.c, p.q) * pinf(-p.q * p.b * x / p.d, p.q));
            s += (1.0 - p.q) * std::abs(e) * std::pow(p.q, k) * std::pow(x, m) * v;
        }
    }
    return s;
}

// The constant in front of the n = 1 form: (c+d)/((-d/c, -c/d;q)_inf cd).
double c_one(const BigParams& p) {
    return (p.c + p.d) / (pinf(-p.d / p.c, p.q) * pinf(-p.c / p.d, p.q) * p.c * p.d);
}

BigParams random_big(std::mt19937_64& rng, int n) {
    BigParams p;
    p.q = uniform(rng, 0.3, 0.7);
    p.t = uniform(rng, 0.2, 0.8);
    p.c = uniform(rng, 0.4, 2.0);
    p.d = uniform(rng, 0.4, 2.0);
    p.a = uniform(rng, -0.9 * p.c / (p.d * p.q), 0.9 / p.q);
    p.b = uniform(rng, -0.9 * p.d / (p.c * p.q), 0.9 / p.q);
    p.n = n;
    return p;
}

}  // namespace

TEST_CASE("big: one-variable weight at the right endpoint", "[big]") {
    const BigParams p{0.5, 0.35, 0.3, -0.4, 1.0, 0.7, 1};
    const double want = pinf(p.q, p.q) * pinf(-p.q * p.c / p.d, p.q) /
                        (pinf(p.q * p.a, p.q) * pinf(-p.q * p.b * p.c / p.d, p.q));
    CHECK(rel(v_big(p.c, p), want) < 1e-14);
    const BigParams z{0.5, 0.35, 0.0, 0.0, 1.0, 0.7, 1};
    CHECK(rel(v_big(-0.35, z), pinf(-0.35 * 0.5, 0.5) * pinf(0.25, 0.5)) < 1e-14);
}

// Direct 200-term sum from tools/oracle_values.py.
TEST_CASE("big: frozen one-variable Jackson integral", "[big]") {
    const BigParams p{0.5, 0.5, 0.3, 0.2, 1.0, 0.7, 1};
    CHECK(rel(moment(0, p), 1.5315875571409056593) < 1e-14);
    CHECK(rel(askey_evans_lhs(p, 1, 80).value.real(), 1.5315875571409056593) < 1e-13);
    CHECK(rel(bilinear_big(one(1), one(1), p).value.real(), c_one(p) * 1.5315875571409056593) < 1e-12);
}

TEST_CASE("big: both theta-weight expressions agree", "[big][property]") {
    std::mt19937_64 rng(314);
    int done = 0;
    for (int trial = 0; done < 10 && trial < 200; ++trial) {
        const BigParams p = random_big(rng, 1 + trial % 3);
        std::vector<double> a, b;
        try {
            a = c_weights_product(p);
            b = c_weights_closed(p);
        } catch (const PoleError&) {
            continue;
        }
        ++done;
        REQUIRE(a.size() == static_cast<std::size_t>(p.n + 1));
        for (int j = 0; j <= p.n; ++j) CHECK(rel(a[j], b[j]) < 1e-9);
    }
    CHECK(done == 10);
}

TEST_CASE("big: theta weights at integer tau", "[big]") {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 2; ++k) {
            BigParams p{0.5, 0.25, 0.3, -0.4, 1.0, 0.7, n};
            p.t = std::pow(p.q, k);
            const auto cw = c_weights(p);
            for (double w : cw) CHECK(rel(w, c_B_natural(p, k)) < 1e-9);
        }
    }
    BigParams p{0.5, 0.35, 0.3, -0.4, 1.0, 0.7, 1};
    const auto cw = c_weights(p);
    CHECK(rel(cw[0], c_one(p)) < 1e-12);
    CHECK(rel(cw[1], c_one(p)) < 1e-12);
}

TEST_CASE("big: Selberg product equals the constant term", "[big][property]") {
    for (int n = 1; n <= 2; ++n) {
        for (const BigParams& p : {BigParams{0.5, 0.35, 0.3, -0.4, 1.0, 0.7, n},
                                   BigParams{0.5, 0.5, 0.3, 0.2, 1.0, 0.7, n}}) {
            CHECK(rel(bilinear_big(one(n), one(n), p).value.real(), selberg_big(p)) < 1e-7);
            CHECK(rel(norm_big({0}, BigParams{p.q, p.t, p.a, p.b, p.c, p.d, 1}),
                      selberg_big(BigParams{p.q, p.t, p.a, p.b, p.c, p.d, 1})) < 1e-14);
        }
    }
    const BigParams s{0.5, 0.35, 0.3, 0.3, 0.8, 0.8, 2};
    const BigParams w{0.5, 0.35, s.b, s.a, s.d, s.c, 2};
    CHECK(rel(selberg_big(s), selberg_big(w)) < 1e-14);
}

TEST_CASE("big: Askey-Evans evaluation", "[big]") {
    for (int n = 1; n <= 2; ++n) {
        for (int k = 1; k <= 2; ++k) {
            BigParams p{0.5, 0.25, 0.3, 0.2, 1.0, 0.7, n};
            p.t = std::pow(p.q, k);
            const double rhs = askey_evans_rhs(p, k);
            CHECK(rel(askey_evans_from_selberg(p, k), rhs) < 1e-10);
            const auto lhs = askey_evans_lhs(p, k, 60);
            CHECK(rel(lhs.value.real(), rhs) < 1e-8);
        }
    }
}

TEST_CASE("big: asymptotic matching across splits", "[big][property]") {
    const BigParams p1{0.5, 0.35, 0.3, -0.4, 1.0, 0.7, 1};
    CHECK(std::abs(asymptotic_match(1, {}, {}, p1, 25) - 1.0) < 1e-6);
    const BigParams p2{0.5, 0.35, 0.3, -0.4, 1.0, 0.7, 2};
    CHECK(std::abs(asymptotic_match(1, {}, {0}, p2, 25) - 1.0) < 1e-5);
    CHECK(std::abs(asymptotic_match(2, {0}, {}, p2, 25) - 1.0) < 1e-5);
    // Convergence in L is monotone once past the transient.
    for (int j = 1; j <= 2; ++j) {
        const AscendingIndex lam = j == 1 ? AscendingIndex{} : AscendingIndex{1};
        const AscendingIndex mu = j == 1 ? AscendingIndex{1} : AscendingIndex{};
        double prev = std::abs(asymptotic_match(j, lam, mu, p2, 10) - 1.0);
        for (int L = 11; L <= 30; ++L) {
            const double e = std::abs(asymptotic_match(j, lam, mu, p2, L) - 1.0);
            CHECK((e <= prev || e < 1e-13));
            prev = e;
        }
    }
}

TEST_CASE("big: integer tau makes neighbouring theta weights equal", "[big]") {
    BigParams p{0.5, 0.5, 0.3, -0.4, 1.0, 0.7, 2};
    const auto cw = c_weights(p);
    for (std::size_t j = 1; j < cw.size(); ++j) CHECK(rel(cw[j], cw[j - 1]) < 1e-12);
    CHECK(std::abs(asymptotic_match(1, {}, {0}, p, 25) - 1.0) < 1e-5);
}

TEST_CASE("big: one-variable polynomial matches the moment oracle", "[big]") {
    const BigParams p{0.5, 0.35, 0.3, -0.4, 1.0, 0.7, 1};
    const double m0 = moment(0, p), m1 = moment(1, p), m2 = moment(2, p);
    const auto P = big_polynomial({1}, p);
    CHECK(rel(P.poly.coefficient({0}), -m1 / m0) < 1e-10);
    // <P_1, P_1> = c (m2 - m1^2/m0).
    CHECK(rel(norm_big({1}, p), c_one(p) * (m2 - m1 * m1 / m0)) < 1e-9);
}

TEST_CASE("big: orthogonality and norms", "[big][property]") {
    for (const BigParams& p : {BigParams{0.5, 0.35, 0.3, -0.4, 1.0, 0.7, 2}, BigParams{0.5, 0.35, 0.0, 0.0, 1.0, 0.7, 2},
                               BigParams{0.4, 0.3, 0.5, 0.3, 0.8, 1.3, 1}}) {
        const auto parts = partitions_up_to(p.n, 3);
        std::vector<LaurentPolynomial> polys;
        for (const auto& l : parts) polys.push_back(big_polynomial(l, p).poly);
        const Eigen::MatrixXd G = gram_big(polys, p).gram;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            CHECK(G(i, i) > 0.0);
            CHECK(rel(G(i, i), norm_big(parts[i], p)) < 1e-6);
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                CHECK(std::abs(G(i, j)) <= 1e-6 * std::sqrt(G(i, i) * G(j, j)));
            }
        }
    }
}

TEST_CASE("big: weights and norms are positive", "[big][property]") {
    std::mt19937_64 rng(2718);
    int done = 0;
    for (int trial = 0; done < 10 && trial < 200; ++trial) {
        const BigParams p = random_big(rng, 1 + trial % 2);
        try {
            c_weights(p);
        } catch (const PoleError&) {
            continue;
        }
        ++done;
        const auto parts = partitions_up_to(p.n, 3);
        CHECK(norm_big(parts[trial % parts.size()], p) > 0.0);
        for (int j = 0; j <= p.n; ++j) {
            for (const auto& nu : ascending_indices(j, 4)) {
                for (const auto& nup : ascending_indices(p.n - j, 4)) {
                    CHECK(weight_big(BigSupportPoint{j, nu, nup}, p) > 0.0);
                }
            }
        }
    }
    CHECK(done == 10);
}

TEST_CASE("big: parameter domain", "[big]") {
    CHECK_THROWS_AS((BigParams{0.5, 0.35, 0.3, 0.2, -1.0, 0.7, 1}.validate()), DomainError);
    CHECK_THROWS_AS((BigParams{0.5, 0.35, 2.5, 0.2, 1.0, 0.7, 1}.validate()), DomainError);
    CHECK_THROWS_AS((BigParams{0.5, 0.35, -3.0, 0.2, 1.0, 0.7, 1}.validate()), DomainError);
}
