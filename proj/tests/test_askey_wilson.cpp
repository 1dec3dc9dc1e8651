#include <random>

#include "bcq/askey_wilson.hpp"
#include "bcq/errors.hpp"
#include "bcq/measures.hpp"
#include "catch_amalgamated.hpp"
#include "test_util.hpp"

using namespace bcq;
using bcq::test::rel;

namespace {

const AWParams kBase{0.4, 0.3, {0.5, -0.35, cplx(0.2, 0.3), cplx(0.2, -0.3)}};

const AWParams kSets[] = {
    kBase,
    AWParams{0.5, 0.5, {0.3, 0.6, -0.2, 0.45}},
    AWParams{0.3, 0.4, {cplx(0.1, 0.5), cplx(0.1, -0.5), 0.7, -0.6}},
};

}  // namespace

// Frozen values from tools/oracle_values.py: the monic 4phi3 and
// adaptive quadrature of the one-variable torus integrals.
TEST_CASE("askey_wilson: frozen one-variable values", "[askey_wilson]") {
    const AWPolynomial P = aw_polynomial({2}, kBase);
    const std::vector<cplx> z = {std::polar(1.1, 0.7)};
    CHECK(rel(eval(P.expand(), z), cplx(0.68700203468958892013, 0.28015090816310890181)) < 1e-12);
    CHECK(rel(gustafson_constant(1, kBase), 4.7222567068906591654) < 1e-13);
    CHECK(rel(aw_norm({0}, kBase), 4.7222567068906591654) < 1e-13);
    CHECK(rel(aw_norm({2}, kBase), 2.2139292836247205824) < 1e-12);
}

TEST_CASE("askey_wilson: trivial cases", "[askey_wilson]") {
    const AWPolynomial P = aw_polynomial({0, 0}, kBase);
    CHECK(coefficient_distance(P.expand(), LaurentPolynomial::constant(2, 1.0)) == 0.0);
    CHECK(rel(renorm_constant({0, 0}, kBase), 1.0) < 1e-15);
    CHECK(hyperoctahedral_order(1) == 2.0);
    CHECK(hyperoctahedral_order(3) == 48.0);
}

TEST_CASE("askey_wilson: one-variable polynomials equal the 4phi3", "[askey_wilson][property]") {
    for (const auto& p : kSets) {
        for (int k = 0; k <= 6; ++k) {
            const AWPolynomial P = aw_polynomial({k}, p);
            const LaurentPolynomial ref = aw1_expansion(k, p);
            CHECK(coefficient_distance(P.expand(), ref) <= 1e-10 * ref.max_abs_coefficient());
            const std::vector<cplx> z = {cplx(0.8, 0.9)};
            CHECK(rel(eval(P.expand(), z), aw1_oracle(k, z[0], p)) < 1e-10);
        }
    }
}

TEST_CASE("askey_wilson: eigenfunction property", "[askey_wilson][property]") {
    std::mt19937_64 rng(41);
    for (int n = 1; n <= 2; ++n) {
        for (const auto& lambda : partitions_up_to(n, 4)) {
            const LaurentPolynomial P = aw_polynomial(lambda, kBase).expand();
            const cplx E = eigenvalue_E(lambda, kBase);
            for (int k = 0; k < 20; ++k) {
                std::vector<cplx> z(n);
                for (auto& x : z) x = bcq::test::random_complex(rng, 0.7, 1.4);
                const cplx v = eval(P, z);
                CHECK(std::abs(apply_D(P, z, kBase) - E * v) <= 1e-8 * (1.0 + std::abs(E)) * std::abs(v));
            }
        }
    }
}

TEST_CASE("askey_wilson: real coefficients at conjugate-pair parameters", "[askey_wilson][property]") {
    for (const auto& lambda : partitions_up_to(2, 4)) {
        const AWPolynomial P = aw_polynomial(lambda, kBase);
        for (const cplx& c : P.coeffs) CHECK(std::abs(c.imag()) <= 1e-9 * std::abs(c) + 1e-300);
        const cplx N = aw_norm(lambda, kBase);
        CHECK(std::abs(N.imag()) <= 1e-12 * std::abs(N));
        CHECK(N.real() > 0.0);
    }
}

TEST_CASE("askey_wilson: renormalization constant is finite and nonzero", "[askey_wilson]") {
    for (const auto& p : kSets) {
        for (const auto& lambda : partitions_up_to(2, 4)) {
            const cplx c = renorm_constant(lambda, p);
            CHECK(std::isfinite(std::abs(c)));
            CHECK(std::abs(c) > 0.0);
        }
    }
}

TEST_CASE("askey_wilson: Gustafson product against a direct evaluation", "[askey_wilson]") {
    // n = 1: 2 (t0t1t2t3;q)_inf / ((q;q)_inf prod_{i<j} (t_i t_j;q)_inf).
    const AWParams& p = kSets[1];
    cplx den = qpoch_inf(p.q, p.q);
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) den *= qpoch_inf(p.tp[i] * p.tp[j], p.q);
    }
    CHECK(rel(gustafson_constant(1, p), 2.0 * qpoch_inf(p.T(), p.q) / den) < 1e-14);
}

TEST_CASE("askey_wilson: norms match the torus Gram matrix", "[askey_wilson]") {
    std::vector<LaurentPolynomial> polys;
    const auto parts = partitions_up_to(2, 2);
    for (const auto& l : parts) polys.push_back(aw_polynomial(l, kBase).expand());
    const GramReport G = torus_gram(polys, kBase, 64);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        CHECK(rel(G.gram(i, i), aw_norm(parts[i], kBase)) < 1e-10);
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            CHECK(std::abs(G.gram(i, j)) <= 1e-10 * std::sqrt(std::abs(G.gram(i, i) * G.gram(j, j))));
        }
    }
}
