#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bcq/bcpoly.hpp"
#include "bcq/jackson.hpp"
#include "bcq/measures.hpp"

namespace bcq {

// Parameters of the little q-Jacobi family: (a,b) with a in (0,1/q) and
// b < 1/q; q^alpha = a, q^beta = b, q^tau = t.
struct LittleParams {
    double q = 0.5;
    double t = 0.25;
    double a = 0.3;
    double b = 0.2;
    int n = 1;

    void validate() const;
    double alpha() const;
    double tau() const;
};

// Tolerances for the adaptive Jackson sums.
struct JacksonTolerance {
    double tol = 1e-13;
    int start_depth = 16;
    int max_depth = 400;
};

// Gram matrix of a c-weighted Jackson form with its truncation metadata.
struct JacksonGram {
    Eigen::MatrixXd gram;
    Eigen::MatrixXd error;
    int depth = 0;
    long points = 0;
};

// Gram matrix of polys (real-valued on the support) under the Jackson form
// with the given splits and weight.
JacksonGram jackson_gram(const std::vector<LaurentPolynomial>& polys, const std::vector<JacksonSplit>& splits,
                         double q, const std::function<double(const JacksonPoint&)>& weight,
                         const JacksonTolerance& tol);

// Shared interaction factor prod_{i<j} |z_i - z_j| |z_i|^{2 tau - 1}
// (q t^{-1} z_j/z_i; q)_{2 tau - 1}, in the given coordinate order.
double delta_qJ(std::span<const double> z, double q, double t);

// v_L(t^{i-1} q^nu) for the 1-based chain position i.
double v_little(int i, int nu, const LittleParams& p);

// Delta^L(rho_L q^nu) for nu in P(n).
double weight_little(const AscendingIndex& nu, const LittleParams& p);

// The form <f,g>_L and its Gram matrix on a list of S-invariant polynomials.
MeasureReport bilinear_little(const LaurentPolynomial& f, const LaurentPolynomial& g, const LittleParams& p,
                              const JacksonTolerance& tol = {});
JacksonGram gram_little(const std::vector<LaurentPolynomial>& polys, const LittleParams& p,
                        const JacksonTolerance& tol = {});

// Result of orthogonalizing m~_lambda against all m~_mu with mu < lambda.
struct GramSchmidtResult {
    LaurentPolynomial poly;
    std::vector<Partition> basis;
    std::vector<double> coeffs;  // coefficient of m~_basis[i]
    double condition = 1.0;
};

// Solves for P = m~_lambda + sum_{mu<lambda} c_mu m~_mu from a Gram matrix of
// {m~_mu : mu <= lambda} in graded-lex order. Throws IllConditioned above
// condition 1e12.
GramSchmidtResult orthogonalize(const Partition& lambda, const Eigen::MatrixXd& gram);

GramSchmidtResult little_polynomial(const Partition& lambda, const LittleParams& p,
                                    const JacksonTolerance& tol = {});

// N+_qJ N-_qJ and the Selberg-type product, shared with the big family.
double norm_qJ_product(const Partition& lambda, double q, double t, double a, double b);
double selberg_qJ_product(int n, double q, double t, double a, double b);

// Closed norm N^L(lambda) and the constant term <1,1>_L.
double norm_little(const Partition& lambda, const LittleParams& p);
double selberg_little(const LittleParams& p);

// m~_mu for every mu dominated by lambda, in graded-lex order.
std::vector<LaurentPolynomial> symmetric_monomials(const Partition& lambda);

}  // namespace bcq
