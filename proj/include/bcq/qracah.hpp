#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bcq/bcpoly.hpp"
#include "bcq/koornwinder.hpp"
#include "bcq/symbolic_pochhammer.hpp"

namespace bcq {

// Truncated parameters (t0, t1, t2, t3 = t^{1-n} t0^{-1} q^{-N}).
struct QRacahParams {
    double q = 0.5;
    double t = 0.5;
    cplx t0 = 0.3;
    cplx t1 = -0.4;
    cplx t2 = 0.2;
    int n = 1;
    int N = 1;

    // t3 from the stored triple, computed once.
    cplx t3() const;
    AWParams aw() const;
    // Monomial t^{1-n} t0^{-1} q^{-N} replacing t3 in symbolic products.
    ParamMonomial t3_monomial() const;
};

// Delta^qR(rho q^lambda) for an ascending lambda of any length r.
cplx weight_qR(const AscendingIndex& lambda, const AWParams& p);

// K_r by the product with the pair factors (first form) and by the
// simplified product (second form).
cplx K_r_form1(int r, const AWParams& p);
cplx K_r_form2(int r, const AWParams& p);
// Both forms; throws FormMismatch unless they agree to 1e-10 relative.
cplx K_r_constant(int r, const AWParams& p);

// Second form as a symbolic product.
SymbolicPochProduct K_r_symbolic(int r);

// Support rho q^lambda of the finite form: lambda in P(n) with lambda_n <= N.
std::vector<AscendingIndex> qracah_support(const QRacahParams& p);
std::vector<cplx> qracah_point(const AscendingIndex& lambda, const QRacahParams& p);

// Finite sum over the support, in lexicographic order.
cplx bilinear_qR(const LaurentPolynomial& f, const LaurentPolynomial& g, const QRacahParams& p);
Eigen::MatrixXcd gram_qR(const std::vector<LaurentPolynomial>& polys, const QRacahParams& p);

// N(lambda)/(K_n 2^n n!) with t3 substituted before evaluation, so the
// vanishing factors cancel symbolically. Returns 0 when lambda_1 > N.
cplx norm_qR(const Partition& lambda, const QRacahParams& p);

// Closed product for <1,1>_qR.
cplx summation_formula_qR(const QRacahParams& p);

// N^qR(0) for untruncated parameters as a single product.
cplx norm_qR_zero(int n, const AWParams& p);

// Lambda_N in graded-lex order.
std::vector<Partition> lambda_N(int n, int N);

}  // namespace bcq
