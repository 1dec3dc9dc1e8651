#pragma once

#include <vector>

#include "bcq/bcpoly.hpp"
#include "bcq/koornwinder.hpp"
#include "bcq/symbolic_pochhammer.hpp"

namespace bcq {

// Monic multivariable Askey-Wilson polynomial in the m_mu basis.
struct AWPolynomial {
    Partition degree;
    std::vector<Partition> support;  // mu <= degree, graded-lex order
    std::vector<cplx> coeffs;         // c_{degree,mu}; the last entry is 1
    AWParams params;

    cplx coefficient(const Partition& mu) const;
    LaurentPolynomial expand() const;
};

// Triangular eigenvector of D with eigenvalue E_lambda, by back-substitution
// on op_matrix. Throws EigenvalueCollision when the detector fires.
AWPolynomial aw_polynomial(const Partition& lambda, const AWParams& p, const OpMatrixOptions& opt = {});

// Same, reusing an op_matrix whose index contains every mu <= lambda.
AWPolynomial aw_polynomial(const Partition& lambda, const AWParams& p, const TriangularOpMatrix& M);

// N^+(lambda) and N^-(lambda) as symbolic products of infinite q-shifted
// factorials in (q, t, t0..t3).
SymbolicPochProduct norm_plus_symbolic(const Partition& lambda);
SymbolicPochProduct norm_minus_symbolic(const Partition& lambda);

// 2^n n! N^+ N^- as a single symbolic product (the 2^n n! is not included).
SymbolicPochProduct aw_norm_symbolic(const Partition& lambda);

// N(lambda) = 2^n n! N^+(lambda) N^-(lambda).
cplx aw_norm(const Partition& lambda, const AWParams& p);

// <1,1> by the direct product over (t, t^{2n-i-1} t0t1t2t3; q).
cplx gustafson_constant(int n, const AWParams& p);

// One-variable 4phi3 expression of P_lambda at z.
cplx aw1_oracle(int lambda, cplx z, const AWParams& p);

// Independent expansion of the same 4phi3 expression into the monomials
// z^k + z^{-k}, scaled to be monic.
LaurentPolynomial aw1_expansion(int lambda, const AWParams& p);

// c(lambda) = N^+(0)/N^+(lambda) prod_j (t0 t^{n-j})^{lambda_j}.
cplx renorm_constant(const Partition& lambda, const AWParams& p);

// 2^n n!.
double hyperoctahedral_order(int n);

}  // namespace bcq
