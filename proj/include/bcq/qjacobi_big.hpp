#pragma once

#include <vector>

#include "bcq/qjacobi_little.hpp"

namespace bcq {

// Parameters of the big q-Jacobi family (real branch of the domain):
// c, d > 0, a in (-c/(dq), 1/q), b in (-d/(cq), 1/q).
struct BigParams {
    double q = 0.5;
    double t = 0.25;
    double a = 0.3;
    double b = 0.2;
    double c = 1.0;
    double d = 0.7;
    int n = 1;

    void validate() const;
    double tau() const;
};

// Point of <sigma_B, rho_B>_n: nu labels the rho_B = c t^{i-1} chain and
// nu_prime the sigma_B = -d t^{i-1} chain.
struct BigSupportPoint {
    int split = 0;
    AscendingIndex nu;
    AscendingIndex nu_prime;
};

// Coordinates (rho_B q^nu, sigma_B q^nu').
std::vector<double> big_point(const BigSupportPoint& pt, const BigParams& p);

// c_{B,j} = c_B d_{B,j} through Psi_t.
std::vector<double> c_weights_product(const BigParams& p);
// c_{B,j} from the closed theta expression.
std::vector<double> c_weights_closed(const BigParams& p);
// Both forms; throws FormMismatch unless they agree to 1e-9 relative and
// returns the closed one.
std::vector<double> c_weights(const BigParams& p);

// c_B for t = q^k from its simplified product.
double c_B_natural(const BigParams& p, int k);

// v_B(x) and Delta^B(z) = prod v_B(z_i) delta_qJ(z).
double v_big(double x, const BigParams& p);
double weight_big(const BigSupportPoint& pt, const BigParams& p);

// Splits of the c-weighted Jackson integral with coefficients c_{B,j}.
std::vector<JacksonSplit> big_splits(const BigParams& p);

MeasureReport bilinear_big(const LaurentPolynomial& f, const LaurentPolynomial& g, const BigParams& p,
                           const JacksonTolerance& tol = {});
JacksonGram gram_big(const std::vector<LaurentPolynomial>& polys, const BigParams& p,
                     const JacksonTolerance& tol = {});
GramSchmidtResult big_polynomial(const Partition& lambda, const BigParams& p, const JacksonTolerance& tol = {});

double norm_big(const Partition& lambda, const BigParams& p);
double selberg_big(const BigParams& p);

// Right-hand side of the iterated q-integral evaluation for t = q^k.
double askey_evans_rhs(const BigParams& p, int k);
// The same value obtained from selberg_big by removing c_B and converting
// Gamma_q(i tau)/Gamma_q(tau) to Gamma_q(ik+1)/Gamma_q(k+1).
double askey_evans_from_selberg(const BigParams& p, int k);
// Direct full-grid sum of the iterated q-integral over [-d,c]^n, for t = q^k.
MeasureReport askey_evans_lhs(const BigParams& p, int k, int depth);

// Ratio c_{B,j} Delta^B(z+(L)) / (c_{B,j-1} Delta^B(z-(L))) of the two sides
// of the asymptotic matching condition.
double asymptotic_match(int j, const AscendingIndex& lambda, const AscendingIndex& mu, const BigParams& p, int L);

}  // namespace bcq
