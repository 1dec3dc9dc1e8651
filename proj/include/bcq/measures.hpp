#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bcq/bcpoly.hpp"
#include "bcq/koornwinder.hpp"

namespace bcq {

// Value of a bilinear form with its numerical metadata.
struct MeasureReport {
    cplx value = 0.0;
    double abs_error_estimate = 0.0;
    int quadrature_points_per_axis = 0;
    int discrete_points_used = 0;
    int truncation_depth = 0;
};

// Matrix of pairings <f_a, f_b> for a list of polynomials.
struct GramReport {
    Eigen::MatrixXcd gram;
    // Entrywise |value(M) - value(M/2)| summed over all contributing terms.
    Eigen::MatrixXd error;
    int quadrature_points_per_axis = 0;
    int discrete_points_used = 0;
};

// One-variable continuous weight w_c(x) = (x^2, x^-2; q)_inf / prod_i (t_i x, t_i/x; q)_inf.
cplx w_c(cplx x, const AWParams& p);

// Interaction factor delta(z;t) = prod_{i<j} (z_i z_j, z_j/z_i, z_i/z_j, 1/(z_i z_j); q)_tau.
cplx delta_interaction(std::span<const cplx> z, double q, double t);

// Delta(z) = prod_j w_c(z_j) delta(z;t).
cplx weight_continuous(std::span<const cplx> z, const AWParams& p);

// Gram matrix of the torus form (angle average of f g Delta) on the uniform
// M-point grid per axis; M must be even and at least 2 deg + 8.
GramReport torus_gram(const std::vector<LaurentPolynomial>& polys, const AWParams& p, int M);
MeasureReport torus_bilinear(const LaurentPolynomial& f, const LaurentPolynomial& g, const AWParams& p, int M);

// Residue of w_c(x)/x at x = tau0 q^i, by the closed product formula.
cplx wd_residue_weight(int i, cplx tau0, cplx tau1, cplx tau2, cplx tau3, double q);

// Discrete weight Delta^(d)(rho q^lambda; t_param) of the chain rho_j =
// t_param t^{j-1}; the remaining three parameters enter each w_d factor.
cplx multi_discrete_weight(const AscendingIndex& lambda, int param, const AWParams& p);

// Discrete interaction delta_d(rho q^lambda) alone.
cplx discrete_interaction(const AscendingIndex& lambda, int param, const AWParams& p);

// delta_c(omega; z) = prod_{k,l} (w_k z_l, w_k/z_l, z_l/w_k, 1/(w_k z_l); q)_tau.
cplx interaction_c(std::span<const cplx> omega, std::span<const cplx> z, const AWParams& p);

// Point of F(r): omega = (t_i chain with labels nu, t_j chain with labels nu_prime).
struct DiscreteSupportPoint {
    int l = 0;
    int m = 0;
    int param_i = -1;
    int param_j = -1;
    AscendingIndex nu;
    AscendingIndex nu_prime;
    std::vector<cplx> omega;
};

// Indices of parameters with modulus >= 1, sorted (at most two; throws
// DomainError otherwise).
std::vector<int> large_parameters(const AWParams& p);

// F(r) in lexicographic order of (l, nu, nu_prime).
std::vector<DiscreteSupportPoint> support_F(int r, int n, const AWParams& p);

// Weight constant of Delta_r^AW that does not depend on the continuous
// variables: Delta^(d) of both chains times delta_c(omega_i; omega_j).
cplx discrete_constant(const DiscreteSupportPoint& pt, const AWParams& p);

// Partially discrete form: sum over r of 2^r n!/(n-r)! times the discrete
// sums of (n-r)-dimensional torus averages. Throws NonPositiveWeight if a
// weight that must be positive on V_AW is not.
GramReport partial_gram(const std::vector<LaurentPolynomial>& polys, const AWParams& p, int M);
MeasureReport partial_bilinear(const LaurentPolynomial& f, const LaurentPolynomial& g, const AWParams& p, int M);

// The same form for t = q^k, written with the finite interaction factor
// delta(z;q^k) and one-variable residue weights only.
GramReport natural_t_gram(const std::vector<LaurentPolynomial>& polys, const AWParams& p, int k, int M);
MeasureReport natural_t_bilinear(const LaurentPolynomial& f, const LaurentPolynomial& g, const AWParams& p, int k,
                                 int M);

// One-variable residue check: the integral of f w_c dz/(2 pi i z) over the
// circle |z| = R, with small circles around the reciprocal poles
// 1/(t_i q^k) inside it removed, against torus + 2 sum w_d f.
struct ContourCheck {
    cplx contour = 0.0;
    cplx torus = 0.0;
    cplx residues = 0.0;
    int excluded_poles = 0;
};
ContourCheck residue_contour_check(const LaurentPolynomial& f, const AWParams& p, double R, int M,
                                   double small_radius = 0.05);

// Even grid size M >= floor such that rho^M <= target, where rho < 1 is the
// largest of |t_i q^k| and 1/|t_i q^k| below 1: the trapezoid error on the
// torus decays like rho^M. At least 2 deg + 8.
int recommended_grid(const AWParams& p, int deg, int floor, double target = 1e-12);

}  // namespace bcq
