#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bcq/bcpoly.hpp"
#include "bcq/qseries.hpp"
#include "bcq/symbolic_pochhammer.hpp"

namespace bcq {

// Deformation parameters (q, t, t0..t3) of the Askey-Wilson family.
struct AWParams {
    double q = 0.5;
    double t = 0.5;
    std::array<cplx, 4> tp{};

    // t0 t1 t2 t3.
    cplx T() const { return tp[0] * tp[1] * tp[2] * tp[3]; }
    double tau() const { return log_base(t, q); }
    ParamValues values() const { return ParamValues{q, t, tp}; }

    // Throws DomainError unless 0 < q, t < 1 and every t_i is nonzero.
    void validate() const;

    // Eight distinct arguments among t_i^{+-1} and t0t1t2t3 not real >= 1.
    bool in_V() const;
    // Real or conjugate-paired parameters with no product t_k t_l real >= 1.
    bool in_V_AW() const;
};

// phi_j^+ and phi_j^- of the difference operator; j is 0-based. Throws
// PoleError if a denominator factor has modulus below 1e-12.
cplx phi_plus(int j, std::span<const cplx> z, const AWParams& p);
cplx phi_minus(int j, std::span<const cplx> z, const AWParams& p);

// (D f)(z).
cplx apply_D(const LaurentPolynomial& f, std::span<const cplx> z, const AWParams& p);

// Closed-form leading coefficient E_lambda.
cplx eigenvalue_E(const Partition& lambda, const AWParams& p);

struct OpMatrixOptions {
    std::uint64_t seed = 0x5eed;
    // Sample radii are drawn from [0.7, 1.4] * sample_scale.
    double sample_scale = 1.0;
    int max_attempts = 20;
    double cond_limit = 1e10;
    // Extra random points used to check each interpolated row.
    int check_points = 4;
};

// Coefficients E_{lambda',mu} of D m_{lambda'} for all lambda', mu below
// lambda. Row and column order follow `index`.
struct TriangularOpMatrix {
    std::vector<Partition> index;
    Eigen::MatrixXcd entries;
    // Largest relative out-of-sample residual over all rows.
    double residual = 0.0;
    // Largest equilibrated condition number accepted.
    double condition = 0.0;

    int position(const Partition& mu) const;
    cplx at(const Partition& row, const Partition& col) const;
};

// Throws IllConditioned after max_attempts rejected samples and FormMismatch
// when a diagonal entry disagrees with eigenvalue_E beyond 1e-8 relative.
TriangularOpMatrix op_matrix(const Partition& lambda, const AWParams& p, const OpMatrixOptions& opt = {});

struct Separation {
    double gap = 0.0;  // min |E_lambda - E_mu| over mu < lambda
    Partition nearest;  // the minimizing mu (empty when lambda = 0)
};

Separation eigenvalue_separation(const Partition& lambda, const AWParams& p);

// Throws EigenvalueCollision if some mu < lambda has
// |E_lambda - E_mu| <= 1e-8 max(1, |E_lambda|).
void require_separated(const Partition& lambda, const AWParams& p);

}  // namespace bcq
