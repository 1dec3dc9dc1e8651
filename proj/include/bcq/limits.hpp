#pragma once

#include <string>
#include <vector>

#include "bcq/askey_wilson.hpp"
#include "bcq/qjacobi_big.hpp"
#include "bcq/qjacobi_little.hpp"

namespace bcq {

// t_L(eps) = (q^{1/2}/eps, -a q^{1/2}, eps b q^{1/2}, -q^{1/2}) and scale u = q^{-1/2} eps.
AWParams little_to_aw(const LittleParams& p, double eps);
double little_scale(const LittleParams& p, double eps);

// t_B(eps) = ((qc/d)^{1/2}/eps, -(qd/c)^{1/2}/eps, eps a (qd/c)^{1/2}, -eps b (qc/d)^{1/2})
// and scale u = eps (cd/q)^{1/2}.
AWParams big_to_aw(const BigParams& p, double eps);
double big_scale(const BigParams& p, double eps);

// u^{|lambda|} P_lambda(z/u) with P computed at p; sampling radii are scaled by 1/u.
LaurentPolynomial rescaled_aw_polynomial(const Partition& lambda, const AWParams& p, double u);

struct LimitRow {
    int k = 0;
    double eps = 0.0;
    double distance = 0.0;
    bool skipped = false;
    std::string note;
};

struct LimitTable {
    std::vector<LimitRow> rows;
    double final_distance = 0.0;
    // The last kTrendRows computed distances are strictly decreasing, or the
    // final distance is already below kFloor.
    bool eventually_decreasing = false;
    static constexpr int kTrendRows = 4;
    static constexpr double kFloor = 1e-9;
};

// Coefficient distance between the rescaled Askey-Wilson polynomial at
// eps_k = eps0 q^k and the Gram-Schmidt polynomial, for k = 0..kmax. Pole and
// collision failures mark the row as skipped.
LimitTable limit_scan_little(const Partition& lambda, const LittleParams& p, double eps0, int kmax);
LimitTable limit_scan_big(const Partition& lambda, const BigParams& p, double eps0, int kmax);

// Renormalized Askey-Wilson pairing <m_lambda, m_mu> at eps_k divided by
// <m~_lambda, m~_mu> and by 2^n n! (q;q)^{-2n} (1-q)^{-n}; the distance column
// holds |ratio - 1|. M is the torus grid for the continuous directions.
LimitTable measure_limit_little(const Partition& lambda, const Partition& mu, const LittleParams& p, double eps0,
                                int kmin, int kmax, int M);
LimitTable measure_limit_big(const Partition& lambda, const Partition& mu, const BigParams& p, double eps0,
                             int kmin, int kmax, int M);

// 2^n n! (q;q)_inf^{-2n} (1-q)^{-n}.
double limit_measure_constant(int n, double q);

}  // namespace bcq
