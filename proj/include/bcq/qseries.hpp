#pragma once

#include <complex>
#include <span>
#include <vector>

namespace bcq {

using cplx = std::complex<double>;

// z^k for integer k by repeated squaring.
inline cplx ipow(cplx z, int k) {
    if (k < 0) return 1.0 / ipow(z, -k);
    cplx r = 1.0;
    while (k) {
        if (k & 1) r *= z;
        z *= z;
        k >>= 1;
    }
    return r;
}

// Default truncation scale for infinite products: one unit in the last place.
inline constexpr double kMachineScale = 1.1102230246251565e-16;  // 2^-53

// A denominator factor |1 - a q^j| below this is treated as a pole.
inline constexpr double kPoleGuard = 1e-13;

// Throws DomainError unless 0 < q < 1.
void require_base(double q);

// (a;q)_k = prod_{i<k} (1 - a q^i), multiplied in the order i = 0..k-1.
cplx qpoch(cplx a, double q, int k);

// (a;q)_inf. The product stops at the first j with
// |a| q^j < rel_tol * (1 - q), so the result has relative error below rel_tol.
cplx qpoch_inf(cplx a, double q, double rel_tol = kMachineScale);

// Same product, but throws PoleError if some factor is within kPoleGuard of 0.
// Used wherever the value ends up in a denominator.
cplx qpoch_inf_nonzero(cplx a, double q, double rel_tol = kMachineScale);

// (a;q)_inf / (a s;q)_inf for any real s > 0. With s = q^b this is (a;q)_b.
cplx qpoch_ratio(cplx a, double q, double s);

// (a;q)_tau with q^tau = t supplied directly, t in (0,1].
cplx qpoch_real(cplx a, double q, double t);

// Products over several bases.
cplx qpoch(std::span<const cplx> as, double q, int k);
cplx qpoch_inf(std::span<const cplx> as, double q);
cplx qpoch_inf_nonzero(std::span<const cplx> as, double q);
cplx qpoch_real(std::span<const cplx> as, double q, double t);

// theta(x) = (q, x, q/x; q)_inf. Throws DomainError at x = 0.
cplx theta(cplx x, double q);

// Gamma_q(u) = (q;q)_inf (1-q)^{1-u} / (q^u;q)_inf for real u.
double qgamma(double u, double q);

// Gamma_q(u) with q^u supplied exactly by the caller.
double qgamma(double u, double qu, double q);

// Psi_t(x) = |x|^{2 tau - 1} theta(t x) / theta(q x / t), q^tau = t.
double psi_t(double x, double q, double t);

// tau = log_q(t), computed once per parameter set.
double log_base(double t, double q);

// Exponent u = k + c_tau*tau + c_alpha*alpha + c_beta*beta where
// q^tau = t, q^alpha = a, q^beta = b.
struct QExponent {
    int k = 0;
    int c_tau = 0;
    int c_alpha = 0;
    int c_beta = 0;
};

// Product of Gamma_q values with exponents of the above form. Each factor is
// written as (q;q)_inf (1-q)^{1-u} / (q^u;q)_inf with q^u assembled from
// (q, t, a, b); the (1-q) powers are collected symbolically so that a or b
// may be nonpositive as long as alpha or beta cancel from the total.
class QGammaProduct {
public:
    QGammaProduct(double q, double t, double a, double b);

    void mul(const QExponent& u);
    void div(const QExponent& u);
    // Multiply by an arbitrary real constant.
    void scale(double c) { scale_ *= c; }

    double value() const;

private:
    double qpow(const QExponent& u) const;
    void accumulate(const QExponent& u, int sign);

    double q_, t_, a_, b_;
    double scale_ = 1.0;
    double pochs_ = 1.0;
    int count_ = 0;           // net number of Gamma factors
    long exp_k_ = 0;          // sum of u over factors (signed)
    long exp_tau_ = 0;
    long exp_alpha_ = 0;
    long exp_beta_ = 0;
};

}  // namespace bcq
