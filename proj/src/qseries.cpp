#include "bcq/qseries.hpp"

#include <cmath>
#include <string>

#include "bcq/errors.hpp"

namespace bcq {

namespace {

constexpr int kMaxFactors = 1 << 20;

void check_base(double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0,1)");
}

template <bool Guard>
cplx inf_product(cplx a, double q, double rel_tol) {
    check_base(q);
    cplx prod = 1.0;
    cplx aj = a;
    for (int j = 0; j < kMaxFactors; ++j) {
        // The discarded tail changes the log of the product by at most |a q^j|/(1-q).
        if (std::abs(aj) < rel_tol * (1.0 - q)) return prod;
        const cplx f = 1.0 - aj;
        if constexpr (Guard) {
            if (std::abs(f) < kPoleGuard) {
                throw PoleError("(a;q)_inf has a vanishing factor at j=" + std::to_string(j));
            }
        }
        prod *= f;
        aj *= q;
    }
    throw SlowConvergence("infinite q-product did not terminate");
}

}  // namespace

void require_base(double q) { check_base(q); }

cplx qpoch(cplx a, double q, int k) {
    if (k < 0) throw DomainError("finite q-shifted factorial needs k >= 0");
    cplx prod = 1.0;
    cplx aj = a;
    for (int i = 0; i < k; ++i) {
        prod *= 1.0 - aj;
        aj *= q;
    }
    return prod;
}

cplx qpoch_inf(cplx a, double q, double rel_tol) {
    if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
    return inf_product<false>(a, q, rel_tol);
}

cplx qpoch_inf_nonzero(cplx a, double q, double rel_tol) {
    if (!(rel_tol > 0.0)) throw DomainError("rel_tol must be positive");
    return inf_product<true>(a, q, rel_tol);
}

cplx qpoch_ratio(cplx a, double q, double s) {
    check_base(q);
    if (!(s > 0.0)) throw DomainError("qpoch_ratio needs s > 0");
    // Factor by factor, so large |a| cannot overflow either product.
    cplx prod = 1.0;
    cplx an = a, ad = a * s;
    const double stop = kMachineScale * (1.0 - q);
    for (int j = 0; j < kMaxFactors; ++j) {
        if (std::abs(an) < stop && std::abs(ad) < stop) return prod;
        const cplx den = 1.0 - ad;
        if (std::abs(den) < kPoleGuard) throw PoleError("(a s;q)_inf has a vanishing factor at j=" + std::to_string(j));
        prod *= (1.0 - an) / den;
        an *= q;
        ad *= q;
    }
    throw SlowConvergence("infinite q-product ratio did not terminate");
}

cplx qpoch_real(cplx a, double q, double t) {
    if (!(t > 0.0 && t <= 1.0)) throw DomainError("qpoch_real needs t in (0,1]");
    return qpoch_ratio(a, q, t);
}

cplx qpoch(std::span<const cplx> as, double q, int k) {
    cplx r = 1.0;
    for (cplx a : as) r *= qpoch(a, q, k);
    return r;
}

cplx qpoch_inf(std::span<const cplx> as, double q) {
    cplx r = 1.0;
    for (cplx a : as) r *= qpoch_inf(a, q);
    return r;
}

cplx qpoch_inf_nonzero(std::span<const cplx> as, double q) {
    cplx r = 1.0;
    for (cplx a : as) r *= qpoch_inf_nonzero(a, q);
    return r;
}

cplx qpoch_real(std::span<const cplx> as, double q, double t) {
    cplx r = 1.0;
    for (cplx a : as) r *= qpoch_real(a, q, t);
    return r;
}

cplx theta(cplx x, double q) {
    if (x == 0.0) throw DomainError("theta(0) is undefined");
    return qpoch_inf(cplx(q), q) * qpoch_inf(x, q) * qpoch_inf(q / x, q);
}

double qgamma(double u, double qu, double q) {
    const double num = qpoch_inf(cplx(q), q).real();
    cplx den;
    try {
        den = qpoch_inf_nonzero(cplx(qu), q);
    } catch (const PoleError&) {
        throw PoleError("Gamma_q pole at u=" + std::to_string(u));
    }
    return num / den.real() * std::pow(1.0 - q, 1.0 - u);
}

double qgamma(double u, double q) {
    require_base(q);
    if (u <= 0.0 && std::floor(u) == u) {
        throw PoleError("Gamma_q pole at nonpositive integer " + std::to_string(u));
    }
    return qgamma(u, std::pow(q, u), q);
}

double log_base(double t, double q) { return std::log(t) / std::log(q); }

double psi_t(double x, double q, double t) {
    if (x == 0.0) throw DomainError("psi_t needs x != 0");
    const double tau = log_base(t, q);
    const cplx den = theta(q * x / t, q);
    if (std::abs(den) < kPoleGuard) throw PoleError("psi_t: theta(q x / t) vanishes");
    const double mag = std::exp((2.0 * tau - 1.0) * std::log(std::abs(x)));
    return mag * (theta(t * x, q) / den).real();
}

QGammaProduct::QGammaProduct(double q, double t, double a, double b) : q_(q), t_(t), a_(a), b_(b) {
    require_base(q);
}

double QGammaProduct::qpow(const QExponent& u) const {
    double v = std::pow(q_, u.k);
    if (u.c_tau) v *= std::pow(t_, u.c_tau);
    if (u.c_alpha) v *= std::pow(a_, u.c_alpha);
    if (u.c_beta) v *= std::pow(b_, u.c_beta);
    return v;
}

void QGammaProduct::accumulate(const QExponent& u, int sign) {
    const double qu = qpow(u);
    cplx den;
    try {
        den = qpoch_inf_nonzero(cplx(qu), q_);
    } catch (const PoleError&) {
        throw PoleError("Gamma_q argument hits a pole");
    }
    const double qq = qpoch_inf(cplx(q_), q_).real();
    const double g = qq / den.real();
    pochs_ *= sign > 0 ? g : 1.0 / g;
    count_ += sign;
    exp_k_ += sign * u.k;
    exp_tau_ += sign * u.c_tau;
    exp_alpha_ += sign * u.c_alpha;
    exp_beta_ += sign * u.c_beta;
}

void QGammaProduct::mul(const QExponent& u) { accumulate(u, +1); }
void QGammaProduct::div(const QExponent& u) { accumulate(u, -1); }

double QGammaProduct::value() const {
    double e = static_cast<double>(count_ - exp_k_);
    if (exp_tau_) e -= exp_tau_ * log_base(t_, q_);
    if (exp_alpha_) {
        if (!(a_ > 0.0)) throw DomainError("Gamma_q product depends on alpha but a <= 0");
        e -= exp_alpha_ * log_base(a_, q_);
    }
    if (exp_beta_) {
        if (!(b_ > 0.0)) throw DomainError("Gamma_q product depends on beta but b <= 0");
        e -= exp_beta_ * log_base(b_, q_);
    }
    return scale_ * pochs_ * std::pow(1.0 - q_, e);
}

}  // namespace bcq
