#pragma once

#include <array>
#include <vector>

#include "bcq/qseries.hpp"

namespace bcq {

// Monomial q^k t^e t0^e0 t1^e1 t2^e2 t3^e3 in the deformation parameters.
struct ParamMonomial {
    int q = 0;
    int t = 0;
    std::array<int, 4> tp{};

    ParamMonomial operator*(const ParamMonomial& o) const;
    ParamMonomial inverse() const;
    ParamMonomial shifted(int dq) const;
    // Same monomial without its q-power; used as the grouping key.
    bool same_base(const ParamMonomial& o) const { return t == o.t && tp == o.tp; }
};

ParamMonomial mono_q(int k);
ParamMonomial mono_t(int e);
ParamMonomial mono_tp(int i, int e = 1);

// Numeric values of q, t and t0..t3.
struct ParamValues {
    double q = 0.5;
    double t = 0.5;
    std::array<cplx, 4> tp{};
};

cplx evaluate(const ParamMonomial& m, const ParamValues& v);

// Ratio of infinite q-shifted factorials (m;q)_inf kept as symbols. Symbols
// with the same base (monomial up to a power of q) are cancelled against each
// other before evaluation, so products whose individual factors vanish or
// blow up at special parameters still evaluate to their finite value.
class SymbolicPochProduct {
public:
    void num(const ParamMonomial& m) { num_.push_back(m); }
    void den(const ParamMonomial& m) { den_.push_back(m); }
    // Finite (m;q)_k = (m;q)_inf / (m q^k;q)_inf.
    void num_finite(const ParamMonomial& m, int k);
    void den_finite(const ParamMonomial& m, int k);
    void mul(const SymbolicPochProduct& o);
    void divide(const SymbolicPochProduct& o);

    // Replace every occurrence of t_i by the monomial r.
    void substitute(int i, const ParamMonomial& r);

    // Throws PoleError if a denominator symbol vanishes after cancellation.
    cplx evaluate(const ParamValues& v) const;

    const std::vector<ParamMonomial>& numerators() const { return num_; }
    const std::vector<ParamMonomial>& denominators() const { return den_; }

private:
    std::vector<ParamMonomial> num_;
    std::vector<ParamMonomial> den_;
};

}  // namespace bcq
