#include "bcq/symbolic_pochhammer.hpp"

#include <algorithm>
#include <cmath>

#include "bcq/errors.hpp"

namespace bcq {

ParamMonomial ParamMonomial::operator*(const ParamMonomial& o) const {
    ParamMonomial r = *this;
    r.q += o.q;
    r.t += o.t;
    for (int i = 0; i < 4; ++i) r.tp[i] += o.tp[i];
    return r;
}

ParamMonomial ParamMonomial::inverse() const {
    ParamMonomial r;
    r.q = -q;
    r.t = -t;
    for (int i = 0; i < 4; ++i) r.tp[i] = -tp[i];
    return r;
}

ParamMonomial ParamMonomial::shifted(int dq) const {
    ParamMonomial r = *this;
    r.q += dq;
    return r;
}

ParamMonomial mono_q(int k) {
    ParamMonomial m;
    m.q = k;
    return m;
}

ParamMonomial mono_t(int e) {
    ParamMonomial m;
    m.t = e;
    return m;
}

ParamMonomial mono_tp(int i, int e) {
    ParamMonomial m;
    m.tp[i] = e;
    return m;
}

cplx evaluate(const ParamMonomial& m, const ParamValues& v) {
    cplx r = std::pow(v.q, m.q) * std::pow(v.t, m.t);
    for (int i = 0; i < 4; ++i) {
        if (m.tp[i] != 0) r *= ipow(v.tp[i], m.tp[i]);
    }
    return r;
}

void SymbolicPochProduct::num_finite(const ParamMonomial& m, int k) {
    num(m);
    den(m.shifted(k));
}

void SymbolicPochProduct::den_finite(const ParamMonomial& m, int k) {
    den(m);
    num(m.shifted(k));
}

void SymbolicPochProduct::mul(const SymbolicPochProduct& o) {
    num_.insert(num_.end(), o.num_.begin(), o.num_.end());
    den_.insert(den_.end(), o.den_.begin(), o.den_.end());
}

void SymbolicPochProduct::divide(const SymbolicPochProduct& o) {
    num_.insert(num_.end(), o.den_.begin(), o.den_.end());
    den_.insert(den_.end(), o.num_.begin(), o.num_.end());
}

void SymbolicPochProduct::substitute(int i, const ParamMonomial& r) {
    auto apply = [&](ParamMonomial& m) {
        const int e = m.tp[i];
        if (e == 0) return;
        m.tp[i] = 0;
        m.q += e * r.q;
        m.t += e * r.t;
        for (int j = 0; j < 4; ++j) m.tp[j] += e * r.tp[j];
    };
    for (auto& m : num_) apply(m);
    for (auto& m : den_) apply(m);
}

cplx SymbolicPochProduct::evaluate(const ParamValues& v) const {
    std::vector<bool> num_used(num_.size(), false), den_used(den_.size(), false);
    cplx result = 1.0;
    for (std::size_t i = 0; i < num_.size(); ++i) {
        if (num_used[i]) continue;
        std::vector<int> ns, ds;
        for (std::size_t j = i; j < num_.size(); ++j) {
            if (!num_used[j] && num_[j].same_base(num_[i])) {
                num_used[j] = true;
                ns.push_back(num_[j].q);
            }
        }
        for (std::size_t j = 0; j < den_.size(); ++j) {
            if (!den_used[j] && den_[j].same_base(num_[i])) {
                den_used[j] = true;
                ds.push_back(den_[j].q);
            }
        }
        std::sort(ns.begin(), ns.end());
        std::sort(ds.begin(), ds.end());
        ParamMonomial base = num_[i];
        base.q = 0;
        const cplx c = bcq::evaluate(base, v);
        // With a trivial base, (q^m;q)_k contains the exact factor 1 - q^0.
        const bool trivial = base.t == 0 && base.tp == std::array<int, 4>{};
        auto hits_one = [&](int from, int count) { return trivial && from <= 0 && from + count > 0; };
        const std::size_t paired = std::min(ns.size(), ds.size());
        for (std::size_t p = 0; p < paired; ++p) {
            const int m = ns[p], md = ds[p];
            if (m <= md) {
                if (hits_one(m, md - m)) return 0.0;
                result *= qpoch(c * std::pow(v.q, m), v.q, md - m);
            } else {
                if (hits_one(md, m - md)) throw PoleError("uncancelled pole in symbolic product");
                const cplx f = qpoch(c * std::pow(v.q, md), v.q, m - md);
                if (std::abs(f) < kPoleGuard) throw PoleError("uncancelled pole in symbolic product");
                result /= f;
            }
        }
        for (std::size_t p = paired; p < ns.size(); ++p) {
            if (trivial && ns[p] <= 0) return 0.0;
        }
        for (std::size_t p = paired; p < ds.size(); ++p) {
            if (trivial && ds[p] <= 0) throw PoleError("uncancelled pole in symbolic product");
        }
        for (std::size_t p = paired; p < ns.size(); ++p) result *= qpoch_inf(c * std::pow(v.q, ns[p]), v.q);
        for (std::size_t p = paired; p < ds.size(); ++p) {
            result /= qpoch_inf_nonzero(c * std::pow(v.q, ds[p]), v.q);
        }
    }
    for (std::size_t j = 0; j < den_.size(); ++j) {
        if (den_used[j]) continue;
        try {
            result /= qpoch_inf_nonzero(bcq::evaluate(den_[j], v), v.q);
        } catch (const PoleError&) {
            throw PoleError("uncancelled pole in symbolic product");
        }
    }
    return result;
}

}  // namespace bcq
