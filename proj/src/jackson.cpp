#include "bcq/jackson.hpp"

#include <cmath>

#include "bcq/errors.hpp"

namespace bcq {

namespace {

// Neumaier summation.
struct Compensated {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

// Ascending labels of length r whose last entry equals s (r >= 1).
std::vector<AscendingIndex> with_last(int r, int s) {
    std::vector<AscendingIndex> out;
    if (r == 0) return out;
    for (auto head : ascending_indices(r - 1, s)) {
        head.push_back(s);
        out.push_back(std::move(head));
    }
    return out;
}

// Ascending labels of length r with last entry at most s (all of P(0) if r = 0).
std::vector<AscendingIndex> up_to(int r, int s) {
    if (r == 0) return {AscendingIndex{}};
    if (s < 0) return {};
    return ascending_indices(r, s);
}

class Engine {
public:
    Engine(const std::vector<JacksonSplit>& splits, double q, int components, const JacksonIntegrand& f)
        : splits_(splits), q_(q), k_(components), f_(f), acc_(splits.size(), std::vector<Compensated>(components)),
          abs_(components, 0.0), buf_(components) {
        require_base(q);
        if (splits.empty()) throw DomainError("Jackson integral needs at least one split");
        n_ = static_cast<int>(splits[0].xi.size() + splits[0].eta.size());
        for (const auto& s : splits) {
            if (static_cast<int>(s.xi.size() + s.eta.size()) != n_) throw DomainError("Jackson splits differ in dimension");
        }
        scale_ = std::pow(1.0 - q, n_);
    }

    // Adds the shell of points with largest label s; returns per-component shell magnitude.
    std::vector<double> shell(int s) {
        std::vector<double> mag(k_, 0.0);
        for (std::size_t si = 0; si < splits_.size(); ++si) {
            const auto& sp = splits_[si];
            const int j = static_cast<int>(sp.xi.size()), m = static_cast<int>(sp.eta.size());
            // Points with max(nu_j, nu'_m) = s: either nu_j = s, or nu_j < s and nu'_m = s.
            if (j > 0) {
                const auto nus = with_last(j, s);
                const auto nups = up_to(m, s);
                for (const auto& nu : nus) {
                    for (const auto& nup : nups) visit(si, nu, nup, mag);
                }
            }
            if (m > 0) {
                const auto nus = up_to(j, s - 1);
                const auto nups = with_last(m, s);
                for (const auto& nu : nus) {
                    for (const auto& nup : nups) visit(si, nu, nup, mag);
                }
            }
            if (j == 0 && m == 0 && s == 0) visit(si, AscendingIndex{}, AscendingIndex{}, mag);
        }
        depth_ = s;
        return mag;
    }

    JacksonResult result(const std::vector<double>& last_shell) const {
        JacksonResult r;
        r.value.assign(k_, 0.0);
        for (int c = 0; c < k_; ++c) {
            Compensated total;
            for (const auto& split : acc_) total.add(split[c].value());
            r.value[c] = total.value();
            r.tail.push_back(last_shell[c] / (1.0 - q_));
        }
        r.mass = abs_;
        r.depth = depth_;
        r.points = points_;
        return r;
    }

private:
    void visit(std::size_t si, const AscendingIndex& nu, const AscendingIndex& nup, std::vector<double>& mag) {
        const auto& sp = splits_[si];
        z_.clear();
        double measure = scale_ * sp.coefficient;
        for (std::size_t i = 0; i < nu.size(); ++i) {
            const double x = sp.xi[i] * std::pow(q_, nu[i]);
            z_.push_back(x);
            measure *= x;
        }
        for (std::size_t i = 0; i < nup.size(); ++i) {
            const double x = sp.eta[i] * std::pow(q_, nup[i]);
            z_.push_back(x);
            measure *= -x;
        }
        std::fill(buf_.begin(), buf_.end(), 0.0);
        f_(JacksonPoint{static_cast<int>(si), nu, nup, z_}, buf_);
        for (int c = 0; c < k_; ++c) {
            const double term = measure * buf_[c];
            acc_[si][c].add(term);
            abs_[c] += std::abs(term);
            mag[c] += std::abs(term);
        }
        ++points_;
    }

    const std::vector<JacksonSplit>& splits_;
    double q_;
    int k_;
    const JacksonIntegrand& f_;
    int n_ = 0;
    double scale_ = 1.0;
    std::vector<std::vector<Compensated>> acc_;
    std::vector<double> abs_;
    std::vector<double> buf_;
    std::vector<double> z_;
    int depth_ = 0;
    long points_ = 0;
};

}  // namespace

JacksonResult jackson_fixed(const std::vector<JacksonSplit>& splits, double q, int components,
                            const JacksonIntegrand& f, int depth) {
    if (depth < 1) throw DomainError("Jackson depth must be >= 1");
    Engine e(splits, q, components, f);
    std::vector<double> last;
    for (int s = 0; s <= depth; ++s) last = e.shell(s);
    return e.result(last);
}

JacksonResult jackson_adaptive(const std::vector<JacksonSplit>& splits, double q, int components,
                               const JacksonIntegrand& f, double tol, int start_depth, int max_depth) {
    if (!(tol > 0.0)) throw DomainError("Jackson tolerance must be positive");
    if (start_depth < 1 || max_depth < start_depth) throw DomainError("bad Jackson depth range");
    Engine e(splits, q, components, f);
    std::vector<double> last;
    int s = 0;
    for (int target = start_depth;; target = std::min(2 * target, max_depth)) {
        for (; s <= target; ++s) last = e.shell(s);
        JacksonResult r = e.result(last);
        bool done = true;
        for (int c = 0; c < components; ++c) done = done && r.tail[c] <= tol * r.mass[c];
        if (done) return r;
        if (target == max_depth) throw SlowConvergence("Jackson sum did not reach the tolerance by depth " +
                                                       std::to_string(max_depth));
    }
}

MeasureReport jackson_multisum(const std::function<double(std::span<const double>)>& f,
                               const std::vector<double>& xi, double q, int depth) {
    const JacksonIntegrand g = [&](const JacksonPoint& pt, std::span<double> out) { out[0] = f(pt.z); };
    const JacksonResult r = jackson_fixed({JacksonSplit{1.0, xi, {}}}, q, 1, g, depth);
    MeasureReport m;
    m.value = r.value[0];
    m.abs_error_estimate = r.tail[0];
    m.discrete_points_used = static_cast<int>(r.points);
    m.truncation_depth = r.depth;
    return m;
}

double iterated_jackson(const std::function<double(std::span<const double>)>& f, int n, double x1, double gamma,
                        double q, int depth) {
    if (n < 1) throw DomainError("iterated Jackson integral needs n >= 1");
    std::vector<double> z(n);
    // int_0^v g(x) d_qx = (1-q) sum_k g(v q^k) v q^k, nested from the outside in.
    std::function<double(int, double)> level = [&](int i, double v) -> double {
        double s = 0.0;
        for (int k = 0; k <= depth; ++k) {
            const double x = v * std::pow(q, k);
            z[i] = x;
            const double inner = i + 1 == n ? f(z) : level(i + 1, gamma * x);
            s += inner * x;
        }
        return (1.0 - q) * s;
    };
    return level(0, x1);
}

}  // namespace bcq
