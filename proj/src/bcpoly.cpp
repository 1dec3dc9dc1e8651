#include "bcq/bcpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "bcq/errors.hpp"

namespace bcq {

bool is_partition(std::span<const int> p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i > 0 && p[i] > p[i - 1]) return false;
    }
    return true;
}

bool is_ascending(std::span<const int> p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] < 0) return false;
        if (i > 0 && p[i] < p[i - 1]) return false;
    }
    return true;
}

int weight(std::span<const int> p) { return std::accumulate(p.begin(), p.end(), 0); }

bool dominance_leq(const Partition& mu, const Partition& lambda) {
    if (mu.size() != lambda.size()) throw DomainError("dominance_leq: length mismatch");
    int sm = 0, sl = 0;
    for (std::size_t i = 0; i < mu.size(); ++i) {
        sm += mu[i];
        sl += lambda[i];
        if (sm > sl) return false;
    }
    return true;
}

bool graded_lex_less(const Partition& a, const Partition& b) {
    const int wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb;
    return a < b;
}

namespace {

void extend(Partition& cur, std::size_t pos, int max_part, int budget, std::vector<Partition>& out) {
    if (pos == cur.size()) {
        out.push_back(cur);
        return;
    }
    for (int v = 0; v <= std::min(max_part, budget); ++v) {
        cur[pos] = v;
        extend(cur, pos + 1, v, budget - v, out);
    }
}

}  // namespace

std::vector<Partition> partitions_up_to(int n, int max_weight) {
    if (n < 0 || max_weight < 0) throw DomainError("partitions_up_to: negative argument");
    std::vector<Partition> out;
    Partition cur(n, 0);
    extend(cur, 0, max_weight, max_weight, out);
    std::sort(out.begin(), out.end(), graded_lex_less);
    return out;
}

std::vector<Partition> partitions_dominated_by(const Partition& lambda) {
    if (!is_partition(lambda)) throw DomainError("partitions_dominated_by: not a partition");
    std::vector<Partition> out;
    for (auto& mu : partitions_up_to(static_cast<int>(lambda.size()), weight(lambda))) {
        if (dominance_leq(mu, lambda)) out.push_back(mu);
    }
    return out;
}

std::vector<AscendingIndex> ascending_indices(int r, int max_last) {
    std::vector<AscendingIndex> out;
    if (r == 0) {
        out.emplace_back();
        return out;
    }
    AscendingIndex cur(r, 0);
    // Odometer over weakly increasing vectors bounded by max_last.
    while (true) {
        out.push_back(cur);
        int i = r - 1;
        while (i >= 0 && cur[i] == max_last) --i;
        if (i < 0) break;
        const int v = cur[i] + 1;
        for (int j = i; j < r; ++j) cur[j] = v;
    }
    return out;
}

LaurentPolynomial LaurentPolynomial::constant(int n, cplx c) {
    LaurentPolynomial p(n);
    p.add_term(Exponent(n, 0), c);
    return p;
}

void LaurentPolynomial::add_term(const Exponent& e, cplx c) {
    if (static_cast<int>(e.size()) != n_) throw DomainError("add_term: exponent length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (std::abs(c) > kPrune) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (std::abs(it->second) <= kPrune) terms_.erase(it);
}

cplx LaurentPolynomial::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? cplx(0.0) : it->second;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
    if (o.n_ != n_) throw DomainError("polynomial sum: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& o) {
    if (o.n_ != n_) throw DomainError("polynomial difference: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPolynomial& LaurentPolynomial::operator*=(cplx c) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it->second *= c;
        if (std::abs(it->second) <= kPrune) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
    return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    if (a.n_ != b.n_) throw DomainError("polynomial product: variable count mismatch");
    LaurentPolynomial r(a.n_);
    Exponent e(a.n_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.n_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

int LaurentPolynomial::max_abs_exponent() const {
    int m = 0;
    for (const auto& [e, c] : terms_) {
        for (int x : e) m = std::max(m, std::abs(x));
    }
    return m;
}

double LaurentPolynomial::max_abs_coefficient() const {
    double m = 0.0;
    for (const auto& [e, c] : terms_) m = std::max(m, std::abs(c));
    return m;
}

LaurentPolynomial LaurentPolynomial::specialize_leading(std::span<const cplx> values) const {
    const int r = static_cast<int>(values.size());
    if (r > n_) throw DomainError("specialize_leading: too many values");
    for (cplx v : values) {
        if (v == 0.0) throw DomainError("specialize_leading: zero coordinate");
    }
    LaurentPolynomial out(n_ - r);
    for (const auto& [e, c] : terms_) {
        cplx f = c;
        for (int i = 0; i < r; ++i) f *= ipow(values[i], e[i]);
        out.add_term(Exponent(e.begin() + r, e.end()), f);
    }
    return out;
}

double coefficient_distance(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    double d = 0.0;
    for (const auto& [e, c] : a.terms()) d = std::max(d, std::abs(c - b.coefficient(e)));
    for (const auto& [e, c] : b.terms()) {
        if (a.terms().find(e) == a.terms().end()) d = std::max(d, std::abs(c));
    }
    return d;
}

cplx eval(const LaurentPolynomial& p, std::span<const cplx> z) {
    const int n = p.nvars();
    if (static_cast<int>(z.size()) != n) throw DomainError("eval: point dimension mismatch");
    for (cplx v : z) {
        if (v == 0.0) throw DomainError("eval: zero coordinate");
    }
    cplx sum = 0.0;
    for (const auto& [e, c] : p.terms()) {
        cplx m = c;
        for (int i = 0; i < n; ++i) {
            if (e[i] != 0) m *= ipow(z[i], e[i]);
        }
        sum += m;
    }
    return sum;
}

std::vector<Exponent> orbit_s(std::span<const int> lambda) {
    Exponent v(lambda.begin(), lambda.end());
    std::sort(v.begin(), v.end());
    std::vector<Exponent> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

std::vector<Exponent> orbit_w(const Partition& lambda) {
    std::set<Exponent> seen;
    for (const auto& perm : orbit_s(lambda)) {
        const std::size_t n = perm.size();
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Exponent e = perm;
            bool redundant = false;
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (1u << i)) {
                    if (e[i] == 0) {
                        redundant = true;
                        break;
                    }
                    e[i] = -e[i];
                }
            }
            if (!redundant) seen.insert(e);
        }
    }
    return {seen.begin(), seen.end()};
}

LaurentPolynomial monomial_w(const Partition& lambda) {
    LaurentPolynomial p(static_cast<int>(lambda.size()));
    for (const auto& e : orbit_w(lambda)) p.add_term(e, 1.0);
    return p;
}

LaurentPolynomial monomial_s(std::span<const int> lambda) {
    LaurentPolynomial p(static_cast<int>(lambda.size()));
    for (const auto& e : orbit_s(lambda)) p.add_term(e, 1.0);
    return p;
}

LaurentPolynomial rescale_variables(const LaurentPolynomial& p, cplx s, int shift) {
    if (s == 0.0) throw DomainError("rescale: zero scale");
    LaurentPolynomial out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        out.add_term(e, c * ipow(s, shift - weight(e)));
    }
    return out;
}

LaurentPolynomial rescale_monomial(const Partition& lambda, cplx u) {
    if (u == 0.0) throw DomainError("rescale_monomial: zero scale");
    return rescale_variables(monomial_w(lambda), u, weight(lambda));
}

}  // namespace bcq
