#pragma once

#include <map>
#include <span>
#include <vector>

#include "bcq/qseries.hpp"

namespace bcq {

// Weakly decreasing nonnegative integer vector.
using Partition = std::vector<int>;
// Weakly increasing nonnegative integer vector (labels of discrete supports).
using AscendingIndex = std::vector<int>;
// Exponent vector of a Laurent monomial; entries may be negative.
using Exponent = std::vector<int>;

bool is_partition(std::span<const int> p);
bool is_ascending(std::span<const int> p);
int weight(std::span<const int> p);

// mu <= lambda in the BC dominance order (partial sums of mu bounded by those
// of lambda). Throws DomainError on length mismatch.
bool dominance_leq(const Partition& mu, const Partition& lambda);

// Total order refining dominance: by |mu|, then lexicographically.
bool graded_lex_less(const Partition& a, const Partition& b);

// All partitions of length n with |mu| <= max_weight, in graded-lex order.
std::vector<Partition> partitions_up_to(int n, int max_weight);

// All mu with mu <= lambda, in graded-lex order (lambda comes last).
std::vector<Partition> partitions_dominated_by(const Partition& lambda);

// Ascending indices of length r with last entry <= max_last, lexicographic.
std::vector<AscendingIndex> ascending_indices(int r, int max_last);

// Sparse Laurent polynomial in n variables with complex coefficients.
// Terms are kept in a map sorted by exponent, so evaluation order is fixed.
class LaurentPolynomial {
public:
    using TermMap = std::map<Exponent, cplx>;

    static constexpr double kPrune = 1e-300;

    explicit LaurentPolynomial(int n = 0) : n_(n) {}
    static LaurentPolynomial constant(int n, cplx c);

    int nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const Exponent& e, cplx c);
    cplx coefficient(const Exponent& e) const;

    LaurentPolynomial& operator+=(const LaurentPolynomial& o);
    LaurentPolynomial& operator-=(const LaurentPolynomial& o);
    LaurentPolynomial& operator*=(cplx c);
    friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
    friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
    friend LaurentPolynomial operator*(LaurentPolynomial a, cplx c) { return a *= c; }
    friend LaurentPolynomial operator*(cplx c, LaurentPolynomial a) { return a *= c; }
    friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

    // Largest |exponent| over all terms and variables.
    int max_abs_exponent() const;

    // Substitute z_1..z_r = values and return a polynomial in the remaining
    // n - r variables.
    LaurentPolynomial specialize_leading(std::span<const cplx> values) const;

    // Largest coefficient modulus.
    double max_abs_coefficient() const;

private:
    int n_;
    TermMap terms_;
};

// Max over exponents of |coefficient difference|.
double coefficient_distance(const LaurentPolynomial& a, const LaurentPolynomial& b);

// Evaluate at z (no zero coordinates; DomainError otherwise).
cplx eval(const LaurentPolynomial& p, std::span<const cplx> z);

// Orbits of lambda under the hyperoctahedral group and under S_n.
std::vector<Exponent> orbit_w(const Partition& lambda);
std::vector<Exponent> orbit_s(std::span<const int> lambda);

// m_lambda = sum over the W-orbit; m~_lambda = sum over the S_n-orbit.
LaurentPolynomial monomial_w(const Partition& lambda);
LaurentPolynomial monomial_s(std::span<const int> lambda);

// m_lambda(z|u) = u^{|lambda|} m_lambda(z/u). Throws DomainError at u = 0.
LaurentPolynomial rescale_monomial(const Partition& lambda, cplx u);

// p(z) -> s^{deg} p(z/s) applied termwise: coefficient of z^e is multiplied
// by s^{shift - |e|}.
LaurentPolynomial rescale_variables(const LaurentPolynomial& p, cplx s, int shift);

}  // namespace bcq
