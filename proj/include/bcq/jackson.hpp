#pragma once

#include <functional>
#include <span>
#include <vector>

#include "bcq/bcpoly.hpp"
#include "bcq/measures.hpp"

namespace bcq {

// One term of a c-weighted Jackson integral: the points
// (xi q^nu, eta q^nu') with nu in P(xi.size()), nu' in P(eta.size()).
struct JacksonSplit {
    double coefficient = 1.0;
    std::vector<double> xi;
    std::vector<double> eta;
};

// Structural point handed to the integrand.
struct JacksonPoint {
    int split = 0;
    const AscendingIndex& nu;
    const AscendingIndex& nu_prime;
    std::span<const double> z;
};

// Writes one value per component into out.
using JacksonIntegrand = std::function<void(const JacksonPoint&, std::span<double>)>;

struct JacksonResult {
    std::vector<double> value;
    // Last completed shell magnitude over (1 - q), per component.
    std::vector<double> tail;
    // Sum of |terms| per component; the scale for relative tolerances.
    std::vector<double> mass;
    int depth = 0;
    long points = 0;
};

// Sum over all points whose largest label is at most depth. Shells are
// accumulated with compensated summation inside each split before the
// splits are combined.
JacksonResult jackson_fixed(const std::vector<JacksonSplit>& splits, double q, int components,
                            const JacksonIntegrand& f, int depth);

// Doubles the depth from start_depth until every component has
// tail <= tol * mass; throws SlowConvergence past max_depth.
JacksonResult jackson_adaptive(const std::vector<JacksonSplit>& splits, double q, int components,
                               const JacksonIntegrand& f, double tol, int start_depth = 16, int max_depth = 400);

// (1-q)^n sum_{nu in P(n), nu_n <= depth} f(xi q^nu) prod xi_i q^nu_i.
MeasureReport jackson_multisum(const std::function<double(std::span<const double>)>& f,
                               const std::vector<double>& xi, double q, int depth);

// Iterated one-variable Jackson integrals for xi = (x1, x1 g, ..., x1 g^{n-1})
// with every inner sum cut at the same depth; used to cross-check the multisum.
double iterated_jackson(const std::function<double(std::span<const double>)>& f, int n, double x1, double gamma,
                        double q, int depth);

}  // namespace bcq
