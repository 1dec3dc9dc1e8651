#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

#include "bcq/qseries.hpp"

namespace bcq::test {

inline double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

inline cplx random_complex(std::mt19937_64& rng, double rmin, double rmax) {
    std::uniform_real_distribution<double> r(rmin, rmax), th(0.0, 6.283185307179586);
    return std::polar(r(rng), th(rng));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

}  // namespace bcq::test
