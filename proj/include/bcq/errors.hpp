#pragma once

#include <stdexcept>
#include <string>

namespace bcq {

// Base for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A denominator factor, theta value or gamma argument sits on (or within the
// guard distance of) a pole.
class PoleError : public Error {
public:
    using Error::Error;
};

// Parameters outside the admissible domain, bad lengths, zero arguments.
class DomainError : public Error {
public:
    using Error::Error;
};

// Two eigenvalues of the difference operator coincide within tolerance.
class EigenvalueCollision : public Error {
public:
    using Error::Error;
};

// Sampling or Gram matrices too ill conditioned to be trusted.
class IllConditioned : public Error {
public:
    using Error::Error;
};

// Two evaluations of the same quantity by independent formulas disagree.
class FormMismatch : public Error {
public:
    using Error::Error;
};

// Adaptive truncation hit its cap before reaching the requested tolerance.
class SlowConvergence : public Error {
public:
    using Error::Error;
};

// A weight that must be positive on the admissible domain is not.
class NonPositiveWeight : public Error {
public:
    using Error::Error;
};

}  // namespace bcq
