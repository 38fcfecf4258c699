#ifndef KUGEL_ERRORS_HPP
#define KUGEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kugel {

/// Base class of everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Bad arguments: unsupported dimension, malformed domain description,
/// non-unit direction, parameter out of its admissible set.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// Argument outside the supported evaluation range (e.g. t > 60).
class RangeError : public Error {
public:
    using Error::Error;
};

/// A numerical procedure failed: root not bracketed, non-finite
/// integrand sample, and the like.
class NumericalFailure : public Error {
public:
    using Error::Error;
};

/// Kernel evaluated at its pole (x == y).
class PoleError : public Error {
public:
    using Error::Error;
};

/// Mean-value check requested on a ball whose closure touches the
/// pole of the test function.
class AdmissibilityError : public Error {
public:
    using Error::Error;
};

/// Exterior evaluation point closer to the domain than the minimum
/// quadrature margin.
class ProbeTooClose : public Error {
public:
    using Error::Error;
};

} // namespace kugel

#endif
