#ifndef LUE_ERRORS_HPP
#define LUE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lue {

// Base class for all toolkit failures.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain (x <= 0 for K_nu, s = 0 for mu_{-1}, ...).
class DomainError : public Error {
public:
    explicit DomainError(const std::string& what) : Error(what) {}
};

// A quadrature or iteration failed to reach the requested tolerance.
class PrecisionError : public Error {
public:
    explicit PrecisionError(const std::string& what) : Error(what) {}
};

// A Cholesky pivot lost too many bits; the working precision must be raised.
class ConditioningError : public Error {
public:
    ConditioningError(const std::string& what, int n, long bits_lost)
        : Error(what), n(n), bits_lost(bits_lost) {}
    int n;
    long bits_lost;
};

// The linear solve for a_n in the hierarchy iteration degenerated.
class PivotError : public Error {
public:
    PivotError(const std::string& what, int n) : Error(what), n(n) {}
    int n;
};

// An ODE orbit hit a = 0, s = 0 or blew up.
class SingularityError : public Error {
public:
    explicit SingularityError(const std::string& what) : Error(what) {}
};

} // namespace lue

#endif
