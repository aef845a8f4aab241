#ifndef PLWP_ERRORS_HPP
#define PLWP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace plwp {

// Argument outside the documented domain of a function or constructor.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// An iterative scheme hit its level/subdivision cap before meeting tolerance.
class ConvergenceFailure : public std::runtime_error {
public:
    explicit ConvergenceFailure(const std::string& what) : std::runtime_error(what) {}
};

// The integrand returned NaN/Inf at an interior quadrature node.
class NonFiniteSample : public std::runtime_error {
public:
    explicit NonFiniteSample(const std::string& what) : std::runtime_error(what) {}
};

// Momentum amplitude evaluated at p = 0 where it diverges (alpha <= 1).
class SingularAtZero : public std::runtime_error {
public:
    explicit SingularAtZero(const std::string& what) : std::runtime_error(what) {}
};

// Computed entropy sum fell below the 1 + ln(pi) bound beyond numeric slack;
// indicates an implementation bug, not physics.
class BoundViolation : public std::runtime_error {
public:
    explicit BoundViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace plwp

#endif
