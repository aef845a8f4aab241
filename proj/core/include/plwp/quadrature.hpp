#ifndef PLWP_QUADRATURE_HPP
#define PLWP_QUADRATURE_HPP

#include <functional>

#include "plwp/errors.hpp"

namespace plwp {

struct QuadratureConfig {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_levels = 12;        // tanh-sinh level cap
    int max_subdivisions = 2000; // cap for piecewise strategies
};

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
    bool converged = false;
};

using Integrand = std::function<double(double)>;

// Tanh-sinh quadrature on [a, b].  Tolerates integrable endpoint
// singularities (nodes are placed by their distance to the nearest
// endpoint, so e.g. ln x on [0,1] resolves to full precision).
// Throws NonFiniteSample if f returns NaN/Inf at an interior node.
IntegrationResult integrate_finite(const Integrand& f, double a, double b,
                                   const QuadratureConfig& cfg = {});

// Integral over (0, inf), split at 1: tanh-sinh on (0,1], substitution
// x = 1 + t/(1-t) on [1,inf).  Returns converged=false when the decay is
// too slow to meet tolerance within the level cap.
IntegrationResult integrate_half_line(const Integrand& f,
                                      const QuadratureConfig& cfg = {});

// Integral over the whole real line, computed as a half-line integral of
// f(x) + f(-x).  x = 0 is never sampled.
IntegrationResult integrate_real_line(const Integrand& f,
                                      const QuadratureConfig& cfg = {});

namespace detail {
// Core tanh-sinh driver on s in (0,1).  g receives the node's distance to
// each endpoint (s_from0, s_from1), s_from0 + s_from1 == 1; the nearer
// distance is exact to double precision.
IntegrationResult tanh_sinh01(const std::function<double(double, double)>& g,
                              const QuadratureConfig& cfg);
} // namespace detail

} // namespace plwp

#endif
