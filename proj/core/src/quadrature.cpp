#include "plwp/quadrature.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace plwp {

namespace detail {

namespace {
constexpr double kHalfPi = 1.5707963267948966192;
// Beyond this |u| the node distance to the endpoint underflows a double.
constexpr double kUMax = 6.11;
} // namespace

IntegrationResult tanh_sinh01(const std::function<double(double, double)>& g,
                              const QuadratureConfig& cfg) {
    IntegrationResult res;

    // One tanh-sinh node at parameter u; returns weight * g(node).
    auto sample = [&](double u) -> double {
        const double au = std::fabs(u);
        const double y = kHalfPi * std::sinh(au);
        const double e2 = std::exp(-2.0 * y);
        const double d = e2 / (1.0 + e2);             // distance to near end
        const double w = 4.0 * kHalfPi * std::cosh(au) * e2 /
                         ((1.0 + e2) * (1.0 + e2)) * 0.5;
        if (d <= 0.0 || w <= 0.0) return 0.0; // node collapsed onto endpoint
        double v = (u >= 0.0) ? g(1.0 - d, d) : g(d, 1.0 - d);
        ++res.evaluations;
        if (!std::isfinite(v))
            throw NonFiniteSample("tanh_sinh: non-finite sample at node u=" +
                                  std::to_string(u));
        return w * v;
    };

    double h = 1.0;
    double node_sum = sample(0.0);
    for (double u = h; u <= kUMax; u += h)
        node_sum += sample(u) + sample(-u);
    double s_prev = h * node_sum;

    for (int level = 1; level <= cfg.max_levels; ++level) {
        h *= 0.5;
        for (double u = h; u <= kUMax; u += 2.0 * h)
            node_sum += sample(u) + sample(-u);
        const double s = h * node_sum;
        res.value = s;
        res.error_estimate = std::max(std::fabs(s - s_prev),
                                      1e-15 * std::fabs(s));
        if (level >= 3 && res.error_estimate <=
                              std::max(cfg.abs_tol,
                                       cfg.rel_tol * std::fabs(s))) {
            res.converged = true;
            return res;
        }
        s_prev = s;
    }
    res.converged = false;
    return res;
}

} // namespace detail

IntegrationResult integrate_finite(const Integrand& f, double a, double b,
                                   const QuadratureConfig& cfg) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b))
        throw DomainError("integrate_finite: need finite a < b");
    const double len = b - a;
    // Scale the tolerance contract so it applies to the final value.
    QuadratureConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol / len;
    inner.rel_tol = cfg.rel_tol;
    auto g = [&](double s0, double s1) {
        const double x = (s0 <= s1) ? a + len * s0 : b - len * s1;
        return f(x);
    };
    IntegrationResult r = detail::tanh_sinh01(g, inner);
    r.value *= len;
    r.error_estimate *= len;
    return r;
}

IntegrationResult integrate_half_line(const Integrand& f,
                                      const QuadratureConfig& cfg) {
    QuadratureConfig half = cfg;
    half.abs_tol = 0.5 * cfg.abs_tol;

    IntegrationResult head = integrate_finite(f, 0.0, 1.0, half);

    // Tail over [1, inf) via x = 1 + t/(1-t); the Jacobian 1/(1-t)^2 is
    // formed from the exact endpoint distance.
    auto g = [&](double s0, double s1) {
        const double x = 1.0 + s0 / s1;
        const double fx = f(x);
        if (fx == 0.0) return 0.0;
        // Staged division: s1^2 can underflow even when fx/s1^2 is
        // representable.
        return (fx / s1) / s1;
    };
    IntegrationResult tail = detail::tanh_sinh01(g, half);

    IntegrationResult r;
    r.value = head.value + tail.value;
    r.error_estimate = head.error_estimate + tail.error_estimate;
    r.evaluations = head.evaluations + tail.evaluations;
    r.converged = head.converged && tail.converged;
    return r;
}

IntegrationResult integrate_real_line(const Integrand& f,
                                      const QuadratureConfig& cfg) {
    return integrate_half_line([&](double x) { return f(x) + f(-x); }, cfg);
}

} // namespace plwp
