#include "plwp/packet.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "plwp/specfun.hpp"

namespace plwp {

namespace {
constexpr double kLnPi = 1.1447298858494001741;
constexpr double kLn2 = 0.69314718055994530942;

// ln(1 + x^2) without overflowing x^2 for extreme |x|.
double ln_one_plus_sq(double x) {
    double ax = std::fabs(x);
    if (ax > 1e150) return 2.0 * std::log(ax);
    return std::log1p(ax * ax);
}
} // namespace

PowerLawPacket::PowerLawPacket(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.5))
        throw DomainError("PowerLawPacket: alpha must exceed 1/2 for a "
                          "normalizable packet, got " + std::to_string(alpha));
    near_edge_ = alpha < 0.55;
    // N^2 = Gamma(alpha) / (sqrt(pi) Gamma(alpha - 1/2))
    norm_sq_ = std::exp(specfun::ln_gamma(alpha) - 0.5 * kLnPi -
                        specfun::ln_gamma(alpha - 0.5));
}

double PowerLawPacket::amplitude_x(double x) const {
    return std::sqrt(norm_sq_) * std::exp(-0.5 * alpha_ * ln_one_plus_sq(x));
}

double PowerLawPacket::density_x_ln(double x) const {
    return std::log(norm_sq_) - alpha_ * ln_one_plus_sq(x);
}

double PowerLawPacket::amplitude_p(double p) const {
    p = std::fabs(p);
    if (p == 0.0) {
        if (alpha_ <= 1.0)
            throw SingularAtZero("amplitude_p: diverges at p = 0 for "
                                 "alpha <= 1");
        // limit N Gamma((alpha-1)/2) / (sqrt(2) Gamma(alpha/2))
        return std::sqrt(norm_sq_) *
               std::exp(specfun::ln_gamma(0.5 * (alpha_ - 1.0)) - 0.5 * kLn2 -
                        specfun::ln_gamma(0.5 * alpha_));
    }
    const double nu = 0.5 * (alpha_ - 1.0);
    const double ln_amp = (1.0 - 0.5 * alpha_) * kLn2 +
                          0.5 * std::log(norm_sq_) -
                          specfun::ln_gamma(0.5 * alpha_) + nu * std::log(p) +
                          specfun::bessel_k_ln(nu, p);
    return std::exp(ln_amp);
}

double PowerLawPacket::density_p_ln(double p) const {
    p = std::fabs(p);
    if (p == 0.0)
        throw DomainError("density_p_ln: p must be nonzero");
    const double nu = 0.5 * (alpha_ - 1.0);
    return 2.0 * ((1.0 - 0.5 * alpha_) * kLn2 + 0.5 * std::log(norm_sq_) -
                  specfun::ln_gamma(0.5 * alpha_) + nu * std::log(p) +
                  specfun::bessel_k_ln(nu, p));
}

double PowerLawPacket::potential(double x) const {
    const double one_sq = 1.0 + x * x;
    return (alpha_ * (alpha_ + 1.0) * x * x - alpha_) / (2.0 * one_sq * one_sq);
}

MomentValue PowerLawPacket::position_second_moment() const {
    // Diverges (logarithmically at the boundary) for alpha <= 3/2.
    if (alpha_ <= 1.5) return MomentValue::divergent();
    return MomentValue::finite(1.0 / (2.0 * alpha_ - 3.0));
}

double PowerLawPacket::momentum_second_moment() const {
    return alpha_ * (2.0 * alpha_ - 1.0) / (4.0 * (alpha_ + 1.0));
}

MomentValue PowerLawPacket::heisenberg_product() const {
    MomentValue x2 = position_second_moment();
    if (x2.is_divergent()) return MomentValue::divergent();
    return MomentValue::finite(
        std::sqrt(x2.value() * momentum_second_moment()));
}

VarianceReport variance_report(const PowerLawPacket& packet) {
    return VarianceReport{packet.alpha(), packet.position_second_moment(),
                          packet.momentum_second_moment(),
                          packet.heisenberg_product()};
}

} // namespace plwp
