#ifndef PLWP_ENTROPY_HPP
#define PLWP_ENTROPY_HPP

#include "plwp/packet.hpp"
#include "plwp/quadrature.hpp"

namespace plwp {

// Optimal lower bound on S_x + S_p for conjugate position/momentum,
// saturated by Gaussian (coherent) states.
inline constexpr double kEntropyBound = 2.1447298858494001741; // 1 + ln(pi)

enum class EntropyMethod { ClosedForm, NumericOracle };

struct EntropyReport {
    double alpha;
    double s_x;
    double s_p;
    double u_total; // s_x + s_p
    double bound;   // 1 + ln(pi)
    double gap;     // u_total - bound
    EntropyMethod s_x_method;
    EntropyMethod s_p_method;
    bool near_edge;
};

// Closed-form position entropy:
//   S_x = ln(sqrt(pi) Gamma(alpha - 1/2) / Gamma(alpha))
//         + alpha [psi(alpha) - psi(alpha - 1/2)]
double s_x_closed(const PowerLawPacket& packet);

// Direct-definition oracle: -int rho ln rho over the real line, with the
// 0 ln 0 := 0 convention enforced where the tail density underflows.
double s_x_numeric(const PowerLawPacket& packet,
                   const QuadratureConfig& cfg = {});

// Auxiliary momentum-space integral int_0^inf g ln g dp with
// g(p) = p^(alpha-1) K_((alpha-1)/2)(p)^2, computed entirely from the
// log-domain Bessel evaluation.  No closed form exists.
double i_alpha(const PowerLawPacket& packet, const QuadratureConfig& cfg = {});

// Momentum entropy assembled from the gamma-ratio prefactors and i_alpha;
// "semi-closed" because the auxiliary integral is numeric.
double s_p_semi_closed(const PowerLawPacket& packet,
                       const QuadratureConfig& cfg = {});

// Direct-definition oracle: -int rho~ ln rho~ over the momentum line
// (factor 2 from evenness; p = 0 is never sampled).
double s_p_numeric(const PowerLawPacket& packet,
                   const QuadratureConfig& cfg = {});

// Full report: s_x_closed + s_p_semi_closed, the 1 + ln(pi) bound and the
// gap above it.  Cross-checks the single-expression assembly of the total
// against the sum to 1e-10, and throws BoundViolation if the gap falls
// below -1e-7 (an implementation bug, not physics).
EntropyReport total_uncertainty(const PowerLawPacket& packet,
                                const QuadratureConfig& cfg = {});

} // namespace plwp

#endif
