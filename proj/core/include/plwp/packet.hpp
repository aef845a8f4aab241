#ifndef PLWP_PACKET_HPP
#define PLWP_PACKET_HPP

#include "plwp/errors.hpp"

namespace plwp {

// Second moment of a heavy-tailed density: either a finite value or an
// explicit divergence marker.
class MomentValue {
public:
    static MomentValue finite(double v) { return MomentValue(false, v); }
    static MomentValue divergent() { return MomentValue(true, 0.0); }

    bool is_divergent() const { return divergent_; }
    double value() const {
        if (divergent_)
            throw DomainError("MomentValue: value() on a divergent moment");
        return value_;
    }

private:
    MomentValue(bool d, double v) : divergent_(d), value_(v) {}
    bool divergent_;
    double value_;
};

// Normalized power-law wave packet phi(x) = N / (1 + x^2)^(alpha/2) with
// exponent alpha > 1/2.  Units: hbar = mass = 1, so x and p are
// dimensionless.  Immutable after construction.
class PowerLawPacket {
public:
    // Throws DomainError if alpha <= 1/2 (the packet is not normalizable).
    // Packets with alpha < 0.55 carry a near-edge warning flag: the heavy
    // tails make quadrature genuinely hard there.
    explicit PowerLawPacket(double alpha);

    double alpha() const { return alpha_; }
    double norm_sq() const { return norm_sq_; } // N^2
    bool near_edge() const { return near_edge_; }

    // phi(x) = N (1 + x^2)^(-alpha/2); strictly positive and even.
    double amplitude_x(double x) const;

    // ln |phi(x)|^2 = ln N^2 - alpha ln(1 + x^2); exact in the log domain
    // for |x| well beyond where the density underflows.
    double density_x_ln(double x) const;

    // Momentum-space amplitude: the Fourier transform of phi,
    //   (2^(1-alpha/2) N / Gamma(alpha/2)) |p|^((alpha-1)/2) K_((alpha-1)/2)(|p|).
    // At p = 0 returns the finite limit for alpha > 1 and throws
    // SingularAtZero for alpha <= 1 (integrable divergence).
    double amplitude_p(double p) const;

    // ln |phi~(p)|^2 for p != 0; finite in the log domain far beyond the
    // point where the density itself underflows a double.
    double density_p_ln(double p) const;

    // Potential for which phi is a zero-energy eigenstate:
    //   U(x) = [alpha (alpha+1) x^2 - alpha] / [2 (1 + x^2)^2]
    double potential(double x) const;

    // <X^2>: Divergent for alpha <= 3/2, else 1/(2 alpha - 3).
    MomentValue position_second_moment() const;

    // <P^2> = alpha (2 alpha - 1) / (4 (alpha + 1)); finite for all
    // admissible alpha.
    double momentum_second_moment() const;

    // dX * dP (means vanish by symmetry); Divergent whenever <X^2> is.
    MomentValue heisenberg_product() const;

private:
    double alpha_;
    double norm_sq_;
    bool near_edge_;
};

inline PowerLawPacket make_packet(double alpha) { return PowerLawPacket(alpha); }

struct VarianceReport {
    double alpha;
    MomentValue position_second_moment;
    double momentum_second_moment;
    MomentValue heisenberg_product;
};

VarianceReport variance_report(const PowerLawPacket& packet);

} // namespace plwp

#endif
