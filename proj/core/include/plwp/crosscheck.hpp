#ifndef PLWP_CROSSCHECK_HPP
#define PLWP_CROSSCHECK_HPP

#include <string>
#include <vector>

#include "plwp/packet.hpp"
#include "plwp/quadrature.hpp"

namespace plwp::crosscheck {

struct CheckEntry {
    std::string name;
    double reference_value; // closed form / value under test
    double oracle_value;    // independent first-principles computation
    double abs_diff;        // |reference_value - oracle_value|
    double tolerance;
    bool pass;
};

struct CrosscheckReport {
    double alpha;
    std::vector<CheckEntry> entries;
    bool all_pass;
};

// Numeric Fourier transform of the packet amplitude at momentum p >= 0:
//   sqrt(2/pi) int_0^inf cos(p x) phi(x) dx
// computed by partitioning [0, inf) at the zeros of cos(p x) and
// accelerating the resulting alternating series (repeated averaging of
// partial sums), capped at 10^4 half-periods.  For p = 0 a plain
// half-line quadrature is used.  Throws DomainError for p < 0 and
// ConvergenceFailure if the cap is hit.
double ft_numeric(const PowerLawPacket& packet, double p,
                  const QuadratureConfig& cfg = {});

// Same cosine transform driven by an arbitrary even-amplitude callable;
// exposed so tests can probe reflection symmetry directly.
double ft_numeric_of(const Integrand& amplitude, double p,
                     const QuadratureConfig& cfg = {});

// Runs every closed form exposed by the packet and entropy modules against
// an oracle that shares no code path with it: quadrature and finite
// differences only, no gamma/digamma calls on the oracle side of the
// variance checks.  Divergent position moments are verified by growth
// probing (partial integrals at R = 1e3 and 1e6).  Failures are entries
// with pass = false, never exceptions.
CrosscheckReport run_all(const PowerLawPacket& packet,
                         const QuadratureConfig& cfg = {});

// JSON with fields name, reference, oracle, abs_diff, tolerance, pass per
// entry, plus alpha and all_pass at the top level.
std::string to_json(const CrosscheckReport& report);

} // namespace plwp::crosscheck

#endif
