// plwp: entropic uncertainty of power-law wave packets
// phi(x) = N / (1 + x^2)^(alpha/2), alpha > 1/2.
//
// Subcommands:
//   compute  single-alpha report (entropies, bound gap, variances)
//   sweep    alpha grid -> CSV/JSON data (entropy curves, bound gap)
//   verify   run the closed-form-vs-oracle crosscheck suite
//
// Exit codes: 0 success, 1 verification failure, 2 domain error,
//             3 quadrature non-convergence.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "plwp/crosscheck.hpp"
#include "plwp/entropy.hpp"
#include "plwp/packet.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitNoConvergence = 3;

std::string fmt(double v, int sig) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", sig, v);
    return buf;
}

// Optional key=value config named by ENTROPIC_PACKET_CONFIG; recognized
// keys: rel_tol, abs_tol.  Command-line flags override it.
plwp::QuadratureConfig load_config() {
    plwp::QuadratureConfig cfg;
    const char* path = std::getenv("ENTROPIC_PACKET_CONFIG");
    if (!path) return cfg;
    std::ifstream in(path);
    if (!in) {
        std::cerr << "warning: cannot open config file " << path << "\n";
        return cfg;
    }
    std::string line;
    while (std::getline(in, line)) {
        const auto eq = line.find('=');
        if (line.empty() || line[0] == '#' || eq == std::string::npos)
            continue;
        const std::string key = line.substr(0, eq);
        const double val = std::atof(line.c_str() + eq + 1);
        if (key == "rel_tol" && val > 0) cfg.rel_tol = val;
        else if (key == "abs_tol" && val > 0) cfg.abs_tol = val;
    }
    return cfg;
}

int run_compute(double alpha, const plwp::QuadratureConfig& cfg) {
    const plwp::PowerLawPacket packet(alpha);
    const plwp::EntropyReport er = plwp::total_uncertainty(packet, cfg);
    const plwp::VarianceReport vr = plwp::variance_report(packet);

    auto moment = [](const plwp::MomentValue& m) {
        return m.is_divergent() ? std::string("divergent")
                                : fmt(m.value(), 6);
    };

    std::cout << "alpha    " << fmt(alpha, 6) << "\n"
              << "s_x      " << fmt(er.s_x, 6) << "\n"
              << "s_p      " << fmt(er.s_p, 6) << "\n"
              << "u_total  " << fmt(er.u_total, 6) << "\n"
              << "bound    " << fmt(er.bound, 6) << "\n"
              << "gap      " << fmt(er.gap, 6) << "\n"
              << "<X^2>    " << moment(vr.position_second_moment) << "\n"
              << "<P^2>    " << fmt(vr.momentum_second_moment, 6) << "\n"
              << "dX*dP    " << moment(vr.heisenberg_product) << "\n";
    if (er.near_edge)
        std::cout << "warning  alpha is near the normalizability edge; "
                     "tolerances are relaxed\n";
    return kExitOk;
}

struct SweepSpec {
    double alpha_min = 0.6;
    double alpha_max = 10.0;
    double step = 0.1;
    std::string format = "csv";
    std::string out_path;
};

int run_sweep(const SweepSpec& spec, const plwp::QuadratureConfig& cfg) {
    if (!(spec.alpha_min > 0.5) || !(spec.alpha_min < spec.alpha_max + 1e-15) ||
        !(spec.step > 0.0))
        throw plwp::DomainError("sweep: need 0.5 < alpha_min <= alpha_max "
                                "and step > 0");
    const long n =
        static_cast<long>(std::floor((spec.alpha_max - spec.alpha_min) /
                                     spec.step + 1e-9)) + 1;
    if (n > 1000000)
        throw plwp::DomainError("sweep: grid exceeds 10^6 points");

    // Rows are buffered so a non-converged point leaves no partial file.
    std::ostringstream body;
    if (spec.format == "csv") body << "alpha,s_x,s_p,u_total,gap\n";
    else body << "[";
    for (long i = 0; i < n; ++i) {
        const double alpha = spec.alpha_min + static_cast<double>(i) * spec.step;
        const plwp::PowerLawPacket packet(alpha);
        const plwp::EntropyReport er = plwp::total_uncertainty(packet, cfg);
        if (spec.format == "csv") {
            body << fmt(alpha, 12) << ',' << fmt(er.s_x, 12) << ','
                 << fmt(er.s_p, 12) << ',' << fmt(er.u_total, 12) << ','
                 << fmt(er.gap, 12) << "\n";
        } else {
            if (i) body << ",";
            body << "{\"alpha\":" << fmt(alpha, 12)
                 << ",\"s_x\":" << fmt(er.s_x, 12)
                 << ",\"s_p\":" << fmt(er.s_p, 12)
                 << ",\"u_total\":" << fmt(er.u_total, 12)
                 << ",\"gap\":" << fmt(er.gap, 12) << "}";
        }
    }
    if (spec.format != "csv") body << "]\n";

    if (spec.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream out(spec.out_path, std::ios::binary);
        if (!out) {
            std::cerr << "error: cannot open output file " << spec.out_path
                      << "\n";
            return kExitDomain;
        }
        out << body.str();
    }
    return kExitOk;
}

int run_verify(std::vector<double> alphas, bool json,
               const plwp::QuadratureConfig& cfg) {
    if (alphas.empty()) alphas = {0.75, 1.0, 1.5, 2.0, 5.0, 10.0};
    bool all_pass = true;
    for (double alpha : alphas) {
        const plwp::PowerLawPacket packet(alpha); // throws DomainError
        const auto report = plwp::crosscheck::run_all(packet, cfg);
        all_pass = all_pass && report.all_pass;
        if (json) {
            std::cout << plwp::crosscheck::to_json(report) << "\n";
            continue;
        }
        std::cout << "alpha = " << fmt(alpha, 6) << "  ["
                  << (report.all_pass ? "PASS" : "FAIL") << "]\n";
        for (const auto& e : report.entries) {
            std::cout << "  " << (e.pass ? "pass" : "FAIL") << "  " << e.name
                      << "  reference=" << fmt(e.reference_value, 6)
                      << " oracle=" << fmt(e.oracle_value, 6)
                      << " abs_diff=" << fmt(e.abs_diff, 3)
                      << " tol=" << fmt(e.tolerance, 3) << "\n";
        }
    }
    return all_pass ? kExitOk : kExitVerifyFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entropic uncertainty of power-law wave packets "
                 "phi(x) = N/(1+x^2)^(alpha/2)"};
    app.require_subcommand(1);

    plwp::QuadratureConfig cfg = load_config();
    app.add_option("--rel-tol", cfg.rel_tol, "Quadrature relative tolerance")
        ->check(CLI::PositiveNumber);
    app.add_option("--abs-tol", cfg.abs_tol, "Quadrature absolute tolerance")
        ->check(CLI::PositiveNumber);

    auto* compute = app.add_subcommand(
        "compute", "Entropy and variance report for a single alpha");
    double alpha = 1.0;
    compute->add_option("--alpha", alpha, "Packet exponent (> 1/2)")
        ->required();

    auto* sweep = app.add_subcommand(
        "sweep", "Emit alpha,s_x,s_p,u_total,gap over an alpha grid "
                 "(default grid [0.6, 10] step 0.1)");
    SweepSpec spec;
    sweep->add_option("--alpha-min", spec.alpha_min, "Grid start (> 1/2)");
    sweep->add_option("--alpha-max", spec.alpha_max, "Grid end");
    sweep->add_option("--step", spec.step, "Grid step");
    sweep->add_option("--format", spec.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep->add_option("--out", spec.out_path, "Output path (default stdout)");

    auto* verify = app.add_subcommand(
        "verify", "Run closed-form-vs-oracle crosschecks");
    std::vector<double> verify_alphas;
    verify->add_option("--alpha", verify_alphas,
                       "Alpha values to check (default 0.75 1 1.5 2 5 10)");
    bool verify_json = false;
    verify->add_flag("--json", verify_json, "Emit JSON reports");

    CLI11_PARSE(app, argc, argv);

    try {
        if (compute->parsed()) return run_compute(alpha, cfg);
        if (sweep->parsed()) return run_sweep(spec, cfg);
        return run_verify(verify_alphas, verify_json, cfg);
    } catch (const plwp::DomainError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitDomain;
    } catch (const plwp::SingularAtZero& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitDomain;
    } catch (const plwp::ConvergenceFailure& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNoConvergence;
    } catch (const plwp::NonFiniteSample& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitNoConvergence;
    }
}
