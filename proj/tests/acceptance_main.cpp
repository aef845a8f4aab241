// Acceptance suite: one line per criterion, nonzero exit on any failure.
// argv[1] (optional) is the path to the CLI binary; the CLI criterion is
// reported as FAIL if it is missing.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "plwp/crosscheck.hpp"
#include "plwp/entropy.hpp"

using namespace plwp;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail = "") {
    std::printf("criterion %2d  %-34s %s%s%s\n", index, name.c_str(),
                pass ? "PASS" : "FAIL", detail.empty() ? "" : "  ",
                detail.c_str());
    if (!pass) ++g_failures;
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return g;
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// Quadrature oracle for <X^2> at alpha > 3/2: finite head plus the
// u = 1/x substituted tail, no gamma functions involved.
double position_moment_oracle(const PowerLawPacket& p) {
    const double a = p.alpha();
    const double n2 = p.norm_sq();
    const double r_cut = 10.0;
    auto head_f = [&](double x) {
        return x * x * n2 * std::pow(1.0 + x * x, -a);
    };
    auto tail_f = [&](double u) {
        return n2 * std::pow(u, 2.0 * a - 4.0) * std::pow(1.0 + u * u, -a);
    };
    return 2.0 * integrate_finite(head_f, 0.0, r_cut).value +
           2.0 * integrate_finite(tail_f, 0.0, 1.0 / r_cut).value;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "";
    const std::vector<double> agreement_grid = {0.75, 1.0, 1.25, 1.5,
                                                2.0,  3.0, 5.0,  10.0};

    // Criteria 1-3 share a 100-point log grid on [0.6, 40].
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<EntropyReport> reports;
    for (double a : log_grid(0.6, 40.0, 100))
        reports.push_back(total_uncertainty(PowerLawPacket(a)));
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();

    bool bound_ok = true;
    for (const auto& r : reports)
        bound_ok = bound_ok && r.u_total >= 1.0 + std::log(M_PI) - 1e-7;
    report(1, "entropic bound on 100-point grid", bound_ok && elapsed < 60.0,
           "elapsed " + fmt(elapsed) + " s");

    bool gap_dec = true;
    for (size_t i = 1; i < reports.size(); ++i)
        gap_dec = gap_dec && reports[i].gap < reports[i - 1].gap;
    const double gap_1 = total_uncertainty(PowerLawPacket(1.0)).gap;
    const double gap_40 = reports.back().gap;
    report(2, "monotone approach to the bound",
           gap_dec && gap_40 < 0.1 * gap_1,
           "gap(1)=" + fmt(gap_1) + " gap(40)=" + fmt(gap_40));

    bool shapes_ok = true;
    for (size_t i = 1; i < reports.size(); ++i)
        shapes_ok = shapes_ok && reports[i].s_x < reports[i - 1].s_x &&
                    reports[i].s_p > reports[i - 1].s_p;
    report(3, "s_x decreasing, s_p increasing", shapes_ok);

    {
        PowerLawPacket p2(2.0);
        const double ia_exact = (M_PI / 4.0) * (std::log(M_PI / 2.0) - 1.0);
        const double u_exact =
            std::log(M_PI / 2.0) + 4.0 * std::log(2.0) - 1.0;
        const bool ok =
            std::fabs(s_p_semi_closed(p2) - 1.0) <= 1e-9 &&
            std::fabs(i_alpha(p2) - ia_exact) <= 1e-9 &&
            std::fabs(total_uncertainty(p2).u_total - u_exact) <= 1e-8;
        report(4, "alpha = 2 exact anchors", ok);
    }

    {
        PowerLawPacket p1(1.0);
        const bool ok =
            std::fabs(s_x_closed(p1) - std::log(4.0 * M_PI)) <= 1e-9 &&
            std::fabs(s_p_semi_closed(p1) - s_p_numeric(p1)) <= 1e-7;
        report(5, "Cauchy anchor alpha = 1", ok);
    }

    {
        bool ok = true;
        for (double a : agreement_grid) {
            PowerLawPacket p(a);
            ok = ok && std::fabs(s_x_closed(p) - s_x_numeric(p)) <= 1e-8 &&
                 std::fabs(s_p_semi_closed(p) - s_p_numeric(p)) <= 1e-7;
        }
        report(6, "cross-pipeline entropy agreement", ok);
    }

    {
        bool ok = true;
        for (double a : {1.0, 2.0, 3.5}) {
            PowerLawPacket p(a);
            for (double q : {0.5, 1.0, 2.0, 5.0})
                ok = ok && std::fabs(crosscheck::ft_numeric(p, q) -
                                     p.amplitude_p(q)) <= 1e-6;
        }
        report(7, "numeric Fourier vs closed form", ok);
    }

    {
        bool ok = true;
        for (double a : {0.6, 1.0, 1.5})
            ok = ok &&
                 PowerLawPacket(a).position_second_moment().is_divergent();
        for (double a : {2.0, 2.5, 4.0}) {
            PowerLawPacket p(a);
            auto m = p.position_second_moment();
            ok = ok && !m.is_divergent() &&
                 std::fabs(m.value() - 1.0 / (2.0 * a - 3.0)) <= 1e-12 &&
                 std::fabs(m.value() - position_moment_oracle(p)) <= 1e-8;
        }
        for (double a = 1.6; a <= 40.0; a *= 1.2) {
            auto h = PowerLawPacket(a).heisenberg_product();
            ok = ok && !h.is_divergent() && h.value() >= 0.5;
        }
        report(8, "variance window and Heisenberg", ok);
    }

    {
        bool ok = true;
        for (double a : {0.75, 1.0, 2.0, 5.0}) {
            PowerLawPacket p(a);
            for (double x : {0.0, 0.3, 1.0, 3.0, 10.0}) {
                const double h = 1e-4 * std::max(1.0, std::fabs(x));
                const double phi = p.amplitude_x(x);
                const double d2 =
                    (-p.amplitude_x(x + 2 * h) + 16.0 * p.amplitude_x(x + h) -
                     30.0 * phi + 16.0 * p.amplitude_x(x - h) -
                     p.amplitude_x(x - 2 * h)) /
                    (12.0 * h * h);
                ok = ok && std::fabs(-0.5 * d2 + p.potential(x) * phi) <=
                               1e-6 * std::fabs(phi);
            }
        }
        report(9, "zero-energy eigenstate residual", ok);
    }

    {
        bool ok = true;
        for (double a : agreement_grid) {
            PowerLawPacket p(a);
            const double norm =
                integrate_real_line(
                    [&](double x) { return std::exp(p.density_x_ln(x)); })
                    .value;
            const double pars =
                2.0 * integrate_half_line([&](double q) {
                          if (q > 750.0) return 0.0;
                          const double l = p.density_p_ln(q);
                          return l < -745.0 ? 0.0 : std::exp(l);
                      }).value;
            ok = ok && std::fabs(norm - 1.0) <= 1e-8 &&
                 std::fabs(pars - 1.0) <= 1e-8;
        }
        report(10, "normalization and Parseval", ok);
    }

    {
        bool ok = false;
        std::string detail;
        if (cli.empty()) {
            detail = "no CLI path given";
        } else {
            const int verify_rc =
                std::system((cli + " verify >/dev/null 2>&1").c_str());
            const std::string out1 = "/tmp/plwp_acc_sweep1.csv";
            const std::string out2 = "/tmp/plwp_acc_sweep2.csv";
            const std::string sweep_args =
                " sweep --alpha-min 0.6 --alpha-max 10 --step 0.1 --out ";
            const int s1 = std::system(
                (cli + sweep_args + out1 + " >/dev/null 2>&1").c_str());
            const int s2 = std::system(
                (cli + sweep_args + out2 + " >/dev/null 2>&1").c_str());
            const std::string b1 = read_file(out1);
            const std::string b2 = read_file(out2);
            std::remove(out1.c_str());
            std::remove(out2.c_str());
            ok = verify_rc == 0 && s1 == 0 && s2 == 0 && !b1.empty() &&
                 b1 == b2;
            if (verify_rc != 0) detail = "verify exited nonzero";
            else if (b1 != b2) detail = "sweep bytes differ";
        }
        report(11, "CLI verify and deterministic sweep", ok, detail);
    }

    if (g_failures) {
        std::printf("%d criterion(s) FAILED\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
