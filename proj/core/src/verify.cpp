#include "qcorr/verify.hpp"

#include "qcorr/channels.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/eigen.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/random_states.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qcorr {
namespace {

using Status = VerifyLine::Status;

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << v;
    return s.str();
}

VerifyLine pass_if(bool ok, std::string name, double metric, std::string note) {
    return {ok ? Status::Pass : Status::Fail, std::move(name), metric, std::move(note)};
}

// The two documented discrepancies: WARN while the deviation is present,
// FAIL if it ever disappears (the printed form would then be matching a
// pipeline it is supposed to contradict).
VerifyLine warn_if_present(double deviation, std::string name, std::string note_present,
                           std::string note_absent) {
    if (deviation >= 0.01) return {Status::Warn, std::move(name), deviation, std::move(note_present)};
    return {Status::Fail, std::move(name), deviation, std::move(note_absent)};
}

std::vector<double> unit_grid(int steps) {
    std::vector<double> g(static_cast<size_t>(steps));
    for (int i = 0; i < steps; ++i) g[static_cast<size_t>(i)] = static_cast<double>(i) / (steps - 1);
    return g;
}

VerifyLine check_channel_completeness() {
    double worst = 0.0;
    for (double gamma : unit_grid(11)) {
        worst = std::max(worst, dephasing(gamma).completeness_residual());
        worst = std::max(worst, gad(gamma, 1.0).completeness_residual());
        worst = std::max(worst, gad(gamma, 2.0 / 3.0).completeness_residual());
        worst = std::max(worst, depolarizing(gamma).completeness_residual());
    }
    worst = std::max(worst, KrausChannel::identity().completeness_residual());
    return pass_if(worst <= 1e-12, "channel completeness",
                   worst, "max residual " + fmt(worst) + " over all channels, gamma grid");
}

VerifyLine check_tampered_channel() {
    KrausChannel ch = dephasing(0.3);
    ch.operators[0](0, 0) += 1e-3;  // break completeness on a copy
    const double resid = ch.completeness_residual();
    return pass_if(resid > 1e-12, "tampered channel detection",
                   resid, "negative control: broken completeness flagged with residual " + fmt(resid));
}

VerifyLine check_trace_positivity() {
    double worst_trace = 0.0;
    double worst_eig = 0.0;  // most negative eigenvalue seen, as magnitude
    for (Scenario s : all_scenarios())
        for (double alpha : unit_grid(5))
            for (double gamma : unit_grid(5)) {
                const DensityMatrix rho = evolve(s, alpha, gamma);
                worst_trace = std::max(worst_trace, std::abs(rho.matrix().trace().real() - 1.0));
                const SpectralDecomposition ed = eigh(rho.matrix());
                worst_eig = std::min(worst_eig, ed.eigenvalues.back());
            }
    const bool ok = worst_trace <= 1e-12 && worst_eig >= -1e-10;
    return pass_if(ok, "trace and positivity preservation", worst_trace,
                   "max trace drift " + fmt(worst_trace) + ", min eigenvalue " + fmt(worst_eig));
}

VerifyLine check_werner_concurrence() {
    double worst = 0.0;
    for (double alpha : unit_grid(41))
        for (double gamma : unit_grid(41)) {
            const double pipeline = concurrence_general(evolve(Scenario::DephasingWerner, alpha, gamma)).value;
            const double closed = *closed_form_reference(Scenario::DephasingWerner, alpha, gamma).concurrence;
            worst = std::max(worst, std::abs(pipeline - closed));
        }
    return pass_if(worst <= 1e-8, "werner concurrence closed form", worst,
                   "max |pipeline - closed| " + fmt(worst));
}

VerifyLine check_werner_ip() {
    double worst = 0.0;
    for (double alpha : unit_grid(41))
        for (double gamma : unit_grid(41)) {
            const double pipeline = interferometric_power(evolve(Scenario::DephasingWerner, alpha, gamma)).value;
            const double closed = *closed_form_reference(Scenario::DephasingWerner, alpha, gamma).ip;
            worst = std::max(worst, std::abs(pipeline - closed));
        }
    return pass_if(worst <= 1e-8, "werner ip closed form", worst,
                   "max |pipeline - closed| " + fmt(worst));
}

VerifyLine check_gad_q1_printed() {
    double worst = 0.0;
    for (double alpha : unit_grid(41))
        for (double gamma : unit_grid(41)) {
            const double pipeline = concurrence_general(evolve(Scenario::GadQ1, alpha, gamma)).value;
            const double printed = *closed_form_reference(Scenario::GadQ1, alpha, gamma).concurrence;
            worst = std::max(worst, std::abs(pipeline - printed));
        }
    return warn_if_present(
        worst, "damping q=1 concurrence printed form",
        "published specialization disagrees with the pipeline by up to " + fmt(worst) +
            "; consistent with a factor-2 slip (the element form matches, see next line)",
        "expected factor-2 discrepancy is absent; printed form now matches the pipeline");
}

VerifyLine check_gad_element_form() {
    double worst = 0.0;
    for (double q : {1.0, 2.0 / 3.0}) {
        const Scenario s = q == 1.0 ? Scenario::GadQ1 : Scenario::GadQ2of3;
        for (double alpha : unit_grid(41))
            for (double gamma : unit_grid(41)) {
                const double pipeline = concurrence_general(evolve(s, alpha, gamma)).value;
                const double elem = 2.0 * std::max(0.0, gad_lambda1_element_form(alpha, gamma, q));
                worst = std::max(worst, std::abs(pipeline - elem));
            }
    }
    return pass_if(worst <= 1e-8, "damping concurrence element form", worst,
                   "q=1 and q=2/3: max |pipeline - element form| " + fmt(worst));
}

VerifyLine check_gad_ip_closed_form() {
    double worst = 0.0;
    for (double q : {1.0, 2.0 / 3.0}) {
        const Scenario s = q == 1.0 ? Scenario::GadQ1 : Scenario::GadQ2of3;
        for (double alpha : unit_grid(41))
            for (double gamma : unit_grid(41)) {
                const auto closed = closed_form_reference(s, alpha, gamma).ip;
                if (!closed) continue;  // coherence too small for the a, b parameterization
                const double pipeline = interferometric_power(evolve(s, alpha, gamma)).value;
                worst = std::max(worst, std::abs(pipeline - *closed));
            }
    }
    return pass_if(worst <= 1e-8, "damping ip closed form", worst,
                   "q=1 and q=2/3 where defined: max |pipeline - closed| " + fmt(worst));
}

VerifyLine check_depolarizing_printed() {
    double worst = 0.0;
    for (double alpha : unit_grid(41))
        for (double gamma : unit_grid(41)) {
            const double pipeline = concurrence_general(evolve(Scenario::Depolarizing, alpha, gamma)).value;
            const double printed = *closed_form_reference(Scenario::Depolarizing, alpha, gamma).concurrence;
            worst = std::max(worst, std::abs(pipeline - printed));
        }
    return warn_if_present(
        worst, "depolarizing concurrence printed form",
        "published expression disagrees with the pipeline by up to " + fmt(worst) +
            "; the element form matches (see next line)",
        "expected discrepancy is absent; printed form now matches the pipeline");
}

VerifyLine check_depolarizing_element_form() {
    double worst = 0.0;
    for (double alpha : unit_grid(41))
        for (double gamma : unit_grid(41)) {
            const double pipeline = concurrence_general(evolve(Scenario::Depolarizing, alpha, gamma)).value;
            const double elem = depolarizing_concurrence_element_form(alpha, gamma);
            worst = std::max(worst, std::abs(pipeline - elem));
        }
    return pass_if(worst <= 1e-8, "depolarizing concurrence element form", worst,
                   "max |pipeline - element form| " + fmt(worst));
}

VerifyLine check_depolarizing_sphere_oracle() {
    // No published closed form for this cell; the brute-force sphere
    // minimum is the only independent reference.
    double worst = 0.0;
    for (double alpha : {0.2, 0.5, 0.8})
        for (double gamma : {0.1, 0.4, 0.7}) {
            const DensityMatrix rho = evolve(Scenario::Depolarizing, alpha, gamma);
            const double ip = interferometric_power(rho).value;
            const double oracle = ip_sphere_oracle(rho, 10000);
            worst = std::max(worst, std::abs(oracle - ip));
        }
    return pass_if(worst <= 5e-3, "depolarizing ip sphere oracle", worst,
                   "max |oracle - pipeline| " + fmt(worst) + " at resolution 10000");
}

VerifyLine check_x_vs_general(Rng& rng) {
    double worst = 0.0;
    for (Scenario s : all_scenarios())
        for (double alpha : unit_grid(11))
            for (double gamma : unit_grid(11)) {
                const DensityMatrix rho = evolve(s, alpha, gamma);
                worst = std::max(worst, std::abs(concurrence_x(rho).value -
                                                 concurrence_general(rho).value));
            }
    for (int trial = 0; trial < 50; ++trial) {
        const DensityMatrix rho = project_to_x(random_mixed_state(rng));
        worst = std::max(worst,
                         std::abs(concurrence_x(rho).value - concurrence_general(rho).value));
    }
    return pass_if(worst <= 1e-9, "x-state vs general concurrence", worst,
                   "scenario grids plus 50 random X states: max gap " + fmt(worst));
}

VerifyLine check_m_vs_directional(Rng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 30; ++trial) {
        const DensityMatrix rho = random_mixed_state(rng);
        const MMatrix mm = build_m_matrix(rho);
        for (int k = 0; k < 20; ++k) {
            const std::array<double, 3> n = random_unit_vector(rng);
            double quad = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    quad += n[static_cast<size_t>(i)] * mm.m(i, j).real() * n[static_cast<size_t>(j)];
            worst = std::max(worst, std::abs(quad - qfi_directional(rho, n)));
        }
    }
    return pass_if(worst <= 1e-10, "m matrix vs directional qfi", worst,
                   "30 states x 20 directions: max |n^T M n - direct| " + fmt(worst));
}

VerifyLine check_local_unitary_invariance(Rng& rng) {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = random_mixed_state(rng);
        const double before = interferometric_power(rho).value;
        const DensityMatrix rotated =
            apply_local_unitaries(rho, random_local_unitary(rng), random_local_unitary(rng));
        worst = std::max(worst, std::abs(interferometric_power(rotated).value - before));
    }
    return pass_if(worst <= 1e-8, "local unitary invariance of ip", worst,
                   "100 random trials: max |change| " + fmt(worst));
}

VerifyLine check_sphere_lower_bound(Rng& rng) {
    double worst = 0.0;  // most negative oracle - ip
    for (int trial = 0; trial < 10; ++trial) {
        const DensityMatrix rho = random_mixed_state(rng);
        const double gap = ip_sphere_oracle(rho, 1000) - interferometric_power(rho).value;
        worst = std::min(worst, gap);
    }
    return pass_if(worst >= -1e-12, "sphere oracle lower bound", worst,
                   "oracle never undershoots the minimum eigenvalue: worst gap " + fmt(worst));
}

}  // namespace

int VerifyReport::pass_count() const {
    return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const VerifyLine& l) {
        return l.status == Status::Pass;
    }));
}

int VerifyReport::warn_count() const {
    return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const VerifyLine& l) {
        return l.status == Status::Warn;
    }));
}

int VerifyReport::fail_count() const {
    return static_cast<int>(std::count_if(lines.begin(), lines.end(), [](const VerifyLine& l) {
        return l.status == Status::Fail;
    }));
}

VerifyReport run_verification(unsigned long long seed) {
    Rng rng(seed);
    VerifyReport report;
    report.lines.push_back(check_channel_completeness());
    report.lines.push_back(check_tampered_channel());
    report.lines.push_back(check_trace_positivity());
    report.lines.push_back(check_werner_concurrence());
    report.lines.push_back(check_werner_ip());
    report.lines.push_back(check_gad_q1_printed());
    report.lines.push_back(check_gad_element_form());
    report.lines.push_back(check_gad_ip_closed_form());
    report.lines.push_back(check_depolarizing_printed());
    report.lines.push_back(check_depolarizing_element_form());
    report.lines.push_back(check_depolarizing_sphere_oracle());
    report.lines.push_back(check_x_vs_general(rng));
    report.lines.push_back(check_m_vs_directional(rng));
    report.lines.push_back(check_local_unitary_invariance(rng));
    report.lines.push_back(check_sphere_lower_bound(rng));
    return report;
}

std::string format_report(const VerifyReport& report) {
    std::ostringstream out;
    for (const VerifyLine& line : report.lines) {
        const char* tag = line.status == Status::Pass   ? "[PASS]"
                          : line.status == Status::Warn ? "[WARN]"
                                                        : "[FAIL]";
        out << tag << " " << line.name << ": " << line.note << "\n";
    }
    out << report.pass_count() << " pass, " << report.warn_count() << " warn, "
        << report.fail_count() << " fail\n";
    return out.str();
}

}  // namespace qcorr
