// Acceptance gate: one line per criterion, [PASS]/[FAIL], exit code is
// the number of failed criteria. Tolerances are pinned inline.

#include "qcorr/channels.hpp"
#include "qcorr/dynamics.hpp"
#include "qcorr/eigen.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/random_states.hpp"
#include "qcorr/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

using namespace qcorr;

namespace {

int failures = 0;

void report(const std::string& name, bool pass, const std::string& note) {
    std::printf("[%s] %s%s%s\n", pass ? "PASS" : "FAIL", name.c_str(),
                note.empty() ? "" : ": ", note.c_str());
    if (!pass) ++failures;
}

std::string fmt(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%.3e", v);
    return b;
}

std::string fmt6(double v) {
    char b[64];
    std::snprintf(b, sizeof b, "%.6f", v);
    return b;
}

// {0.05, 0.10, ..., 0.95}
std::vector<double> interior_alphas() {
    std::vector<double> a;
    for (int k = 1; k <= 19; ++k) a.push_back(k / 20.0);
    return a;
}

double concurrence_of(Scenario s, double alpha, double gamma) {
    return concurrence_general(evolve(s, alpha, gamma)).value;
}

double power_of(Scenario s, double alpha, double gamma) {
    return interferometric_power(evolve(s, alpha, gamma)).value;
}

// Smallest pipeline value over a uniform sample of [0, 1-1e-6],
// endpoint included.
double min_over_band(Scenario s, double alpha, Measure m, int samples) {
    const double edge = 1.0 - 1e-6;
    double lowest = 1e300;
    for (int k = 0; k < samples; ++k) {
        const double gamma = edge * k / (samples - 1);
        const double v = m == Measure::Concurrence ? concurrence_of(s, alpha, gamma)
                                                   : power_of(s, alpha, gamma);
        lowest = std::min(lowest, v);
    }
    return lowest;
}

void criterion_bell_point() {
    const DensityMatrix rho = evolve(Scenario::DephasingWerner, 1.0, 0.0);
    const double dc = std::abs(concurrence_general(rho).value - 1.0);
    const double dp = std::abs(interferometric_power(rho).value - 1.0);
    report("01 bell-point", dc <= 1e-9 && dp <= 1e-9,
           "concurrence dev " + fmt(dc) + ", power dev " + fmt(dp) + " (tol 1e-9)");
}

void criterion_werner_closed_forms() {
    double worst_c = 0.0, worst_p = 0.0;
    for (int i = 0; i <= 100; ++i)
        for (int j = 0; j <= 100; ++j) {
            const double alpha = i / 100.0, gamma = j / 100.0;
            const DensityMatrix rho = evolve(Scenario::DephasingWerner, alpha, gamma);
            const double closed_c = std::max(0.0, alpha * (1.5 - gamma) - 0.5);
            worst_c = std::max(worst_c, std::abs(concurrence_general(rho).value - closed_c));
            const ClosedFormValues v = closed_form_reference(Scenario::DephasingWerner, alpha, gamma);
            worst_p = std::max(worst_p, std::abs(interferometric_power(rho).value - *v.ip));
        }
    report("02 werner-closed-forms", worst_c <= 1e-8 && worst_p <= 1e-8,
           "101x101 grid, worst concurrence dev " + fmt(worst_c) + ", worst power dev " +
               fmt(worst_p) + " (tol 1e-8)");
}

void criterion_werner_esd_boundary() {
    const DeathReport c = find_death(Scenario::DephasingWerner, 0.8, Measure::Concurrence);
    const DeathReport p = find_death(Scenario::DephasingWerner, 0.8, Measure::InterferometricPower);
    const bool pass = !c.asymptotic && std::abs(c.gamma_star - 0.875) <= 1e-6 && p.asymptotic;
    report("03 werner-esd-boundary", pass,
           "concurrence death at " + fmt6(c.asymptotic ? -1.0 : c.gamma_star) +
               " (expected 0.875 within 1e-6), power " +
               (p.asymptotic ? "asymptotic" : "finite"));
}

void criterion_damping_q1_robust_region() {
    bool pass = true;
    std::string note;

    // alpha < 1/2: entanglement survives the whole band.
    double worst_min_c = 1e300;
    for (int k = 1; k <= 9; ++k) {
        const double alpha = k / 20.0;
        if (!find_death(Scenario::GadQ1, alpha, Measure::Concurrence).asymptotic) {
            pass = false;
            note += " concurrence death at alpha=" + fmt6(alpha) + ";";
        }
        worst_min_c = std::min(worst_min_c, min_over_band(Scenario::GadQ1, alpha,
                                                          Measure::Concurrence, 2000));
    }
    if (worst_min_c <= 0.0) pass = false;

    // Power survives for every interior alpha.
    for (double alpha : interior_alphas())
        if (!find_death(Scenario::GadQ1, alpha, Measure::InterferometricPower).asymptotic) {
            pass = false;
            note += " power death at alpha=" + fmt6(alpha) + ";";
        }

    // Product-state endpoints carry no power at any gamma.
    double worst_end = 0.0;
    for (double alpha : {0.0, 1.0})
        for (int j = 0; j <= 100; ++j)
            worst_end = std::max(worst_end, power_of(Scenario::GadQ1, alpha, j / 100.0));
    if (worst_end >= 1e-12) pass = false;

    report("04 damping-q1-robust-region", pass,
           "min in-band concurrence " + fmt(worst_min_c) + " (alpha<1/2), endpoint power max " +
               fmt(worst_end) + " (tol 1e-12)" + note);
}

void criterion_damping_q23_universal_esd() {
    bool pass = true;
    std::string note;
    double latest = 0.0;
    for (double alpha : interior_alphas()) {
        const DeathReport c = find_death(Scenario::GadQ2of3, alpha, Measure::Concurrence);
        if (c.asymptotic || c.gamma_star >= 1.0 - 1e-6) {
            pass = false;
            note += " no finite concurrence death at alpha=" + fmt6(alpha) + ";";
        } else {
            latest = std::max(latest, c.gamma_star);
        }
        if (!find_death(Scenario::GadQ2of3, alpha, Measure::InterferometricPower).asymptotic) {
            pass = false;
            note += " power death at alpha=" + fmt6(alpha) + ";";
        }
    }
    report("05 damping-q23-universal-esd", pass,
           "finite concurrence death at all 19 alphas (latest gamma* " + fmt6(latest) +
               "), power asymptotic" + note);
}

void criterion_depolarizing_universal_esd() {
    bool pass = true;
    std::string note;
    double latest = 0.0, lowest_power = 1e300;
    for (double alpha : interior_alphas()) {
        const DeathReport c = find_death(Scenario::Depolarizing, alpha, Measure::Concurrence);
        if (c.asymptotic || c.gamma_star >= 1.0 - 1e-6) {
            pass = false;
            note += " no finite concurrence death at alpha=" + fmt6(alpha) + ";";
        } else {
            latest = std::max(latest, c.gamma_star);
        }
        lowest_power = std::min(
            lowest_power, min_over_band(Scenario::Depolarizing, alpha,
                                        Measure::InterferometricPower, 2000));
    }
    if (lowest_power <= 0.0) {
        pass = false;
        note += " power reached zero inside the band;";
    }
    report("06 depolarizing-universal-esd", pass,
           "finite concurrence death at all 19 alphas (latest gamma* " + fmt6(latest) +
               "), min in-band power " + fmt(lowest_power) + note);
}

void criterion_combined_nonadditivity() {
    // Each channel alone leaves entanglement asymptotically alive
    // (dephasing for every interior alpha, damping q=1 for alpha < 1/2),
    // yet the composition kills it at finite gamma. The universality
    // claim allows boundary-adjacent exceptions, which are logged.
    bool pass = true;
    std::string note;

    double worst_single = 1e300;
    for (double alpha : interior_alphas()) {
        const KrausChannel id = KrausChannel::identity();
        double lowest = 1e300;
        for (int k = 0; k < 500; ++k) {
            const double gamma = (1.0 - 1e-6) * k / 499.0;
            const KrausChannel ch = dephasing(gamma);
            lowest = std::min(
                lowest,
                concurrence_general(apply_local_pair(make_schmidt_pure(alpha), ch, ch)).value);
        }
        worst_single = std::min(worst_single, lowest);
    }
    if (worst_single <= 0.0) {
        pass = false;
        note += " dephasing alone already shows sudden death;";
    }
    for (int k = 1; k <= 9; ++k)
        if (!find_death(Scenario::GadQ1, k / 20.0, Measure::Concurrence).asymptotic) {
            pass = false;
            note += " damping alone dies at alpha=" + fmt6(k / 20.0) + ";";
        }

    std::vector<double> c_exceptions, p_exceptions;
    for (double alpha : interior_alphas()) {
        const DeathReport c = find_death(Scenario::DephasingPlusGad, alpha, Measure::Concurrence);
        if (c.asymptotic || c.gamma_star >= 1.0 - 1e-6) c_exceptions.push_back(alpha);
        if (!find_death(Scenario::DephasingPlusGad, alpha, Measure::InterferometricPower)
                 .asymptotic)
            p_exceptions.push_back(alpha);
    }
    const auto boundary_adjacent = [](double a) { return a <= 0.05 + 1e-12 || a >= 0.95 - 1e-12; };
    for (double a : c_exceptions) {
        note += " no finite concurrence death at alpha=" + fmt6(a) +
                (boundary_adjacent(a) ? " (boundary-adjacent, tolerated);" : ";");
        if (!boundary_adjacent(a)) pass = false;
    }
    for (double a : p_exceptions) {
        note += " power death at alpha=" + fmt6(a) +
                (boundary_adjacent(a) ? " (boundary-adjacent, tolerated);" : ";");
        if (!boundary_adjacent(a)) pass = false;
    }
    if (c_exceptions.empty() && p_exceptions.empty())
        note += " finite concurrence death and asymptotic power at all 19 alphas;";

    report("07 combined-noise-nonadditivity", pass,
           "single-channel min in-band concurrence " + fmt(worst_single) + ";" + note);
}

void criterion_oracle_equivalence() {
    Rng rng(424242);
    double worst_x = 0.0, worst_dir = 0.0, worst_sphere = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = random_mixed_state(rng);

        const DensityMatrix x = project_to_x(rho);
        worst_x = std::max(worst_x,
                           std::abs(concurrence_x(x).value - concurrence_general(x).value));

        const MMatrix mm = build_m_matrix(rho);
        for (int k = 0; k < 20; ++k) {
            const std::array<double, 3> n = random_unit_vector(rng);
            double quad = 0.0;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    quad += n[static_cast<size_t>(i)] * mm.m(i, j).real() *
                            n[static_cast<size_t>(j)];
            worst_dir = std::max(worst_dir, std::abs(quad - qfi_directional(rho, n)));
        }

        worst_sphere = std::max(worst_sphere, std::abs(ip_sphere_oracle(rho, 10000) -
                                                       interferometric_power(rho).value));
    }
    const bool pass = worst_x <= 1e-9 && worst_dir <= 1e-10 && worst_sphere <= 5e-3;
    report("08 oracle-equivalence", pass,
           "100 random mixtures: x-vs-general " + fmt(worst_x) + " (tol 1e-9), directional " +
               fmt(worst_dir) + " (tol 1e-10), sphere " + fmt(worst_sphere) + " (tol 5e-3)");
}

void criterion_invariance_suite() {
    Rng rng(171717);
    double worst_lu = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        const DensityMatrix rho = random_mixed_state(rng);
        const double before = interferometric_power(rho).value;
        const DensityMatrix rotated =
            apply_local_unitaries(rho, random_local_unitary(rng), random_local_unitary(rng));
        worst_lu = std::max(worst_lu, std::abs(interferometric_power(rotated).value - before));
    }

    double worst_trace = 0.0, worst_eig = 0.0, worst_complete = 0.0;
    for (Scenario s : all_scenarios())
        for (int a = 0; a <= 4; ++a)
            for (int g = 0; g <= 4; ++g) {
                const DensityMatrix rho = evolve(s, a / 4.0, g / 4.0);
                worst_trace =
                    std::max(worst_trace, std::abs(rho.matrix().trace().real() - 1.0));
                worst_eig = std::min(worst_eig, eigh(rho.matrix()).eigenvalues.back());
            }
    for (int g = 0; g <= 10; ++g) {
        const double gamma = g / 10.0;
        worst_complete = std::max(worst_complete, dephasing(gamma).completeness_residual());
        worst_complete = std::max(worst_complete, gad(gamma, 1.0).completeness_residual());
        worst_complete =
            std::max(worst_complete, gad(gamma, 2.0 / 3.0).completeness_residual());
        worst_complete = std::max(worst_complete, depolarizing(gamma).completeness_residual());
    }
    const bool pass = worst_lu < 1e-8 && worst_trace <= 1e-12 && worst_eig >= -1e-10 &&
                      worst_complete <= 1e-12;
    report("09 invariance-suite", pass,
           "100 local-unitary trials max power change " + fmt(worst_lu) +
               " (tol 1e-8), trace drift " + fmt(worst_trace) + ", min eigenvalue " +
               fmt(worst_eig) + ", completeness " + fmt(worst_complete));
}

void criterion_discrepancy_ledger() {
    const VerifyReport rep = run_verification(12345);
    bool pass = rep.fail_count() == 0 && rep.warn_count() == 2;
    bool damping_warn = false, depol_warn = false;
    for (const VerifyLine& line : rep.lines) {
        if (line.status != VerifyLine::Status::Warn) continue;
        if (line.name == "damping q=1 concurrence printed form" && line.metric >= 0.01)
            damping_warn = true;
        else if (line.name == "depolarizing concurrence printed form" && line.metric >= 0.01)
            depol_warn = true;
    }
    pass = pass && damping_warn && depol_warn;

    // Independently of the suite: the pipeline must genuinely disagree
    // with both printed forms somewhere on the grid.
    double dev_damping = 0.0, dev_depol = 0.0;
    for (int a = 0; a <= 20; ++a)
        for (int g = 0; g <= 20; ++g) {
            const double alpha = a / 20.0, gamma = g / 20.0;
            dev_damping = std::max(
                dev_damping,
                std::abs(*closed_form_reference(Scenario::GadQ1, alpha, gamma).concurrence -
                         concurrence_of(Scenario::GadQ1, alpha, gamma)));
            dev_depol = std::max(
                dev_depol,
                std::abs(*closed_form_reference(Scenario::Depolarizing, alpha, gamma).concurrence -
                         concurrence_of(Scenario::Depolarizing, alpha, gamma)));
        }
    pass = pass && dev_damping >= 0.01 && dev_depol >= 0.01;

    report("10 discrepancy-ledger", pass,
           std::to_string(rep.warn_count()) + " warn / " + std::to_string(rep.fail_count()) +
               " fail; measured printed-form deviations " + fmt(dev_damping) + " and " +
               fmt(dev_depol));
}

void criterion_power_sudden_change() {
    const std::vector<double> switches = find_ip_sudden_change(Scenario::GadQ1, 0.8);
    std::string where;
    for (double g : switches) where += " " + fmt6(g);
    // Regression snapshots frozen after the first verified run.  The branch
    // path at alpha = 0.8 is 3 -> 1 -> 3; both crossings are pinned.  The
    // refinement tolerance is 1e-6, so 5e-6 absorbs platform rounding.
    bool pass = switches.size() == 2;
    if (pass) pass = std::abs(switches[0] - 0.156677) <= 5e-6 &&
                     std::abs(switches[1] - 0.554894) <= 5e-6;
    report("11 power-sudden-change", pass,
           switches.empty()
               ? "no branch switch found"
               : "branch switch gamma:" + where + " (snapshots 0.156677, 0.554894 within 5e-6)");
}

}  // namespace

int main() {
    criterion_bell_point();
    criterion_werner_closed_forms();
    criterion_werner_esd_boundary();
    criterion_damping_q1_robust_region();
    criterion_damping_q23_universal_esd();
    criterion_depolarizing_universal_esd();
    criterion_combined_nonadditivity();
    criterion_oracle_equivalence();
    criterion_invariance_suite();
    criterion_discrepancy_ledger();
    criterion_power_sudden_change();
    std::printf("%d of 11 criteria passed\n", 11 - failures);
    return failures;
}
