#pragma once

#include "qcorr/channels.hpp"
#include "qcorr/measures.hpp"
#include "qcorr/states.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qcorr {

// One noise scenario per studied figure family: initial state plus
// channel recipe, both parameterized by (alpha, gamma).
enum class Scenario {
    DephasingWerner,   // Werner state, phase damping on both qubits
    GadQ1,             // Schmidt pure state, damping q=1
    GadQ2of3,          // Schmidt pure state, damping q=2/3
    Depolarizing,      // Schmidt pure state, isotropic noise
    DephasingPlusGad,  // Schmidt pure state, dephasing then damping q=1 at equal gamma
};

// Canonical kebab-case names: dephasing-werner, gad-q1, gad-q23,
// depolarizing, dephasing+gad. Unknown names throw std::invalid_argument.
const std::string& scenario_name(Scenario s);
Scenario scenario_from_name(const std::string& name);
const std::vector<Scenario>& all_scenarios();

StateFamily scenario_family(Scenario s);

// Initial state of the scenario's family evolved through its channel
// recipe at gamma. Parameter range errors propagate from the state and
// channel constructors.
DensityMatrix evolve(Scenario s, double alpha, double gamma);

struct SweepRecord {
    std::string scenario;
    double alpha;
    double gamma;
    double concurrence;
    double ip;
    int ip_branch;
};

// Uniform inclusive grid over [0,1]^2, one record per point, alpha-major
// order. steps >= 2 each.
std::vector<SweepRecord> sweep(Scenario s, int alpha_steps, int gamma_steps);

enum class Measure { Concurrence, InterferometricPower };

// Classification of how a measure dies along gamma for one alpha.
// Finite death: the smallest sampled gamma* <= 1 - 1e-6 where the
// measure drops below eps_death and stays below it at every later
// sampled gamma < 1, refined by bisection to 1e-8. Asymptotic: no such
// point, i.e. the measure is still alive at the guard band's edge.
struct DeathReport {
    Measure measure;
    double alpha;
    bool asymptotic;
    double gamma_star;  // meaningful only when !asymptotic
};

// eps_death defaults to 1e-18: an exact-zero proxy. Concurrence hits
// hard zeros (its max{0, .} clips), while a measure decaying toward the
// gamma -> 1 limit stays orders of magnitude above this at every sampled
// point, so the default cleanly separates sudden death from asymptotic
// decay. Larger eps_death values reclassify slow quartic tails as
// finite deaths; the parameter is exposed for exactly that kind of
// exploration.
DeathReport find_death(Scenario s, double alpha, Measure measure,
                       double eps_death = 1e-18, int grid = 10000);

// gamma values where the interferometric-power branch switches between
// consecutive grid points, each refined by bisection to 1e-6. Hops
// inside a degenerate branch set (the old branch still within 1e-12 of
// the new minimum) are rounding flicker, not dynamics, and are ignored.
// Empty when the minimizing branch never genuinely changes. grid >= 1000.
std::vector<double> find_ip_sudden_change(Scenario s, double alpha, int grid = 2000);

// Textbook closed-form expressions for the scenarios that have them,
// evaluated verbatim for cross-validation only; the Kraus pipeline is
// the contract. A missing field means no closed form exists for that
// scenario/measure. Two published concurrence forms are known to
// disagree with their own matrix elements (the damping q=1
// specialization carries a spurious factor 2; the depolarizing
// expression replaces sqrt(alpha(1-alpha))(1-gamma)^2 with
// alpha(1-gamma)); the verification suite reports both as WARN with
// measured deviations.
struct ClosedFormValues {
    std::optional<double> concurrence;
    std::optional<double> ip;
};
ClosedFormValues closed_form_reference(Scenario s, double alpha, double gamma);

// Coherence margin Lambda_1 = rho14 - sqrt(rho22 rho33) assembled from
// the published damping-channel matrix elements at general q; the
// element-consistent counterpart of the q=1 closed form above.
double gad_lambda1_element_form(double alpha, double gamma, double q);

// Element-consistent depolarizing concurrence,
// 2 max{0, sqrt(alpha(1-alpha))(1-gamma)^2 - (2-gamma) gamma / 4}.
double depolarizing_concurrence_element_form(double alpha, double gamma);

}  // namespace qcorr
