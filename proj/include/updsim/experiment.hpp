#pragma once
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "updsim/elements.hpp"
#include "updsim/qmath.hpp"

// Source states, idler measurements and the coincidence statistics of the
// two-path interferometer with entangled-photon path marking. Every quantity
// is available through two independent routes: closed-form expressions in the
// source parameter phi, and brute-force propagation of the joint state
// through the element matrices. Their agreement is the core correctness
// check of this project.

namespace updsim::experiment {

/// Pump half-wave-plate angle phi controlling the strength of path marking.
/// Valid range [0, pi/4]; unambiguous discrimination needs [pi/8, pi/4].
struct SourceParam {
  double phi{}; // radians

  static SourceParam from_radians(double phi);
  static SourceParam from_degrees(double deg);
};

/// Discrimination wave-plate angle theta, fixed by cos(2 theta) = -cot(2 phi).
struct UsdConfig {
  double theta{};      // radians, principal branch in [pi/4, pi/2]
  double source_phi{}; // the phi this configuration was built from
};

enum class MeasurementKind { Usd, Mem, Erasure };

enum class MziMode { Particle, Wave };

enum class SignalDetector { D1 = 0, D2 = 1 };

/// A measurement-outcome (Kraus) vector on the idler qubit; the outcome
/// probability on idler state psi is |b^dagger psi|^2.
struct Effect {
  std::string label;
  qmath::Ket2 b;
};

/// A complete idler measurement: effects satisfy sum b b^dagger = identity.
struct IdlerMeasurement {
  MeasurementKind kind{};
  std::vector<Effect> effects;
};

/// Joint probabilities of (signal detector, idler outcome) coincidences.
/// Entries are nonnegative and sum to 1. In particle mode alpha is ignored.
struct CoincidenceTable {
  MziMode mode{};
  elements::MziPhase alpha{};
  std::vector<std::string> idler_labels;
  // probs[sig][k]: sig 0 = D1, 1 = D2; k indexes idler_labels.
  std::array<std::vector<double>, 2> probs;

  double prob(SignalDetector d, std::size_t idler_index) const {
    return probs[static_cast<std::size_t>(d)][idler_index];
  }
  double idler_total(std::size_t idler_index) const {
    return probs[0][idler_index] + probs[1][idler_index];
  }
  double sum() const;
  /// Max absolute cell difference; requires identical label layout.
  static double max_abs_diff(const CoincidenceTable& a, const CoincidenceTable& b);
};

/// One sorted subensemble of signals: the probability of the idler outcome
/// and the conditional signal state. The state is absent for outcomes of
/// (numerically) zero probability, where no conditional state exists.
struct Subensemble {
  std::string label;
  double weight{};
  std::optional<qmath::Mat2> state;
};

/// Visibility/distinguishability summary for one source setting. Knowledge
/// and the USD guessing probability exist only in the USD range of phi.
struct DualityReport {
  double visibility{};        // |cos 4 phi|
  double distinguishability{}; // |sin 4 phi|
  std::optional<double> knowledge;      // 2 cos(2 phi)^2, USD range only
  std::optional<double> guess_prob_usd; // (1 + K) / 2, USD range only
  double guess_prob_mem{};              // (1 + D) / 2
};

using DensityMatrix2 = qmath::Mat2;

// ---- states ----

/// Polarization-entangled pair emitted by the crystals, in the
/// polarization x polarization basis: sin(2 phi) VV + cos(2 phi) HH.
qmath::Ket4 source_state(SourceParam phi);

/// State after the signal-side HWP at 22.5 deg and the polarization-to-path
/// conversion, in the idler-polarization x signal-path basis.
qmath::Ket4 joint_state(SourceParam phi);

/// The two idler polarization states marking signal paths 1 and 2:
/// (sin 2 phi, -cos 2 phi) and (sin 2 phi, cos 2 phi). Their overlap is
/// -cos(4 phi).
std::pair<qmath::Ket2, qmath::Ket2> idler_states(SourceParam phi);

/// Reduced signal state: (1/2) [[1, -cos 4 phi], [-cos 4 phi, 1]].
DensityMatrix2 signal_rho(SourceParam phi);

/// Phase shifter followed by the NPBS, as a map on signal density matrices;
/// the diagonal of the result gives the D1/D2 detection probabilities.
DensityMatrix2 mzi_transform(const DensityMatrix2& rho, elements::MziPhase alpha);

/// D1/D2 detection probabilities of the wave-mode interferometer,
/// (1 -+ cos(4 phi) cos(alpha)) / 2.
std::pair<double, double> wave_detector_probs(SourceParam phi, elements::MziPhase alpha);

// ---- measurements ----

/// Discrimination angle theta = arccos(-cot 2 phi) / 2. Requires phi in
/// [pi/8, pi/4]; below pi/8 the two idler states are too close for
/// unambiguous discrimination.
UsdConfig usd_angle(SourceParam phi);

/// Three-outcome unambiguous discrimination D3/D4/D5:
/// b3, b4 = (cos 2 theta, -+1)/sqrt 2, b5 = (sin 2 theta, 0).
/// D3 rules out path 1, D4 rules out path 2, D5 is inconclusive.
IdlerMeasurement usd_measurement(const UsdConfig& cfg);

/// Two-outcome minimum-error measurement projecting on (1, +-1)/sqrt 2.
IdlerMeasurement mem_measurement();

/// Erasure sorting: projective measurement in the idler (V, H) basis; both
/// conditional signal subensembles show full-visibility fringes.
IdlerMeasurement erasure_measurement();

/// Convenience dispatch; USD requires phi in the USD range.
IdlerMeasurement make_measurement(MeasurementKind kind, SourceParam phi);

// ---- coincidence statistics ----

/// Brute-force route: propagate joint_state(phi) through the signal-side
/// elements and apply each idler effect. In particle mode the NPBS is
/// removed and the detectors read the paths directly (D1 = path 2,
/// D2 = path 1). Throws ConfigError if a USD measurement does not
/// unambiguously discriminate the idler states of this phi.
CoincidenceTable coincidence_table_circuit(SourceParam phi, const IdlerMeasurement& meas,
                                           MziMode mode, elements::MziPhase alpha);

/// Closed-form route for the USD table. Requires phi in the USD range.
CoincidenceTable coincidence_table_analytic(SourceParam phi, MziMode mode,
                                            elements::MziPhase alpha);

// ---- subensembles ----

/// Closed-form USD sorting of the signal state: weights
/// (cos(2 phi)^2, cos(2 phi)^2, -cos 4 phi) for the path-1 projector (D4),
/// path-2 projector (D3) and the full-coherence state (D5).
std::vector<Subensemble> subensembles_usd(SourceParam phi);

/// Closed-form minimum-error sorting: weights 1/2 each for
/// (1/2) [[1 -+ sin 4 phi, -cos 4 phi], [-cos 4 phi, 1 +- sin 4 phi]].
std::vector<Subensemble> subensembles_mem(SourceParam phi);

/// Brute-force route: condition joint_state(phi) on each idler outcome and
/// renormalize. Zero-probability outcomes carry no state.
std::vector<Subensemble> conditional_signal_states(SourceParam phi,
                                                   const IdlerMeasurement& meas);

// ---- duality quantities ----

/// Fringe visibility, path distinguishability, path knowledge and the
/// guessing probabilities for one source setting.
DualityReport duality_report(SourceParam phi);

/// Fringe visibility measured as (max - min)/(max + min) of prob(D1) over an
/// alpha scan of the propagated signal state. Independent of the closed-form
/// |cos 4 phi|.
double visibility_from_scan(SourceParam phi, int scan_points = 101);

// Angular domain constants (radians).
constexpr double phi_min = 0.0;
constexpr double phi_usd_min = elements::pi / 8.0;
constexpr double phi_max = elements::pi / 4.0;
/// Slack for degree-to-radian conversion rounding at the domain boundaries.
constexpr double angle_tolerance = 1e-12;

} // namespace updsim::experiment
