#pragma once
#include "updsim/qmath.hpp"

// Matrix models of the optical elements under one fixed phase convention.
// The half-wave plate is the real reflection [[cos 2t, sin 2t], [sin 2t, -cos 2t]]
// and the 50/50 beam splitter is the real Hadamard-like matrix; together these
// make every amplitude in the coincidence formulas real except for the phase
// imprinted by the shifter, so no compensating phases appear anywhere.

namespace updsim::elements {

constexpr double pi = 3.141592653589793238462643383279502884;

inline double degrees_to_radians(double deg) { return deg * (pi / 180.0); }
inline double radians_to_degrees(double rad) { return rad * (180.0 / pi); }

/// Fast-axis angle of a half-wave plate.
struct WavePlateAngle {
  double radians{};

  static WavePlateAngle from_degrees(double deg) { return {degrees_to_radians(deg)}; }
};

/// Interferometer phase imprinted by the phase shifter in path 1.
struct MziPhase {
  double radians{};

  static MziPhase from_degrees(double deg) { return {degrees_to_radians(deg)}; }
};

/// Half-wave plate at fast-axis angle t: [[cos 2t, sin 2t], [sin 2t, -cos 2t]].
/// Unitary, Hermitian, self-inverse.
qmath::Mat2 hwp(WavePlateAngle angle);

/// Combined PBS + HWP(45 deg) that converts the signal polarization qubit
/// (v', h') into the path qubit (h', v') of a vertically polarized photon.
/// Equal to hwp(45 deg) as a matrix.
qmath::Mat2 pol_to_path();

/// Phase shifter in path 1: diag(e^{i alpha}, 1) on (path1, path2).
qmath::Mat2 phase_shifter(MziPhase alpha);

/// Nonpolarizing 50/50 beam splitter mapping path amplitudes to detector
/// amplitudes (D1, D2): (1/sqrt 2) [[1, 1], [1, -1]].
qmath::Mat2 npbs();

/// Full signal-side interferometer map for wave mode: npbs * phase_shifter.
qmath::Mat2 mzi_map(MziPhase alpha);

namespace test_hooks {
// Negative control for the self-check suite: flips the NPBS lower-right sign,
// which must make the closed-form vs propagation comparison fail.
inline bool corrupt_npbs_sign = false;
} // namespace test_hooks

} // namespace updsim::elements
