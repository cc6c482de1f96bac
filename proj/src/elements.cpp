#include "updsim/elements.hpp"

#include <cmath>

namespace updsim::elements {

using qmath::Complex;
using qmath::Mat2;

Mat2 hwp(WavePlateAngle angle) {
  const double c = std::cos(2.0 * angle.radians);
  const double s = std::sin(2.0 * angle.radians);
  Mat2 out;
  out.at(0, 0) = c;
  out.at(0, 1) = s;
  out.at(1, 0) = s;
  out.at(1, 1) = -c;
  return out;
}

Mat2 pol_to_path() {
  Mat2 out;
  out.at(0, 1) = 1.0;
  out.at(1, 0) = 1.0;
  return out;
}

Mat2 phase_shifter(MziPhase alpha) {
  Mat2 out;
  out.at(0, 0) = std::polar(1.0, alpha.radians);
  out.at(1, 1) = 1.0;
  return out;
}

Mat2 npbs() {
  const double h = 1.0 / std::sqrt(2.0);
  Mat2 out;
  out.at(0, 0) = h;
  out.at(0, 1) = h;
  out.at(1, 0) = h;
  out.at(1, 1) = test_hooks::corrupt_npbs_sign ? h : -h;
  return out;
}

Mat2 mzi_map(MziPhase alpha) { return npbs() * phase_shifter(alpha); }

} // namespace updsim::elements
