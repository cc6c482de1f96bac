#pragma once
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>

// Fixed-size complex linear algebra for 2- and 4-dimensional states and
// operators. Basis order is fixed project-wide:
//   polarization qubit: (V, H)
//   path qubit:         (path1, path2)
//   joint idler x signal: idler index slow, i.e. (V p1, V p2, H p1, H p2).

namespace updsim::qmath {

using Complex = std::complex<double>;

/// Two-component complex wave function.
struct Ket2 {
  Complex a0{};
  Complex a1{};
};

/// Four-component joint wave function, idler index slow.
struct Ket4 {
  std::array<Complex, 4> a{};
};

/// Row-major 2x2 complex matrix.
struct Mat2 {
  std::array<Complex, 4> m{};

  Complex& at(int r, int c) { return m[static_cast<std::size_t>(r * 2 + c)]; }
  const Complex& at(int r, int c) const { return m[static_cast<std::size_t>(r * 2 + c)]; }
};

/// Row-major 4x4 complex matrix.
struct Mat4 {
  std::array<Complex, 16> m{};

  Complex& at(int r, int c) { return m[static_cast<std::size_t>(r * 4 + c)]; }
  const Complex& at(int r, int c) const { return m[static_cast<std::size_t>(r * 4 + c)]; }
};

inline Mat2 identity2() {
  Mat2 out;
  out.at(0, 0) = 1.0;
  out.at(1, 1) = 1.0;
  return out;
}

inline Mat4 identity4() {
  Mat4 out;
  for (int i = 0; i < 4; ++i) out.at(i, i) = 1.0;
  return out;
}

// ---- elementwise arithmetic ----

inline Ket2 operator*(const Complex& s, const Ket2& k) { return {s * k.a0, s * k.a1}; }

inline Ket4 operator*(const Complex& s, const Ket4& k) {
  Ket4 out;
  for (std::size_t i = 0; i < 4; ++i) out.a[i] = s * k.a[i];
  return out;
}

inline Ket2 operator+(const Ket2& x, const Ket2& y) { return {x.a0 + y.a0, x.a1 + y.a1}; }

inline Ket4 operator+(const Ket4& x, const Ket4& y) {
  Ket4 out;
  for (std::size_t i = 0; i < 4; ++i) out.a[i] = x.a[i] + y.a[i];
  return out;
}

inline Mat2 operator+(const Mat2& x, const Mat2& y) {
  Mat2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = x.m[i] + y.m[i];
  return out;
}

inline Mat4 operator+(const Mat4& x, const Mat4& y) {
  Mat4 out;
  for (std::size_t i = 0; i < 16; ++i) out.m[i] = x.m[i] + y.m[i];
  return out;
}

inline Mat2 operator*(const Complex& s, const Mat2& x) {
  Mat2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = s * x.m[i];
  return out;
}

inline Mat4 operator*(const Complex& s, const Mat4& x) {
  Mat4 out;
  for (std::size_t i = 0; i < 16; ++i) out.m[i] = s * x.m[i];
  return out;
}

// ---- products ----

inline Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      out.at(r, c) = x.at(r, 0) * y.at(0, c) + x.at(r, 1) * y.at(1, c);
  return out;
}

inline Mat4 operator*(const Mat4& x, const Mat4& y) {
  Mat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      Complex acc = 0.0;
      for (int k = 0; k < 4; ++k) acc += x.at(r, k) * y.at(k, c);
      out.at(r, c) = acc;
    }
  return out;
}

/// apply(M, psi): matrix action on a ket.
inline Ket2 apply(const Mat2& m, const Ket2& k) {
  return {m.at(0, 0) * k.a0 + m.at(0, 1) * k.a1, m.at(1, 0) * k.a0 + m.at(1, 1) * k.a1};
}

inline Ket4 apply(const Mat4& m, const Ket4& k) {
  Ket4 out;
  for (int r = 0; r < 4; ++r) {
    Complex acc = 0.0;
    for (int c = 0; c < 4; ++c) acc += m.at(r, c) * k.a[static_cast<std::size_t>(c)];
    out.a[static_cast<std::size_t>(r)] = acc;
  }
  return out;
}

// ---- adjoints, inner products, norms ----

inline Mat2 adjoint(const Mat2& x) {
  Mat2 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.at(r, c) = std::conj(x.at(c, r));
  return out;
}

inline Mat4 adjoint(const Mat4& x) {
  Mat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out.at(r, c) = std::conj(x.at(c, r));
  return out;
}

/// Conjugate-linear in the first argument.
inline Complex inner(const Ket2& x, const Ket2& y) {
  return std::conj(x.a0) * y.a0 + std::conj(x.a1) * y.a1;
}

inline Complex inner(const Ket4& x, const Ket4& y) {
  Complex acc = 0.0;
  for (std::size_t i = 0; i < 4; ++i) acc += std::conj(x.a[i]) * y.a[i];
  return acc;
}

inline double norm_squared(const Ket2& k) { return std::norm(k.a0) + std::norm(k.a1); }

inline double norm_squared(const Ket4& k) {
  double acc = 0.0;
  for (const auto& c : k.a) acc += std::norm(c);
  return acc;
}

inline double norm(const Ket2& k) { return std::sqrt(norm_squared(k)); }
inline double norm(const Ket4& k) { return std::sqrt(norm_squared(k)); }

inline Complex trace(const Mat2& x) { return x.at(0, 0) + x.at(1, 1); }

inline Complex trace(const Mat4& x) {
  Complex acc = 0.0;
  for (int i = 0; i < 4; ++i) acc += x.at(i, i);
  return acc;
}

// ---- tensor structure ----

/// tensor(idler, signal): the idler index is the slow one.
inline Ket4 tensor(const Ket2& idler, const Ket2& signal) {
  Ket4 out;
  out.a[0] = idler.a0 * signal.a0;
  out.a[1] = idler.a0 * signal.a1;
  out.a[2] = idler.a1 * signal.a0;
  out.a[3] = idler.a1 * signal.a1;
  return out;
}

/// kron(A, B) acts as A on the idler factor and B on the signal factor:
/// kron(A,B) (a tensor b) = (A a) tensor (B b).
inline Mat4 kron(const Mat2& a, const Mat2& b) {
  Mat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out.at(r, c) = a.at(r / 2, c / 2) * b.at(r % 2, c % 2);
  return out;
}

/// outer(psi) = psi psi^dagger.
inline Mat2 outer(const Ket2& k) {
  Mat2 out;
  const Complex v[2] = {k.a0, k.a1};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out.at(r, c) = v[r] * std::conj(v[c]);
  return out;
}

inline Mat4 outer(const Ket4& k) {
  Mat4 out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      out.at(r, c) = k.a[static_cast<std::size_t>(r)] * std::conj(k.a[static_cast<std::size_t>(c)]);
  return out;
}

/// Trace out the idler (slow) factor of a 4x4 operator on idler x signal.
inline Mat2 partial_trace_idler(const Mat4& rho) {
  Mat2 out;
  for (int s = 0; s < 2; ++s)
    for (int t = 0; t < 2; ++t)
      out.at(s, t) = rho.at(s, t) + rho.at(2 + s, 2 + t);
  return out;
}

// ---- diagnostics ----

inline bool is_finite(const Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

inline bool is_finite(const Ket2& k) { return is_finite(k.a0) && is_finite(k.a1); }

inline bool is_finite(const Ket4& k) {
  for (const auto& c : k.a)
    if (!is_finite(c)) return false;
  return true;
}

inline bool is_finite(const Mat2& x) {
  for (const auto& c : x.m)
    if (!is_finite(c)) return false;
  return true;
}

inline bool is_finite(const Mat4& x) {
  for (const auto& c : x.m)
    if (!is_finite(c)) return false;
  return true;
}

inline double max_abs_diff(const Mat2& x, const Mat2& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(x.m[i] - y.m[i]));
  return d;
}

inline double max_abs_diff(const Mat4& x, const Mat4& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < 16; ++i) d = std::max(d, std::abs(x.m[i] - y.m[i]));
  return d;
}

inline double max_abs_diff(const Ket2& x, const Ket2& y) {
  return std::max(std::abs(x.a0 - y.a0), std::abs(x.a1 - y.a1));
}

inline double max_abs_diff(const Ket4& x, const Ket4& y) {
  double d = 0.0;
  for (std::size_t i = 0; i < 4; ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
  return d;
}

/// Max entrywise deviation of M^dagger M from the identity.
inline double unitarity_error(const Mat2& m) { return max_abs_diff(adjoint(m) * m, identity2()); }
inline double unitarity_error(const Mat4& m) { return max_abs_diff(adjoint(m) * m, identity4()); }

inline double hermiticity_error(const Mat2& m) { return max_abs_diff(m, adjoint(m)); }
inline double hermiticity_error(const Mat4& m) { return max_abs_diff(m, adjoint(m)); }

inline bool is_normalized(const Ket2& k, double tol = 1e-12) { return std::abs(norm_squared(k) - 1.0) <= tol; }
inline bool is_normalized(const Ket4& k, double tol = 1e-12) { return std::abs(norm_squared(k) - 1.0) <= tol; }

/// Eigenvalues of a Hermitian 2x2 matrix, ascending.
inline std::array<double, 2> hermitian_eigenvalues(const Mat2& m) {
  const double a = m.at(0, 0).real();
  const double d = m.at(1, 1).real();
  const double half_sum = 0.5 * (a + d);
  const double half_diff = 0.5 * (a - d);
  const double r = std::sqrt(half_diff * half_diff + std::norm(m.at(0, 1)));
  return {half_sum - r, half_sum + r};
}

} // namespace updsim::qmath
