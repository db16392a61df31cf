#pragma once

#include "cspace/linalg.hpp"

#include <cmath>

namespace testutil {

using cspace::CMatrix;
using cspace::CVector;
using cspace::cplx;

inline CMatrix pauli_x() {
  CMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

inline CMatrix pauli_z() {
  CMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

inline CMatrix pauli_y() {
  CMatrix m(2, 2);
  m(0, 1) = cplx(0.0, -1.0);
  m(1, 0) = cplx(0.0, 1.0);
  return m;
}

inline CMatrix rot_z(double theta) {  // e^{i Z theta / 2}
  CMatrix m(2, 2);
  m(0, 0) = std::exp(cplx(0.0, theta / 2.0));
  m(1, 1) = std::exp(cplx(0.0, -theta / 2.0));
  return m;
}

inline CMatrix diag2(cplx a, cplx b) {
  CMatrix m(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

inline bool close(const CMatrix& a, const CMatrix& b, double tol = 1e-12) {
  return cspace::max_abs_diff(a, b) <= tol;
}

inline bool close(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol;
}

/// True when a = e^{i phase} c b for some phase and scale c > 0.
inline bool proportional_up_to_phase(const CMatrix& a, const CMatrix& b,
                                     double tol = 1e-10) {
  const double na = cspace::frobenius_norm(a);
  const double nb = cspace::frobenius_norm(b);
  if (na <= tol || nb <= tol) return na <= tol && nb <= tol;
  // the phase maximizing Re(e^{-i t} <a,b>) aligns the two
  cplx overlap = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    overlap += std::conj(b.data[i]) * a.data[i];
  if (std::abs(overlap) <= tol) return false;
  const cplx phase = overlap / std::abs(overlap);
  const double scale = na / nb;
  return cspace::max_abs_diff(a, (phase * cplx(scale)) * b) <= tol * std::max(1.0, na);
}

}  // namespace testutil
