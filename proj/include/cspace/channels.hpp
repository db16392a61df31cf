#pragma once

#include "cspace/linalg.hpp"

namespace cspace {

/// Physical single-qudit channel rho -> sum_j F_j rho F_j†.
/// Completeness sum_j F_j† F_j = I is checked at construction.
struct KrausChannel {
  std::size_t dim = 0;
  std::vector<CMatrix> kraus;

  KrausChannel(std::size_t d, std::vector<CMatrix> ops);

  std::size_t rank() const { return kraus.size(); }
  CMatrix apply(const CMatrix& rho) const;
};

KrausChannel identity_channel(std::size_t d);

/// Unitary exchanging |a> and |b>, identity elsewhere.
KrausChannel swap_error(std::size_t a, std::size_t b, std::size_t d);

/// V^s with V = sum_p e^{-i omega p} |p><p|, omega = 2 pi / d.
KrausChannel phase_error(std::size_t d, std::size_t s);

/// |alpha_{theta,phi}><0| + |beta_{theta,phi}><1| + sum_{k>=2} |k><k|.
CMatrix basis_rotation(double theta, double phi, std::size_t d);

/// The d=3 unitary error built from the basis rotation composed with the
/// Hadamard-like column map on levels 0,1.
KrausChannel f1_error(double theta, double phi, std::size_t d = 3);

/// Kraus set cut from a Haar-random isometry C^d -> C^(w*d); complete by
/// construction and reproducible for a fixed seed.
KrausChannel random_cptp(std::size_t d, std::size_t w, std::uint64_t seed);

}  // namespace cspace
