#pragma once

#include "cspace/linalg.hpp"

#include <string>

namespace cspace {

/// One-dimensional open-boundary matrix product state: d site operators
/// A[0..d-1] of shape D x D, boundary vectors <L| and |R>, N sites.
/// `left` holds the components of the bra: amplitudes contract as
/// sum_ij left[i] * M[i][j] * right[j], with no hidden conjugation.
struct ResourceMPS {
  std::size_t d = 0;
  std::size_t D = 0;
  std::vector<CMatrix> tensors;
  CVector left;
  CVector right;
  std::size_t n_sites = 1;

  void check() const;  // throws on shape violations
};

struct DenseState {
  std::size_t n = 0;
  std::size_t d = 0;
  CVector amplitudes;  // index = sum_i k_i * d^(i-1), site 1 least significant

  double norm() const { return cspace::norm(amplitudes); }
  CVector normalized() const;
};

struct BranchReport {
  std::string name;      // "alpha", "beta", "k=2", ...
  bool unitary = false;  // unitary up to a positive constant
  double scale = 0.0;    // the constant, when unitary
};

struct ValidationReport {
  std::vector<BranchReport> branches;
  double normalization_C = 0.0;

  bool valid(Tolerance tol = Tolerance::verification()) const;
  std::string first_failure() const;  // empty when all branches pass
};

/// d=3, D=2 spin-1 chain with tensors X/sqrt(3), XZ/sqrt(3), Z/sqrt(3).
ResourceMPS aklt(std::size_t n_sites = 4);

/// d=2, D=2 chain with A[0]=|0><+|, A[1]=|1><-| and boundaries chosen so
/// the dense expansion equals the CZ-chain state on |+>^N exactly.
ResourceMPS cluster_1d(std::size_t n_sites = 4);

/// Draws unitaries U_alpha, U_beta, U_2..U_{d-1} and positive constants with
/// sum c^2 = 1, then inverts the measurement-basis change so the (theta, phi)
/// branch operators come out as c*U exactly.
ResourceMPS random_resource(std::size_t d, std::size_t D, double theta, double phi,
                            std::uint64_t seed, std::size_t n_sites = 4);

/// Tests every (theta, phi) branch operator for unitarity up to scale and
/// reports the constants and C = sum of squared scales.
ValidationReport validate(const ResourceMPS& mps, double theta, double phi,
                          Tolerance tol = Tolerance::verification());

/// Expands amplitude(k_N..k_1) = <L|A[k_N]...A[k_1]|R>. Not renormalized.
DenseState to_dense(const ResourceMPS& mps);

/// The operator W(|psi>)_r on sites r..N:
///   sum <L|A[k_N]..A[k_r]|psi><psi|A†[k'_r]..A†[k'_N]|L> |k_r..><k'_r..|
CMatrix conditional_W(const ResourceMPS& mps, const CVector& psi, std::size_t r);

/// <L| A[k.back()] ... A[k.front()] |R> for explicit site labels
/// (k[0] is site 1).
cplx mps_amplitude(const ResourceMPS& mps, const std::vector<std::size_t>& k);

/// sum_k A†[k] A[k]
CMatrix completeness_sum(const ResourceMPS& mps);

}  // namespace cspace
