#pragma once

#include "cspace/correlation.hpp"

namespace cspace {

/// Dense density operator on n qudits; index = sum_i k_i d^(i-1),
/// site 1 least significant, matching DenseState.
struct DenseDensity {
  std::size_t n = 0;
  std::size_t d = 0;
  CMatrix matrix;

  static DenseDensity pure(const DenseState& state, bool normalize = true);
  double trace_real() const { return trace(matrix).real(); }
};

struct MeasurementBranch {
  std::size_t outcome = 0;
  double probability = 0.0;
  bool zero_probability = false;
  DenseDensity post;  // renormalized unless the branch has probability 0
};

DenseDensity apply_channel_at(const DenseDensity& rho, std::size_t site,
                              const KrausChannel& ch);

std::vector<MeasurementBranch> measure_at(const DenseDensity& rho, std::size_t site,
                                          const MeasurementBasis& basis);

struct Reconstruction {
  SuperOperator map;        // action-table form on the D x D correlation space
  double condition_number;  // of the boundary-to-chain embedding
};

/// Tomographic reconstruction of the correlation-space map from the dense
/// pipeline: prepare boundary vectors |u>, |v>, |u>+|v>, |u>+i|v>, run
/// channel + site-1 measurement on the dense chain, strip the remaining
/// chain's embedding by least squares, and polarize. When `outcome` is set,
/// only that measurement branch is kept (the conditional map); otherwise
/// branches are summed, which reconstructs the outcome-mixed map.
Reconstruction reconstruct_induced_map(const ResourceMPS& mps, const KrausChannel& ch,
                                       const MeasurementBasis& basis,
                                       std::optional<std::size_t> outcome = std::nullopt);

}  // namespace cspace
