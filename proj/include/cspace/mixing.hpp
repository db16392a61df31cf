#pragma once

#include "cspace/correlation.hpp"

namespace cspace {

/// Measurement record (s_1, ..., s_r), each entry in {0, 1, 2}.
struct OutcomeSeq {
  std::vector<std::size_t> entries;
};

/// Classical byproduct flag (p, q) labelling the Pauli X^p Z^q frame.
struct ByproductSector {
  int p = 0;
  int q = 0;
};

/// The correlation-space map conditioned on one byproduct flag: the
/// operators Q_r ... Q_2 E_{j,s_1} over the compatible outcome sequences,
/// plus the Z^{r-1} E_{j,2} failure term when the flag admits it, and the
/// Gram sum of the family.
struct SectorMap {
  ByproductSector sector;
  std::size_t r = 0;
  std::vector<CMatrix> kraus_like;
  CMatrix gram;
};

/// Parity of the number of outcomes in {0,1} resp. {1,2}.
int f_parity(const OutcomeSeq& seq);
int g_parity(const OutcomeSeq& seq);

/// 1 exactly when (p,q) matches the sector the all-2 record would carry.
int h_flag(int p, int q, std::size_t r);

/// The step-k protocol operator: while every earlier outcome is 2 the step
/// consumes the rotation (X e^{iZt/2}, XZ e^{iZt/2}, Z); afterwards the plain
/// byproduct table (X, XZ, Z) applies.
CMatrix q_operator(const std::vector<std::size_t>& history, std::size_t s_k,
                   double theta);

/// All sequences in {0,1,2}^r minus the all-2 record with parities (p, q).
std::vector<OutcomeSeq> sector_enumerate(std::size_t r, int p, int q);

/// Assembles the sector map for the AKLT chain: first measurement in
/// M_{theta,phi} (retried while outcomes stay 2), later ones computational.
/// Step operators beyond the first carry the paper's unit scale (sqrt(3) x
/// branch operator).
SectorMap sector_map(const ResourceMPS& mps, const KrausChannel& ch, double theta,
                     double phi, std::size_t r, int p, int q);

MapClassification classify_sector(const SectorMap& sm,
                                  Tolerance tol = Tolerance::verification());

/// Every sector's family plus failure terms, rescaled by 3^{-(r-1)/2} back to
/// physical branch normalization.
std::vector<CMatrix> assemble_global_kraus(const ResourceMPS& mps,
                                           const KrausChannel& ch, double theta,
                                           double phi, std::size_t r);

/// || sum K†K - I ||_max over the globally assembled family.
double global_tp_deviation(const ResourceMPS& mps, const KrausChannel& ch,
                           double theta, double phi, std::size_t r);

/// d=2 positive control: the outcome-flagged mixed map on the cluster chain,
/// classified as a map into the system (x) flag space.
MapClassification cluster_mixing_control(const KrausChannel& ch,
                                         const MeasurementBasis& basis);

}  // namespace cspace
