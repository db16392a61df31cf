#pragma once

#include "cspace/linalg.hpp"

#include <functional>
#include <string>

namespace cspace {

/// Linear map on D_in x D_in matrices, held either as a Kraus family or as
/// an action table (images of the matrix units E_ab, row-major in (a,b)).
struct SuperOperator {
  std::size_t dim_in = 0;
  std::size_t dim_out = 0;
  std::vector<CMatrix> kraus;   // non-empty for Kraus form
  std::vector<CMatrix> action;  // non-empty for action form

  static SuperOperator from_kraus(std::vector<CMatrix> ops);
  static SuperOperator from_action(std::size_t dim_in, std::vector<CMatrix> images);

  bool has_kraus() const { return !kraus.empty(); }
  CMatrix apply(const CMatrix& rho) const;
  /// Image of the matrix unit |a><b|.
  CMatrix unit_image(std::size_t a, std::size_t b) const;
};

struct ChoiMatrix {
  std::size_t dim_in = 0;
  std::size_t dim_out = 0;
  CMatrix matrix;  // (dim_out*dim_in) square, J = sum_ab Phi(E_ab) (x) E_ab
};

enum class Verdict { LinearCPTP, CPnotTP, NotCP, NonLinear };

const char* to_string(Verdict v);

struct MapClassification {
  Verdict verdict = Verdict::LinearCPTP;
  double tp_deviation = 0.0;        // max-norm distance of the TP certificate from I
  double cp_min_eigenvalue = 0.0;   // smallest Choi eigenvalue
  double linearity_deviation = 0.0; // max affine-combination defect over probe trials
  double hermiticity_deviation = 0.0;
};

ChoiMatrix choi(const SuperOperator& so);

bool is_cp(const ChoiMatrix& j, Tolerance tol = Tolerance::verification());
bool is_tp(const SuperOperator& so, Tolerance tol = Tolerance::verification());

/// Partial trace over the output factor: result[a,b] = sum_i J[(i,a),(i,b)].
CMatrix choi_partial_trace(const ChoiMatrix& j);

/// An operational map takes a density matrix and returns its image; maps
/// that renormalize return a trace-1 image, probability-zero branches return
/// the zero matrix.
using OperationalMap = std::function<CMatrix(const CMatrix&)>;

/// Max over probe pairs of || f(lambda rho1 + (1-lambda) rho2)
///                            - lambda f(rho1) - (1-lambda) f(rho2) ||_max.
/// Renormalizing maps are fractional-linear, so mixtures stay on the segment
/// between the branch images but with reweighted coefficients; comparing at
/// the original weight is what detects that reweighting. Probe pairs include
/// every computational pure-state pair plus seeded random pairs.
double linearity_probe(const OperationalMap& f, std::size_t dim, std::size_t trials,
                       std::uint64_t seed = 0);

MapClassification classify(const SuperOperator& so,
                           Tolerance tol = Tolerance::verification());

MapClassification classify_operational(const OperationalMap& f, std::size_t dim,
                                       std::size_t trials = 24,
                                       Tolerance tol = Tolerance::verification(),
                                       std::uint64_t seed = 0);

}  // namespace cspace
