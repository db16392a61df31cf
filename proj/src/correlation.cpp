#include "cspace/correlation.hpp"

#include <cmath>

namespace cspace {

MeasurementBasis MeasurementBasis::angled(double theta, double phi, std::size_t d) {
  if (d < 2) throw std::invalid_argument("MeasurementBasis: d must be >= 2");
  if (theta <= 0.0 || theta >= M_PI)
    throw std::invalid_argument("MeasurementBasis: theta must lie strictly in (0, pi)");
  const double ct = std::cos(theta / 2.0);
  const double st = std::sin(theta / 2.0);
  const cplx eip = std::exp(cplx(0.0, phi));

  std::vector<CVector> vs;
  CVector alpha(d), beta(d);
  alpha[0] = ct;
  alpha[1] = eip * st;
  beta[0] = st;
  beta[1] = -eip * ct;
  vs.push_back(std::move(alpha));
  vs.push_back(std::move(beta));
  for (std::size_t k = 2; k < d; ++k) vs.push_back(CVector::basis(d, k));

  MeasurementBasis b = from_vectors(std::move(vs));
  b.theta = theta;
  b.phi = phi;
  return b;
}

MeasurementBasis MeasurementBasis::computational(std::size_t d) {
  std::vector<CVector> vs;
  for (std::size_t k = 0; k < d; ++k) vs.push_back(CVector::basis(d, k));
  return from_vectors(std::move(vs));
}

MeasurementBasis MeasurementBasis::from_vectors(std::vector<CVector> vs) {
  if (vs.empty()) throw std::invalid_argument("MeasurementBasis: empty vector set");
  const std::size_t d = vs.front().dim();
  if (vs.size() != d)
    throw std::invalid_argument("MeasurementBasis: need d vectors of dim d");
  for (std::size_t i = 0; i < d; ++i) {
    if (vs[i].dim() != d)
      throw std::invalid_argument("MeasurementBasis: vector dim mismatch");
    for (std::size_t j = 0; j < d; ++j) {
      const cplx g = inner(vs[i], vs[j]);
      const cplx expect = i == j ? cplx(1.0) : cplx(0.0);
      if (std::abs(g - expect) > Tolerance::construction().abs_eps)
        throw std::invalid_argument("MeasurementBasis: vectors are not orthonormal");
    }
  }
  MeasurementBasis b;
  b.dim = d;
  b.vectors = std::move(vs);
  return b;
}

CMatrix branch_operator(const ResourceMPS& mps, const CVector& m) {
  if (m.dim() != mps.d)
    throw std::invalid_argument("branch_operator: vector dim must match physical dim");
  CMatrix out(mps.D, mps.D);
  for (std::size_t k = 0; k < mps.d; ++k)
    out = out + std::conj(m[k]) * mps.tensors[k];
  return out;
}

InducedMap induced_kraus(const ResourceMPS& mps, const KrausChannel& ch,
                         const MeasurementBasis& basis) {
  if (ch.dim != mps.d || basis.dim != mps.d)
    throw std::invalid_argument("induced_kraus: dimension mismatch");
  InducedMap im;
  im.bond_dim = mps.D;
  im.phys_dim = mps.d;
  im.outcomes.resize(mps.d);
  for (std::size_t s = 0; s < mps.d; ++s) {
    for (const auto& f : ch.kraus) {
      // E_{j,s} = sum_k A[k] <m_s|F_j|k>
      CMatrix e(mps.D, mps.D);
      for (std::size_t k = 0; k < mps.d; ++k) {
        cplx amp = 0.0;
        for (std::size_t l = 0; l < mps.d; ++l)
          amp += std::conj(basis.vectors[s][l]) * f(l, k);
        e = e + amp * mps.tensors[k];
      }
      im.outcomes[s].push_back(std::move(e));
    }
  }
  return im;
}

double tp_certificate(const InducedMap& im) {
  CMatrix sum(im.bond_dim, im.bond_dim);
  for (const auto& outcome : im.outcomes)
    for (const auto& e : outcome) sum = sum + dagger(e) * e;
  return max_abs_diff(sum, CMatrix::identity(im.bond_dim));
}

SuperOperator mixed_map(const InducedMap& im) {
  std::vector<CMatrix> all;
  for (const auto& outcome : im.outcomes)
    for (const auto& e : outcome) all.push_back(e);
  return SuperOperator::from_kraus(std::move(all));
}

ConditionalMap per_outcome_map(const InducedMap& im, std::size_t s) {
  if (s >= im.outcomes.size())
    throw std::invalid_argument("per_outcome_map: outcome out of range");
  ConditionalMap cm;
  cm.outcome = s;
  cm.kraus = im.outcomes[s];
  cm.gram = CMatrix(im.bond_dim, im.bond_dim);
  double scale = 0.0;
  for (const auto& e : cm.kraus) {
    cm.gram = cm.gram + dagger(e) * e;
    scale = std::max(scale, max_abs(e));
  }
  cm.zero_branch = scale <= 1e-14;
  return cm;
}

SuperOperator ConditionalMap::operator_normalized() const {
  if (zero_branch)
    throw std::runtime_error("ConditionalMap: probability-0 outcome has no normal form");
  std::vector<CMatrix> normalized;
  for (const auto& e : kraus) {
    const double n = operator_norm(e);
    if (n <= 1e-14) continue;  // drop vanishing elements
    normalized.push_back(cplx(1.0 / n) * e);
  }
  return SuperOperator::from_kraus(std::move(normalized));
}

SuperOperator ConditionalMap::scale_normalized() const {
  if (zero_branch)
    throw std::runtime_error("ConditionalMap: probability-0 outcome has no normal form");
  const double c2 = trace(gram).real() / static_cast<double>(gram.rows);
  std::vector<CMatrix> scaled;
  for (const auto& e : kraus) scaled.push_back(cplx(1.0 / std::sqrt(c2)) * e);
  return SuperOperator::from_kraus(std::move(scaled));
}

OperationalMap ConditionalMap::renormalized() const {
  const auto ops = kraus;
  const std::size_t dim = gram.rows;
  return [ops, dim](const CMatrix& rho) {
    CMatrix img(dim, dim);
    for (const auto& e : ops) img = img + e * rho * dagger(e);
    const double p = trace(img).real();
    if (p <= 1e-14) return CMatrix::zero(dim, dim);
    return cplx(1.0 / p) * img;
  };
}

bool ConditionalMap::trace_preserving(Tolerance tol) const {
  if (zero_branch) return false;
  return proportionality_to_identity(gram, tol).has_value();
}

}  // namespace cspace
