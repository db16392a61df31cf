#include "cspace/cptp.hpp"

#include <cmath>

namespace cspace {

SuperOperator SuperOperator::from_kraus(std::vector<CMatrix> ops) {
  if (ops.empty()) throw std::invalid_argument("SuperOperator: empty Kraus list");
  SuperOperator so;
  so.dim_in = ops.front().cols;
  so.dim_out = ops.front().rows;
  for (const auto& k : ops)
    if (k.rows != so.dim_out || k.cols != so.dim_in)
      throw std::invalid_argument("SuperOperator: Kraus shape mismatch");
  so.kraus = std::move(ops);
  return so;
}

SuperOperator SuperOperator::from_action(std::size_t dim_in, std::vector<CMatrix> images) {
  if (images.size() != dim_in * dim_in)
    throw std::invalid_argument("SuperOperator: need dim_in^2 matrix-unit images");
  SuperOperator so;
  so.dim_in = dim_in;
  so.dim_out = images.front().rows;
  for (const auto& m : images)
    if (m.rows != so.dim_out || m.cols != so.dim_out || !m.square())
      throw std::invalid_argument("SuperOperator: image shape mismatch");
  so.action = std::move(images);
  return so;
}

CMatrix SuperOperator::apply(const CMatrix& rho) const {
  if (rho.rows != dim_in || rho.cols != dim_in)
    throw std::invalid_argument("SuperOperator::apply: shape mismatch");
  if (has_kraus()) {
    CMatrix out(dim_out, dim_out);
    for (const auto& k : kraus) out = out + k * rho * dagger(k);
    return out;
  }
  CMatrix out(dim_out, dim_out);
  for (std::size_t a = 0; a < dim_in; ++a)
    for (std::size_t b = 0; b < dim_in; ++b) {
      const cplx c = rho(a, b);
      if (c == cplx(0.0)) continue;
      out = out + c * action[a * dim_in + b];
    }
  return out;
}

CMatrix SuperOperator::unit_image(std::size_t a, std::size_t b) const {
  if (has_kraus()) {
    CMatrix unit(dim_in, dim_in);
    unit(a, b) = 1.0;
    return apply(unit);
  }
  return action[a * dim_in + b];
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::LinearCPTP: return "LinearCPTP";
    case Verdict::CPnotTP: return "CPnotTP";
    case Verdict::NotCP: return "NotCP";
    case Verdict::NonLinear: return "NonLinear";
  }
  return "?";
}

ChoiMatrix choi(const SuperOperator& so) {
  const std::size_t din = so.dim_in, dout = so.dim_out;
  ChoiMatrix j;
  j.dim_in = din;
  j.dim_out = dout;
  j.matrix = CMatrix(dout * din, dout * din);
  for (std::size_t a = 0; a < din; ++a)
    for (std::size_t b = 0; b < din; ++b) {
      const CMatrix img = so.unit_image(a, b);
      for (std::size_t i = 0; i < dout; ++i)
        for (std::size_t k = 0; k < dout; ++k)
          j.matrix(i * din + a, k * din + b) = img(i, k);
    }
  return j;
}

CMatrix choi_partial_trace(const ChoiMatrix& j) {
  CMatrix out(j.dim_in, j.dim_in);
  for (std::size_t a = 0; a < j.dim_in; ++a)
    for (std::size_t b = 0; b < j.dim_in; ++b) {
      cplx acc = 0.0;
      for (std::size_t i = 0; i < j.dim_out; ++i)
        acc += j.matrix(i * j.dim_in + a, i * j.dim_in + b);
      out(a, b) = acc;
    }
  return out;
}

bool is_cp(const ChoiMatrix& j, Tolerance tol) {
  return is_hermitian_psd(j.matrix, tol);
}

bool is_tp(const SuperOperator& so, Tolerance tol) {
  if (so.has_kraus()) {
    CMatrix sum(so.dim_in, so.dim_in);
    for (const auto& k : so.kraus) sum = sum + dagger(k) * k;
    return max_abs_diff(sum, CMatrix::identity(so.dim_in)) <= tol.abs_eps;
  }
  return max_abs_diff(choi_partial_trace(choi(so)), CMatrix::identity(so.dim_in)) <=
         tol.abs_eps;
}

namespace {

double tp_deviation_of(const SuperOperator& so) {
  if (so.has_kraus()) {
    CMatrix sum(so.dim_in, so.dim_in);
    for (const auto& k : so.kraus) sum = sum + dagger(k) * k;
    return max_abs_diff(sum, CMatrix::identity(so.dim_in));
  }
  return max_abs_diff(choi_partial_trace(choi(so)), CMatrix::identity(so.dim_in));
}

struct ProbePair {
  CMatrix rho1, rho2;
  double lambda;
};

std::vector<ProbePair> probe_pairs(std::size_t dim, std::size_t trials,
                                   std::uint64_t seed) {
  std::vector<ProbePair> pairs;
  // Canonical computational pairs first: these hit probability-zero branches
  // of conditioned maps, which random full-rank states never do.
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = a + 1; b < dim; ++b) {
      ProbePair p;
      p.rho1 = outer(CVector::basis(dim, a), CVector::basis(dim, a));
      p.rho2 = outer(CVector::basis(dim, b), CVector::basis(dim, b));
      p.lambda = 0.5;
      pairs.push_back(std::move(p));
    }
  Rng rng(seed ^ 0x9e3779b97f4a7c15ull);
  while (pairs.size() < trials) {
    ProbePair p;
    if (pairs.size() % 2 == 0) {
      const CVector u = random_unit_vector(dim, rng);
      p.rho1 = outer(u, u);
    } else {
      p.rho1 = random_density(dim, rng);
    }
    p.rho2 = random_density(dim, rng);
    p.lambda = 0.2 + 0.6 * rng.uniform();
    pairs.push_back(std::move(p));
  }
  return pairs;
}

}  // namespace

double linearity_probe(const OperationalMap& f, std::size_t dim, std::size_t trials,
                       std::uint64_t seed) {
  double worst = 0.0;
  for (const auto& p : probe_pairs(dim, trials, seed)) {
    const CMatrix mix = cplx(p.lambda) * p.rho1 + cplx(1.0 - p.lambda) * p.rho2;
    const CMatrix lhs = f(mix);
    const CMatrix rhs = cplx(p.lambda) * f(p.rho1) + cplx(1.0 - p.lambda) * f(p.rho2);
    worst = std::max(worst, max_abs_diff(lhs, rhs));
  }
  return worst;
}

MapClassification classify(const SuperOperator& so, Tolerance tol) {
  MapClassification result;
  result.linearity_deviation = 0.0;  // linear by representation
  const ChoiMatrix j = choi(so);
  result.hermiticity_deviation = max_abs_diff(j.matrix, dagger(j.matrix));
  result.cp_min_eigenvalue = min_hermitian_eigenvalue(j.matrix);
  result.tp_deviation = tp_deviation_of(so);
  const bool cp = result.hermiticity_deviation <= tol.abs_eps &&
                  result.cp_min_eigenvalue >= -tol.abs_eps;
  const bool tp = result.tp_deviation <= tol.abs_eps;
  result.verdict = !cp ? Verdict::NotCP
                       : (tp ? Verdict::LinearCPTP : Verdict::CPnotTP);
  return result;
}

MapClassification classify_operational(const OperationalMap& f, std::size_t dim,
                                       std::size_t trials, Tolerance tol,
                                       std::uint64_t seed) {
  MapClassification result;
  result.linearity_deviation = linearity_probe(f, dim, trials, seed);
  if (result.linearity_deviation > tol.abs_eps) {
    result.verdict = Verdict::NonLinear;
    return result;
  }

  // Linear within tolerance: tabulate the linear extension on matrix units
  // from images of genuine density matrices.
  std::vector<CMatrix> units(dim * dim);
  std::vector<CMatrix> diag(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    diag[a] = f(outer(CVector::basis(dim, a), CVector::basis(dim, a)));
    units[a * dim + a] = diag[a];
  }
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) {
      if (a == b) continue;
      CVector w(dim), z(dim);
      const double s = 1.0 / std::sqrt(2.0);
      w[a] = s;
      w[b] = s;
      z[a] = s;
      z[b] = cplx(0.0, s);
      // E_ab = f(P_w) + i f(P_z) - (1+i)/2 (f(E_aa) + f(E_bb))
      const CMatrix fw = f(outer(w, w));
      const CMatrix fz = f(outer(z, z));
      units[a * dim + b] =
          fw + cplx(0.0, 1.0) * fz - cplx(0.5, 0.5) * (diag[a] + diag[b]);
    }
  const auto so = SuperOperator::from_action(dim, std::move(units));
  MapClassification linear = classify(so, tol);
  linear.linearity_deviation = result.linearity_deviation;
  return linear;
}

}  // namespace cspace
