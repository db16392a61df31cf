#include "cspace/resource.hpp"

#include "cspace/correlation.hpp"

#include <cmath>

namespace cspace {

namespace {

constexpr double kDenseGuard = 1e6;
constexpr double kWindowGuard = 1e3;

double pow_size(std::size_t base, std::size_t exp) {
  double acc = 1.0;
  for (std::size_t i = 0; i < exp; ++i) acc *= static_cast<double>(base);
  return acc;
}

CMatrix pauli_x() {
  CMatrix m(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

CMatrix pauli_z() {
  CMatrix m(2, 2);
  m(0, 0) = 1.0;
  m(1, 1) = -1.0;
  return m;
}

}  // namespace

void ResourceMPS::check() const {
  if (d < 2) throw std::invalid_argument("ResourceMPS: d must be >= 2");
  if (D < 1) throw std::invalid_argument("ResourceMPS: D must be >= 1");
  if (n_sites < 1) throw std::invalid_argument("ResourceMPS: n_sites must be >= 1");
  if (tensors.size() != d) throw std::invalid_argument("ResourceMPS: need d tensors");
  for (const auto& t : tensors)
    if (t.rows != D || t.cols != D)
      throw std::invalid_argument("ResourceMPS: every tensor must be D x D");
  if (left.dim() != D || right.dim() != D)
    throw std::invalid_argument("ResourceMPS: boundary vectors must have dim D");
}

CVector DenseState::normalized() const {
  const double nrm = norm();
  if (nrm == 0.0) return amplitudes;
  CVector out = amplitudes;
  for (auto& x : out.entries) x /= nrm;
  return out;
}

bool ValidationReport::valid(Tolerance tol) const {
  for (const auto& b : branches)
    if (!b.unitary) return false;
  return std::abs(normalization_C - 1.0) <= tol.abs_eps;
}

std::string ValidationReport::first_failure() const {
  for (const auto& b : branches)
    if (!b.unitary) return b.name;
  return {};
}

ResourceMPS aklt(std::size_t n_sites) {
  const double s = 1.0 / std::sqrt(3.0);
  ResourceMPS m;
  m.d = 3;
  m.D = 2;
  m.tensors = {cplx(s) * pauli_x(), cplx(s) * (pauli_x() * pauli_z()),
               cplx(s) * pauli_z()};
  m.left = CVector::basis(2, 0);
  m.right = CVector::basis(2, 0);
  m.n_sites = n_sites;
  m.check();
  return m;
}

ResourceMPS cluster_1d(std::size_t n_sites) {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix a0(2, 2), a1(2, 2);
  // |0><+| and |1><-|
  a0(0, 0) = s;
  a0(0, 1) = s;
  a1(1, 0) = s;
  a1(1, 1) = -s;
  ResourceMPS m;
  m.d = 2;
  m.D = 2;
  m.tensors = {a0, a1};
  m.left = CVector{cplx(1.0), cplx(1.0)};  // <0| + <1|: makes to_dense the CZ-chain state
  m.right = CVector::basis(2, 0);
  m.n_sites = n_sites;
  m.check();
  return m;
}

ResourceMPS random_resource(std::size_t d, std::size_t D, double theta, double phi,
                            std::uint64_t seed, std::size_t n_sites) {
  if (d < 2) throw std::invalid_argument("random_resource: d must be >= 2");
  if (theta <= 0.0 || theta >= M_PI)
    throw std::invalid_argument("random_resource: theta must lie strictly in (0, pi)");
  Rng rng(seed);

  std::vector<CMatrix> scaled(d);  // branch operators c_s * U_s in outcome order
  std::vector<double> c(d);
  double sum_sq = 0.0;
  for (std::size_t s = 0; s < d; ++s) {
    c[s] = 0.1 + rng.uniform();  // bounded away from zero
    sum_sq += c[s] * c[s];
  }
  const double scale = 1.0 / std::sqrt(sum_sq);
  for (std::size_t s = 0; s < d; ++s) {
    c[s] *= scale;
    scaled[s] = cplx(c[s]) * random_unitary(D, rng);
  }

  // Invert A[alpha] = cos(t/2) A[0] + e^{-i phi} sin(t/2) A[1],
  //        A[beta]  = sin(t/2) A[0] - e^{-i phi} cos(t/2) A[1].
  const double ct = std::cos(theta / 2.0);
  const double st = std::sin(theta / 2.0);
  const cplx eip = std::exp(cplx(0.0, phi));
  ResourceMPS m;
  m.d = d;
  m.D = D;
  m.tensors.resize(d);
  m.tensors[0] = cplx(ct) * scaled[0] + cplx(st) * scaled[1];
  m.tensors[1] = eip * (cplx(st) * scaled[0] - cplx(ct) * scaled[1]);
  for (std::size_t k = 2; k < d; ++k) m.tensors[k] = scaled[k];
  m.left = CVector::basis(D, 0);
  m.right = CVector::basis(D, 0);
  m.n_sites = n_sites;
  m.check();
  return m;
}

ValidationReport validate(const ResourceMPS& mps, double theta, double phi,
                          Tolerance tol) {
  mps.check();
  if (theta <= 0.0 || theta >= M_PI)
    throw std::invalid_argument("validate: theta must lie strictly in (0, pi)");
  const MeasurementBasis basis = MeasurementBasis::angled(theta, phi, mps.d);

  ValidationReport report;
  double C = 0.0;
  for (std::size_t s = 0; s < mps.d; ++s) {
    const CMatrix b = branch_operator(mps, basis.vectors[s]);
    BranchReport br;
    br.name = s == 0 ? "alpha" : s == 1 ? "beta" : "k=" + std::to_string(s);
    if (auto scale = unitary_up_to_scale(b, tol)) {
      br.unitary = true;
      br.scale = *scale;
      C += *scale * *scale;
    }
    report.branches.push_back(std::move(br));
  }
  report.normalization_C = C;
  return report;
}

DenseState to_dense(const ResourceMPS& mps) {
  mps.check();
  const double total = pow_size(mps.d, mps.n_sites);
  if (total > kDenseGuard)
    throw std::invalid_argument("to_dense: d^N exceeds the size guard");

  const std::size_t size = static_cast<std::size_t>(total);
  DenseState out;
  out.n = mps.n_sites;
  out.d = mps.d;
  out.amplitudes = CVector(size);

  std::vector<std::size_t> k(mps.n_sites, 0);  // k[i] = outcome at site i+1
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t rem = idx;
    for (std::size_t i = 0; i < mps.n_sites; ++i) {
      k[i] = rem % mps.d;
      rem /= mps.d;
    }
    CVector row = mps.left;
    for (std::size_t site = mps.n_sites; site >= 1; --site) {
      // row <- row * A[k_site]
      const CMatrix& a = mps.tensors[k[site - 1]];
      CVector next(mps.D);
      for (std::size_t j = 0; j < mps.D; ++j) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < mps.D; ++i) acc += row[i] * a(i, j);
        next[j] = acc;
      }
      row = std::move(next);
    }
    cplx amp = 0.0;
    for (std::size_t j = 0; j < mps.D; ++j) amp += row[j] * mps.right[j];
    out.amplitudes[idx] = amp;
  }
  return out;
}

cplx mps_amplitude(const ResourceMPS& mps, const std::vector<std::size_t>& k) {
  if (k.size() != mps.n_sites)
    throw std::invalid_argument("mps_amplitude: need one outcome per site");
  CVector row = mps.left;
  for (std::size_t site = mps.n_sites; site >= 1; --site) {
    const CMatrix& a = mps.tensors.at(k[site - 1]);
    CVector next(mps.D);
    for (std::size_t j = 0; j < mps.D; ++j) {
      cplx acc = 0.0;
      for (std::size_t i = 0; i < mps.D; ++i) acc += row[i] * a(i, j);
      next[j] = acc;
    }
    row = std::move(next);
  }
  cplx amp = 0.0;
  for (std::size_t j = 0; j < mps.D; ++j) amp += row[j] * mps.right[j];
  return amp;
}

CMatrix conditional_W(const ResourceMPS& mps, const CVector& psi, std::size_t r) {
  mps.check();
  if (psi.dim() != mps.D) throw std::invalid_argument("conditional_W: psi must have dim D");
  if (r < 1 || r > mps.n_sites)
    throw std::invalid_argument("conditional_W: site index out of range");
  const std::size_t window = mps.n_sites - r + 1;
  const double total = pow_size(mps.d, window);
  if (total > kWindowGuard)
    throw std::invalid_argument("conditional_W: d^(N-r+1) exceeds the size guard");

  // W(|psi>)_r = |phi><phi| with phi = sum <L|A[k_N]..A[k_r]|psi> |k..>.
  const std::size_t size = static_cast<std::size_t>(total);
  CVector phi(size);
  std::vector<std::size_t> k(window, 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t rem = idx;
    for (std::size_t i = 0; i < window; ++i) {
      k[i] = rem % mps.d;
      rem /= mps.d;
    }
    CVector row = mps.left;
    for (std::size_t pos = window; pos >= 1; --pos) {
      const CMatrix& a = mps.tensors[k[pos - 1]];
      CVector next(mps.D);
      for (std::size_t j = 0; j < mps.D; ++j) {
        cplx acc = 0.0;
        for (std::size_t i = 0; i < mps.D; ++i) acc += row[i] * a(i, j);
        next[j] = acc;
      }
      row = std::move(next);
    }
    cplx amp = 0.0;
    for (std::size_t j = 0; j < mps.D; ++j) amp += row[j] * psi[j];
    phi[idx] = amp;
  }

  CMatrix w(size, size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) w(i, j) = phi[i] * std::conj(phi[j]);
  return w;
}

CMatrix completeness_sum(const ResourceMPS& mps) {
  CMatrix acc(mps.D, mps.D);
  for (const auto& a : mps.tensors) acc = acc + dagger(a) * a;
  return acc;
}

}  // namespace cspace
