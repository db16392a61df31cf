#include "cspace/linalg.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace cspace {

namespace {

Eigen::MatrixXcd to_eigen(const CMatrix& m) {
  Eigen::MatrixXcd out(m.rows, m.cols);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(i, j) = m(i, j);
  return out;
}

CMatrix from_eigen(const Eigen::MatrixXcd& m) {
  CMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = m(i, j);
  return out;
}

void require_square(const CMatrix& m, const char* who) {
  if (!m.square()) throw std::invalid_argument(std::string(who) + ": matrix must be square");
}

}  // namespace

CVector CVector::basis(std::size_t n, std::size_t k) {
  CVector v(n);
  v[k] = 1.0;
  return v;
}

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::zero(std::size_t r, std::size_t c) { return CMatrix(r, c); }

CMatrix dagger(const CMatrix& m) {
  CMatrix out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = std::conj(m(i, j));
  return out;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows * b.rows, a.cols * b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) {
      const cplx aij = a(i, j);
      if (aij == cplx(0.0)) continue;
      for (std::size_t k = 0; k < b.rows; ++k)
        for (std::size_t l = 0; l < b.cols; ++l)
          out(i * b.rows + k, j * b.cols + l) = aij * b(k, l);
    }
  return out;
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("matrix add: shape mismatch");
  CMatrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] + b.data[i];
  return out;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("matrix sub: shape mismatch");
  CMatrix out(a.rows, a.cols);
  for (std::size_t i = 0; i < a.data.size(); ++i) out.data[i] = a.data[i] - b.data[i];
  return out;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
  if (a.cols != b.rows) throw std::invalid_argument("matrix mul: shape mismatch");
  CMatrix out(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx(0.0)) continue;
      for (std::size_t j = 0; j < b.cols; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

CMatrix operator*(cplx s, const CMatrix& m) {
  CMatrix out = m;
  for (auto& x : out.data) x *= s;
  return out;
}

CVector operator*(const CMatrix& m, const CVector& v) {
  if (m.cols != v.dim()) throw std::invalid_argument("matrix-vector mul: shape mismatch");
  CVector out(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    cplx acc = 0.0;
    for (std::size_t j = 0; j < m.cols; ++j) acc += m(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

CVector operator+(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("vector add: shape mismatch");
  CVector out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a[i] + b[i];
  return out;
}

CVector operator*(cplx s, const CVector& v) {
  CVector out = v;
  for (auto& x : out.entries) x *= s;
  return out;
}

cplx trace(const CMatrix& m) {
  require_square(m, "trace");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < m.rows; ++i) acc += m(i, i);
  return acc;
}

cplx inner(const CVector& u, const CVector& v) {
  if (u.dim() != v.dim()) throw std::invalid_argument("inner: shape mismatch");
  cplx acc = 0.0;
  for (std::size_t i = 0; i < u.dim(); ++i) acc += std::conj(u[i]) * v[i];
  return acc;
}

CMatrix outer(const CVector& u, const CVector& v) {
  CMatrix out(u.dim(), v.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < v.dim(); ++j) out(i, j) = u[i] * std::conj(v[j]);
  return out;
}

double norm(const CVector& v) {
  double acc = 0.0;
  for (const auto& x : v.entries) acc += std::norm(x);
  return std::sqrt(acc);
}

double max_abs(const CMatrix& m) {
  double best = 0.0;
  for (const auto& x : m.data) best = std::max(best, std::abs(x));
  return best;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("max_abs_diff: shape mismatch");
  double best = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i)
    best = std::max(best, std::abs(a.data[i] - b.data[i]));
  return best;
}

double max_abs_diff(const CVector& a, const CVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  double best = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i)
    best = std::max(best, std::abs(a[i] - b[i]));
  return best;
}

double frobenius_norm(const CMatrix& m) {
  double acc = 0.0;
  for (const auto& x : m.data) acc += std::norm(x);
  return std::sqrt(acc);
}

double frobenius_distance(const CMatrix& a, const CMatrix& b) {
  if (a.rows != b.rows || a.cols != b.cols)
    throw std::invalid_argument("frobenius_distance: shape mismatch");
  double acc = 0.0;
  for (std::size_t i = 0; i < a.data.size(); ++i) acc += std::norm(a.data[i] - b.data[i]);
  return std::sqrt(acc);
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  require_square(m, "hermitian_eigenvalues");
  Eigen::MatrixXcd e = to_eigen(m);
  Eigen::MatrixXcd h = 0.5 * (e + e.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  std::vector<double> out(static_cast<std::size_t>(solver.eigenvalues().size()));
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  return out;
}

double min_hermitian_eigenvalue(const CMatrix& m) {
  return hermitian_eigenvalues(m).front();
}

double operator_norm(const CMatrix& m) {
  if (m.data.empty()) return 0.0;
  const CMatrix gram = dagger(m) * m;
  const auto eigs = hermitian_eigenvalues(gram);
  return std::sqrt(std::max(0.0, eigs.back()));
}

bool is_hermitian_psd(const CMatrix& m, Tolerance tol) {
  require_square(m, "is_hermitian_psd");
  if (max_abs_diff(m, dagger(m)) > tol.abs_eps) return false;
  return min_hermitian_eigenvalue(m) >= -tol.abs_eps;
}

std::optional<cplx> proportionality_to_identity(const CMatrix& m, Tolerance tol) {
  require_square(m, "proportionality_to_identity");
  const cplx c = trace(m) / static_cast<double>(m.rows);
  if (max_abs_diff(m, c * CMatrix::identity(m.rows)) <= tol.abs_eps) return c;
  return std::nullopt;
}

std::optional<double> unitary_up_to_scale(const CMatrix& m, Tolerance tol) {
  require_square(m, "unitary_up_to_scale");
  const CMatrix gram = dagger(m) * m;
  const double c2 = trace(gram).real() / static_cast<double>(m.rows);
  if (c2 <= tol.abs_eps) return std::nullopt;
  if (max_abs_diff(gram, cplx(c2) * CMatrix::identity(m.rows)) > tol.abs_eps)
    return std::nullopt;
  return std::sqrt(c2);
}

CMatrix pseudo_inverse(const CMatrix& m, double* cond_out) {
  Eigen::MatrixXcd e = to_eigen(m);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(e, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (cond_out) {
    const double smin = sv(sv.size() - 1);
    *cond_out = smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
  }
  const double cutoff =
      sv(0) * std::max(m.rows, m.cols) * std::numeric_limits<double>::epsilon();
  Eigen::VectorXd inv = sv;
  for (Eigen::Index i = 0; i < inv.size(); ++i)
    inv(i) = sv(i) > cutoff ? 1.0 / sv(i) : 0.0;
  Eigen::MatrixXcd pinv =
      svd.matrixV() * inv.asDiagonal() * svd.matrixU().adjoint();
  return from_eigen(pinv);
}

double Rng::uniform() {
  // 53 random bits -> [0, 1)
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double t = 2.0 * M_PI * u2;
  spare_ = r * std::sin(t);
  has_spare_ = true;
  return r * std::cos(t);
}

CMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
  CMatrix out(rows, cols);
  for (auto& x : out.data) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    x = cplx(re, im) / std::sqrt(2.0);
  }
  return out;
}

namespace {

CMatrix qr_orthonormal(const CMatrix& g) {
  Eigen::MatrixXcd e = to_eigen(g);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(e);
  Eigen::MatrixXcd q =
      qr.householderQ() * Eigen::MatrixXcd::Identity(e.rows(), e.cols());
  Eigen::MatrixXcd r = qr.matrixQR().template triangularView<Eigen::Upper>();
  // Rotate columns so the R diagonal is real positive; this makes the QR
  // construction Haar-distributed and seed-reproducible.
  for (Eigen::Index j = 0; j < e.cols(); ++j) {
    const cplx d = r(j, j);
    const double a = std::abs(d);
    const cplx phase = a > 0.0 ? d / a : cplx(1.0);
    q.col(j) *= std::conj(phase);
  }
  return from_eigen(q);
}

}  // namespace

CMatrix random_unitary(std::size_t n, Rng& rng) {
  return qr_orthonormal(random_gaussian_matrix(n, n, rng));
}

CMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng) {
  if (rows < cols) throw std::invalid_argument("random_isometry: rows < cols");
  return qr_orthonormal(random_gaussian_matrix(rows, cols, rng));
}

CVector random_unit_vector(std::size_t n, Rng& rng) {
  CVector v(n);
  for (auto& x : v.entries) x = cplx(rng.gaussian(), rng.gaussian());
  const double nrm = norm(v);
  for (auto& x : v.entries) x /= nrm;
  return v;
}

CMatrix random_density(std::size_t n, Rng& rng) {
  const CMatrix g = random_gaussian_matrix(n, n, rng);
  CMatrix rho = g * dagger(g);
  const double tr = trace(rho).real();
  return cplx(1.0 / tr) * rho;
}

CVector random_pure_density_vector(std::size_t n, Rng& rng) {
  return random_unit_vector(n, rng);
}

}  // namespace cspace
