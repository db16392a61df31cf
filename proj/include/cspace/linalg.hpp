#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

namespace cspace {

using cplx = std::complex<double>;

/// Absolute tolerance used by all approximate comparisons. Defaults:
/// 1e-9 when verifying claims, 1e-12 when certifying constructions.
struct Tolerance {
  double abs_eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double eps) : abs_eps(eps) {
    if (eps < 0.0) throw std::invalid_argument("Tolerance: abs_eps must be >= 0");
  }
  static Tolerance verification() { return Tolerance(1e-9); }
  static Tolerance construction() { return Tolerance(1e-12); }
};

struct CVector {
  std::vector<cplx> entries;

  CVector() = default;
  explicit CVector(std::size_t n) : entries(n) {}
  CVector(std::initializer_list<cplx> xs) : entries(xs) {}

  std::size_t dim() const { return entries.size(); }
  cplx& operator[](std::size_t i) { return entries[i]; }
  const cplx& operator[](std::size_t i) const { return entries[i]; }

  static CVector basis(std::size_t n, std::size_t k);
};

/// Dense row-major complex matrix. Everything in this project is O(100)
/// in dimension, so no sparsity or blocking anywhere.
struct CMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<cplx> data;

  CMatrix() = default;
  CMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  cplx& operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }

  bool square() const { return rows == cols; }

  static CMatrix identity(std::size_t n);
  static CMatrix zero(std::size_t r, std::size_t c);
};

// --- elementwise / structural ---

CMatrix dagger(const CMatrix& m);
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CMatrix operator*(cplx s, const CMatrix& m);
CVector operator*(const CMatrix& m, const CVector& v);
CVector operator+(const CVector& a, const CVector& b);
CVector operator*(cplx s, const CVector& v);

cplx trace(const CMatrix& m);
/// <u|v> with the first argument conjugated.
cplx inner(const CVector& u, const CVector& v);
/// |u><v|
CMatrix outer(const CVector& u, const CVector& v);
double norm(const CVector& v);

double max_abs(const CMatrix& m);
double max_abs_diff(const CMatrix& a, const CMatrix& b);
double max_abs_diff(const CVector& a, const CVector& b);
double frobenius_norm(const CMatrix& m);
double frobenius_distance(const CMatrix& a, const CMatrix& b);

// --- spectral (Eigen-backed) ---

/// Eigenvalues of the Hermitian part (m+m†)/2, ascending.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);
double min_hermitian_eigenvalue(const CMatrix& m);
/// Largest singular value.
double operator_norm(const CMatrix& m);

bool is_hermitian_psd(const CMatrix& m, Tolerance tol = Tolerance::verification());

/// c with m = c*I within tol (max-norm), c = trace/dim. Empty if not proportional.
std::optional<cplx> proportionality_to_identity(const CMatrix& m,
                                                Tolerance tol = Tolerance::verification());

/// c > 0 with m†m = c²I within tol. Empty if m is not unitary up to scale.
std::optional<double> unitary_up_to_scale(const CMatrix& m,
                                          Tolerance tol = Tolerance::verification());

/// Moore-Penrose pseudo-inverse via SVD; cond_out receives sigma_max/sigma_min.
CMatrix pseudo_inverse(const CMatrix& m, double* cond_out = nullptr);

// --- seeded randomness ---

/// mt19937_64 with an explicit Box-Muller transform so streams do not
/// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform();   // [0, 1)
  double gaussian();  // standard normal

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

CMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);
/// Haar-distributed unitary: QR of a complex Gaussian with the R diagonal
/// rotated to be real positive.
CMatrix random_unitary(std::size_t n, Rng& rng);
/// rows x cols (rows >= cols) with Q†Q = I.
CMatrix random_isometry(std::size_t rows, std::size_t cols, Rng& rng);
CVector random_unit_vector(std::size_t n, Rng& rng);
/// Random full-rank density matrix (normalized Gram of a Gaussian).
CMatrix random_density(std::size_t n, Rng& rng);
CVector random_pure_density_vector(std::size_t n, Rng& rng);

}  // namespace cspace
