#include "cspace/channels.hpp"

#include "cspace/correlation.hpp"

#include <cmath>

namespace cspace {

KrausChannel::KrausChannel(std::size_t d, std::vector<CMatrix> ops)
    : dim(d), kraus(std::move(ops)) {
  if (dim < 1) throw std::invalid_argument("KrausChannel: dim must be >= 1");
  if (kraus.empty()) throw std::invalid_argument("KrausChannel: need at least one operator");
  CMatrix sum(dim, dim);
  for (const auto& f : kraus) {
    if (f.rows != dim || f.cols != dim)
      throw std::invalid_argument("KrausChannel: operator shape mismatch");
    sum = sum + dagger(f) * f;
  }
  if (max_abs_diff(sum, CMatrix::identity(dim)) > Tolerance::construction().abs_eps)
    throw std::invalid_argument("KrausChannel: completeness sum differs from identity");
}

CMatrix KrausChannel::apply(const CMatrix& rho) const {
  if (rho.rows != dim || rho.cols != dim)
    throw std::invalid_argument("KrausChannel::apply: shape mismatch");
  CMatrix out(dim, dim);
  for (const auto& f : kraus) out = out + f * rho * dagger(f);
  return out;
}

KrausChannel identity_channel(std::size_t d) {
  return KrausChannel(d, {CMatrix::identity(d)});
}

KrausChannel swap_error(std::size_t a, std::size_t b, std::size_t d) {
  if (a == b) throw std::invalid_argument("swap_error: levels must differ");
  if (a >= d || b >= d) throw std::invalid_argument("swap_error: level out of range");
  CMatrix u = CMatrix::identity(d);
  u(a, a) = 0.0;
  u(b, b) = 0.0;
  u(a, b) = 1.0;
  u(b, a) = 1.0;
  return KrausChannel(d, {u});
}

KrausChannel phase_error(std::size_t d, std::size_t s) {
  if (d < 2) throw std::invalid_argument("phase_error: d must be >= 2");
  const double omega = 2.0 * M_PI / static_cast<double>(d);
  CMatrix v(d, d);
  for (std::size_t p = 0; p < d; ++p)
    v(p, p) = std::exp(cplx(0.0, -omega * static_cast<double>(p * s)));
  return KrausChannel(d, {v});
}

CMatrix basis_rotation(double theta, double phi, std::size_t d) {
  const MeasurementBasis basis = MeasurementBasis::angled(theta, phi, d);
  CMatrix u(d, d);
  for (std::size_t s = 0; s < d; ++s)
    for (std::size_t i = 0; i < d; ++i) u(i, s) = basis.vectors[s][i];
  return u;
}

KrausChannel f1_error(double theta, double phi, std::size_t d) {
  if (d != 3)
    throw std::invalid_argument("f1_error: defined for d = 3 only");
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix g(3, 3);
  // (|0>+|1>)/sqrt2 <0|  -  (|0>-|1>)/sqrt2 <1|  +  |2><2|
  g(0, 0) = s;
  g(1, 0) = s;
  g(0, 1) = -s;
  g(1, 1) = s;
  g(2, 2) = 1.0;
  return KrausChannel(3, {basis_rotation(theta, phi, 3) * g});
}

KrausChannel random_cptp(std::size_t d, std::size_t w, std::uint64_t seed) {
  if (w < 1) throw std::invalid_argument("random_cptp: rank must be >= 1");
  Rng rng(seed);
  const CMatrix iso = random_isometry(w * d, d, rng);
  std::vector<CMatrix> ops(w, CMatrix(d, d));
  for (std::size_t j = 0; j < w; ++j)
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) ops[j](r, c) = iso(j * d + r, c);
  return KrausChannel(d, std::move(ops));
}

}  // namespace cspace
