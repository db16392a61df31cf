#include "cspace/mixing.hpp"

#include <cmath>

namespace cspace {

namespace {

bool all_two(const std::vector<std::size_t>& history) {
  for (const auto s : history)
    if (s != 2) return false;
  return true;
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

CMatrix rot_z(double theta) {  // e^{i Z theta / 2}
  CMatrix m(2, 2);
  m(0, 0) = std::exp(cplx(0.0, theta / 2.0));
  m(1, 1) = std::exp(cplx(0.0, -theta / 2.0));
  return m;
}

void require_aklt(const ResourceMPS& mps) {
  const ResourceMPS ref = aklt(mps.n_sites);
  if (mps.d != 3 || mps.D != 2)
    throw std::invalid_argument("mixing: resource must be the AKLT chain");
  for (std::size_t k = 0; k < 3; ++k)
    if (max_abs_diff(mps.tensors[k], ref.tensors[k]) > Tolerance::construction().abs_eps)
      throw std::invalid_argument("mixing: resource must be the AKLT chain");
}

}  // namespace

int f_parity(const OutcomeSeq& seq) {
  int acc = 0;
  for (const auto s : seq.entries) acc ^= (s == 0 || s == 1) ? 1 : 0;
  return acc;
}

int g_parity(const OutcomeSeq& seq) {
  int acc = 0;
  for (const auto s : seq.entries) acc ^= (s == 1 || s == 2) ? 1 : 0;
  return acc;
}

int h_flag(int p, int q, std::size_t r) {
  if (r % 2 == 0) return (p == 0 && q == 0) ? 1 : 0;
  return (p == 0 && q == 1) ? 1 : 0;
}

CMatrix q_operator(const std::vector<std::size_t>& history, std::size_t s_k,
                   double theta) {
  for (const auto s : history)
    if (s > 2) throw std::invalid_argument("q_operator: outcomes lie in {0,1,2}");
  if (s_k > 2) throw std::invalid_argument("q_operator: outcomes lie in {0,1,2}");
  if (s_k == 2) return pauli_z();
  const CMatrix base = s_k == 0 ? pauli_x() : pauli_x() * pauli_z();
  if (all_two(history)) return base * rot_z(theta);
  return base;
}

std::vector<OutcomeSeq> sector_enumerate(std::size_t r, int p, int q) {
  if (r < 1 || r > 12) throw std::invalid_argument("sector_enumerate: r out of range");
  std::size_t total = 1;
  for (std::size_t i = 0; i < r; ++i) total *= 3;

  std::vector<OutcomeSeq> out;
  for (std::size_t idx = 0; idx < total; ++idx) {
    OutcomeSeq seq;
    seq.entries.resize(r);
    std::size_t rem = idx;
    bool every_two = true;
    for (std::size_t i = 0; i < r; ++i) {
      seq.entries[i] = rem % 3;
      every_two = every_two && seq.entries[i] == 2;
      rem /= 3;
    }
    if (every_two) continue;
    if (f_parity(seq) == p && g_parity(seq) == q) out.push_back(std::move(seq));
  }
  return out;
}

SectorMap sector_map(const ResourceMPS& mps, const KrausChannel& ch, double theta,
                     double phi, std::size_t r, int p, int q) {
  require_aklt(mps);
  if (ch.dim != 3) throw std::invalid_argument("sector_map: channel must act on d=3");

  const double root3 = std::sqrt(3.0);
  const MeasurementBasis rotated = MeasurementBasis::angled(theta, phi, 3);
  const MeasurementBasis comp = MeasurementBasis::computational(3);
  const InducedMap im = induced_kraus(mps, ch, rotated);

  // Unit-scale step operators: sqrt(3) x branch operator of the basis the
  // protocol actually measures at step k.
  const auto step_operator = [&](const std::vector<std::size_t>& history,
                                 std::size_t s) {
    const MeasurementBasis& basis = all_two(history) ? rotated : comp;
    return cplx(root3) * branch_operator(mps, basis.vectors[s]);
  };

  SectorMap sm;
  sm.sector = {p, q};
  sm.r = r;

  for (const auto& seq : sector_enumerate(r, p, q)) {
    // Product Q_r ... Q_2 shared by every channel index j.
    CMatrix chain = CMatrix::identity(2);
    std::vector<std::size_t> history = {seq.entries[0]};
    for (std::size_t k = 1; k < r; ++k) {
      chain = step_operator(history, seq.entries[k]) * chain;
      history.push_back(seq.entries[k]);
    }
    for (const auto& e : im.outcomes[seq.entries[0]])
      sm.kraus_like.push_back(chain * e);
  }

  if (h_flag(p, q, r) == 1) {
    CMatrix zpow = CMatrix::identity(2);
    for (std::size_t i = 1; i < r; ++i) zpow = zpow * pauli_z();
    for (const auto& e : im.outcomes[2]) sm.kraus_like.push_back(zpow * e);
  }

  sm.gram = CMatrix(2, 2);
  for (const auto& k : sm.kraus_like) sm.gram = sm.gram + dagger(k) * k;
  return sm;
}

MapClassification classify_sector(const SectorMap& sm, Tolerance tol) {
  const auto ops = sm.kraus_like;
  const std::size_t dim = sm.gram.rows;
  const OperationalMap f = [ops, dim](const CMatrix& rho) {
    CMatrix img(dim, dim);
    for (const auto& k : ops) img = img + k * rho * dagger(k);
    const double p = trace(img).real();
    if (p <= 1e-14) return CMatrix::zero(dim, dim);
    return cplx(1.0 / p) * img;
  };
  return classify_operational(f, dim, 24, tol, /*seed=*/sm.r);
}

std::vector<CMatrix> assemble_global_kraus(const ResourceMPS& mps,
                                           const KrausChannel& ch, double theta,
                                           double phi, std::size_t r) {
  const double scale = std::pow(3.0, -0.5 * static_cast<double>(r - 1));
  std::vector<CMatrix> all;
  for (int p = 0; p <= 1; ++p)
    for (int q = 0; q <= 1; ++q) {
      const SectorMap sm = sector_map(mps, ch, theta, phi, r, p, q);
      for (const auto& k : sm.kraus_like) all.push_back(cplx(scale) * k);
    }
  return all;
}

double global_tp_deviation(const ResourceMPS& mps, const KrausChannel& ch,
                           double theta, double phi, std::size_t r) {
  const auto ops = assemble_global_kraus(mps, ch, theta, phi, r);
  CMatrix sum(mps.D, mps.D);
  for (const auto& k : ops) sum = sum + dagger(k) * k;
  return max_abs_diff(sum, CMatrix::identity(mps.D));
}

MapClassification cluster_mixing_control(const KrausChannel& ch,
                                         const MeasurementBasis& basis) {
  if (ch.dim != 2 || basis.dim != 2)
    throw std::invalid_argument("cluster_mixing_control: d = 2 expected");
  const ResourceMPS mps = cluster_1d();
  const InducedMap im = induced_kraus(mps, ch, basis);

  // Retain the outcome as a classical flag: K_{j,s} maps the correlation
  // space into (flag block s) of a D * d output space.
  const std::size_t D = mps.D;
  const std::size_t flags = mps.d;
  std::vector<CMatrix> flagged;
  for (std::size_t s = 0; s < flags; ++s)
    for (const auto& e : im.outcomes[s]) {
      CMatrix k(D * flags, D);
      for (std::size_t i = 0; i < D; ++i)
        for (std::size_t m = 0; m < D; ++m) k(s * D + i, m) = e(i, m);
      flagged.push_back(std::move(k));
    }
  return classify(SuperOperator::from_kraus(std::move(flagged)));
}

}  // namespace cspace
