#include "cspace/oracle.hpp"

#include <cmath>

namespace cspace {

namespace {

std::size_t int_pow(std::size_t base, std::size_t exp) {
  std::size_t acc = 1;
  for (std::size_t i = 0; i < exp; ++i) acc *= base;
  return acc;
}

/// Operator embedded at `site` (1-based): kron(I_high, kron(op, I_low)).
CMatrix embed_at(const CMatrix& op, std::size_t site, std::size_t n, std::size_t d) {
  const CMatrix lo = CMatrix::identity(int_pow(d, site - 1));
  const CMatrix hi = CMatrix::identity(int_pow(d, n - site));
  return kron(hi, kron(op, lo));
}

}  // namespace

DenseDensity DenseDensity::pure(const DenseState& state, bool normalize) {
  DenseDensity rho;
  rho.n = state.n;
  rho.d = state.d;
  const CVector amps = normalize ? state.normalized() : state.amplitudes;
  rho.matrix = outer(amps, amps);
  return rho;
}

DenseDensity apply_channel_at(const DenseDensity& rho, std::size_t site,
                              const KrausChannel& ch) {
  if (site < 1 || site > rho.n)
    throw std::invalid_argument("apply_channel_at: site out of range");
  if (ch.dim != rho.d) throw std::invalid_argument("apply_channel_at: dim mismatch");
  DenseDensity out;
  out.n = rho.n;
  out.d = rho.d;
  out.matrix = CMatrix(rho.matrix.rows, rho.matrix.cols);
  for (const auto& f : ch.kraus) {
    const CMatrix full = embed_at(f, site, rho.n, rho.d);
    out.matrix = out.matrix + full * rho.matrix * dagger(full);
  }
  return out;
}

std::vector<MeasurementBranch> measure_at(const DenseDensity& rho, std::size_t site,
                                          const MeasurementBasis& basis) {
  if (site < 1 || site > rho.n)
    throw std::invalid_argument("measure_at: site out of range");
  if (basis.dim != rho.d) throw std::invalid_argument("measure_at: dim mismatch");

  std::vector<MeasurementBranch> branches;
  for (std::size_t s = 0; s < basis.dim; ++s) {
    const CMatrix proj =
        embed_at(outer(basis.vectors[s], basis.vectors[s]), site, rho.n, rho.d);
    CMatrix post = proj * rho.matrix * dagger(proj);
    MeasurementBranch br;
    br.outcome = s;
    br.probability = trace(post).real();
    br.zero_probability = br.probability <= 1e-14;
    if (!br.zero_probability) post = cplx(1.0 / br.probability) * post;
    br.post = DenseDensity{rho.n, rho.d, std::move(post)};
    branches.push_back(std::move(br));
  }
  return branches;
}

namespace {

/// Embedding of the correlation space into the dense chain on sites 2..N:
/// column c holds the amplitudes <L| A[k_N] ... A[k_2] |e_c>.
CMatrix chain_embedding(const ResourceMPS& mps) {
  const std::size_t window = mps.n_sites - 1;
  const std::size_t size = int_pow(mps.d, window);
  CMatrix phi(size, mps.D);
  std::vector<std::size_t> k(window, 0);
  for (std::size_t idx = 0; idx < size; ++idx) {
    std::size_t rem = idx;
    for (std::size_t i = 0; i < window; ++i) {
      k[i] = rem % mps.d;  // k[i] = outcome at site i + 2
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
    for (std::size_t c = 0; c < mps.D; ++c) phi(idx, c) = row[c];
  }
  return phi;
}

/// Project site 1 onto <m| on both sides: out[x,y] = <m|_1 rho |m>_1 with the
/// remaining chain reindexed so site 2 becomes least significant.
CMatrix project_out_site1(const CMatrix& rho, const CVector& m, std::size_t d) {
  const std::size_t rest = rho.rows / d;
  CMatrix out(rest, rest);
  for (std::size_t x = 0; x < rest; ++x)
    for (std::size_t y = 0; y < rest; ++y) {
      cplx acc = 0.0;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l)
          acc += std::conj(m[k]) * rho(x * d + k, y * d + l) * m[l];
      out(x, y) = acc;
    }
  return out;
}

}  // namespace

Reconstruction reconstruct_induced_map(const ResourceMPS& mps, const KrausChannel& ch,
                                       const MeasurementBasis& basis,
                                       std::optional<std::size_t> outcome) {
  mps.check();
  if (mps.n_sites < 2)
    throw std::invalid_argument("reconstruct_induced_map: need at least 2 sites");
  if (ch.dim != mps.d || basis.dim != mps.d)
    throw std::invalid_argument("reconstruct_induced_map: dim mismatch");

  const CMatrix phi = chain_embedding(mps);
  double cond = 0.0;
  const CMatrix pinv = pseudo_inverse(phi, &cond);
  if (!(cond < 1e10))
    throw std::runtime_error(
        "reconstruct_induced_map: embedding ill-conditioned (cond = " +
        std::to_string(cond) + ")");
  const CMatrix pinv_dag = dagger(pinv);

  // Correlation-space image of |R><R| through the dense pipeline.
  const auto image_of_boundary = [&](const CVector& r_boundary) {
    ResourceMPS prepared = mps;
    prepared.right = r_boundary;
    const DenseState state = to_dense(prepared);
    DenseDensity rho = DenseDensity::pure(state, /*normalize=*/false);
    rho = apply_channel_at(rho, 1, ch);
    CMatrix reduced(phi.rows, phi.rows);
    for (std::size_t s = 0; s < basis.dim; ++s) {
      if (outcome && *outcome != s) continue;
      reduced = reduced + project_out_site1(rho.matrix, basis.vectors[s], mps.d);
    }
    return pinv * reduced * pinv_dag;
  };

  // Polarize matrix-unit images out of the four boundary preparations.
  const std::size_t D = mps.D;
  std::vector<CMatrix> diag(D);
  for (std::size_t a = 0; a < D; ++a) diag[a] = image_of_boundary(CVector::basis(D, a));

  std::vector<CMatrix> images(D * D);
  for (std::size_t a = 0; a < D; ++a) images[a * D + a] = diag[a];
  for (std::size_t a = 0; a < D; ++a)
    for (std::size_t b = 0; b < D; ++b) {
      if (a == b) continue;
      CVector w(D), z(D);
      w[a] = 1.0;
      w[b] = 1.0;
      z[a] = 1.0;
      z[b] = cplx(0.0, 1.0);
      const CMatrix fw = image_of_boundary(w);
      const CMatrix fz = image_of_boundary(z);
      // Phi(|a><b|) = (fw + i fz - (1+i)(Phi_aa + Phi_bb)) / 2
      images[a * D + b] = cplx(0.5) * (fw + cplx(0.0, 1.0) * fz) -
                          cplx(0.5, 0.5) * (diag[a] + diag[b]);
    }

  Reconstruction rec;
  rec.map = SuperOperator::from_action(D, std::move(images));
  rec.condition_number = cond;
  return rec;
}

}  // namespace cspace
