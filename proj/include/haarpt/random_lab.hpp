#pragma once

// Seeded Monte-Carlo experiments on Haar-random subspaces: projectors and
// their partial transposes, norm and moment estimators, product-state and
// seesaw lower bounds on h_SEP, Wishart comparisons, and the
// weak-multiplicativity certificate.
//
// Every estimator draws sample j from rng.substream(j) and reduces in index
// order, so reports are bit-identical for any thread count.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "haarpt/bignum.hpp"
#include "haarpt/bounds.hpp"
#include "haarpt/errors.hpp"
#include "haarpt/moments_exact.hpp"
#include "haarpt/operators.hpp"
#include "haarpt/parallel.hpp"
#include "haarpt/rng.hpp"

namespace haarpt {

inline constexpr long kMaxDenseSide = 4096;

inline void require_dense(long side, const char* what) {
  require_feasible(side <= kMaxDenseSide, std::string(what) + ": operator side exceeds the dense cap 4096");
}

// --- Haar sampling -------------------------------------------------------

// First `cols` columns of a d×d Haar unitary: QR of a column-major complex
// Ginibre matrix with R's diagonal phases moved into Q. The columns drawn
// for cols < d coincide with the leading columns of the full draw.
inline Matrix haar_columns(long d, long cols, RngStream& rng) {
  require(d >= 1 && cols >= 1 && cols <= d, "haar_columns: requires 1 <= cols <= d");
  Matrix g(d, cols);
  for (long c = 0; c < cols; ++c)
    for (long r = 0; r < d; ++r) g(r, c) = rng.complex_normal();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, cols);
  const Matrix& r = qr.matrixQR();
  for (long c = 0; c < cols; ++c) {
    Complex diag = r(c, c);
    double mag = std::abs(diag);
    if (mag > 0) q.col(c) *= diag / mag;
  }
  return q;
}

inline Matrix haar_unitary(long d, RngStream& rng) { return haar_columns(d, d, rng); }

inline Vector haar_state(long d, RngStream& rng) {
  require(d >= 1, "haar_state: d must be positive");
  Vector v(d);
  for (long i = 0; i < d; ++i) v(i) = rng.complex_normal();
  return v / v.norm();
}

struct ProjectorSample {
  HermitianOperator op;
  SubspaceSpec spec;
  std::uint64_t seed = 0;
  std::uint64_t stream_index = 0;
};

inline ProjectorSample random_projector(const SubspaceSpec& spec, RngStream& rng) {
  require_dense(spec.d(), "random_projector");
  std::uint64_t seed = rng.seed(), index = rng.stream_index();
  Matrix v = haar_columns(spec.d(), spec.r(), rng);
  return {HermitianOperator(spec.d_a(), spec.d_b(), v * v.adjoint()), spec, seed, index};
}

// (I - F)/2 on C^d ⊗ C^d, F the swap.
inline HermitianOperator antisym_projector(long d) {
  require(d >= 2, "antisym_projector: requires d >= 2");
  require_dense(d * d, "antisym_projector");
  Matrix p = Matrix::Identity(d * d, d * d) * 0.5;
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) p(i * d + j, j * d + i) -= 0.5;
  return HermitianOperator(d, d, p);
}

// --- estimators ----------------------------------------------------------

struct EstimatorReport {
  std::size_t n = 0;
  double mean = 0;
  double std_error = 0;
  double min = 0;
  double max = 0;
  double q05 = 0, q50 = 0, q95 = 0;
  std::vector<double> samples;  // index order
};

// Linear-interpolation quantile of sorted data.
inline double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.size() == 1) return sorted.front();
  double pos = p * static_cast<double>(sorted.size() - 1);
  auto lo = static_cast<std::size_t>(std::floor(pos));
  std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

inline EstimatorReport summarize(std::vector<double> samples) {
  require(!samples.empty(), "summarize: no samples");
  EstimatorReport rep;
  rep.n = samples.size();
  double sum = 0;
  for (double x : samples) sum += x;
  rep.mean = sum / static_cast<double>(rep.n);
  if (rep.n > 1) {
    double ss = 0;
    for (double x : samples) ss += (x - rep.mean) * (x - rep.mean);
    rep.std_error = std::sqrt(ss / static_cast<double>(rep.n - 1)) / std::sqrt(static_cast<double>(rep.n));
  }
  std::vector<double> sorted = samples;
  std::sort(sorted.begin(), sorted.end());
  rep.min = sorted.front();
  rep.max = sorted.back();
  rep.q05 = quantile_sorted(sorted, 0.05);
  rep.q50 = quantile_sorted(sorted, 0.50);
  rep.q95 = quantile_sorted(sorted, 0.95);
  rep.samples = std::move(samples);
  return rep;
}

// samples[j] = f(rng.substream(j)).
template <class F>
std::vector<double> sample_indexed(std::size_t n, const RngStream& rng, int threads, F&& f) {
  require(n >= 1, "sample count must be positive");
  std::vector<double> out(n);
  parallel_for(n, threads, [&](std::size_t j) {
    RngStream sub = rng.substream(j);
    out[j] = f(sub);
  });
  return out;
}

// tr[(M^Γ)^k] per sample.
inline EstimatorReport mc_moment(const SubspaceSpec& spec, int k, std::size_t n, const RngStream& rng, int threads = 1) {
  require(k >= 1, "mc_moment: k must be positive");
  require_dense(spec.d(), "mc_moment");
  return summarize(sample_indexed(n, rng, threads, [&](RngStream& s) {
    Eigen::VectorXd ev = eigenvalues(partial_transpose(random_projector(spec, s).op));
    double t = 0;
    for (long i = 0; i < ev.size(); ++i) t += std::pow(ev(i), k);
    return t;
  }));
}

struct NormReport {
  EstimatorReport estimate;
  double scale = 0;  // r^{1/2}/(d_A d_B)^{1/2}, or 1/d_A
  double ratio = 0;  // mean / scale
};

inline double norm_scale(const SubspaceSpec& spec) {
  return spec.branch() == Branch::kRankAboveRatio
             ? std::sqrt(static_cast<double>(spec.r()) / static_cast<double>(spec.d()))
             : 1.0 / static_cast<double>(spec.d_a());
}

inline NormReport mc_norm(const SubspaceSpec& spec, std::size_t n, const RngStream& rng, int threads = 1) {
  require_dense(spec.d(), "mc_norm");
  NormReport rep;
  rep.estimate = summarize(sample_indexed(n, rng, threads, [&](RngStream& s) {
    return operator_norm(partial_transpose(random_projector(spec, s).op));
  }));
  rep.scale = norm_scale(spec);
  rep.ratio = rep.estimate.mean / rep.scale;
  return rep;
}

// --- product states and seesaw ------------------------------------------

inline double product_state_value(const HermitianOperator& m, const Vector& psi_a, const Vector& psi_b) {
  require(psi_a.size() == m.d_a() && psi_b.size() == m.d_b(), "product_state_value: vector dimensions do not match");
  Vector v(m.side());
  for (long i = 0; i < m.d_a(); ++i)
    for (long j = 0; j < m.d_b(); ++j) v(i * m.d_b() + j) = psi_a(i) * psi_b(j);
  return (v.adjoint() * m.matrix() * v)(0, 0).real();
}

// ⟨ψ_A⊗ψ_B|M|ψ_A⊗ψ_B⟩ over Haar-random product states.
inline EstimatorReport mc_product_state(const HermitianOperator& m, std::size_t n, const RngStream& rng, int threads = 1) {
  return summarize(sample_indexed(n, rng, threads, [&](RngStream& s) {
    Vector a = haar_state(m.d_a(), s);
    Vector b = haar_state(m.d_b(), s);
    return product_state_value(m, a, b);
  }));
}

namespace detail {

// (M_b)_{ik} = Σ_{jl} conj(b_j) M_{(i,j),(k,l)} b_l
inline Matrix contract_b(const HermitianOperator& m, const Vector& b) {
  long da = m.d_a(), db = m.d_b();
  Matrix out = Matrix::Zero(da, da);
  for (long i = 0; i < da; ++i)
    for (long k = 0; k < da; ++k) {
      Complex acc = 0;
      for (long j = 0; j < db; ++j)
        for (long l = 0; l < db; ++l) acc += std::conj(b(j)) * m.matrix()(i * db + j, k * db + l) * b(l);
      out(i, k) = acc;
    }
  return (out + out.adjoint()) / 2.0;
}

inline Matrix contract_a(const HermitianOperator& m, const Vector& a) {
  long da = m.d_a(), db = m.d_b();
  Matrix out = Matrix::Zero(db, db);
  for (long j = 0; j < db; ++j)
    for (long l = 0; l < db; ++l) {
      Complex acc = 0;
      for (long i = 0; i < da; ++i)
        for (long k = 0; k < da; ++k) acc += std::conj(a(i)) * m.matrix()(i * db + j, k * db + l) * a(k);
      out(j, l) = acc;
    }
  return (out + out.adjoint()) / 2.0;
}

struct TopEigen {
  double value;
  Vector vector;
};

inline TopEigen top_eigen(const Matrix& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw InternalCheckError("seesaw: eigensolver did not converge");
  long last = h.rows() - 1;
  return {solver.eigenvalues()(last), solver.eigenvectors().col(last)};
}

}  // namespace detail

struct SeesawResult {
  double value = 0;
  Vector psi_a, psi_b;
  int restarts_run = 0;
};

struct SeesawOptions {
  int restarts = 16;
  double tol = 1e-10;
  int max_iterations = 500;
};

// Alternating maximization of ⟨a⊗b|M|a⊗b⟩; every returned value is attained
// by an explicit product state, so it lower-bounds h_SEP(M). Two warm starts
// (from the top eigenvector of M, seeded on either factor) precede
// `restarts` Haar-random starts.
inline SeesawResult seesaw_hsep(const HermitianOperator& m, const SeesawOptions& opt, const RngStream& rng) {
  require(opt.restarts >= 1, "seesaw_hsep: restarts must be positive");
  require(opt.tol > 0, "seesaw_hsep: tol must be positive");
  require_dense(m.side(), "seesaw_hsep");
  Eigen::SelfAdjointEigenSolver<Matrix> full(m.matrix());
  Eigen::VectorXd ev = full.eigenvalues();
  require(ev(0) >= -1e-9 && ev(ev.size() - 1) <= 1 + 1e-9, "seesaw_hsep: requires 0 <= M <= I");

  long da = m.d_a(), db = m.d_b();
  SeesawResult best;
  best.value = -1;

  auto climb = [&](Vector b) {
    double value = -1;
    Vector a;
    for (int it = 0; it < opt.max_iterations; ++it) {
      a = detail::top_eigen(detail::contract_b(m, b)).vector;
      auto top = detail::top_eigen(detail::contract_a(m, a));
      b = top.vector;
      bool done = top.value - value < opt.tol;
      value = std::max(value, top.value);
      if (done) break;
    }
    if (value > best.value) {
      best.value = value;
      best.psi_a = a;
      best.psi_b = b;
    }
  };

  // ψ = top eigenvector of M as a d_A×d_B coefficient matrix Ψ_{ij}
  Vector psi = full.eigenvectors().col(m.side() - 1);
  Matrix coeff(da, db);
  for (long i = 0; i < da; ++i)
    for (long j = 0; j < db; ++j) coeff(i, j) = psi(i * db + j);
  Eigen::JacobiSVD<Matrix> svd(coeff, Eigen::ComputeFullU | Eigen::ComputeFullV);
  // b from the top right singular vector; the a-start is covered since the
  // first half-step from this b already optimizes a
  climb(svd.matrixV().col(0).conjugate());
  Vector a0 = svd.matrixU().col(0);
  climb(detail::top_eigen(detail::contract_a(m, a0)).vector);
  for (int r = 0; r < opt.restarts; ++r) {
    RngStream s = rng.substream(static_cast<std::uint64_t>(r));
    climb(haar_state(db, s));
  }
  best.restarts_run = opt.restarts + 2;
  return best;
}

// --- Wishart -------------------------------------------------------------

// W = G G†/D, G a D×r complex Gaussian matrix with E|g|² = 1, as an
// operator on C^{d_A} ⊗ C^{d_B} with D = d_A d_B.
inline HermitianOperator wishart_sample(long d_a, long d_b, long r, RngStream& rng) {
  require(d_a >= 1 && d_b >= 1 && r >= 1, "wishart_sample: dimensions must be positive");
  long side = d_a * d_b;
  require_dense(side, "wishart_sample");
  Matrix g(side, r);
  for (long c = 0; c < r; ++c)
    for (long i = 0; i < side; ++i) g(i, c) = rng.complex_normal();
  return HermitianOperator(d_a, d_b, g * g.adjoint() / static_cast<double>(side));
}

inline HermitianOperator wishart_sample(long side, long r, RngStream& rng) { return wishart_sample(side, 1, r, rng); }

struct WishartReport {
  long d = 0;
  long rank = 0;         // ⌊α d²⌋
  double alpha = 0;
  double limit = 0;      // √α(2 + √α)
  EstimatorReport estimate;
  double relative_deviation = 0;  // |mean - limit| / limit
};

// λ_max of the partial transpose of a (d², ⌊α d²⌋)-Wishart on C^d ⊗ C^d.
inline WishartReport wishart_pt_experiment(long d, const Rational& alpha_w, std::size_t n, const RngStream& rng,
                                           int threads = 1) {
  require(alpha_w > 0 && alpha_w <= 1, "wishart_pt_experiment: requires 0 < α <= 1");
  require(d >= 1, "wishart_pt_experiment: d must be positive");
  require_dense(d * d, "wishart_pt_experiment");
  WishartReport rep;
  rep.d = d;
  BigInt rank = BigInt(alpha_w.get_num() * d * d) / alpha_w.get_den();  // floor, both positive
  rep.rank = rank.get_si();
  require(rep.rank >= 1, "wishart_pt_experiment: ⌊α d²⌋ must be at least 1");
  rep.alpha = to_double(alpha_w);
  rep.limit = std::sqrt(rep.alpha) * (2 + std::sqrt(rep.alpha));
  rep.estimate = summarize(sample_indexed(n, rng, threads, [&](RngStream& s) {
    Eigen::VectorXd ev = eigenvalues(partial_transpose(wishart_sample(d, d, rep.rank, s)));
    return ev(ev.size() - 1);
  }));
  rep.relative_deviation = std::abs(rep.estimate.mean - rep.limit) / rep.limit;
  return rep;
}

// --- weak-multiplicativity certificate -----------------------------------

struct CertificateSample {
  double norm = 0;       // ‖M^Γ‖∞
  bool passed = false;   // norm < threshold
  double log2_norm = 0;  // h_SEP(M^{⊗n}) <= ‖M^Γ‖∞^n, i.e. log2 h <= n·log2_norm
};

struct CertificateReport {
  SubspaceSpec spec;
  std::optional<ExponentReport> exponent;  // absent for an explicit threshold
  double threshold = 0;
  std::vector<CertificateSample> samples;
  double failure_fraction = 0;
};

// Per-sample check ‖M^Γ‖∞ < threshold at a caller-chosen threshold.
inline CertificateReport certificate_at_threshold(const SubspaceSpec& spec, double threshold, std::size_t n,
                                                  const RngStream& rng, int threads = 1) {
  require(threshold > 0, "certificate: threshold must be positive");
  require_dense(spec.d(), "certificate");
  auto norms = sample_indexed(n, rng, threads, [&](RngStream& s) {
    return operator_norm(partial_transpose(random_projector(spec, s).op));
  });
  CertificateReport rep{spec, std::nullopt, threshold, {}, 0};
  std::size_t failures = 0;
  for (double x : norms) {
    CertificateSample cs{x, x < threshold, std::log2(x)};
    failures += !cs.passed;
    rep.samples.push_back(cs);
  }
  rep.failure_fraction = static_cast<double>(failures) / static_cast<double>(n);
  return rep;
}

// Threshold from the weak-multiplicativity exponent; refuses vacuous regimes.
inline CertificateReport certificate(const SubspaceSpec& spec, std::size_t n, const RngStream& rng, int threads = 1) {
  ExponentReport exp = weak_mult_exponent(spec);
  if (exp.vacuous) {
    throw UsageError("certificate: exponent " + std::to_string(exp.exponent) + " <= 0 (epsilon = " +
                     std::to_string(exp.epsilon) + "); the statement is vacuous at these dimensions");
  }
  CertificateReport rep = certificate_at_threshold(spec, exp.threshold, n, rng, threads);
  rep.exponent = exp;
  return rep;
}

}  // namespace haarpt
