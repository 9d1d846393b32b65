#pragma once

// Dense Hermitian operators on C^{d_A} ⊗ C^{d_B}. Row index of |i⟩⊗|j⟩ is
// i·d_B + j.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "haarpt/errors.hpp"
#include "haarpt/rng.hpp"

namespace haarpt {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

class HermitianOperator {
 public:
  static constexpr double kHermitianTol = 1e-12;

  // Validates Hermiticity to kHermitianTol (relative Frobenius), then stores
  // the exactly symmetrized matrix.
  HermitianOperator(long d_a, long d_b, const Matrix& m) : d_a_(d_a), d_b_(d_b) {
    require(d_a >= 1 && d_b >= 1, "HermitianOperator: dimensions must be positive");
    require(m.rows() == d_a * d_b && m.cols() == d_a * d_b, "HermitianOperator: matrix side must equal d_A·d_B");
    double norm = m.norm();
    double skew = (m - m.adjoint()).norm();
    require(skew <= kHermitianTol * norm, "HermitianOperator: matrix is not Hermitian");
    m_ = (m + m.adjoint()) / 2.0;
  }

  static HermitianOperator identity(long d_a, long d_b) {
    return HermitianOperator(d_a, d_b, Matrix::Identity(d_a * d_b, d_a * d_b));
  }

  long d_a() const { return d_a_; }
  long d_b() const { return d_b_; }
  long side() const { return d_a_ * d_b_; }
  const Matrix& matrix() const { return m_; }

 private:
  long d_a_, d_b_;
  Matrix m_;
};

// (X^Γ)_{(i,j),(k,l)} = X_{(i,l),(k,j)}.
inline HermitianOperator partial_transpose(const HermitianOperator& x) {
  long da = x.d_a(), db = x.d_b();
  const Matrix& m = x.matrix();
  Matrix out(x.side(), x.side());
  for (long i = 0; i < da; ++i)
    for (long j = 0; j < db; ++j)
      for (long k = 0; k < da; ++k)
        for (long l = 0; l < db; ++l) out(i * db + j, k * db + l) = m(i * db + l, k * db + j);
  return HermitianOperator(da, db, out);
}

// Ascending eigenvalues (full Hermitian eigensolve).
inline Eigen::VectorXd eigenvalues(const HermitianOperator& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(x.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InternalCheckError("eigenvalues: eigensolver did not converge");
  return solver.eigenvalues();
}

inline constexpr long kDenseNormSide = 1024;
inline constexpr double kNormResidualTol = 1e-9;

namespace detail {

struct LanczosNorm {
  bool certified = false;
  double value = 0;
  double residual = 0;  // ‖Xv - λv‖ for the returned Ritz pair
  int steps = 0;
};

// Lanczos with full reorthogonalization from a fixed start vector. The
// extreme Ritz pair of largest |θ| is accepted once its explicit residual is
// below kNormResidualTol·‖X‖_F.
inline LanczosNorm lanczos_norm(const Matrix& x, int max_steps) {
  long n = x.rows();
  int cap = static_cast<int>(std::min<long>(n, max_steps));
  double fro = x.norm();
  LanczosNorm out;
  if (fro == 0) {
    out.certified = true;
    return out;
  }
  double tol = kNormResidualTol * fro;
  RngStream rng(0x5eed, static_cast<std::uint64_t>(n));
  Matrix q(n, cap);
  Vector v(n);
  for (long i = 0; i < n; ++i) v(i) = rng.complex_normal();
  q.col(0) = v / v.norm();
  std::vector<double> alpha, beta;
  for (int j = 0; j < cap; ++j) {
    Vector w = x * q.col(j);
    alpha.push_back((q.col(j).adjoint() * w)(0, 0).real());
    // two passes of classical Gram-Schmidt against the whole basis
    for (int pass = 0; pass < 2; ++pass) w -= q.leftCols(j + 1) * (q.leftCols(j + 1).adjoint() * w);
    double b = w.norm();
    int m = j + 1;
    bool last = b <= 1e-14 * fro || m == cap;
    if (last || m % 16 == 0) {
      Eigen::MatrixXd t = Eigen::MatrixXd::Zero(m, m);
      for (int i = 0; i < m; ++i) {
        t(i, i) = alpha[static_cast<std::size_t>(i)];
        if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[static_cast<std::size_t>(i)];
      }
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> small(t);
      int pick = std::abs(small.eigenvalues()(0)) >= std::abs(small.eigenvalues()(m - 1)) ? 0 : m - 1;
      double theta = small.eigenvalues()(pick);
      double estimate = b * std::abs(small.eigenvectors()(m - 1, pick));
      if (estimate <= 0.1 * tol || last) {
        Vector y = q.leftCols(m) * small.eigenvectors().col(pick).cast<Complex>();
        y /= y.norm();
        double res = (x * y - theta * y).norm();
        out = {res <= tol, std::abs(theta), res, m};
        if (out.certified || last) return out;
      }
    }
    if (j + 1 < cap) {
      beta.push_back(b);
      q.col(j + 1) = w / b;
    }
  }
  return out;
}

}  // namespace detail

// Largest |eigenvalue|. Full eigensolve up to kDenseNormSide, above that a
// residual-certified Lanczos iteration (dense solve if it does not certify).
inline double operator_norm(const HermitianOperator& x) {
  if (x.side() > kDenseNormSide) {
    auto lz = detail::lanczos_norm(x.matrix(), 600);
    if (lz.certified) return lz.value;
  }
  Eigen::VectorXd ev = eigenvalues(x);
  return std::max(std::abs(ev(0)), std::abs(ev(ev.size() - 1)));
}

// M on A1⊗B1 and N on A2⊗B2 combined into an operator on (A1A2)⊗(B1B2),
// so that Γ of the result transposes both B factors.
inline HermitianOperator tensor_bipartite(const HermitianOperator& m, const HermitianOperator& n) {
  long a1 = m.d_a(), b1 = m.d_b(), a2 = n.d_a(), b2 = n.d_b();
  long da = a1 * a2, db = b1 * b2;
  Matrix out(da * db, da * db);
  auto idx = [&](long x1, long x2, long y1, long y2) { return (x1 * a2 + x2) * db + (y1 * b2 + y2); };
  for (long i1 = 0; i1 < a1; ++i1)
    for (long j1 = 0; j1 < b1; ++j1)
      for (long k1 = 0; k1 < a1; ++k1)
        for (long l1 = 0; l1 < b1; ++l1) {
          Complex mv = m.matrix()(i1 * b1 + j1, k1 * b1 + l1);
          for (long i2 = 0; i2 < a2; ++i2)
            for (long j2 = 0; j2 < b2; ++j2)
              for (long k2 = 0; k2 < a2; ++k2)
                for (long l2 = 0; l2 < b2; ++l2)
                  out(idx(i1, i2, j1, j2), idx(k1, k2, l1, l2)) = mv * n.matrix()(i2 * b2 + j2, k2 * b2 + l2);
        }
  return HermitianOperator(da, db, out);
}

}  // namespace haarpt
