#pragma once

// Test-side helpers and independent oracles. Nothing here calls the
// library's own SVD: oracles use Eigen's JacobiSVD, self-adjoint eigen
// solvers, complete orthogonal decompositions and plain bisection.

#include "widthlab/matrix.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace testing_support {

using widthlab::Matrix;
using widthlab::Vector;
using Index = Eigen::Index;

inline Matrix gaussian(Index rows, Index cols, std::mt19937_64& rng) {
  std::normal_distribution<double> n;
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = n(rng);
  return m;
}

inline Vector unit_vector(Index dim, std::mt19937_64& rng) {
  Vector v = gaussian(dim, 1, rng).col(0);
  return v / v.norm();
}

/// Haar-ish orthonormal columns via QR of a Gaussian matrix.
inline Matrix orthonormal(Index rows, Index cols, std::mt19937_64& rng) {
  Eigen::HouseholderQR<Matrix> qr(gaussian(rows, cols, rng));
  return qr.householderQ() * Matrix::Identity(rows, cols);
}

inline std::size_t uniform(std::size_t lo, std::size_t hi, std::mt19937_64& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double uniform_real(double lo, double hi, std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

/// U diag(s) V^T with random orthogonal factors (rows x cols, s sorted or not).
inline Matrix with_spectrum(Index rows, Index cols, const std::vector<double>& s, std::mt19937_64& rng) {
  const Index k = static_cast<Index>(s.size());
  Vector sv(k);
  for (Index i = 0; i < k; ++i) sv(i) = s[static_cast<std::size_t>(i)];
  return orthonormal(rows, k, rng) * sv.asDiagonal() * orthonormal(cols, k, rng).transpose();
}

/// Singular values as square roots of the eigenvalues of A^T A (descending).
inline std::vector<double> gram_singular_values(const Matrix& a) {
  const Matrix g = a.cols() <= a.rows() ? Matrix(a.transpose() * a) : Matrix(a * a.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(g, Eigen::EigenvaluesOnly);
  std::vector<double> out;
  for (Index i = es.eigenvalues().size() - 1; i >= 0; --i) out.push_back(std::sqrt(std::max(0.0, es.eigenvalues()(i))));
  return out;
}

inline std::vector<double> jacobi_singular_values(const Matrix& a) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const Vector& s = svd.singularValues();
  return std::vector<double>(s.data(), s.data() + s.size());
}

inline double jacobi_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  return Eigen::JacobiSVD<Matrix>(a).singularValues()(0);
}

inline Index lu_rank(const Matrix& a, double rel = 1e-10) {
  Eigen::FullPivLU<Matrix> lu(a);
  const double scale = a.cwiseAbs().maxCoeff();
  lu.setThreshold(rel * std::max(1.0, static_cast<double>(std::max(a.rows(), a.cols()))));
  return scale == 0.0 ? 0 : lu.rank();
}

inline Matrix pinv(const Matrix& a) {
  return Eigen::CompleteOrthogonalDecomposition<Matrix>(a).pseudoInverse();
}

/// Membership of p in M(B) by minimum-norm least squares: p must lie in the
/// range of M and its minimum-norm preimage must have norm <= 1 + tol.
inline bool lsq_member(const Matrix& m, const Vector& p, double tol = 1e-9) {
  Eigen::CompleteOrthogonalDecomposition<Matrix> cod(m);
  const Vector x = cod.solve(p);
  const double residual = (m * x - p).norm();
  if (residual > 1e-8 * std::max(1.0, p.norm())) return false;
  return x.norm() <= 1.0 + tol;
}

/// Eigenvalues of diag(lambda) compressed to the hyperplane w⊥ (w unit),
/// lambda descending and distinct, all w_i nonzero: the roots of the secular
/// equation sum_i w_i^2 / (lambda_i - mu) = 0, one in each gap
/// (lambda_{i+1}, lambda_i). Bisection in the geometric mean keeps relative
/// accuracy when the lambdas span many orders of magnitude.
inline std::vector<double> secular_roots(const std::vector<double>& lambda, const Vector& w) {
  const std::size_t n = lambda.size();
  auto f = [&](double mu) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) sum += w(static_cast<Index>(i)) * w(static_cast<Index>(i)) / (lambda[i] - mu);
    return sum;
  };
  std::vector<double> roots;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    double lo = lambda[i + 1];
    double hi = lambda[i];
    for (int it = 0; it < 400; ++it) {
      const double mid = lo > 0.0 ? std::sqrt(lo * hi) : 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (f(mid) > 0.0) hi = mid;
      else lo = mid;
    }
    roots.push_back(0.5 * (lo + hi));
  }
  return roots;
}

}  // namespace testing_support
