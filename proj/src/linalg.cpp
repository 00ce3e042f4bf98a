#include "widthlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

namespace widthlab::linalg {

namespace {

using Index = Eigen::Index;

// One-sided Jacobi on the columns of x; accumulates the rotations in w so
// that x_in * w = x_out with mutually orthogonal columns of x_out.
void hestenes_jacobi(Matrix& x, Matrix& w) {
  const Index n = x.cols();
  const double tol = std::numeric_limits<double>::epsilon() * static_cast<double>(std::max<Index>(n, 1));
  constexpr int kMaxSweeps = 80;

  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (Index p = 0; p + 1 < n; ++p) {
      for (Index q = p + 1; q < n; ++q) {
        const double alpha = x.col(p).squaredNorm();
        const double beta = x.col(q).squaredNorm();
        const double gamma = x.col(p).dot(x.col(q));
        if (alpha == 0.0 || beta == 0.0) continue;
        if (std::abs(gamma) <= tol * std::sqrt(alpha) * std::sqrt(beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::hypot(1.0, zeta));
        const double c = 1.0 / std::hypot(1.0, t);
        const double s = c * t;
        for (Matrix* m : {&x, &w}) {
          for (Index i = 0; i < m->rows(); ++i) {
            const double xp = (*m)(i, p);
            const double xq = (*m)(i, q);
            (*m)(i, p) = c * xp - s * xq;
            (*m)(i, q) = s * xp + c * xq;
          }
        }
      }
    }
    if (!rotated) break;
  }
}

// Orthonormalize the columns flagged in `missing` against the others.
void complete_columns(Matrix& u, const std::vector<bool>& missing) {
  std::vector<Index> have;
  for (Index j = 0; j < u.cols(); ++j)
    if (!missing[j]) have.push_back(j);
  if (have.size() == static_cast<std::size_t>(u.cols())) return;
  Matrix known(u.rows(), static_cast<Index>(have.size()));
  for (std::size_t k = 0; k < have.size(); ++k) known.col(static_cast<Index>(k)) = u.col(have[k]);
  const Matrix extra = orthonormal_complement(known, u.rows());
  Index next = 0;
  for (Index j = 0; j < u.cols(); ++j)
    if (missing[j]) u.col(j) = extra.col(next++);
}

// Tall or square case (rows >= cols).
Svd svd_tall(const Matrix& a) {
  const Index m = a.rows();
  const Index n = a.cols();

  // Sort rows by decreasing norm; with column pivoting this makes the QR
  // step row-wise backward stable for graded matrices.
  std::vector<Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Index{0});
  const Vector row_norms = a.rowwise().norm();
  std::stable_sort(order.begin(), order.end(),
                   [&](Index i, Index j) { return row_norms(i) > row_norms(j); });
  Matrix g(m, n);
  for (Index i = 0; i < m; ++i) g.row(i) = a.row(order[static_cast<std::size_t>(i)]);

  Eigen::ColPivHouseholderQR<Matrix> qr(g);
  const Matrix r = qr.matrixQR().topRows(n).triangularView<Eigen::Upper>();
  const Matrix q = qr.householderQ() * Matrix::Identity(m, n);

  Matrix x = r.transpose();
  Matrix w = Matrix::Identity(n, n);
  hestenes_jacobi(x, w);

  Vector sigma(n);
  Matrix ux(n, n);
  std::vector<bool> missing(static_cast<std::size_t>(n), false);
  for (Index j = 0; j < n; ++j) {
    sigma(j) = x.col(j).norm();
    if (sigma(j) > 0.0) {
      ux.col(j) = x.col(j) / sigma(j);
    } else {
      ux.col(j).setZero();
      missing[static_cast<std::size_t>(j)] = true;
    }
  }
  complete_columns(ux, missing);

  // g * P = q * r,  r = w * diag(sigma) * ux^T  =>  a = rows^T q w diag(sigma) (P ux)^T
  const Matrix left_sorted = q * w;
  Matrix left(m, n);
  for (Index i = 0; i < m; ++i) left.row(order[static_cast<std::size_t>(i)]) = left_sorted.row(i);
  const Matrix right = qr.colsPermutation() * ux;

  std::vector<Index> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), Index{0});
  std::stable_sort(idx.begin(), idx.end(), [&](Index i, Index j) { return sigma(i) > sigma(j); });

  Svd out{Matrix(m, n), Vector(n), Matrix(n, n)};
  for (Index k = 0; k < n; ++k) {
    const Index j = idx[static_cast<std::size_t>(k)];
    out.U.col(k) = left.col(j);
    out.s(k) = sigma(j);
    out.V.col(k) = right.col(j);
  }
  return out;
}

}  // namespace

Svd svd(const Matrix& a) {
  if (a.rows() == 0 || a.cols() == 0) {
    const Index p = std::min(a.rows(), a.cols());
    return {Matrix(a.rows(), p), Vector(p), Matrix(a.cols(), p)};
  }
  if (a.rows() >= a.cols()) return svd_tall(a);
  Svd t = svd_tall(a.transpose());
  std::swap(t.U, t.V);
  return t;
}

Eigen::Index numerical_rank(const Vector& s, double rel_cutoff) {
  if (s.size() == 0 || !(s(0) > 0.0)) return 0;
  const double cut = rel_cutoff * s(0);
  Index r = 0;
  while (r < s.size() && s(r) > cut) ++r;
  return r;
}

Matrix orthonormal_complement(const Matrix& basis, Eigen::Index dim) {
  const Index k = basis.cols();
  if (k == 0) return Matrix::Identity(dim, dim);
  Eigen::HouseholderQR<Matrix> qr(basis);
  const Matrix full_q = qr.householderQ() * Matrix::Identity(dim, dim);
  return full_q.rightCols(dim - k);
}

Matrix null_space(const Matrix& m, double abs_cutoff) {
  const Index n = m.cols();
  if (m.rows() == 0) return Matrix::Identity(n, n);
  const Svd d = svd(m);
  Index r = 0;
  while (r < d.s.size() && d.s(r) > abs_cutoff) ++r;
  return orthonormal_complement(d.V.leftCols(r), n);
}

Matrix range_basis(const Matrix& m, double rel_cutoff) {
  const Svd d = svd(m);
  return d.U.leftCols(numerical_rank(d.s, rel_cutoff));
}

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return svd(m).s(0);
}

std::pair<double, double> extreme_eigenvalues(const Matrix& symmetric) {
  if (symmetric.size() == 0) return {0.0, 0.0};
  Eigen::SelfAdjointEigenSolver<Matrix> es(symmetric, Eigen::EigenvaluesOnly);
  const Vector& ev = es.eigenvalues();
  return {ev(0), ev(ev.size() - 1)};
}

}  // namespace widthlab::linalg
