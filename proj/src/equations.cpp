#include "widthlab/equations.hpp"

#include "widthlab/linalg.hpp"
#include "widthlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace widthlab::equations {

using Index = Eigen::Index;

namespace {

std::string verdict_text(const SolvabilityVerdict& v) {
  return "XAY = B is unsolvable: rank B = " + std::to_string(v.rank_B) + " exceeds rank A = " +
         std::to_string(v.rank_A);
}

void require_square_pair(const Matrix& a, const Matrix& b, const char* op) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw InputError(std::string(op) + ": A and B must be square of equal size (got " +
                     std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " and " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()) + ")");
  require_finite(a, "A");
  require_finite(b, "B");
}

Matrix as_columns(const std::vector<Vector>& vs, Index dim, const char* what) {
  Matrix m(dim, static_cast<Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != dim)
      throw InputError(std::string(what) + ": vector " + std::to_string(i) + " has length " +
                       std::to_string(vs[i].size()) + ", expected " + std::to_string(dim));
    if (!vs[i].allFinite()) throw InputError(std::string(what) + ": non-finite entry");
    m.col(static_cast<Index>(i)) = vs[i];
  }
  return m;
}

bool independent(const Matrix& cols) {
  if (cols.cols() == 0) return true;
  if (cols.cols() > cols.rows()) return false;
  const Vector s = linalg::svd(cols).s;
  return s(s.size() - 1) > 1e-10 * s(0);
}

// Orthonormal basis of span(cols); cols assumed independent.
Matrix orthonormal_span(const Matrix& cols) {
  if (cols.cols() == 0) return Matrix(cols.rows(), 0);
  return Eigen::HouseholderQR<Matrix>(cols).householderQ() * Matrix::Identity(cols.rows(), cols.cols());
}

// Replaces each target t_k by itself or by t_k + (slack) u, u a unit vector
// orthogonal to span(fixed, earlier outputs), so that the outputs together
// with `fixed` stay independent.
Matrix separate(const Matrix& fixed, const Matrix& targets, double slack, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  const Index d = targets.rows();
  Matrix out = targets;
  Matrix span = fixed;
  for (Index k = 0; k < targets.cols(); ++k) {
    const Matrix q = orthonormal_span(span);
    const Vector t = targets.col(k);
    const Vector perp = t - q * (q.transpose() * t);
    if (perp.norm() < slack) {
      Vector u(d);
      for (Index i = 0; i < d; ++i) u(i) = normal(rng);
      u -= q * (q.transpose() * u);
      u -= q * (q.transpose() * u);
      out.col(k) = t + slack * u.normalized();
    }
    Matrix grown(d, span.cols() + 1);
    grown << span, out.col(k);
    span = grown;
  }
  return out;
}

}  // namespace

Unsolvable::Unsolvable(SolvabilityVerdict verdict) : InputError(verdict_text(verdict)), verdict_(std::move(verdict)) {}

double xay_residual(const Matrix& x, const Matrix& a, const Matrix& y, const Matrix& b) {
  if (x.cols() != a.rows() || a.cols() != y.rows() || x.rows() != b.rows() || y.cols() != b.cols())
    throw InputError("xay_residual: shapes of X, A, Y and B do not compose");
  return (x * a * y - b).norm() / (1.0 + b.norm());
}

SolvabilityVerdict xay_solvable(const Matrix& a, const Matrix& b,
                                const std::optional<seqlab::SequenceModel>& a_model,
                                const std::optional<seqlab::SequenceModel>& b_model) {
  require_square_pair(a, b, "xay_solvable");
  if (a_model.has_value() != b_model.has_value())
    throw InputError("xay_solvable: give sequence models for both A and B or for neither");
  SolvabilityVerdict v;
  v.rank_A = spectra::singular_spectrum(a).rank;
  v.rank_B = spectra::singular_spectrum(b).rank;
  v.solvable = v.rank_B <= v.rank_A;
  if (a_model) v.asymptotic = seqlab::majorizes(*a_model, *b_model);
  return v;
}

SolutionPair solve_xay(const Matrix& a, const Matrix& b) {
  const SolvabilityVerdict v = xay_solvable(a, b);
  if (!v.solvable) throw Unsolvable(v);
  const Index d = a.rows();
  SolutionPair out;
  const Index r = static_cast<Index>(v.rank_B);
  if (r == 0) {
    out.X = Matrix::Zero(d, d);
    out.Y = Matrix::Zero(d, d);
  } else {
    const linalg::Svd sa = linalg::svd(a);
    const linalg::Svd sb = linalg::svd(b);
    const Vector root = sa.s.head(r).cwiseSqrt().cwiseInverse();
    out.Y = sa.V.leftCols(r) * root.asDiagonal() * sb.V.leftCols(r).transpose();
    out.X = sb.U.leftCols(r) * (sb.s.head(r).cwiseProduct(root)).asDiagonal() * sa.U.leftCols(r).transpose();
  }
  out.residual = xay_residual(out.X, a, out.Y, b);
  return out;
}

bool first_component_member(const Matrix& x, const Matrix& a, const Matrix& b) {
  if (x.cols() != a.rows() || x.rows() != b.rows())
    throw InputError("first_component_member: shapes of X, A, B are incompatible");
  require_finite(x, "X");
  require_finite(a, "A");
  require_finite(b, "B");
  const Matrix xa = x * a;
  const std::size_t rank_xa = spectra::singular_spectrum(xa).rank;
  const std::size_t rank_b = spectra::singular_spectrum(b).rank;
  if (rank_b == 0) return true;
  if (rank_xa < rank_b) return false;
  const Matrix q = linalg::range_basis(xa, spectra::kRankCutoff);
  return (b - q * (q.transpose() * b)).norm() <= 1e-9 * b.norm();
}

SolutionPair factor_pair(const Matrix& b) {
  if (b.rows() != b.cols()) throw InputError("factor_pair: B must be square");
  require_finite(b, "B");
  const Index d = b.rows();
  SolutionPair out;
  out.Y = Matrix::Zero(2 * d, d);
  out.Y.topRows(d).setIdentity();
  out.X.resize(d, 2 * d);
  out.X << b, Matrix::Identity(d, d);
  out.residual = xay_residual(out.X, Matrix::Identity(2 * d, 2 * d), out.Y, b);
  return out;
}

InvertibleMatch match_invertible(const std::vector<Vector>& xs, const std::vector<Vector>& xs_target,
                                 const std::vector<Vector>& ys, const std::vector<Vector>& ys_target,
                                 double eps, std::uint64_t seed) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InputError("match_invertible: eps must be finite and > 0");
  if (xs.size() != xs_target.size() || ys.size() != ys_target.size())
    throw InputError("match_invertible: each vector family needs one target per vector");
  if (xs.empty() && ys.empty()) throw InputError("match_invertible: no vectors given");
  const Index d = xs.empty() ? ys.front().size() : xs.front().size();
  if (static_cast<std::size_t>(d) < xs.size() + ys.size())
    throw InputError("match_invertible: dimension " + std::to_string(d) + " is below |xs| + |ys| = " +
                     std::to_string(xs.size() + ys.size()));
  const Matrix x = as_columns(xs, d, "xs");
  const Matrix xt = as_columns(xs_target, d, "xs_target");
  const Matrix y = as_columns(ys, d, "ys");
  const Matrix yt = as_columns(ys_target, d, "ys_target");
  if (!independent(x)) throw InputError("match_invertible: xs are linearly dependent");
  if (!independent(y)) throw InputError("match_invertible: ys are linearly dependent");

  std::mt19937_64 rng(seed);
  const double slack = eps / 4.0;
  const Matrix w = separate(x, yt, slack, rng);  // V w_j = y_j, so V^{-1} y_j = w_j ≈ y_j'
  const Matrix z = separate(y, xt, slack, rng);  // V x_i = z_i ≈ x_i'

  Matrix f(d, x.cols() + w.cols());
  f << x, w;
  Matrix g(d, z.cols() + y.cols());
  g << z, y;
  Matrix f_full(d, d);
  f_full << f, linalg::orthonormal_complement(orthonormal_span(f), d);
  Matrix g_full(d, d);
  g_full << g, linalg::orthonormal_complement(orthonormal_span(g), d);

  InvertibleMatch out;
  out.V = g_full * f_full.partialPivLu().inverse();
  out.V_inv = f_full * g_full.partialPivLu().inverse();
  const Vector s = linalg::svd(out.V).s;
  out.min_singular_value = s(s.size() - 1);
  out.condition = s(0) / out.min_singular_value;
  double worst = 0.0;
  for (Index i = 0; i < x.cols(); ++i) {
    out.x_residuals.push_back((out.V * x.col(i) - xt.col(i)).norm());
    worst = std::max(worst, out.x_residuals.back());
  }
  for (Index j = 0; j < y.cols(); ++j) {
    out.y_residuals.push_back((out.V_inv * y.col(j) - yt.col(j)).norm());
    worst = std::max(worst, out.y_residuals.back());
  }
  if (!(worst < eps) || !(out.min_singular_value > 0.0)) {
    std::ostringstream msg;
    msg << "match_invertible: achieved residual " << format_real(worst) << " does not meet eps = " << format_real(eps);
    throw InputError(msg.str());
  }
  return out;
}

ApproxFactorization approx_factorization(const Matrix& b, const Matrix& x0, const Matrix& y0,
                                         const std::vector<Vector>& test_vectors, double eps,
                                         std::uint64_t seed) {
  const SolutionPair base = factor_pair(b);
  const Index d = b.rows();
  if (x0.rows() != d || x0.cols() != d || y0.rows() != d || y0.cols() != d)
    throw InputError("approx_factorization: X0 and Y0 must be " + std::to_string(d) + "x" + std::to_string(d));
  require_finite(x0, "X0");
  require_finite(y0, "Y0");
  if (!(eps > 0.0) || !std::isfinite(eps)) throw InputError("approx_factorization: eps must be finite and > 0");
  if (test_vectors.empty()) throw InputError("approx_factorization: no test vectors");
  const Matrix v = as_columns(test_vectors, d, "test_vectors");
  for (Index j = 0; j < v.cols(); ++j)
    if (v.col(j).norm() == 0.0) throw InputError("approx_factorization: test vector " + std::to_string(j) + " is zero");
  if (!independent(v)) throw InputError("approx_factorization: test vectors must be linearly independent");

  // V Y v ≈ [Y0 v; 0] and V^{-1} [v; 0] ≈ z with X z = X0 v; then
  // ||X V^{-1} [v; 0] - X0 v|| <= ||X|| * ||V^{-1} [v; 0] - z||.
  const Matrix& x = base.X;
  const Matrix x_pinv = x.transpose() * (x * x.transpose()).ldlt().solve(Matrix::Identity(d, d));
  const double delta = eps / (2.0 * std::max(1.0, linalg::operator_norm(x)));
  std::vector<Vector> xs, xs_target, ys, ys_target;
  for (Index j = 0; j < v.cols(); ++j) {
    Vector embedded = Vector::Zero(2 * d);
    embedded.head(d) = v.col(j);
    Vector y_target = Vector::Zero(2 * d);
    y_target.head(d) = y0 * v.col(j);
    xs.push_back(base.Y * v.col(j));
    xs_target.push_back(y_target);
    ys.push_back(embedded);
    ys_target.push_back(x_pinv * (x0 * v.col(j)));
  }
  const InvertibleMatch match = match_invertible(xs, xs_target, ys, ys_target, delta, seed);

  ApproxFactorization out;
  out.pair.X = x * match.V_inv;
  out.pair.Y = match.V * base.Y;
  out.pair.residual = xay_residual(out.pair.X, Matrix::Identity(2 * d, 2 * d), out.pair.Y, b);
  for (Index j = 0; j < v.cols(); ++j) {
    out.x_residual = std::max(out.x_residual, (out.pair.X * ys[static_cast<std::size_t>(j)] - x0 * v.col(j)).norm());
    out.y_residual = std::max(out.y_residual, (out.pair.Y * v.col(j) - xs_target[static_cast<std::size_t>(j)]).norm());
  }
  if (!(out.x_residual < eps && out.y_residual < eps) || out.pair.residual > 1e-9) {
    std::ostringstream msg;
    msg << "approx_factorization: achieved residuals X " << format_real(out.x_residual) << ", Y "
        << format_real(out.y_residual) << ", product " << format_real(out.pair.residual)
        << " do not meet eps = " << format_real(eps);
    throw InputError(msg.str());
  }
  return out;
}

}  // namespace widthlab::equations
