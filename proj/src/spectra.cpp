#include "widthlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace widthlab::spectra {

using Index = Eigen::Index;

double SingularSpectrum::s(std::size_t n) const {
  if (n == 0) throw InputError("s-numbers are 1-indexed; s(0) is undefined");
  return n <= values.size() ? values[n - 1] : 0.0;
}

double WidthSequence::d(std::size_t n) const {
  return n < values.size() ? values[n] : 0.0;
}

namespace {

SingularSpectrum spectrum_from(const Vector& s, double rank_cutoff) {
  SingularSpectrum out;
  out.values.assign(s.data(), s.data() + s.size());
  out.rank = static_cast<std::size_t>(linalg::numerical_rank(s, rank_cutoff));
  return out;
}

}  // namespace

Ellipsoid::Ellipsoid(Matrix generator, double rank_cutoff)
    : generator_(std::move(generator)), rank_cutoff_(rank_cutoff) {
  if (generator_.rows() == 0) throw InputError("ellipsoid generator needs at least one row");
  if (!(rank_cutoff_ >= 0.0 && rank_cutoff_ < 1.0))
    throw InputError("rank cutoff must lie in [0, 1)");
  require_finite(generator_, "ellipsoid generator");
  svd_ = linalg::svd(generator_);
  spectrum_ = spectrum_from(svd_.s, rank_cutoff_);
  span_basis_ = svd_.U.leftCols(static_cast<Index>(spectrum_.rank));
}

Ellipsoid Ellipsoid::scaled(double c) const {
  if (!(c >= 0.0) || !std::isfinite(c)) throw InputError("ellipsoid scale must be finite and >= 0");
  return Ellipsoid(c * generator_, rank_cutoff_);
}

SingularSpectrum singular_spectrum(const Matrix& a, double rank_cutoff) {
  require_finite(a, "singular_spectrum");
  return spectrum_from(linalg::svd(a).s, rank_cutoff);
}

WidthSequence kolmogorov_widths(const Ellipsoid& e) {
  const SingularSpectrum& sp = e.spectrum();
  WidthSequence w;
  w.values.assign(static_cast<std::size_t>(e.ambient_dim()), 0.0);
  const std::size_t r = std::min(sp.rank, w.values.size());
  for (std::size_t n = 0; n < r; ++n) w.values[n] = sp.s(n + 1);
  return w;
}

Ellipsoid section_ellipsoid(const Ellipsoid& e, const Matrix& y) {
  if (y.rows() != e.ambient_dim())
    throw InputError("section: Y has " + std::to_string(y.rows()) + " rows, ambient dimension is " +
                     std::to_string(e.ambient_dim()));
  require_finite(y, "section subspace");
  require_orthonormal_columns(y, 1e-9, "section subspace");
  if (y.cols() == 0) return e;

  // K ∩ Y⊥ = { A x : ||x|| <= 1, Y^T A x = 0 }: restrict A to the kernel of Y^T A.
  const double s1 = e.spectrum().s(1);
  const Matrix constraint = y.transpose() * e.generator();
  const Matrix kernel = linalg::null_space(constraint, e.rank_cutoff() * s1);
  return Ellipsoid(e.generator() * kernel, e.rank_cutoff());
}

SingularSpectrum section_spectrum(const Ellipsoid& e, const Matrix& y) {
  return section_ellipsoid(e, y).spectrum();
}

Ellipsoid truncate_ellipsoid(const Ellipsoid& e, std::size_t r) {
  if (r < 1 || r > e.rank())
    throw InputError("truncate_ellipsoid: r = " + std::to_string(r) + " outside [1, " +
                     std::to_string(e.rank()) + "]");
  const linalg::Svd& d = e.decomposition();
  const Index k = static_cast<Index>(r);
  // U_r S_r V_r^T maps the ball onto the same set as U_r S_r.
  Matrix g = d.U.leftCols(k) * d.s.head(k).asDiagonal();
  return Ellipsoid(std::move(g), e.rank_cutoff());
}

bool ellipsoid_membership(const Ellipsoid& e, const Vector& y, double tol) {
  if (y.size() != e.ambient_dim()) throw InputError("membership: vector length differs from ambient dimension");
  const linalg::Svd& d = e.decomposition();
  const Index r = static_cast<Index>(e.rank());
  const Vector coeff = d.U.leftCols(r).transpose() * y;
  const double residual = (y - d.U.leftCols(r) * coeff).norm();
  const double scale = std::max(y.norm(), r > 0 ? d.s(0) : 0.0);
  if (residual > tol * std::max(scale, 1e-300)) return false;
  const double preimage = (coeff.array() / d.s.head(r).array()).matrix().norm();
  return preimage <= 1.0 + tol;
}

}  // namespace widthlab::spectra
