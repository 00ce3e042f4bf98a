#pragma once

#include "widthlab/linalg.hpp"
#include "widthlab/matrix.hpp"

#include <cstddef>
#include <vector>

namespace widthlab::spectra {

/// Singular values below this fraction of s_1 count as zero.
inline constexpr double kRankCutoff = 1e-12;

/// s-numbers of an operator. Conceptually 1-indexed: s(1) is the largest.
/// `values[0]` stores s_1.
struct SingularSpectrum {
  std::vector<double> values;
  std::size_t rank = 0;

  /// s_n for n >= 1; zero past the stored length.
  double s(std::size_t n) const;
};

/// Kolmogorov widths, 0-indexed: d(0) >= d(1) >= ... with d_n = s_{n+1}.
struct WidthSequence {
  std::vector<double> values;

  double d(std::size_t n) const;
};

/// The ellipsoid K = A(B), B the closed unit ball of the domain of A.
///
/// The SVD of the generator is computed once. `span_basis()` holds the
/// left singular vectors of the nonzero singular values, an orthonormal basis
/// of V_K = lin(K).
class Ellipsoid {
 public:
  explicit Ellipsoid(Matrix generator, double rank_cutoff = kRankCutoff);

  const Matrix& generator() const { return generator_; }
  Eigen::Index ambient_dim() const { return generator_.rows(); }
  Eigen::Index domain_dim() const { return generator_.cols(); }
  const Matrix& span_basis() const { return span_basis_; }
  const SingularSpectrum& spectrum() const { return spectrum_; }
  std::size_t rank() const { return spectrum_.rank; }
  double rank_cutoff() const { return rank_cutoff_; }
  const linalg::Svd& decomposition() const { return svd_; }

  /// c * K, for c >= 0.
  Ellipsoid scaled(double c) const;

 private:
  Matrix generator_;
  double rank_cutoff_;
  linalg::Svd svd_;
  SingularSpectrum spectrum_;
  Matrix span_basis_;
};

SingularSpectrum singular_spectrum(const Matrix& a, double rank_cutoff = kRankCutoff);

/// d_n(K) = s_{n+1}(A) below the rank, zero above; length = ambient dimension.
WidthSequence kolmogorov_widths(const Ellipsoid& e);

/// Ellipsoid K ∩ Y⊥ as generated by A restricted to ker(P_Y A).
/// `y` holds orthonormal columns of the ambient space (possibly none).
Ellipsoid section_ellipsoid(const Ellipsoid& e, const Matrix& y);

/// s-numbers of the section K ∩ Y⊥; their shift by one index gives its widths.
SingularSpectrum section_spectrum(const Ellipsoid& e, const Matrix& y);

/// Ellipsoid of the rank-r truncated SVD of the generator, 1 <= r <= rank.
/// The returned generator is U_r S_r (ambient x r), which spans the same set.
Ellipsoid truncate_ellipsoid(const Ellipsoid& e, std::size_t r);

/// y ∈ K, i.e. y ∈ range(A) and ||A⁺ y|| <= 1 + tol.
bool ellipsoid_membership(const Ellipsoid& e, const Vector& y, double tol = 1e-9);

}  // namespace widthlab::spectra
