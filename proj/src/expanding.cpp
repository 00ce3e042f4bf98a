#include "widthlab/expanding.hpp"

#include "widthlab/linalg.hpp"
#include "widthlab/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace widthlab::expanding {

ExpandVerdict is_expanding(const Matrix& t, const Matrix& a, double tol) {
  if (t.rows() != t.cols() || a.rows() != a.cols() || t.rows() != a.rows())
    throw InputError("is_expanding: T and A must be square of equal size (got " + std::to_string(t.rows()) + "x" +
                     std::to_string(t.cols()) + " and " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + ")");
  require_finite(t, "T");
  require_finite(a, "A");
  const Matrix at = a * t;
  const Matrix g1 = at.transpose() * at;
  const Matrix g0 = a.transpose() * a;
  const double scale = 1.0 + std::max(linalg::extreme_eigenvalues(g1).second, linalg::extreme_eigenvalues(g0).second);
  ExpandVerdict v;
  v.margin = linalg::extreme_eigenvalues(g1 - g0).first / scale;
  v.expanding = v.margin >= -tol;
  return v;
}

DualCheck expanding_dual_check(const Matrix& t, const Matrix& a) {
  const ExpandVerdict e = is_expanding(t, a);
  const spectra::Ellipsoid k(a.transpose());
  const covering::CoverCertificate c = covering::covers(t.transpose(), k, k);
  DualCheck out;
  out.expanding = e.expanding;
  out.transposed_cover = c.holds;
  out.expand_margin = e.margin;
  out.cover_margin = c.psd_margin;
  out.agree = e.expanding == c.holds;
  out.in_band = std::abs(e.margin) <= kBoundaryBand || std::abs(c.psd_margin) <= kBoundaryBand;
  return out;
}

covering::ClassificationVerdict classify_WE(const seqlab::SequenceModel& model, bool kernel_trivial) {
  const seqlab::LacunarityVerdict lac = seqlab::is_lacunary(model);
  covering::ClassificationVerdict v;
  v.exact = lac.exact;
  if (!lac.lacunary) {
    v.tag = covering::VerdictTag::Everything;
    v.note = "s-numbers are not lacunary";
  } else if (kernel_trivial) {
    v.tag = covering::VerdictTag::Everything;
    v.note = "lacunary s-numbers but ker A = {0}: every operator preserves ker A";
  } else {
    v.tag = covering::VerdictTag::AlgebraAK;
    v.note = "operators preserving ker A";
  }
  return v;
}

}  // namespace widthlab::expanding
