#include "widthlab/covering.hpp"

#include "widthlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <sstream>
#include <stdexcept>

namespace widthlab::covering {

using Index = Eigen::Index;

CoverCertificate covers(const Matrix& t, const Ellipsoid& e1, const Ellipsoid& e2, double tol) {
  if (t.cols() != e1.ambient_dim() || t.rows() != e2.ambient_dim())
    throw InputError("covers: T is " + std::to_string(t.rows()) + "x" + std::to_string(t.cols()) +
                     ", expected " + std::to_string(e2.ambient_dim()) + "x" +
                     std::to_string(e1.ambient_dim()));
  require_finite(t, "covering operator");
  const Matrix m = t * e1.generator();
  const Matrix& n = e2.generator();
  const Matrix mm = m * m.transpose();
  const Matrix nn = n * n.transpose();
  const double scale = 1.0 + std::max(linalg::extreme_eigenvalues(mm).second,
                                      linalg::extreme_eigenvalues(nn).second);
  CoverCertificate out;
  out.psd_margin = linalg::extreme_eigenvalues(mm - nn).first / scale;
  out.holds = out.psd_margin >= -tol;
  return out;
}

SchmidtCover schmidt_cover(const Ellipsoid& e1, const Ellipsoid& e2) {
  const std::size_t r1 = e1.rank();
  const std::size_t r2 = e2.rank();
  if (r2 > r1)
    throw NotCoverable("not coverable: rank of the target ellipsoid (" + std::to_string(r2) +
                       ") exceeds rank of the source (" + std::to_string(r1) + ")");
  SchmidtCover out;
  out.D = Matrix::Zero(e2.ambient_dim(), e1.ambient_dim());
  if (r2 == 0) return out;
  for (std::size_t n = 1; n <= r2; ++n)
    out.C = std::max(out.C, e2.spectrum().s(n) / e1.spectrum().s(n));
  const Index r = static_cast<Index>(r2);
  out.D = out.C * e2.decomposition().U.leftCols(r) * e1.decomposition().U.leftCols(r).transpose();
  return out;
}

PrescribedCover prescribed_cover(const Ellipsoid& e, const Matrix& y, const Matrix& n) {
  const Index d = e.ambient_dim();
  const Index m = y.cols();
  if (static_cast<std::size_t>(m) >= e.rank())
    throw InputError("prescribed_cover: m = " + std::to_string(m) + " must be below rank " +
                     std::to_string(e.rank()));
  if (n.rows() != d || (n.cols() != d && n.cols() != m))
    throw InputError("prescribed_cover: N must be " + std::to_string(d) + "x" + std::to_string(d) +
                     " or " + std::to_string(d) + "x" + std::to_string(m));
  require_finite(n, "prescribed values N");
  const Ellipsoid section = spectra::section_ellipsoid(e, y);
  const std::size_t r = e.rank() - static_cast<std::size_t>(m);
  if (section.rank() < r)
    throw NotCoverable("prescribed_cover: section has rank " + std::to_string(section.rank()) +
                       ", below rank - m = " + std::to_string(r));

  const Matrix images = n.cols() == d ? Matrix(n * y) : n;
  PrescribedCover out;
  out.rho = 1.0;
  for (std::size_t k = 1; k <= r; ++k)
    out.rho = std::min(out.rho, section.spectrum().s(k) / e.spectrum().s(k));

  const Index ri = static_cast<Index>(r);
  const Matrix top = e.decomposition().U.leftCols(ri);
  const Matrix sec = section.decomposition().U.leftCols(ri);
  const Matrix off_y = Matrix::Identity(d, d) - y * y.transpose();
  out.D = images * y.transpose() + top * sec.transpose() * off_y;

  for (Index j = 0; j < m; ++j)
    out.constraint_residual = std::max(out.constraint_residual, (out.D * y.col(j) - images.col(j)).norm());
  const Ellipsoid target = spectra::truncate_ellipsoid(e, r).scaled(out.rho);
  out.certificate = covers(out.D, e, target);
  out.certificate.witness = out.D;
  out.certificate.norm = linalg::operator_norm(out.D);
  return out;
}

namespace {

struct DimensionResult {
  double rho = 0.0;
  double residual = 0.0;
};

DimensionResult run_dimension(const SequenceModel& model, std::size_t m, std::size_t d, std::uint64_t seed) {
  std::vector<double> terms;
  try {
    terms = seqlab::sample(model, d);
  } catch (const InputError& err) {
    throw InputError("dichotomy: refusing dimension " + std::to_string(d) + ": " + err.what());
  }
  const Index di = static_cast<Index>(d);
  const Index mi = static_cast<Index>(m);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(d)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> normal;
  Matrix g(di, mi);
  for (Index j = 0; j < mi; ++j)
    for (Index i = 0; i < di; ++i) g(i, j) = normal(rng);
  Matrix n(di, mi);
  for (Index j = 0; j < mi; ++j)
    for (Index i = 0; i < di; ++i) n(i, j) = normal(rng);
  const Matrix y = Eigen::HouseholderQR<Matrix>(g).householderQ() * Matrix::Identity(di, mi);

  Vector diag(di);
  for (Index i = 0; i < di; ++i) diag(i) = terms[static_cast<std::size_t>(i)];
  const Ellipsoid e(Matrix(diag.asDiagonal()), 0.0);
  const PrescribedCover pc = prescribed_cover(e, y, n);
  if (!pc.certificate.holds)
    throw std::runtime_error("dichotomy: prescribed cover failed its certificate at d = " + std::to_string(d));
  return {pc.rho, pc.constraint_residual};
}

}  // namespace

DichotomyReport wot_density_experiment(const SequenceModel& model, std::size_t m,
                                       const std::vector<std::size_t>& dims, std::uint64_t seed) {
  if (dims.empty()) throw InputError("dichotomy: no dimensions given");
  for (std::size_t d : dims)
    if (d <= m)
      throw InputError("dichotomy: dimension " + std::to_string(d) + " must exceed m = " + std::to_string(m));

  std::vector<std::future<DimensionResult>> jobs;
  jobs.reserve(dims.size());
  for (std::size_t d : dims)
    jobs.push_back(std::async(std::launch::async, run_dimension, std::cref(model), m, d, seed));

  DichotomyReport out;
  out.dims = dims;
  out.model_lacunary = seqlab::is_lacunary(model).lacunary;
  for (auto& job : jobs) {
    const DimensionResult r = job.get();
    out.rho.push_back(r.rho);
    out.constraint_residuals.push_back(r.residual);
  }
  return out;
}

std::string tag_name(VerdictTag tag) {
  switch (tag) {
    case VerdictTag::Everything: return "Everything";
    case VerdictTag::AlgebraAK: return "AlgebraAK";
    case VerdictTag::KDim: return "KDim";
    case VerdictTag::Empty: return "Empty";
  }
  return "?";
}

std::string verdict_label(const ClassificationVerdict& v) {
  if (v.tag == VerdictTag::KDim) return "KDim(" + std::to_string(v.k) + ")";
  return tag_name(v.tag);
}

namespace {

// Shift searches for parametric pairs terminate: a failing shift always exists
// unless all_shifts_* already said otherwise.
constexpr std::size_t kExactShiftCap = 1'000'000;

ClassificationVerdict classify(const SequenceModel& a, const SequenceModel& b, std::size_t k_max, bool strict) {
  const std::string rel = strict ? "strictly majorize" : "majorize";
  ClassificationVerdict v;
  const seqlab::MajorizationVerdict base = strict ? seqlab::strictly_majorizes(a, b) : seqlab::majorizes(a, b);
  v.exact = base.exact;
  if (!base.holds) {
    v.tag = VerdictTag::Empty;
    v.note = "a does not " + rel + " b";
    return v;
  }
  const std::optional<bool> all = strict ? seqlab::all_shifts_strictly_majorize(a, b)
                                         : seqlab::all_shifts_majorize(a, b);
  if (all && *all) {
    v.tag = VerdictTag::Everything;
    v.note = "every left shift of a " + rel + "s b";
    return v;
  }
  const std::size_t budget = all ? kExactShiftCap : k_max;
  const seqlab::ShiftClassification sc = strict ? seqlab::max_strictly_majorizing_shift(a, b, budget)
                                                : seqlab::max_majorizing_shift(a, b, budget);
  v.shifts = sc;
  if (!sc.k) {
    v.tag = VerdictTag::Everything;
    v.note = "every tested shift up to " + std::to_string(sc.exhausted_at) + " " + rel + "s b";
    return v;
  }
  v.k = *sc.k;
  if (!strict && v.k == 0 && a == b) {
    v.tag = VerdictTag::AlgebraAK;
    v.note = "single ellipsoid with lacunary widths: operators leaving V_K invariant";
    return v;
  }
  v.tag = VerdictTag::KDim;
  v.note = "shift " + std::to_string(v.k) + " is the last to " + rel + " b";
  return v;
}

}  // namespace

ClassificationVerdict classify_WG(const SequenceModel& a, const SequenceModel& b, std::size_t k_max) {
  return classify(a, b, k_max, false);
}

ClassificationVerdict classify_WCG(const SequenceModel& a, const SequenceModel& b, std::size_t k_max) {
  return classify(a, b, k_max, true);
}

namespace {

Matrix vectorized(const std::vector<Matrix>& ts, const Matrix* p) {
  const Index rows = ts.front().size();
  Matrix out(rows, static_cast<Index>(ts.size()));
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const Matrix m = p ? Matrix(*p * ts[i]) : ts[i];
    out.col(static_cast<Index>(i)) = Eigen::Map<const Vector>(m.data(), rows);
  }
  return out;
}

Index rank_above(const Matrix& m, double abs_cutoff) {
  const Vector s = linalg::svd(m).s;
  Index r = 0;
  while (r < s.size() && s(r) > abs_cutoff) ++r;
  return r;
}

}  // namespace

Matrix find_separating_projection(const std::vector<Matrix>& ts) {
  if (ts.empty()) throw InputError("find_separating_projection: empty operator list");
  const Index d = ts.front().rows();
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].rows() != d || ts[i].cols() != d)
      throw InputError("find_separating_projection: operator " + std::to_string(i) +
                       " is not " + std::to_string(d) + "x" + std::to_string(d));
    require_finite(ts[i], "operator list");
  }
  const Index count = static_cast<Index>(ts.size());
  const Matrix vec = vectorized(ts, nullptr);
  const linalg::Svd full = linalg::svd(vec);
  const double cutoff = 1e-10 * (full.s.size() ? full.s(0) : 0.0);
  if (count > vec.rows() || !(full.s(full.s.size() - 1) > cutoff)) {
    const Vector c = count > vec.rows() ? Vector(linalg::null_space(vec, cutoff).col(0))
                                        : Vector(full.V.col(full.V.cols() - 1));
    std::ostringstream msg;
    msg << "find_separating_projection: operators are linearly dependent; the combination c = (";
    for (Index i = 0; i < c.size(); ++i) msg << (i ? ", " : "") << format_real(c(i));
    msg << ") gives sum c_i T_i = 0";
    throw InputError(msg.str());
  }

  Matrix q(d, 0);
  while (true) {
    const Matrix p = q * q.transpose();
    const Matrix pv = vectorized(ts, &p);
    if (rank_above(pv, cutoff) == count || q.cols() == d) return p;

    Index best_rank = -1;
    double best_sigma = -1.0;
    Vector best;
    const Matrix off = Matrix::Identity(d, d) - p;
    for (const Matrix& t : ts) {
      const linalg::Svd part = linalg::svd(off * t);
      if (!(part.s(0) > cutoff)) continue;
      Matrix grown(d, q.cols() + 1);
      grown << q, part.U.col(0);
      Eigen::HouseholderQR<Matrix> qr(grown);
      const Matrix basis = qr.householderQ() * Matrix::Identity(d, grown.cols());
      const Matrix trial = basis * basis.transpose();
      const Index r = rank_above(vectorized(ts, &trial), cutoff);
      if (r > best_rank || (r == best_rank && part.s(0) > best_sigma)) {
        best_rank = r;
        best_sigma = part.s(0);
        best = part.U.col(0);
      }
    }
    if (best_rank < 0) {
      // Every T_i already lies in the range of P; fill with any new direction.
      best = linalg::orthonormal_complement(q, d).col(0);
    }
    Matrix grown(d, q.cols() + 1);
    grown << q, best;
    q = Eigen::HouseholderQR<Matrix>(grown).householderQ() * Matrix::Identity(d, grown.cols());
  }
}

RangeEquivalence range_equiv(const Matrix& a1, const Matrix& a2) {
  if (a1.rows() != a2.rows())
    throw InputError("range_equiv: ambient dimensions differ (" + std::to_string(a1.rows()) + " vs " +
                     std::to_string(a2.rows()) + ")");
  require_finite(a1, "A1");
  require_finite(a2, "A2");
  Matrix both(a1.rows(), a1.cols() + a2.cols());
  both << a1, a2;
  const Ellipsoid e1(a1);
  const Ellipsoid e2(a2);
  const std::size_t r12 = spectra::singular_spectrum(both).rank;

  RangeEquivalence out;
  out.same_range = e1.rank() == e2.rank() && e1.rank() == r12;
  if (!out.same_range) return out;
  if (e1.rank() == 0) {
    out.c = 1.0;
    out.C = 1.0;
    return out;
  }
  // K2 ⊆ t K1 iff ||A1⁺ A2|| <= t; c and C are the extreme nonzero singular
  // values of M = S1^{-1} U1^T A2, i.e. the square roots of the generalized
  // eigenvalues of A2 A2^T against A1 A1^T on the common range.
  const Index r = static_cast<Index>(e1.rank());
  const linalg::Svd& d1 = e1.decomposition();
  const Matrix mm = d1.s.head(r).cwiseInverse().asDiagonal() * d1.U.leftCols(r).transpose() * a2;
  const Vector s = linalg::svd(mm).s;
  out.C = s(0);
  out.c = s(r - 1);

  const Matrix id = Matrix::Identity(a1.rows(), a1.rows());
  if (!covers(id, e2, e1.scaled(*out.c)).holds || !covers(id, e1.scaled(*out.C), e2).holds)
    throw std::runtime_error("range_equiv: computed constants failed the PSD inclusion check");
  return out;
}

std::string case_name(WeakFullCase c) {
  switch (c) {
    case WeakFullCase::FiniteCodim: return "i";
    case WeakFullCase::NonLacunary: return "ii";
    case WeakFullCase::Lacunary: return "iii";
  }
  return "?";
}

WeakFullness is_weakly_full(const SequenceModel& model, std::optional<std::size_t> closure_codim) {
  WeakFullness out;
  out.evidence = seqlab::is_lacunary(model);
  if (closure_codim) {
    out.weakly_full = true;
    out.which = WeakFullCase::FiniteCodim;
  } else if (out.evidence.lacunary) {
    out.weakly_full = true;
    out.which = WeakFullCase::Lacunary;
  } else {
    out.weakly_full = false;
    out.which = WeakFullCase::NonLacunary;
  }
  return out;
}

}  // namespace widthlab::covering
