#pragma once

#include "widthlab/matrix.hpp"
#include "widthlab/seqlab.hpp"
#include "widthlab/spectra.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace widthlab::covering {

using spectra::Ellipsoid;
using seqlab::SequenceModel;

inline constexpr double kCoverTol = 1e-9;

/// Outcome of T K1 ⊇ K2. psd_margin is the smallest eigenvalue of
/// (T A1)(T A1)^T - A2 A2^T divided by 1 + the larger of the two Gram norms.
struct CoverCertificate {
  bool holds = false;
  double psd_margin = 0.0;
  std::optional<Matrix> witness;
  std::optional<double> norm;
};

/// Thrown when rank(E2) > rank(E1): no operator maps K1 onto a superset of K2.
class NotCoverable : public InputError {
 public:
  using InputError::InputError;
};

/// T A1(B) ⊇ A2(B)  ⇔  A2 A2^T ≼ (T A1)(T A1)^T.
CoverCertificate covers(const Matrix& t, const Ellipsoid& e1, const Ellipsoid& e2,
                        double tol = kCoverTol);

struct SchmidtCover {
  Matrix D;
  double C = 0.0;
};

/// Minimal-norm cover D K1 ⊇ K2: C = max_n s_n(A2)/s_n(A1) over n <= rank(E2)
/// and D = C * U2_r U1_r^T on the top r = rank(E2) left singular directions.
SchmidtCover schmidt_cover(const Ellipsoid& e1, const Ellipsoid& e2);

struct PrescribedCover {
  Matrix D;
  double rho = 0.0;
  double constraint_residual = 0.0;  // max_j ||D y_j - N y_j||
  CoverCertificate certificate;      // covers(D, E, rho * truncate(E, rank - m))
};

/// D with D y = N y on span(Y) and D K ⊇ rho * truncate(K, rank - m).
///
/// On Y⊥, D is the isometry carrying the section's top singular directions to
/// those of the truncation; rho = min_n σ_n(section) / s_n(E). `n` is either
/// an ambient operator (d x d) or the images of the columns of Y (d x m).
PrescribedCover prescribed_cover(const Ellipsoid& e, const Matrix& y, const Matrix& n);

struct DichotomyReport {
  std::vector<std::size_t> dims;
  std::vector<double> rho;
  std::vector<double> constraint_residuals;
  bool model_lacunary = false;
};

/// For each d: A = diag(a_0..a_{d-1}), random m-dimensional Y and targets N
/// drawn from a generator seeded by (seed, d), then prescribed_cover. Exact
/// positive rank (cutoff 0) is used so graded spectra keep every axis.
/// Dimensions run concurrently; the report does not depend on scheduling.
DichotomyReport wot_density_experiment(const SequenceModel& model, std::size_t m,
                                       const std::vector<std::size_t>& dims, std::uint64_t seed);

enum class VerdictTag { Everything, AlgebraAK, KDim, Empty };

struct ClassificationVerdict {
  VerdictTag tag = VerdictTag::Empty;
  std::size_t k = 0;  // meaningful for KDim
  bool exact = false;
  std::string note;
  std::optional<seqlab::ShiftClassification> shifts;
};

std::string tag_name(VerdictTag tag);
/// "Everything", "AlgebraAK", "KDim(2)", "Empty".
std::string verdict_label(const ClassificationVerdict& v);

/// Closure of G(K1, K2) from the width models a of K1 and b of K2.
/// Parametric pairs are decided exactly (shift search is unbounded there);
/// sampled pairs search shifts up to k_max.
ClassificationVerdict classify_WG(const SequenceModel& a, const SequenceModel& b, std::size_t k_max);

/// As classify_WG with strict majorization (compact covering operators).
ClassificationVerdict classify_WCG(const SequenceModel& a, const SequenceModel& b, std::size_t k_max);

/// Orthogonal projection P (d x d) with {P T_i} linearly independent, grown
/// greedily one top singular direction at a time.
Matrix find_separating_projection(const std::vector<Matrix>& ts);

struct RangeEquivalence {
  bool same_range = false;
  std::optional<double> c;
  std::optional<double> C;
};

/// Whether A1 and A2 have the same column space, and if so the best constants
/// with c K1 ⊆ K2 ⊆ C K1.
RangeEquivalence range_equiv(const Matrix& a1, const Matrix& a2);

enum class WeakFullCase { FiniteCodim, NonLacunary, Lacunary };

struct WeakFullness {
  bool weakly_full = false;
  WeakFullCase which = WeakFullCase::FiniteCodim;
  seqlab::LacunarityVerdict evidence;
};

std::string case_name(WeakFullCase c);  // "i", "ii", "iii"

/// closure_codim = std::nullopt means infinite codimension.
WeakFullness is_weakly_full(const SequenceModel& model, std::optional<std::size_t> closure_codim);

}  // namespace widthlab::covering
