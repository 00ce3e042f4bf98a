#pragma once

#include "widthlab/covering.hpp"
#include "widthlab/matrix.hpp"
#include "widthlab/seqlab.hpp"

namespace widthlab::expanding {

inline constexpr double kExpandTol = 1e-9;
/// Margins closer to zero than this are decided by round-off.
inline constexpr double kBoundaryBand = 1e-6;

/// ||A T x|| >= ||A x|| for all x. margin is the smallest eigenvalue of
/// T^T A^T A T - A^T A divided by 1 + the larger of the two Gram norms.
struct ExpandVerdict {
  bool expanding = false;
  double margin = 0.0;
};

ExpandVerdict is_expanding(const Matrix& t, const Matrix& a, double tol = kExpandTol);

struct DualCheck {
  bool agree = false;
  bool expanding = false;
  bool transposed_cover = false;  // covers(T^T, A^T(B), A^T(B))
  double expand_margin = 0.0;
  double cover_margin = 0.0;
  bool in_band = false;           // either margin within kBoundaryBand of zero
};

/// Compares is_expanding(T, A) with covers(T^T, Ellipsoid(A^T), Ellipsoid(A^T)).
DualCheck expanding_dual_check(const Matrix& t, const Matrix& a);

/// Closure of E(A) from the s-number model of A: Everything unless the model
/// is lacunary and ker A is nontrivial, in which case the closure consists of
/// the operators preserving ker A (reported as AlgebraAK).
covering::ClassificationVerdict classify_WE(const seqlab::SequenceModel& model, bool kernel_trivial);

}  // namespace widthlab::expanding
