#pragma once

#include "widthlab/matrix.hpp"
#include "widthlab/seqlab.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace widthlab::equations {

struct SolvabilityVerdict {
  bool solvable = false;
  std::size_t rank_A = 0;
  std::size_t rank_B = 0;
  std::optional<seqlab::MajorizationVerdict> asymptotic;  // majorizes(a, b) when models are given
};

struct SolutionPair {
  Matrix X;
  Matrix Y;
  double residual = 0.0;  // ||X A Y - B||_F / (1 + ||B||_F)
};

class Unsolvable : public InputError {
 public:
  explicit Unsolvable(SolvabilityVerdict verdict);
  const SolvabilityVerdict& verdict() const { return verdict_; }

 private:
  SolvabilityVerdict verdict_;
};

double xay_residual(const Matrix& x, const Matrix& a, const Matrix& y, const Matrix& b);

/// XAY = B has a solution iff rank B <= rank A (square, equal sizes). With
/// models for the s-numbers of A and B the asymptotic condition is reported too.
SolvabilityVerdict xay_solvable(const Matrix& a, const Matrix& b,
                                const std::optional<seqlab::SequenceModel>& a_model = std::nullopt,
                                const std::optional<seqlab::SequenceModel>& b_model = std::nullopt);

/// SVD-balanced solution, r = rank B:
///   Y = V_A,r S_A,r^{-1/2} V_B,r^T,   X = U_B,r S_B,r S_A,r^{-1/2} U_A,r^T.
SolutionPair solve_xay(const Matrix& a, const Matrix& b);

/// range(B) ⊆ range(X A).
bool first_component_member(const Matrix& x, const Matrix& a, const Matrix& b);

/// Factorization through R^d ⊕ R^d: Y = [I; 0] (2d x d), X = [B  I] (d x 2d).
SolutionPair factor_pair(const Matrix& b);

struct InvertibleMatch {
  Matrix V;
  Matrix V_inv;
  double condition = 0.0;
  double min_singular_value = 0.0;
  std::vector<double> x_residuals;  // ||V x_i - x_i'||
  std::vector<double> y_residuals;  // ||V^{-1} y_j - y_j'||
};

/// Invertible V with ||V x_i - x_i'|| < eps and ||V^{-1} y_j - y_j'|| < eps.
///
/// Targets are nudged by eps/4 along seeded random directions orthogonal to
/// the relevant span whenever they come closer than eps/4 to it, which keeps
/// the families F = (x, w) and G = (z, y) independent; V maps F to G and one
/// orthonormal complement onto the other.
InvertibleMatch match_invertible(const std::vector<Vector>& xs, const std::vector<Vector>& xs_target,
                                 const std::vector<Vector>& ys, const std::vector<Vector>& ys_target,
                                 double eps, std::uint64_t seed = 0);

struct ApproxFactorization {
  SolutionPair pair;       // (X V^{-1}, V Y), with residual of the product against B
  double x_residual = 0.0;  // max_v ||(X V^{-1}) [v; 0] - X0 v||
  double y_residual = 0.0;  // max_v ||V Y v - [Y0 v; 0]||
};

/// Moves factor_pair(B) towards (X0, Y0) on the test vectors while keeping the
/// product equal to B. The internal space R^{2d} is compared with R^d through
/// the first summand. Test vectors must be linearly independent.
ApproxFactorization approx_factorization(const Matrix& b, const Matrix& x0, const Matrix& y0,
                                         const std::vector<Vector>& test_vectors, double eps,
                                         std::uint64_t seed = 0);

}  // namespace widthlab::equations
