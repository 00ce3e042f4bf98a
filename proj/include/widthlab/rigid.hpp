#pragma once

#include "widthlab/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace widthlab::rigid {

/// Search budget: point-map space grows like (2n)!.
inline constexpr std::size_t kMaxSearchSize = 7;

/// K = {0} ∪ {α_k e_k} ∪ {α_k β_k e_k}, k = 1..n.
struct RigidCompactSpec {
  std::size_t n = 0;
  std::vector<double> alphas;  // positive, consecutive ratios strictly decreasing
  std::vector<double> betas;   // distinct, in (1/2, 1)
};

/// Throws InputError naming the violated condition.
void validate(const RigidCompactSpec& spec);

/// 2n + 1 points in R^n: 0, then α_k e_k and α_k β_k e_k for each k.
std::vector<Vector> build_rigid_compact(const RigidCompactSpec& spec);

/// Oriented graph on M = {n : D e_n != e_n}: an edge n -> m whenever D sends
/// α_m e_m or α_m β_m e_m to α_n e_n or α_n β_n e_n.
struct EdgeGraph {
  std::vector<std::size_t> vertices;  // 0-based axes in M
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::optional<std::size_t> out_degree_min;  // empty when M is empty
  std::size_t in_degree_max = 0;
};

EdgeGraph edge_graph(const RigidCompactSpec& spec, const Matrix& d, double tol = 1e-10);

struct CoverSearchReport {
  bool identity_only = false;
  std::size_t admissible_maps = 0;    // point bijections realised by a linear D with ||D|| <= norm_bound
  double norm_bound = 0.0;
  double max_norm_bound = 0.0;        // largest ||D|| among admissible maps
  double ratio_threshold = 0.0;       // max_k(α_k/α_{k+1}) * min_{j != k} |β_j - β_k|
  std::size_t nodes_visited = 0;      // partial assignments explored
  std::size_t pruned_in_degree = 0;   // axis images split over two target axes
  std::size_t pruned_collinear = 0;   // image of α_k β_k e_k != β_k * image of α_k e_k
  std::size_t pruned_out_degree = 0;  // complete maps with a vertex of out-degree < 2
  std::size_t complete_maps = 0;      // bijections reaching the linear solve
  std::optional<std::size_t> out_degree_min;  // over graphs of admissible maps
  std::size_t in_degree_max = 0;
};

/// Enumerates bijections of K \ {0} (the preimage assignments that D K ⊇ K
/// forces on a finite point set), pruning with the degree observations, then
/// solves a column-weighted least-squares problem for D on each survivor.
/// Refuses n > kMaxSearchSize.
CoverSearchReport rigid_cover_search(const RigidCompactSpec& spec, double norm_bound);

}  // namespace widthlab::rigid
