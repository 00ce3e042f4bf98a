#include "widthlab/rigid.hpp"

#include "widthlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

namespace widthlab::rigid {

using Index = Eigen::Index;

void validate(const RigidCompactSpec& spec) {
  if (spec.n == 0) throw InputError("rigid spec: n must be at least 1");
  if (spec.alphas.size() != spec.n || spec.betas.size() != spec.n)
    throw InputError("rigid spec: need exactly n = " + std::to_string(spec.n) + " alphas and betas (got " +
                     std::to_string(spec.alphas.size()) + " and " + std::to_string(spec.betas.size()) + ")");
  for (std::size_t k = 0; k < spec.n; ++k) {
    if (!(spec.alphas[k] > 0.0) || !std::isfinite(spec.alphas[k]))
      throw InputError("rigid spec: alpha_" + std::to_string(k + 1) + " must be finite and positive");
    if (!(spec.betas[k] > 0.5 && spec.betas[k] < 1.0))
      throw InputError("rigid spec: beta_" + std::to_string(k + 1) + " must lie in the open interval (1/2, 1)");
  }
  for (std::size_t k = 2; k < spec.n; ++k)
    if (!(spec.alphas[k] / spec.alphas[k - 1] < spec.alphas[k - 1] / spec.alphas[k - 2]))
      throw InputError("rigid spec: ratios alpha_{k+1}/alpha_k must be strictly decreasing (fails at k = " +
                       std::to_string(k) + ")");
  for (std::size_t j = 0; j < spec.n; ++j)
    for (std::size_t k = j + 1; k < spec.n; ++k)
      if (spec.betas[j] == spec.betas[k])
        throw InputError("rigid spec: betas must be distinct (beta_" + std::to_string(j + 1) + " = beta_" +
                         std::to_string(k + 1) + ")");
}

std::vector<Vector> build_rigid_compact(const RigidCompactSpec& spec) {
  validate(spec);
  const Index n = static_cast<Index>(spec.n);
  std::vector<Vector> points{Vector::Zero(n)};
  for (Index k = 0; k < n; ++k) {
    const double a = spec.alphas[static_cast<std::size_t>(k)];
    points.push_back(a * Vector::Unit(n, k));
    points.push_back(a * spec.betas[static_cast<std::size_t>(k)] * Vector::Unit(n, k));
  }
  return points;
}

namespace {

bool close(const Vector& x, const Vector& y, double tol) { return (x - y).norm() <= tol * std::max(x.norm(), y.norm()); }

}  // namespace

EdgeGraph edge_graph(const RigidCompactSpec& spec, const Matrix& d, double tol) {
  validate(spec);
  const Index n = static_cast<Index>(spec.n);
  if (d.rows() != n || d.cols() != n) throw InputError("edge_graph: D must be " + std::to_string(n) + "x" + std::to_string(n));
  EdgeGraph g;
  for (Index k = 0; k < n; ++k)
    if ((d.col(k) - Vector::Unit(n, k)).norm() > tol) g.vertices.push_back(static_cast<std::size_t>(k));

  std::vector<std::size_t> out(spec.n, 0), in(spec.n, 0);
  for (std::size_t m : g.vertices) {
    const Vector image = spec.alphas[m] * d.col(static_cast<Index>(m));
    const Vector images[2] = {image, spec.betas[m] * image};
    for (std::size_t target : g.vertices) {
      const Vector top = spec.alphas[target] * Vector::Unit(n, static_cast<Index>(target));
      const Vector low = spec.betas[target] * top;
      bool edge = false;
      for (const Vector& v : images) edge = edge || close(v, top, tol) || close(v, low, tol);
      if (edge) {
        g.edges.emplace_back(target, m);
        ++out[target];
        ++in[m];
      }
    }
  }
  for (std::size_t v : g.vertices) {
    g.out_degree_min = g.out_degree_min ? std::min(*g.out_degree_min, out[v]) : out[v];
    g.in_degree_max = std::max(g.in_degree_max, in[v]);
  }
  return g;
}

namespace {

class Search {
 public:
  Search(const RigidCompactSpec& spec, double norm_bound)
      : spec_(spec), norm_bound_(norm_bound), points_(build_rigid_compact(spec)) {
    points_.erase(points_.begin());
    const Index n = static_cast<Index>(spec.n);
    const Index count = 2 * n;
    weighted_ = Matrix(n, count);
    for (Index j = 0; j < count; ++j) weighted_.col(j) = points_[static_cast<std::size_t>(j)].normalized();
    pinv_ = weighted_.transpose() * (weighted_ * weighted_.transpose()).inverse();
    image_.assign(points_.size(), 0);
    used_.assign(points_.size(), false);
  }

  CoverSearchReport run() {
    report_.norm_bound = norm_bound_;
    report_.ratio_threshold = threshold();
    extend(0);
    report_.identity_only = report_.admissible_maps == 1 && identity_admissible_;
    return report_;
  }

 private:
  static std::size_t axis(std::size_t point) { return point / 2; }

  double threshold() const {
    if (spec_.n < 2) return 0.0;
    double ratio = 0.0;
    for (std::size_t k = 0; k + 1 < spec_.n; ++k) ratio = std::max(ratio, spec_.alphas[k] / spec_.alphas[k + 1]);
    double gap = 1.0;
    for (std::size_t j = 0; j < spec_.n; ++j)
      for (std::size_t k = j + 1; k < spec_.n; ++k) gap = std::min(gap, std::abs(spec_.betas[j] - spec_.betas[k]));
    return ratio * gap;
  }

  void extend(std::size_t j) {
    ++report_.nodes_visited;
    if (j == points_.size()) {
      finish();
      return;
    }
    for (std::size_t target = 0; target < points_.size(); ++target) {
      if (used_[target]) continue;
      if (j % 2 == 1) {
        // Both points of an axis are multiples of D e_m: their images share an axis.
        if (axis(target) != axis(image_[j - 1])) {
          ++report_.pruned_in_degree;
          continue;
        }
        const Vector expected = spec_.betas[axis(j)] * points_[image_[j - 1]];
        if (!close(points_[target], expected, 1e-12)) {
          ++report_.pruned_collinear;
          continue;
        }
      }
      used_[target] = true;
      image_[j] = target;
      extend(j + 1);
      used_[target] = false;
    }
  }

  void finish() {
    // Out-degree observation: each moved axis n receives its two points from
    // at least two source axes.
    std::vector<std::set<std::size_t>> sources(spec_.n);
    std::vector<bool> moved(spec_.n, false);
    for (std::size_t j = 0; j < points_.size(); ++j) {
      sources[axis(image_[j])].insert(axis(j));
      if (image_[j] != j) moved[axis(j)] = true;
    }
    for (std::size_t k = 0; k < spec_.n; ++k) {
      if (moved[k] && sources[k].size() < 2) {
        ++report_.pruned_out_degree;
        return;
      }
    }
    ++report_.complete_maps;

    const Index n = static_cast<Index>(spec_.n);
    Matrix q(n, static_cast<Index>(points_.size()));
    for (std::size_t j = 0; j < points_.size(); ++j)
      q.col(static_cast<Index>(j)) = points_[image_[j]] / points_[j].norm();
    const Matrix d = q * pinv_;
    for (std::size_t j = 0; j < points_.size(); ++j) {
      const Vector& target = points_[image_[j]];
      if ((d * points_[j] - target).norm() > 1e-10 * target.norm()) return;
    }
    const double norm = linalg::operator_norm(d);
    if (norm > norm_bound_) return;

    ++report_.admissible_maps;
    report_.max_norm_bound = std::max(report_.max_norm_bound, norm);
    bool identity = true;
    for (std::size_t j = 0; j < points_.size(); ++j) identity = identity && image_[j] == j;
    identity_admissible_ = identity_admissible_ || identity;

    const EdgeGraph g = edge_graph(spec_, d);
    if (g.out_degree_min)
      report_.out_degree_min = report_.out_degree_min ? std::min(*report_.out_degree_min, *g.out_degree_min)
                                                      : *g.out_degree_min;
    report_.in_degree_max = std::max(report_.in_degree_max, g.in_degree_max);
  }

  const RigidCompactSpec& spec_;
  double norm_bound_;
  std::vector<Vector> points_;  // nonzero points of K
  Matrix weighted_;
  Matrix pinv_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
  bool identity_admissible_ = false;
  CoverSearchReport report_;
};

}  // namespace

CoverSearchReport rigid_cover_search(const RigidCompactSpec& spec, double norm_bound) {
  validate(spec);
  if (!(norm_bound >= 1.0) || !std::isfinite(norm_bound))
    throw InputError("rigid_cover_search: norm_bound must be finite and >= 1");
  if (spec.n > kMaxSearchSize)
    throw InputError("rigid_cover_search: n = " + std::to_string(spec.n) + " exceeds the search budget n <= " +
                     std::to_string(kMaxSearchSize));
  return Search(spec, norm_bound).run();
}

}  // namespace widthlab::rigid
