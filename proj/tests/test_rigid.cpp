#include "widthlab/rigid.hpp"

#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

using namespace testing_support;
using namespace widthlab::rigid;
using widthlab::InputError;

namespace {

RigidCompactSpec spec_of(std::vector<double> alphas, std::vector<double> betas) {
  return {alphas.size(), std::move(alphas), std::move(betas)};
}

// Every bijection π of the 2n nonzero points; the α points form a basis, so
// D is fixed by D e_k = q_{π(α_k)} / α_k and the β points must then agree.
std::size_t brute_force_admissible(const RigidCompactSpec& spec, double norm_bound) {
  const std::vector<Vector> pts = build_rigid_compact(spec);
  const std::size_t n = spec.n;
  std::vector<std::size_t> perm(2 * n);
  std::iota(perm.begin(), perm.end(), 1);
  std::size_t count = 0;
  do {
    Matrix d(static_cast<Index>(n), static_cast<Index>(n));
    for (std::size_t k = 0; k < n; ++k) d.col(static_cast<Index>(k)) = pts[perm[2 * k]] / spec.alphas[k];
    bool ok = true;
    for (std::size_t k = 0; k < n && ok; ++k) {
      const Vector image = d * pts[2 * k + 2];
      ok = (image - pts[perm[2 * k + 1]]).norm() <= 1e-10 * pts[perm[2 * k + 1]].norm();
    }
    if (ok && jacobi_norm(d) <= norm_bound) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

RigidCompactSpec random_spec(std::size_t n, std::mt19937_64& rng) {
  std::vector<double> ratios, alphas{1.0}, betas;
  for (std::size_t k = 0; k + 1 < n; ++k) ratios.push_back(uniform_real(0.01, 0.9, rng));
  std::sort(ratios.rbegin(), ratios.rend());
  for (double r : ratios) alphas.push_back(alphas.back() * r);
  for (std::size_t k = 0; k < n; ++k) betas.push_back(uniform_real(0.51, 0.99, rng));
  return spec_of(alphas, betas);
}

}  // namespace

TEST_CASE("construction") {
  const auto one = build_rigid_compact(spec_of({1}, {0.6}));
  REQUIRE(one.size() == 3);
  CHECK(one[0](0) == 0.0);
  CHECK(one[1](0) == 1.0);
  CHECK(one[2](0) == doctest::Approx(0.6));
  const auto two = build_rigid_compact(spec_of({1, 0.1}, {0.6, 0.7}));
  REQUIRE(two.size() == 5);
  CHECK(two[4](1) == doctest::Approx(0.07));
  CHECK(two[4](0) == 0.0);
}

TEST_CASE("invalid specs are refused with the violated condition") {
  CHECK_THROWS_WITH_AS(validate(spec_of({1, 0.1}, {0.6, 0.6})), doctest::Contains("distinct"), InputError);
  CHECK_THROWS_AS(validate(spec_of({1, 0.1}, {0.6, 1.0})), InputError);
  CHECK_THROWS_AS(validate(spec_of({1, 0.1}, {0.5, 0.7})), InputError);
  CHECK_THROWS_AS(validate(spec_of({1, -0.1}, {0.6, 0.7})), InputError);
  CHECK_THROWS_AS(validate(spec_of({1, 0.1, 0.05}, {0.6, 0.7, 0.8})), InputError);
  CHECK_THROWS_AS(validate({3, {1, 0.1}, {0.6, 0.7}}), InputError);
  CHECK_THROWS_AS(validate({0, {}, {}}), InputError);
  CHECK_THROWS_AS(build_rigid_compact(spec_of({1, 0.1}, {0.6, 0.6})), InputError);
  std::vector<double> a(8), b(8);
  for (std::size_t k = 0; k < 8; ++k) {
    a[k] = std::pow(10.0, -static_cast<double>(k * (k + 1)) / 2);
    b[k] = 0.55 + 0.05 * static_cast<double>(k);
  }
  CHECK_THROWS_WITH_AS(rigid_cover_search(spec_of(a, b), 10), doctest::Contains("7"), InputError);
}

TEST_CASE("n = 1 admits only the identity") {
  const CoverSearchReport r = rigid_cover_search(spec_of({1}, {0.6}), 10);
  CHECK(r.identity_only);
  CHECK(r.admissible_maps == 1);
  CHECK(r.ratio_threshold == 0.0);
}

TEST_CASE("search agrees with brute-force enumeration") {
  std::mt19937_64 rng(13);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const RigidCompactSpec spec = random_spec(n, rng);
      const CoverSearchReport r = rigid_cover_search(spec, 10);
      CHECK(r.admissible_maps == brute_force_admissible(spec, 10));
      CHECK(r.identity_only == (r.admissible_maps == 1));
      CHECK(r.max_norm_bound == doctest::Approx(1.0));
    }
}

TEST_CASE("identity edge graph is empty and degrees hold") {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 5; ++n) {
    const RigidCompactSpec spec = random_spec(n, rng);
    const EdgeGraph g = edge_graph(spec, Matrix::Identity(static_cast<Index>(n), static_cast<Index>(n)));
    CHECK(g.vertices.empty());
    CHECK(g.edges.empty());
    CHECK_FALSE(g.out_degree_min);
    const CoverSearchReport r = rigid_cover_search(spec, 10);
    CHECK(r.identity_only);
    CHECK(r.in_degree_max <= 1);
    if (r.out_degree_min) CHECK(*r.out_degree_min >= 2);
  }
}

TEST_CASE("edge graph of a coordinate swap") {
  // D swaps the α points of the two axes; the β points land off K and add
  // no edges.
  const RigidCompactSpec spec = spec_of({1, 0.1}, {0.6, 0.7});
  Matrix d(2, 2);
  d << 0, 10, 0.1, 0;
  const EdgeGraph g = edge_graph(spec, d);
  CHECK(g.vertices.size() == 2);
  REQUIRE(g.edges.size() == 2);
  CHECK(std::count(g.edges.begin(), g.edges.end(), std::pair<std::size_t, std::size_t>{1, 0}) == 1);
  CHECK(std::count(g.edges.begin(), g.edges.end(), std::pair<std::size_t, std::size_t>{0, 1}) == 1);
}

TEST_CASE("ratio threshold") {
  const CoverSearchReport r = rigid_cover_search(spec_of({1, 0.1, 0.001}, {0.6, 0.65, 0.8}), 10);
  CHECK(r.ratio_threshold == doctest::Approx(100.0 * 0.05));
  CHECK(r.nodes_visited > 0);
}
