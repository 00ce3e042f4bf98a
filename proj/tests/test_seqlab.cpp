#include "widthlab/seqlab.hpp"
#include "widthlab/spectra.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>

using namespace widthlab::seqlab;
using widthlab::InputError;
using widthlab::Matrix;

namespace {

using M = SequenceModel;

std::size_t parse_error_position(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return std::string::npos;
}

}  // namespace

TEST_CASE("sampling closed forms") {
  auto close = [](const std::vector<double>& got, const std::vector<double>& want) {
    if (got.size() != want.size()) return false;
    for (std::size_t i = 0; i < got.size(); ++i)
      if (std::abs(got[i] - want[i]) > 1e-15 * want[i]) return false;
    return true;
  };
  CHECK(close(sample(M::geometric(0.5), 4), {1, 0.5, 0.25, 0.125}));
  CHECK(close(sample(M::super_geometric(2), 3), {1, 0.5, 1.0 / 16}));
  CHECK(close(sample(M::shifted(1, M::geometric(0.5)), 3), {0.5, 0.25, 0.125}));
  const auto p = sample(M::power(2), 3);
  CHECK(p[2] == doctest::Approx(1.0 / 9));
  const auto sc = sample(M::scaled(3, M::geometric(0.5)), 2);
  CHECK(sc[1] == doctest::Approx(1.5));
}

TEST_CASE("sampling refusals") {
  CHECK_THROWS_AS(sample(M::samples({1, 0.5}), 3), InputError);
  CHECK(available_terms(M::samples({1, 0.5}), 10) == 2);
  CHECK(available_terms(M::shifted(1, M::samples({1, 0.5})), 10) == 1);
  // 2^{-n^2} falls below 1e-300 at n = 32.
  CHECK(available_terms(M::super_geometric(2), 100) == 32);
  CHECK_THROWS_AS(sample(M::super_geometric(2), 33), InputError);
  CHECK_THROWS_AS(M::geometric(1.0), InputError);
  CHECK_THROWS_AS(M::power(0.0), InputError);
  CHECK_THROWS_AS(M::super_geometric(1.0), InputError);
  CHECK_THROWS_AS(M::samples({1, 2}), InputError);
  CHECK_THROWS_AS(M::samples({}), InputError);
  CHECK_THROWS_AS(M::scaled(-1, M::geometric(0.5)), InputError);
}

TEST_CASE("lacunarity") {
  const LacunarityVerdict g = is_lacunary(M::geometric(0.5));
  CHECK_FALSE(g.lacunary);
  CHECK(g.exact);
  CHECK(g.witness_ratio == doctest::Approx(0.5));
  const LacunarityVerdict s = is_lacunary(M::super_geometric(2));
  CHECK(s.lacunary);
  CHECK(s.exact);
  CHECK(s.witness_ratio == 0.0);
  CHECK_FALSE(is_lacunary(M::power(3)).lacunary);
  CHECK(is_lacunary(M::shifted(4, M::scaled(7, M::super_geometric(3)))).lacunary);

  const LacunarityVerdict d = is_lacunary(M::samples({1, 0.5, 1e-5, 5e-6}), 1e-3);
  CHECK(d.lacunary);
  CHECK_FALSE(d.exact);
  CHECK(d.witness_ratio == doctest::Approx(2e-5));
  CHECK_FALSE(is_lacunary(M::samples({1, 0.5, 0.25})).lacunary);
}

TEST_CASE("majorization examples") {
  const MajorizationVerdict a = majorizes(M::geometric(0.5), M::geometric(0.25));
  CHECK(a.holds);
  CHECK(a.exact);
  CHECK(*a.constant == doctest::Approx(1.0));
  CHECK_FALSE(majorizes(M::geometric(0.25), M::geometric(0.5)).holds);
  const M sg = M::super_geometric(2);
  const MajorizationVerdict b = majorizes(sg, M::shifted(1, sg));
  CHECK(b.holds);
  CHECK(*b.constant <= 1.0 + 1e-12);

  CHECK(strictly_majorizes(M::geometric(0.5), M::geometric(0.25)).holds);
  CHECK_FALSE(strictly_majorizes(M::geometric(0.5), M::geometric(0.5)).holds);
  CHECK(strictly_majorizes(M::power(1), M::power(2)).holds);
  CHECK_FALSE(strictly_majorizes(M::power(2), M::power(1)).holds);
  CHECK(majorizes(M::power(1), M::scaled(5, M::power(1))).holds);
  CHECK(*majorizes(M::power(1), M::scaled(5, M::power(1))).constant == doctest::Approx(5));
  // pow against geom: any power majorizes any geometric sequence, never conversely.
  CHECK(strictly_majorizes(M::power(4), M::geometric(0.9)).holds);
  CHECK_FALSE(majorizes(M::geometric(0.9), M::power(4)).holds);
}

TEST_CASE("exact constant agrees with a brute-force supremum") {
  // sup_n b_n / a_n over the first few hundred terms, where the parametric
  // ratio has already settled.
  const std::vector<std::pair<M, M>> pairs = {
      {M::power(1), M::scaled(2, M::power(1.5))},
      {M::shifted(3, M::power(2)), M::power(2)},
      {M::shifted(2, M::scaled(4, M::power(0.5))), M::geometric(0.7)},
      {M::power(0.5), M::scaled(3, M::geometric(0.8))},
      {M::super_geometric(1.5), M::shifted(1, M::super_geometric(1.5))},
      {M::super_geometric(2), M::super_geometric(3)},
  };
  for (const auto& [a, b] : pairs) {
    const MajorizationVerdict v = majorizes(a, b);
    REQUIRE(v.holds);
    const std::size_t n = std::min<std::size_t>({400, available_terms(a, 400), available_terms(b, 400)});
    const auto sa = sample(a, n);
    const auto sb = sample(b, n);
    double sup = 0.0;
    for (std::size_t i = 0; i < n; ++i) sup = std::max(sup, sb[i] / sa[i]);
    INFO(a.to_string(), " vs ", b.to_string());
    CHECK(*v.constant == doctest::Approx(sup).epsilon(1e-9));
  }
}

TEST_CASE("shift classification") {
  const M sg = M::super_geometric(2);
  const ShiftClassification a = max_majorizing_shift(sg, M::shifted(1, sg), 5);
  REQUIRE(a.k);
  CHECK(*a.k == 1);
  const ShiftClassification b = max_majorizing_shift(M::geometric(0.5), M::geometric(0.5), 5);
  CHECK_FALSE(b.k);
  CHECK(b.exhausted_at == 5);
  const ShiftClassification c = max_majorizing_shift(sg, sg, 5);
  REQUIRE(c.k);
  CHECK(*c.k == 0);
  CHECK_THROWS_WITH_AS(max_majorizing_shift(M::geometric(0.25), M::geometric(0.5), 5),
                       doctest::Contains("not even k=0"), InputError);
  const ShiftClassification d = max_strictly_majorizing_shift(sg, M::shifted(1, sg), 5);
  REQUIRE(d.k);
  CHECK(*d.k == 0);
}

TEST_CASE("all-shifts decisions") {
  CHECK(*all_shifts_majorize(M::geometric(0.5), M::geometric(0.5)));
  CHECK(*all_shifts_majorize(M::power(1), M::power(1)));
  CHECK_FALSE(*all_shifts_majorize(M::super_geometric(2), M::super_geometric(2)));
  CHECK(*all_shifts_strictly_majorize(M::geometric(0.5), M::geometric(0.25)));
  CHECK(*all_shifts_strictly_majorize(M::power(1), M::power(2)));
  CHECK(*all_shifts_majorize(M::super_geometric(2), M::super_geometric(3)));
  CHECK_FALSE(all_shifts_majorize(M::samples({1, 0.5}), M::geometric(0.5)).has_value());
}

TEST_CASE("shift monotonicity: majorization by shift(k+1) implies by shift(k)") {
  const std::vector<M> family = {M::geometric(0.5), M::geometric(0.2), M::power(1), M::power(3),
                                 M::super_geometric(2), M::super_geometric(1.3)};
  for (const M& a : family)
    for (const M& b : family)
      for (std::size_t k = 0; k < 6; ++k)
        if (majorizes(M::shifted(k + 1, a), b).holds) CHECK(majorizes(M::shifted(k, a), b).holds);
}

TEST_CASE("scaling invariance of the verdicts") {
  const std::vector<M> family = {M::geometric(0.5), M::power(2), M::super_geometric(2)};
  for (const M& a : family)
    for (const M& b : family) {
      const M a2 = M::scaled(1e-3, a);
      const M b2 = M::scaled(250, b);
      CHECK(majorizes(a, b).holds == majorizes(a2, b2).holds);
      CHECK(strictly_majorizes(a, b).holds == strictly_majorizes(a2, b2).holds);
      CHECK(is_lacunary(a).lacunary == is_lacunary(a2).lacunary);
    }
}

TEST_CASE("equivalence") {
  CHECK(equivalent(M::geometric(0.5), M::scaled(3, M::geometric(0.5))));
  CHECK_FALSE(equivalent(M::geometric(0.5), M::geometric(0.25)));
  CHECK(equivalent(M::geometric(0.5), M::shifted(4, M::geometric(0.5))));
  CHECK_FALSE(equivalent(M::super_geometric(2), M::shifted(1, M::super_geometric(2))));

  // Small rank-one perturbations keep the spectra equivalent.
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = testing_support::gaussian(8, 8, rng);
    const Matrix p = 1e-6 * testing_support::gaussian(8, 1, rng) * testing_support::gaussian(1, 8, rng);
    const auto sa = widthlab::spectra::singular_spectrum(a).values;
    const auto sb = widthlab::spectra::singular_spectrum(a + p).values;
    CHECK(equivalent(M::samples(sa), M::samples(sb)));
  }
}

TEST_CASE("windowed surrogates on samples") {
  const M a = M::samples({1, 0.5, 0.25, 0.125});
  CHECK(majorizes(a, M::samples({2, 1, 0.5, 0.25})).holds);
  // Growth by a factor 8 over four terms stays within the 1/τ allowance.
  CHECK(majorizes(a, M::samples({1, 1, 1, 1})).holds);
  CHECK_FALSE(majorizes(M::samples({1, 1e-4, 1e-8}), M::samples({1, 1, 1})).holds);
  CHECK_FALSE(majorizes(a, a).exact);
  CHECK(strictly_majorizes(M::samples({1, 1, 1, 1}), M::samples({1, 1e-2, 1e-4, 1e-6})).holds);
  CHECK_FALSE(strictly_majorizes(a, a).holds);
}

TEST_CASE("model grammar") {
  CHECK(parse_model("geom(0.5)") == M::geometric(0.5));
  CHECK(parse_model("  shift( 1 , supergeom(2) ) ") == M::shifted(1, M::super_geometric(2)));
  CHECK(parse_model("scale(3, pow(1.5))") == M::scaled(3, M::power(1.5)));
  CHECK(parse_model("samples(1, 0.5, 1e-3)") == M::samples({1, 0.5, 1e-3}));
  for (const std::string text : {"geom(0.1)", "shift(3, scale(2.5, pow(0.75)))", "samples(1, 0.33333333333333331)",
                                  "supergeom(1.0000001)"}) {
    const M m = parse_model(text);
    CHECK(parse_model(m.to_string()) == m);
  }
  CHECK(parse_error_position("geom(0.5") == 8);
  CHECK(parse_error_position("gem(0.5)") == 0);
  CHECK(parse_error_position("geom(x)") == 5);
  CHECK(parse_error_position("geom(2)") == 5);
  CHECK(parse_error_position("geom(0.5) junk") == 10);
  CHECK(parse_error_position("shift(-1, geom(0.5))") == 6);
}

TEST_CASE("spectrum() loads a matrix file") {
  const auto path = std::filesystem::temp_directory_path() / "widthlab_seqlab_spectrum.mat";
  Matrix a = Matrix::Zero(3, 3);
  a(0, 0) = 4;
  a(1, 1) = 2;
  widthlab::write_matrix_file(path, a);
  const M m = parse_model("spectrum(" + path.string() + ")");
  CHECK(m == M::samples({4, 2}));
  std::filesystem::remove(path);
  CHECK_THROWS_AS(parse_model("spectrum(/nonexistent/x.mat)"), InputError);
}
