#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "rhythmform/error.h"
#include "rhythmform/heterogeneity.h"
#include "support/oracles.h"

using namespace rhythmform;

namespace {

/// Entropy with patterns keyed by their pairwise sign matrix and N_D taken
/// from brute-force enumeration.
double signMatrixEntropy(const std::vector<Tick>& x, int dim, int stride, double log_nd) {
  std::map<std::vector<int>, int> counts;
  int total = 0;
  for (std::size_t s = 0; s + dim <= x.size(); s += stride) {
    std::vector<int> key;
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) key.push_back((x[s + i] > x[s + j]) - (x[s + i] < x[s + j]));
    ++counts[key];
    ++total;
  }
  double h = 0;
  for (const auto& [key, c] : counts) {
    const double p = static_cast<double>(c) / total;
    h -= p * std::log(p);
  }
  return h / log_nd;
}

}  // namespace

TEST_CASE("pattern counts match brute-force enumeration of weak orderings") {
  CHECK(countPatterns(2) == 3);
  CHECK(countPatterns(3) == 13);
  CHECK(countPatterns(4) == 75);
  for (int d = 2; d <= 5; ++d) CHECK(countPatterns(d) == testing::enumerateWeakOrderings(d));
  CHECK(countPatterns(6) == 4683);
  CHECK(countPatterns(7) == 47293);
  CHECK(countPatterns(8) == 545835);
  CHECK_THROWS_AS(countPatterns(1), Error);
  CHECK_THROWS_AS(countPatterns(9), Error);
}

TEST_CASE("ordinal pattern uses dense ranks") {
  const std::vector<Tick> a{3, 1, 3};
  CHECK(ordinalPattern(a).ranks == std::vector<std::uint8_t>{1, 0, 1});
  const std::vector<Tick> b{5, 5, 5};
  CHECK(ordinalPattern(b).ranks == std::vector<std::uint8_t>{0, 0, 0});
  const std::vector<Tick> c{120, 720, 240};
  CHECK(ordinalPattern(c).ranks == std::vector<std::uint8_t>{0, 2, 1});
}

TEST_CASE("example rhythm 2,2,1,1,2 with D=2") {
  const std::vector<Tick> x{2, 2, 1, 1, 2};
  const auto dist = patternDistribution(x, 2);
  REQUIRE(dist);
  CHECK(dist->total == 4);
  REQUIRE(dist->counts.size() == 3);
  CHECK(dist->counts.at(OrdinalPattern{{0, 0}}) == 2);
  CHECK(dist->counts.at(OrdinalPattern{{1, 0}}) == 1);
  CHECK(dist->counts.at(OrdinalPattern{{0, 1}}) == 1);
  // (0.5 ln 2 + 0.5 ln 4) / ln 3
  CHECK(permutationEntropy(*dist) == doctest::Approx(1.5 * std::log(2.0) / std::log(3.0)).epsilon(1e-12));
  CHECK(permutationEntropy(*dist) == doctest::Approx(0.94639).epsilon(1e-5));
}

TEST_CASE("constant series has zero heterogeneity") {
  const std::vector<Tick> x(40, 480);
  for (int d = 2; d <= 5; ++d) CHECK(*heterogeneity(x, d) == 0.0);
}

TEST_CASE("alternating series has two equiprobable patterns") {
  std::vector<Tick> x;
  for (int i = 0; i < 41; ++i) x.push_back(i % 2 ? 240 : 480);
  // 39 windows: 20 of one parity and 19 of the other.
  const double p = 20.0 / 39.0, q = 19.0 / 39.0;
  CHECK(*heterogeneity(x, 3) == doctest::Approx(-(p * std::log(p) + q * std::log(q)) / std::log(13.0)));
}

TEST_CASE("too-short series yields no value") {
  const std::vector<Tick> x{1, 2};
  CHECK_FALSE(heterogeneity(x, 3).has_value());
  CHECK(heterogeneity(x, 2).has_value());
  CHECK_FALSE(patternDistribution(std::vector<Tick>{}, 2).has_value());
}

TEST_CASE("stride skips windows") {
  const std::vector<Tick> x{1, 2, 3, 3, 2, 1, 2};
  const auto d1 = patternDistribution(x, 3, 1);
  const auto d3 = patternDistribution(x, 3, 3);
  CHECK(d1->total == 5);
  CHECK(d3->total == 2);
  CHECK(d3->counts.at(OrdinalPattern{{0, 1, 2}}) == 1);
  CHECK(d3->counts.at(OrdinalPattern{{2, 1, 0}}) == 1);
  CHECK_THROWS_AS(patternDistribution(x, 3, 0), Error);
}

TEST_CASE("property: matches the sign-matrix oracle and stays in [0, 1]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = std::uniform_int_distribution<int>(2, 5)(rng);
    const int stride = std::uniform_int_distribution<int>(1, dim)(rng);
    const int alphabet = std::uniform_int_distribution<int>(1, 6)(rng);
    std::vector<Tick> x(std::uniform_int_distribution<int>(dim, 80)(rng));
    for (auto& v : x) v = 120 * std::uniform_int_distribution<int>(1, alphabet)(rng);
    const auto h = heterogeneity(x, dim, stride);
    REQUIRE(h);
    REQUIRE(*h >= 0.0);
    REQUIRE(*h <= 1.0);
    const double log_nd = std::log(static_cast<double>(testing::enumerateWeakOrderings(dim)));
    REQUIRE(*h == doctest::Approx(signMatrixEntropy(x, dim, stride, log_nd)).epsilon(1e-12));
  }
}

TEST_CASE("property: invariant under positive scaling and order-preserving maps") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Tick> x(30);
    for (auto& v : x) v = std::uniform_int_distribution<Tick>(1, 8)(rng);
    std::vector<Tick> scaled, squared;
    for (Tick v : x) {
      scaled.push_back(v * 7);
      squared.push_back(v * v + 3);
    }
    REQUIRE(*heterogeneity(x, 3) == *heterogeneity(scaled, 3));
    REQUIRE(*heterogeneity(x, 4) == *heterogeneity(squared, 4));
  }
}
