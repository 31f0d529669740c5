#include <doctest.h>

#include <algorithm>
#include <set>

#include "quatwick/bipartite.hpp"
#include "quatwick/moments.hpp"

using namespace quatwick;

namespace {

GammaPairing gamma_of(std::vector<std::pair<int, int>> pairs) { return GammaPairing{std::move(pairs)}; }

}  // namespace

TEST_SUITE("bipartite") {

TEST_CASE("enumeration counts") {
  const auto one = enumerate_gamma({1});
  REQUIRE(one.size() == 1);
  CHECK(one[0].pairs == std::vector<std::pair<int, int>>{{-1, 1}});
  CHECK(enumerate_gamma({2}).size() == 3);
  CHECK(enumerate_gamma({1, 1}).size() == 3);
  const auto colored = enumerate_gamma({2}, ColorMap{1, 2});
  REQUIRE(colored.size() == 1);
  CHECK(colored[0].pairs == std::vector<std::pair<int, int>>{{-1, 1}, {-2, 2}});
  CHECK(enumerate_gamma({3}).size() == 15);
  CHECK(enumerate_gamma({2, 2}).size() == 105);
  CHECK_THROWS_AS(enumerate_gamma({7}), ResourceLimitError);
}

TEST_CASE("white vertices") {
  CHECK(white_count(gamma_of({{-1, 1}, {-2, 2}})).w == 2);
  CHECK(white_count(gamma_of({{-1, 2}, {-2, 1}})).w == 1);
  CHECK(white_count(gamma_of({{-1, 1}})).w == 1);
  const auto by_color = white_count(gamma_of({{-1, 1}, {-2, 2}}), ColorMap{1, 2});
  CHECK(by_color.by_color == std::vector<int>{1, 1});
}

TEST_CASE("statistics of small graphs") {
  auto check = [](WishartDegreeSeq deg, std::vector<std::pair<int, int>> pairs, int w, int f, int chi) {
    const auto g = bipartite_stats(deg, gamma_of(std::move(pairs)));
    CHECK(g.w == w);
    CHECK(g.f == f);
    CHECK(g.chi == chi);
  };
  check({1}, {{-1, 1}}, 1, 1, 2);
  check({2}, {{-1, 1}, {-2, 2}}, 2, 1, 2);
  check({2}, {{-1, 2}, {-2, 1}}, 1, 2, 2);
  check({2}, {{-1, -2}, {1, 2}}, 1, 1, 1);
  const auto two = bipartite_stats({1, 1}, gamma_of({{-1, 1}, {-2, 2}}));
  CHECK(two.chi == 4);
  CHECK(two.component_count == 2);
}

TEST_CASE("the census of n = 2") {
  std::multiset<int> chis;
  for (const auto& g : enumerate_gamma({2})) chis.insert(bipartite_stats({2}, g).chi);
  CHECK(chis == std::multiset<int>{1, 2, 2});
}

TEST_CASE("delta and sigma") {
  CHECK(delta_pairs(2) == std::vector<std::pair<int, int>>{{-1, 1}, {-2, 2}});
  // sigma closes each block into a cycle together with delta.
  const WishartDegreeSeq deg{2, 1};
  CHECK(cycle_count(delta_pairs(3), sigma_pairs(deg), 3) == 2);
  CHECK(cycle_count(delta_pairs(4), sigma_pairs({4}), 4) == 1);
}

TEST_CASE("invariants up to n = 5") {
  for (int n = 1; n <= 5; ++n) {
    for (const auto& deg : compositions(n)) {
      const int m = static_cast<int>(deg.size());
      std::size_t count = 0;
      for_each_gamma(deg, std::nullopt, [&](const GammaPairing& gamma) {
        ++count;
        const auto g = bipartite_stats(deg, gamma);
        REQUIRE(g.chi == m + g.w - n + g.f);
        REQUIRE(g.w >= 1);
        REQUIRE(g.w <= n);
        REQUIRE(g.f >= 1);
        REQUIRE(g.f <= n);
        REQUIRE(g.w == white_count(gamma).w);
      });
      std::size_t expect = 1;
      for (int k = 2 * n - 1; k > 1; k -= 2) expect *= static_cast<std::size_t>(k);
      REQUIRE(count == expect);
    }
  }
}

TEST_CASE("per-pairing weight of the Wishart word up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& deg : compositions(n)) {
      const long m = static_cast<long>(deg.size());
      for_each_gamma(deg, std::nullopt, [&](const GammaPairing& gamma) {
        const auto g = bipartite_stats(deg, gamma);
        const auto [expr, pairing] = wishart_word(deg, gamma);
        const Integer rules = wick_reduce(expr, pairing);
        const long two_power = 2 * (n - m) + g.chi;
        REQUIRE(two_power >= 0);
        Integer expect = Integer(1) << static_cast<unsigned>(two_power);
        if (g.chi % 2 != 0) expect = -expect;
        REQUIRE(rules == expect);
        REQUIRE(isserlis_term(expr, pairing) == ExactQuat(Rational(expect)));
      });
    }
  }
}

}
