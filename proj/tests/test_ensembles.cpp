#include <doctest.h>

#include <cmath>
#include <functional>

#include "quatwick/ensembles.hpp"
#include "quatwick/moments.hpp"

using namespace quatwick;

namespace {

struct Stat {
  double mean, se;
};

Stat sample_mean(std::size_t count, std::uint64_t seed, const std::function<double(Rng&)>& draw) {
  std::vector<double> v(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = sample_stream(seed, i);
    v[i] = draw(rng);
  }
  double s = 0;
  for (double x : v) s += x;
  const double mean = s / static_cast<double>(count);
  double ss = 0;
  for (double x : v) ss += (x - mean) * (x - mean);
  return {mean, std::sqrt(ss / static_cast<double>(count - 1) / static_cast<double>(count))};
}

void check_within(const Stat& s, double target) {
  CAPTURE(s.mean);
  CAPTURE(s.se);
  CHECK(std::abs(s.mean - target) <= 4 * s.se);
}

}  // namespace

TEST_SUITE("ensembles") {

TEST_CASE("samples are exactly self-adjoint") {
  Rng rng = sample_stream(1, 0);
  for (int t = 0; t < 50; ++t) {
    const auto z = sample_gse(5, rng);
    REQUIRE(z.is_self_adjoint());
    for (int i = 0; i < 5; ++i) REQUIRE(z(i, i).is_real());
    const auto w = sample_wishart_quat(3, 4, rng);
    REQUIRE(w.is_self_adjoint());
    for (int i = 0; i < 4; ++i) {
      REQUIRE(w(i, i).is_real());
      REQUIRE(w(i, i).x0 >= 0);
    }
    const auto g = sample_goe(5, rng);
    REQUIRE(g == g.transpose());
    const auto r = sample_wishart_real(2, 4, rng);
    REQUIRE(r == r.transpose());
    for (int i = 0; i < 4; ++i) REQUIRE(r(i, i) >= 0);
  }
}

TEST_CASE("adjoint and products") {
  QuatMatrix a(2, 3);
  a(0, 1) = RealQuat(1, 2, 3, 4);
  const auto b = a.adjoint();
  CHECK(b.rows() == 3);
  CHECK(b(1, 0) == RealQuat(1, -2, -3, -4));
  CHECK_THROWS_AS(a * a, std::invalid_argument);
  const auto id = QuatMatrix::identity(3);
  CHECK(re(id.trace()) == 3.0);
  const std::vector<QuatMatrix> ms{id};
  CHECK(mixed_trace_product(std::span<const QuatMatrix>(ms), {2}, {}) == 3.0);
}

TEST_CASE("entry variances") {
  check_within(sample_mean(100000, 11, [](Rng& r) { return norm_sq(sample_gse(2, r)(0, 1)); }), 4.0);
  check_within(sample_mean(100000, 12, [](Rng& r) {
                 const double d = sample_gse(2, r)(0, 0).x0;
                 return d * d;
               }), 2.0);
}

TEST_CASE("GOE moments") {
  check_within(sample_mean(100000, 13, [](Rng& r) {
                 const auto z = sample_goe(3, r);
                 return (z * z).trace();
               }), 12.0);
  check_within(sample_mean(100000, 14, [](Rng& r) { return sample_goe(3, r).trace(); }), 0.0);
}

TEST_CASE("Wishart first moments") {
  check_within(sample_mean(100000, 15, [](Rng& r) { return re(sample_wishart_quat(2, 3, r).trace()); }), 24.0);
  check_within(sample_mean(100000, 16, [](Rng& r) { return sample_wishart_real(2, 3, r).trace(); }), 6.0);
}

TEST_CASE("cyclic invariance and real traces of sampled blocks") {
  Rng rng = sample_stream(3, 0);
  for (int t = 0; t < 100; ++t) {
    const std::vector<QuatMatrix> ms{sample_gse(3, rng), sample_gse(3, rng)};
    const std::span<const QuatMatrix> view(ms);
    const double a = mixed_trace_product(view, {4}, {1, 2, 2, 1});
    const double b = mixed_trace_product(view, {4}, {2, 2, 1, 1});
    REQUIRE(std::abs(a - b) <= 1e-9 * (1 + std::abs(a)));
    const auto sq = ms[0] * ms[0];
    const RealQuat tr = sq.trace();
    const double scale = 1 + std::abs(tr.x0);
    REQUIRE(std::abs(tr.x1) <= 1e-9 * scale);
    REQUIRE(std::abs(tr.x2) <= 1e-9 * scale);
    REQUIRE(std::abs(tr.x3) <= 1e-9 * scale);
  }
}

TEST_CASE("Monte Carlo moments") {
  auto run = [](EnsembleKind kind, DegreeSeq deg, int n, std::vector<int> m, std::uint64_t seed) {
    EnsembleSpec spec;
    spec.kind = kind;
    spec.n = n;
    spec.m = std::move(m);
    spec.degrees = std::move(deg);
    return mc_moment(spec, 100000, seed);
  };
  auto within = [](const MCEstimate& e, double target) {
    CAPTURE(e.mean);
    CAPTURE(e.std_error);
    CHECK(std::abs(e.mean - target) <= 4 * e.std_error);
  };
  within(run(EnsembleKind::GSE, {2}, 2, {}, 1), 12.0);
  within(run(EnsembleKind::GSE, {2}, 3, {}, 7), 30.0);
  within(run(EnsembleKind::WishartQuat, {2}, 2, {2}, 2), 224.0);
  within(run(EnsembleKind::GSE, {3}, 3, {}, 3), 0.0);
  within(run(EnsembleKind::WishartReal, {2}, 3, {2}, 4), 2.0 * 3.0 * (2 + 3 + 1));
}

TEST_CASE("reproducibility") {
  EnsembleSpec spec;
  spec.kind = EnsembleKind::GSE;
  spec.n = 3;
  spec.degrees = {4};
  spec.colors = {1, 2, 1, 2};
  const auto a = mc_moment(spec, 2000, 42);
  const auto b = mc_moment(spec, 2000, 42);
  MCOptions threaded;
  threaded.threads = 3;
  const auto c = mc_moment(spec, 2000, 42, threaded);
  CHECK(a.mean == b.mean);
  CHECK(a.mean == c.mean);
  CHECK(a.std_error == c.std_error);
  CHECK(mc_moment(spec, 2000, 43).mean != a.mean);
  CHECK(a.to_json().at("count") == 2000);
}

TEST_CASE("EnsembleSpec validation") {
  EnsembleSpec spec;
  spec.kind = EnsembleKind::WishartQuat;
  spec.n = 2;
  spec.degrees = {1};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  spec.m = {2};
  CHECK_NOTHROW(spec.validate());
  CHECK_THROWS_AS(mc_moment(spec, 1, 0), std::invalid_argument);
  MCOptions tight;
  tight.max_work = 10;
  CHECK_THROWS_AS(mc_moment(spec, 100, 0, tight), ResourceLimitError);
  spec.colors = {3};
  spec.m = {1, 2};
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
  CHECK(parse_ensemble_kind("wishart-real") == EnsembleKind::WishartReal);
  CHECK_THROWS_AS(parse_ensemble_kind("gue"), std::invalid_argument);
}

}
