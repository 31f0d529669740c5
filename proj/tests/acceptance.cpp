// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "entrywise_oracle.hpp"
#include "quatwick/bipartite.hpp"
#include "quatwick/ensembles.hpp"
#include "quatwick/moebius.hpp"
#include "quatwick/moments.hpp"
#include "quatwick/selftest.hpp"
#include "quatwick/wick.hpp"

using namespace quatwick;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream timing;
  timing << s << " s";
  if (budget_s > 0 && s > budget_s) timing << ", over the " << budget_s << " s target";
  if (!o.pass) ++failures;
  std::printf("[%s] %d %s: %s (%s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(),
              timing.str().c_str());
  std::fflush(stdout);
}

MomentPoly monomials(std::size_t m_count, std::initializer_list<std::pair<MomentPoly::Exponents, int>> terms) {
  MomentPoly p(m_count);
  for (const auto& [e, c] : terms) p.add_term(e, c);
  return p;
}

}  // namespace

int main() {
  criterion(1, "Wishart reference values", 1.0, [] {
    const auto first = wishart_quat_poly({1});
    const auto second = wishart_quat_poly({2});
    const auto want1 = monomials(1, {{{1, 1}, 4}});
    const auto want2 = monomials(1, {{{1, 2}, 16}, {{1, 1}, -8}, {{2, 1}, 16}});
    Outcome o{first == want1 && second == want2, ""};
    o.detail = "E tr W = " + first.to_string() + "; E tr W^2 = " + second.to_string();
    return o;
  });

  criterion(2, "graph censuses", 1.0, [] {
    Outcome o;
    std::multiset<int> wigner;
    for (const auto& g : enumerate_graphs({2})) wigner.insert(analyze(g).chi);
    std::multiset<int> wishart;
    for (const auto& gamma : enumerate_gamma({2})) wishart.insert(bipartite_stats({2}, gamma).chi);
    o.pass = wigner == std::multiset<int>{1, 2} && wishart == std::multiset<int>{1, 2, 2};
    std::size_t sequences = 0;
    for (int total = 2; total <= 10; total += 2) {
      for (const auto& deg : compositions(total)) {
        ++sequences;
        Integer count = 0;
        for_each_graph(deg, std::nullopt, [&](const MoebiusGraph&) { ++count; });
        if (count != census_size(total)) {
          o.pass = false;
          o.detail += "census size mismatch; ";
        }
      }
    }
    o.detail += "deg (2): 2 graphs, chi {2,1}; n = 2: 3 graphs, chi {2,2,1}; " + std::to_string(sequences) +
                " degree sequences with (2n-1)!! 2^n graphs";
    return o;
  });

  criterion(3, "duality suite", 60.0, [] {
    Outcome o;
    std::ostringstream d;
    auto run = [&](DualityKind kind, int max, int colors, const char* label) {
      const auto r = duality_sweep(kind, max, colors);
      if (!r.passed()) o.pass = false;
      d << label << ' ' << r.cases << " cases, " << r.failures.size() << " failures; ";
    };
    run(DualityKind::Wigner, 10, 1, "wigner uncolored <= 10:");
    run(DualityKind::Wigner, 8, 2, "wigner 2-colored <= 8:");
    run(DualityKind::Wishart, 5, 1, "wishart uncolored <= 5:");
    run(DualityKind::Wishart, 4, 2, "wishart 2-colored <= 4:");
    o.detail = d.str();
    return o;
  });

  criterion(4, "oracle equivalence", 120.0, [] {
    const auto r = oracle_sweep({8, 3});
    std::ostringstream d;
    d << r.expressions << " expressions (" << r.vanishing_expressions << " without pairings), " << r.pairings
      << " pairings, " << r.distinct_pairings << " distinct pairing evaluations, " << r.direct_checks
      << " direct checks, " << r.failures << " failures";
    for (const auto& f : r.failure_samples) d << "; " << f;
    return Outcome{r.passed(), d.str()};
  });

  criterion(5, "entrywise oracle", 0.0, [] {
    const auto gse = oracle::wigner_entrywise_poly(EnsembleKind::GSE, {2}, {}, 5);
    const auto goe = oracle::wigner_entrywise_poly(EnsembleKind::GOE, {2}, {}, 5);
    const auto want_gse = monomials(0, {{{2}, 4}, {{1}, -2}});
    const auto want_goe = monomials(0, {{{2}, 1}, {{1}, 1}});
    const bool pass = gse == want_gse && goe == want_goe && gse == gse_moment_poly({2}) &&
                      goe == goe_moment_poly({2});
    return Outcome{pass, "GSE " + gse.to_string() + "; GOE " + goe.to_string() + " (interpolated from N = 1..5)"};
  });

  criterion(6, "Monte Carlo consistency", 60.0, [] {
    Outcome o;
    std::ostringstream d;
    const int n = 3, m = 4;
    auto run = [&](const char* label, EnsembleKind kind, DegreeSeq deg, ColorMap colors, std::uint64_t seed) {
      EnsembleSpec spec;
      spec.kind = kind;
      spec.n = n;
      if (is_wishart(kind)) spec.m = {m};
      spec.degrees = deg;
      spec.colors = colors;
      const std::optional<ColorMap> c = colors.empty() ? std::nullopt : std::optional<ColorMap>(colors);
      const MomentPoly p = is_wishart(kind) ? wishart_quat_poly(deg, c) : gse_moment_poly(deg, c);
      std::vector<double> ms(p.m_count(), static_cast<double>(m));
      const double exact = p.evaluate(static_cast<double>(n), ms);
      const MCEstimate est = mc_moment(spec, 100000, seed);
      const double z = (est.mean - exact) / est.std_error;
      if (!(std::abs(z) <= 4.0)) o.pass = false;
      d << label << " exact " << exact << " mc " << est.mean << " +- " << est.std_error << " (z " << z << "); ";
    };
    run("GSE tr Z^2:", EnsembleKind::GSE, {2}, {}, 1001);
    run("GSE tr Z^4:", EnsembleKind::GSE, {4}, {}, 1002);
    run("W tr W:", EnsembleKind::WishartQuat, {1}, {}, 1003);
    run("W tr W^2:", EnsembleKind::WishartQuat, {2}, {}, 1004);
    run("GSE tr Z1 Z2 Z1 Z2:", EnsembleKind::GSE, {4}, {1, 2, 1, 2}, 1005);
    o.detail = d.str();
    return o;
  });

  criterion(7, "known identities", 0.0, [] {
    Outcome o;
    const Factor Z = Factor::z(1);
    const MomentExpr z4({{Z, Z, Z, Z}}, true);
    const bool z4_zero = isserlis_moment(z4) == ExactQuat() && full_moment(z4) == ExactQuat() &&
                         word_moment_via_graphs(z4) == 0;
    bool dipoles = true;
    for (std::uint32_t k = 1; k <= 5; ++k) {
      MomentExpr e;
      for (std::uint32_t v = 1; v <= k; ++v) {
        e.add_word({Factor::z(v)});
        e.add_word({Factor::zbar(v)});
      }
      dipoles = dipoles && isserlis_moment(e) == ExactQuat(Rational(1)) && word_moment_via_graphs(e) == 1;
    }
    bool odd = true;
    std::size_t odd_cases = 0;
    for (int total = 1; total <= 9; total += 2) {
      for (const auto& deg : compositions(total)) {
        ++odd_cases;
        const auto w = wigner_moment_polys(deg);
        odd = odd && w.gse.is_zero() && w.goe.is_zero();
      }
    }
    o.pass = z4_zero && dipoles && odd;
    o.detail = std::string("E(Z^4) = 0: ") + (z4_zero ? "yes" : "no") + "; 1..5 dipoles give 1: " +
               (dipoles ? "yes" : "no") + "; " + std::to_string(odd_cases) + " odd-degree sequences give 0: " +
               (odd ? "yes" : "no");
    return o;
  });

  criterion(8, "face counter cross-check", 0.0, [] {
    Outcome o;
    std::uint64_t graphs = 0, mismatches = 0;
    for (int total = 2; total <= 10; total += 2) {
      for (const auto& deg : compositions(total)) {
        for_each_graph(deg, std::nullopt, [&](const MoebiusGraph& g) {
          ++graphs;
          if (face_count(g) != boundary_walk_faces(g)) ++mismatches;
        });
      }
    }
    o.pass = mismatches == 0;
    o.detail = std::to_string(graphs) + " graphs, " + std::to_string(mismatches) + " mismatches";
    return o;
  });

  std::printf("%s: %d of 8 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
