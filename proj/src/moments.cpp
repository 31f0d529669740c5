#include "quatwick/moments.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace quatwick {

namespace {

// 4^(n-m) (-2)^chi, where 2(n-m) + chi is nonnegative for every graph.
Integer quaternion_weight(long n, long m, long chi) {
  const long two_power = 2 * (n - m) + chi;
  if (two_power < 0) throw std::logic_error("negative power of two in graph weight");
  Integer w = ipow(2, static_cast<unsigned>(two_power));
  return (chi % 2 != 0) ? Integer(-w) : w;
}

std::size_t color_count(const std::optional<ColorMap>& colors) {
  if (!colors || colors->empty()) return 1;
  return static_cast<std::size_t>(*std::max_element(colors->begin(), colors->end()));
}

}  // namespace

WignerPolys wigner_moment_polys(const DegreeSeq& deg, const std::optional<ColorMap>& colors,
                                const EnumerationOptions& options) {
  const long total = std::accumulate(deg.begin(), deg.end(), 0L);
  WignerPolys out;
  // graphs_by_faces[f] = number of census graphs with f faces.
  std::vector<std::int64_t> graphs_by_faces(static_cast<std::size_t>(total + 2), 0);
  for_each_graph(deg, colors,
                 [&](const MoebiusGraph& g) { ++graphs_by_faces[face_count(g)]; }, options);
  if (total % 2 != 0) return out;
  const long n = total / 2;
  const long m = static_cast<long>(deg.size());
  for (long f = 0; f < static_cast<long>(graphs_by_faces.size()); ++f) {
    const std::int64_t count = graphs_by_faces[f];
    if (count == 0) continue;
    const long chi = m - n + f;
    out.goe.add_term({static_cast<std::uint32_t>(f)}, Integer(count));
    out.gse.add_term({static_cast<std::uint32_t>(f)}, Integer(count) * quaternion_weight(n, m, chi));
  }
  return out;
}

MomentPoly gse_moment_poly(const DegreeSeq& deg, const std::optional<ColorMap>& colors,
                           const EnumerationOptions& options) {
  return wigner_moment_polys(deg, colors, options).gse;
}

MomentPoly goe_moment_poly(const DegreeSeq& deg, const std::optional<ColorMap>& colors,
                           const EnumerationOptions& options) {
  return wigner_moment_polys(deg, colors, options).goe;
}

WishartPolys wishart_moment_polys(const WishartDegreeSeq& deg, const std::optional<ColorMap>& colors,
                                  const EnumerationOptions& options) {
  const std::size_t s = color_count(colors);
  const long n = std::accumulate(deg.begin(), deg.end(), 0L);
  const long m = static_cast<long>(deg.size());
  // Key: [f, w_1, ..., w_s] -> (graph count, sum of (-2)^chi 4^(n-m)).
  std::map<MomentPoly::Exponents, std::int64_t> counts;
  for_each_gamma(deg, colors, [&](const GammaPairing& gamma) {
    const BipartiteGraph g = bipartite_stats(deg, gamma, colors);
    MomentPoly::Exponents key(1 + s, 0);
    key[0] = static_cast<std::uint32_t>(g.f);
    for (std::size_t c = 0; c < s; ++c) key[1 + c] = static_cast<std::uint32_t>(g.w_by_color[c]);
    ++counts[key];
  }, options);
  WishartPolys out{MomentPoly(s), MomentPoly(s)};
  for (const auto& [key, count] : counts) {
    long w = 0;
    for (std::size_t c = 1; c < key.size(); ++c) w += key[c];
    const long chi = m + w - n + static_cast<long>(key[0]);
    out.real.add_term(key, Integer(count));
    out.quaternionic.add_term(key, Integer(count) * quaternion_weight(n, m, chi));
  }
  return out;
}

MomentPoly wishart_quat_poly(const WishartDegreeSeq& deg, const std::optional<ColorMap>& colors,
                             const EnumerationOptions& options) {
  return wishart_moment_polys(deg, colors, options).quaternionic;
}

MomentPoly wishart_real_poly(const WishartDegreeSeq& deg, const std::optional<ColorMap>& colors,
                             const EnumerationOptions& options) {
  return wishart_moment_polys(deg, colors, options).real;
}

Integer pairing_weight_via_graph(const MomentExpr& expr, const WickPairing& pairing) {
  const MoebiusGraph g = graphs_from_words(expr, pairing);
  const long n = g.edge_count();
  const long m = g.vertex_count();
  const long chi = m - n + face_count(g);
  return quaternion_weight(n, m, chi);
}

Integer word_moment_via_graphs(const MomentExpr& expr) {
  expr.validate();
  Integer total = 0;
  for_each_wick_pairing(expr, [&](const WickPairing& p) { total += pairing_weight_via_graph(expr, p); });
  return total;
}

MomentPoly dual_transform(const MomentPoly& p, long n, long m) {
  const MomentPoly scaled = p.scale_variables(-2);
  const long k = n - m;
  if (k >= 0) return scaled * ipow(-2, static_cast<unsigned>(k));
  return scaled.divide_exact(ipow(-2, static_cast<unsigned>(-k)));
}

std::string to_string(DualityKind kind) {
  return kind == DualityKind::Wigner ? "wigner" : "wishart";
}

DualityReport duality_check(const DegreeSeq& deg, const std::optional<ColorMap>& colors,
                            DualityKind kind) {
  DualityReport r;
  r.kind = kind;
  r.degrees = deg;
  r.colors = colors;
  const long total = std::accumulate(deg.begin(), deg.end(), 0L);
  const long m = static_cast<long>(deg.size());
  long n = 0;
  if (kind == DualityKind::Wigner) {
    auto polys = wigner_moment_polys(deg, colors);
    r.quaternionic = std::move(polys.gse);
    r.real = std::move(polys.goe);
    n = total / 2;
  } else {
    auto polys = wishart_moment_polys(deg, colors);
    r.quaternionic = std::move(polys.quaternionic);
    r.real = std::move(polys.real);
    n = total;
  }
  if (r.real.is_zero()) {
    r.dual_of_real = r.real;
  } else {
    r.dual_of_real = dual_transform(r.real, n, m);
  }
  r.passed = r.quaternionic == r.dual_of_real;
  return r;
}

nlohmann::json DualityReport::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  j["degrees"] = degrees;
  j["colors"] = colors ? nlohmann::json(*colors) : nlohmann::json(nullptr);
  j["quaternionic"] = quaternionic.to_string();
  j["real"] = real.to_string();
  j["dual_of_real"] = dual_of_real.to_string();
  j["pass"] = passed;
  return j;
}

nlohmann::json DualitySweepReport::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  j["max"] = max_size;
  j["colors"] = color_count;
  j["cases"] = cases;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : failures) j["failures"].push_back(f.to_json());
  j["pass"] = passed();
  return j;
}

std::vector<DegreeSeq> compositions(int total) {
  std::vector<DegreeSeq> out;
  if (total <= 0) return out;
  DegreeSeq current;
  std::function<void(int)> build = [&](int remaining) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    for (int j = 1; j <= remaining; ++j) {
      current.push_back(j);
      build(remaining - j);
      current.pop_back();
    }
  };
  build(total);
  return out;
}

std::vector<ColorMap> all_colorings(int length, int color_count) {
  std::vector<ColorMap> out;
  ColorMap t(static_cast<std::size_t>(length), 1);
  while (true) {
    out.push_back(t);
    int k = length - 1;
    while (k >= 0 && t[k] == color_count) t[k--] = 1;
    if (k < 0) break;
    ++t[k];
  }
  return out;
}

DualitySweepReport duality_sweep(DualityKind kind, int max_size, int color_count) {
  DualitySweepReport report;
  report.kind = kind;
  report.max_size = max_size;
  report.color_count = color_count;
  for (int total = 1; total <= max_size; ++total) {
    for (const auto& deg : compositions(total)) {
      if (color_count <= 1) {
        ++report.cases;
        auto r = duality_check(deg, std::nullopt, kind);
        if (!r.passed) report.failures.push_back(std::move(r));
        continue;
      }
      for (const auto& t : all_colorings(total, color_count)) {
        ++report.cases;
        auto r = duality_check(deg, t, kind);
        if (!r.passed) report.failures.push_back(std::move(r));
      }
    }
  }
  return report;
}

}  // namespace quatwick
