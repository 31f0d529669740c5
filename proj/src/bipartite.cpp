#include "quatwick/bipartite.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>

#include "quatwick/disjoint_sets.hpp"

namespace quatwick {

namespace {

// Slots are laid out -1, +1, -2, +2, ...
int slot_index(int s) { return 2 * (std::abs(s) - 1) + (s > 0 ? 1 : 0); }
int slot_of_index(int idx) { return (idx % 2 == 1 ? 1 : -1) * (idx / 2 + 1); }

int total_edges(const WishartDegreeSeq& deg) {
  return std::accumulate(deg.begin(), deg.end(), 0);
}

// For each edge k (1-based), the following edge in its black vertex's cycle.
std::vector<int> next_in_block(const WishartDegreeSeq& deg) {
  std::vector<int> next(1, 0);
  int offset = 0;
  for (int j : deg) {
    for (int k = 0; k < j; ++k) next.push_back(offset + (k + 1) % j + 1);
    offset += j;
  }
  return next;
}

std::vector<int> block_of_edge(const WishartDegreeSeq& deg) {
  std::vector<int> block(1, -1);
  for (int b = 0; b < static_cast<int>(deg.size()); ++b) block.insert(block.end(), deg[b], b);
  return block;
}

void validate_gamma(const GammaPairing& gamma, int n, const std::optional<ColorMap>& colors) {
  if (static_cast<int>(gamma.pairs.size()) != n)
    throw std::invalid_argument("gamma must pair all " + std::to_string(2 * n) + " slots");
  std::vector<char> used(static_cast<std::size_t>(2 * n), 0);
  for (const auto& [s, t] : gamma.pairs) {
    for (int x : {s, t}) {
      if (x == 0 || std::abs(x) > n) throw std::invalid_argument("gamma slot out of range");
      char& u = used[slot_index(x)];
      if (u) throw std::invalid_argument("gamma reuses a slot");
      u = 1;
    }
    if (colors && (*colors)[std::abs(s) - 1] != (*colors)[std::abs(t) - 1])
      throw std::invalid_argument("gamma pairs slots of different colors");
  }
}

}  // namespace

std::vector<std::pair<int, int>> delta_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int k = 1; k <= n; ++k) out.emplace_back(-k, k);
  return out;
}

std::vector<std::pair<int, int>> sigma_pairs(const WishartDegreeSeq& deg) {
  std::vector<std::pair<int, int>> out;
  const auto next = next_in_block(deg);
  for (int k = 1; k < static_cast<int>(next.size()); ++k) out.emplace_back(k, -next[k]);
  return out;
}

int cycle_count(const std::vector<std::pair<int, int>>& a,
                const std::vector<std::pair<int, int>>& b, int n) {
  DisjointSets ds(2 * n);
  for (const auto* matching : {&a, &b})
    for (const auto& [s, t] : *matching) ds.unite(slot_index(s), slot_index(t));
  return ds.classes();
}

WhiteCount white_count(const GammaPairing& gamma, const std::optional<ColorMap>& colors) {
  int n = 0;
  for (const auto& [s, t] : gamma.pairs) n = std::max({n, std::abs(s), std::abs(t)});
  if (colors) validate_colors(*colors, static_cast<std::size_t>(n));
  validate_gamma(gamma, n, colors);
  DisjointSets ds(n);
  for (const auto& [s, t] : gamma.pairs) ds.unite(std::abs(s) - 1, std::abs(t) - 1);
  WhiteCount out;
  out.w = ds.classes();
  const int s = colors ? *std::max_element(colors->begin(), colors->end()) : 1;
  out.by_color.assign(static_cast<std::size_t>(s), 0);
  for (int k = 0; k < n; ++k)
    if (ds.find(k) == k) out.by_color[colors ? (*colors)[k] - 1 : 0] += 1;
  return out;
}

BipartiteGraph bipartite_stats(const WishartDegreeSeq& deg, const GammaPairing& gamma,
                               const std::optional<ColorMap>& colors) {
  validate_degrees(deg);
  const int n = total_edges(deg);
  if (colors) validate_colors(*colors, static_cast<std::size_t>(n));
  validate_gamma(gamma, n, colors);
  const auto next = next_in_block(deg);
  const auto block = block_of_edge(deg);

  // Lowercase index read by a slot: -k reads a_k, +k reads a_{next(k)}.
  auto lower_end = [&](int s) { return (s < 0 ? -s : next[s]) - 1; };

  DisjointSets upper(n), lower(n), blacks(static_cast<int>(deg.size()));
  for (const auto& [s, t] : gamma.pairs) {
    upper.unite(std::abs(s) - 1, std::abs(t) - 1);
    lower.unite(lower_end(s), lower_end(t));
    blacks.unite(block[std::abs(s)], block[std::abs(t)]);
  }

  BipartiteGraph g;
  g.degrees = deg;
  g.gamma = gamma;
  g.m = static_cast<int>(deg.size());
  g.n = n;
  g.w = upper.classes();
  g.f = lower.classes();
  g.chi = g.m + g.w - g.n + g.f;
  g.component_count = blacks.classes();
  const int s = colors ? *std::max_element(colors->begin(), colors->end()) : 1;
  g.w_by_color.assign(static_cast<std::size_t>(s), 0);
  for (int k = 0; k < n; ++k)
    if (upper.find(k) == k) g.w_by_color[colors ? (*colors)[k] - 1 : 0] += 1;
  return g;
}

void for_each_gamma(const WishartDegreeSeq& deg, const std::optional<ColorMap>& colors,
                    const std::function<void(const GammaPairing&)>& visit,
                    const EnumerationOptions& options) {
  validate_degrees(deg);
  const int n = total_edges(deg);
  if (colors) validate_colors(*colors, static_cast<std::size_t>(n));
  if (n > options.max_size)
    throw ResourceLimitError("edge count " + std::to_string(n) + " exceeds bound " +
                             std::to_string(options.max_size));
  std::vector<char> used(static_cast<std::size_t>(2 * n), 0);
  GammaPairing current;
  current.pairs.reserve(static_cast<std::size_t>(n));
  auto color_of = [&](int idx) { return colors ? (*colors)[idx / 2] : 1; };
  std::function<void()> recurse = [&]() {
    const auto it = std::find(used.begin(), used.end(), 0);
    if (it == used.end()) {
      visit(current);
      return;
    }
    const int first = static_cast<int>(it - used.begin());
    used[first] = 1;
    for (int q = first + 1; q < 2 * n; ++q) {
      if (used[q] || color_of(q) != color_of(first)) continue;
      used[q] = 1;
      current.pairs.emplace_back(slot_of_index(first), slot_of_index(q));
      recurse();
      current.pairs.pop_back();
      used[q] = 0;
    }
    used[first] = 0;
  };
  recurse();
}

std::vector<GammaPairing> enumerate_gamma(const WishartDegreeSeq& deg,
                                          const std::optional<ColorMap>& colors,
                                          const EnumerationOptions& options) {
  std::vector<GammaPairing> out;
  for_each_gamma(deg, colors, [&](const GammaPairing& g) { out.push_back(g); }, options);
  return out;
}

std::pair<MomentExpr, WickPairing> wishart_word(const WishartDegreeSeq& deg,
                                                const GammaPairing& gamma) {
  validate_degrees(deg);
  const int n = total_edges(deg);
  validate_gamma(gamma, n, std::nullopt);
  std::vector<std::uint32_t> id_of_slot(static_cast<std::size_t>(2 * n), 0);
  WickPairing pairing;
  for (std::uint32_t p = 0; p < gamma.pairs.size(); ++p) {
    auto a = static_cast<std::uint32_t>(slot_index(gamma.pairs[p].first));
    auto b = static_cast<std::uint32_t>(slot_index(gamma.pairs[p].second));
    id_of_slot[a] = id_of_slot[b] = p + 1;
    pairing.pairs.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(pairing.pairs.begin(), pairing.pairs.end());
  // Flat position of slot s in the word equals slot_index(s).
  MomentExpr expr;
  int k = 1;
  for (int j : deg) {
    Word w;
    for (int r = 0; r < j; ++r, ++k) {
      w.push_back(Factor::zbar(id_of_slot[slot_index(-k)]));
      w.push_back(Factor::z(id_of_slot[slot_index(k)]));
    }
    expr.add_word(std::move(w));
  }
  return {std::move(expr), std::move(pairing)};
}

}  // namespace quatwick
