#include "quatwick/moebius.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "quatwick/disjoint_sets.hpp"

namespace quatwick {

namespace {

struct HalfEdgeLayout {
  std::vector<int> vertex;  // owning vertex of each half-edge
  std::vector<int> next;    // next half-edge around the same vertex
  std::vector<int> prev;

  explicit HalfEdgeLayout(const DegreeSeq& degrees) {
    int offset = 0;
    for (int v = 0; v < static_cast<int>(degrees.size()); ++v) {
      const int j = degrees[v];
      for (int k = 0; k < j; ++k) {
        vertex.push_back(v);
        next.push_back(offset + (k + 1) % j);
        prev.push_back(offset + (k + j - 1) % j);
      }
      offset += j;
    }
  }
};

DisjointSets slot_classes(const MoebiusGraph& g, const HalfEdgeLayout& layout) {
  DisjointSets ds(g.half_edge_count());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [p, q] = g.edges[e];
    // row(h) is slot h itself, col(h) is the slot of the following half-edge.
    if (g.twisted[e]) {
      ds.unite(p, q);
      ds.unite(layout.next[p], layout.next[q]);
    } else {
      ds.unite(p, layout.next[q]);
      ds.unite(layout.next[p], q);
    }
  }
  return ds;
}

}  // namespace

void validate_degrees(const DegreeSeq& deg) {
  for (int j : deg)
    if (j < 1) throw std::invalid_argument("vertex degrees must be at least 1");
}

void validate_colors(const ColorMap& colors, std::size_t expected_length) {
  if (colors.size() != expected_length)
    throw std::invalid_argument("color map has length " + std::to_string(colors.size()) +
                                ", expected " + std::to_string(expected_length));
  for (int c : colors)
    if (c < 1) throw std::invalid_argument("colors are numbered from 1");
}

FaceCount faces(const MoebiusGraph& g) {
  const HalfEdgeLayout layout(g.degrees);
  DisjointSets ds = slot_classes(g, layout);
  FaceCount out;
  out.f = ds.classes();
  out.classes.count = ds.classes();
  out.classes.label = ds.labels();
  return out;
}

int face_count(const MoebiusGraph& g) {
  const HalfEdgeLayout layout(g.degrees);
  return slot_classes(g, layout).classes();
}

int boundary_walk_faces(const MoebiusGraph& g) {
  const int h = g.half_edge_count();
  const HalfEdgeLayout layout(g.degrees);
  std::vector<int> partner(static_cast<std::size_t>(h), -1);
  std::vector<std::uint8_t> twist(static_cast<std::size_t>(h), 0);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto [p, q] = g.edges[e];
    partner[p] = q;
    partner[q] = p;
    twist[p] = twist[q] = g.twisted[e];
  }
  // A flag (h, side) leaves a vertex along half-edge h on its left (0) or
  // right (1) side. Crossing an untwisted ribbon swaps the side; a twisted
  // one keeps it. Arriving on the right side we turn to the next half-edge
  // at that vertex and leave on its left; arriving on the left we turn back.
  auto step = [&](int flag) {
    const int he = flag >> 1;
    const int side = flag & 1;
    const int q = partner[he];
    const int arrive = twist[he] ? side : 1 - side;
    return arrive == 1 ? (layout.next[q] << 1) : ((layout.prev[q] << 1) | 1);
  };
  std::vector<char> seen(static_cast<std::size_t>(2 * h), 0);
  int orbits = 0;
  for (int start = 0; start < 2 * h; ++start) {
    if (seen[start]) continue;
    ++orbits;
    for (int f = start; !seen[f]; f = step(f)) seen[f] = 1;
  }
  // Each boundary curve is traced once in each direction.
  if (orbits % 2 != 0) throw std::logic_error("boundary walk produced an odd orbit count");
  return orbits / 2;
}

std::vector<std::vector<int>> components(const MoebiusGraph& g) {
  const HalfEdgeLayout layout(g.degrees);
  DisjointSets ds(g.vertex_count());
  for (const auto& [p, q] : g.edges) ds.unite(layout.vertex[p], layout.vertex[q]);
  const auto labels = ds.labels();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(ds.classes()));
  for (int v = 0; v < g.vertex_count(); ++v) out[labels[v]].push_back(v);
  return out;
}

GraphStats analyze(const MoebiusGraph& g) {
  const HalfEdgeLayout layout(g.degrees);
  DisjointSets slots = slot_classes(g, layout);
  GraphStats s;
  s.v = g.vertex_count();
  s.e = g.edge_count();
  s.f = slots.classes();
  s.chi = s.v - s.e + s.f;

  DisjointSets verts(g.vertex_count());
  for (const auto& [p, q] : g.edges) verts.unite(layout.vertex[p], layout.vertex[q]);
  const auto comp = verts.labels();
  s.component_count = verts.classes();
  s.component_chi.assign(static_cast<std::size_t>(s.component_count), 0);
  for (int v = 0; v < s.v; ++v) s.component_chi[comp[v]] += 1;
  for (const auto& [p, q] : g.edges) s.component_chi[comp[layout.vertex[p]]] -= 1;
  std::vector<char> root_seen(static_cast<std::size_t>(g.half_edge_count()), 0);
  for (int h = 0; h < g.half_edge_count(); ++h) {
    const int r = slots.find(h);
    if (root_seen[r]) continue;
    root_seen[r] = 1;
    s.component_chi[comp[layout.vertex[h]]] += 1;
  }
  return s;
}

namespace {

struct GraphEnumerator {
  const std::optional<ColorMap>& colors;
  const std::function<void(const MoebiusGraph&)>& visit;
  MoebiusGraph graph;
  std::vector<char> used;

  void recurse() {
    const auto it = std::find(used.begin(), used.end(), 0);
    if (it == used.end()) {
      emit();
      return;
    }
    const int first = static_cast<int>(it - used.begin());
    used[first] = 1;
    for (int q = first + 1; q < static_cast<int>(used.size()); ++q) {
      if (used[q]) continue;
      if (colors && (*colors)[first] != (*colors)[q]) continue;
      used[q] = 1;
      graph.edges.emplace_back(first, q);
      recurse();
      graph.edges.pop_back();
      used[q] = 0;
    }
    used[first] = 0;
  }

  void emit() {
    const std::size_t n = graph.edges.size();
    graph.twisted.assign(n, 0);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      for (std::size_t e = 0; e < n; ++e) graph.twisted[e] = (mask >> e) & 1U;
      visit(graph);
    }
  }
};

}  // namespace

void for_each_graph(const DegreeSeq& deg, const std::optional<ColorMap>& colors,
                    const std::function<void(const MoebiusGraph&)>& visit,
                    const EnumerationOptions& options) {
  validate_degrees(deg);
  const int total = std::accumulate(deg.begin(), deg.end(), 0);
  if (colors) validate_colors(*colors, static_cast<std::size_t>(total));
  if (total > options.max_size)
    throw ResourceLimitError("total degree " + std::to_string(total) + " exceeds bound " +
                             std::to_string(options.max_size));
  if (total % 2 != 0) return;
  GraphEnumerator en{colors, visit, {}, std::vector<char>(static_cast<std::size_t>(total), 0)};
  en.graph.degrees = deg;
  en.graph.edges.reserve(static_cast<std::size_t>(total / 2));
  en.recurse();
}

std::vector<MoebiusGraph> enumerate_graphs(const DegreeSeq& deg,
                                           const std::optional<ColorMap>& colors,
                                           const EnumerationOptions& options) {
  std::vector<MoebiusGraph> out;
  for_each_graph(deg, colors, [&](const MoebiusGraph& g) { out.push_back(g); }, options);
  return out;
}

Integer census_size(int total_degree) {
  if (total_degree < 0 || total_degree % 2 != 0) return 0;
  const int n = total_degree / 2;
  Integer count = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) count *= k;
  return count * ipow(2, static_cast<unsigned>(n));
}

MoebiusGraph graphs_from_words(const MomentExpr& expr, const WickPairing& pairing) {
  if (!expr.is_const_free() || !expr.quaternion_only())
    throw std::invalid_argument("graphs_from_words requires a constant-free quaternion-only expression");
  validate_pairing(expr, pairing);
  MoebiusGraph g;
  for (const auto& w : expr.words())
    if (!w.empty()) g.degrees.push_back(static_cast<int>(w.size()));
  g.edges.reserve(pairing.pairs.size());
  for (auto [a, b] : pairing.pairs) {
    if (a > b) std::swap(a, b);
    g.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.twisted.reserve(g.edges.size());
  for (const auto& [a, b] : g.edges)
    g.twisted.push_back(expr.at(a).conjugated == expr.at(b).conjugated ? 1 : 0);
  return g;
}

}  // namespace quatwick
