#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "quatwick/wick.hpp"

namespace quatwick {

/// Vertex degrees j_1..j_m, each >= 1.
using DegreeSeq = std::vector<int>;
/// Color of each half-edge (or Wishart edge), values 1..s.
using ColorMap = std::vector<int>;

/// Labeled Möbius graph: vertex v owns the consecutive half-edges
/// [offset(v), offset(v) + degrees[v]) in its cyclic order, and every edge
/// joins two half-edges and may carry a twist.
struct MoebiusGraph {
  DegreeSeq degrees;
  /// Edges (p, q) with p < q, sorted by p.
  std::vector<std::pair<int, int>> edges;
  std::vector<std::uint8_t> twisted;

  int vertex_count() const { return static_cast<int>(degrees.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
  int half_edge_count() const { return 2 * edge_count(); }
};

/// Partition of the index slots (one per half-edge) into equivalence classes.
struct IndexClasses {
  std::vector<int> label;
  int count = 0;
};

struct FaceCount {
  int f = 0;
  IndexClasses classes;
};

/// Union-find face count. Half-edge k at a vertex of degree j carries
/// (row, col) = (a_k, a_{k+1 mod j}); an untwisted edge identifies
/// row_p ~ col_q and col_p ~ row_q, a twisted one row_p ~ row_q and
/// col_p ~ col_q. The faces are the resulting slot classes.
FaceCount faces(const MoebiusGraph& g);
int face_count(const MoebiusGraph& g);

/// Independent face count by tracing ribbon boundaries side by side.
int boundary_walk_faces(const MoebiusGraph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const MoebiusGraph& g);

struct GraphStats {
  int v = 0, e = 0, f = 0, chi = 0;
  int component_count = 0;
  std::vector<int> component_chi;
};

GraphStats analyze(const MoebiusGraph& g);

struct EnumerationOptions {
  /// Largest accepted total degree (Wigner) or edge count (Wishart).
  int max_size = 12;
};

/// Visits every perfect matching of the half-edges (lexicographic order)
/// times every twist assignment (binary counter, bit e = edge e). The graph
/// passed to `visit` is reused between calls. With colors, only matchings
/// that join half-edges of equal color are produced. Odd total degree yields
/// nothing.
void for_each_graph(const DegreeSeq& deg, const std::optional<ColorMap>& colors,
                    const std::function<void(const MoebiusGraph&)>& visit,
                    const EnumerationOptions& options = {});

std::vector<MoebiusGraph> enumerate_graphs(const DegreeSeq& deg,
                                           const std::optional<ColorMap>& colors = std::nullopt,
                                           const EnumerationOptions& options = {});

/// (2n-1)!! * 2^n, the uncolored census size for total degree 2n.
Integer census_size(int total_degree);

/// Graph of a pairing of word factors: words become vertices, the pairing
/// becomes the edge set, and an edge is twisted iff both factors carry the
/// same conjugation flag. Empty words are dropped (they contribute 1).
MoebiusGraph graphs_from_words(const MomentExpr& expr, const WickPairing& pairing);

/// Shared validation for degree sequences and color maps.
void validate_degrees(const DegreeSeq& deg);
void validate_colors(const ColorMap& colors, std::size_t expected_length);

}  // namespace quatwick
