#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "quatwick/moebius.hpp"
#include "quatwick/wick.hpp"

namespace quatwick {

/// Black-vertex degrees j_1..j_m of a Wishart trace product; n = sum of j.
using WishartDegreeSeq = std::vector<int>;

/// Pair partition on the signed slots {±1, ..., ±n}. Slot -k stands for
/// conj(X) in the k-th factor X* X of the trace word, slot +k for X.
struct GammaPairing {
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const GammaPairing&, const GammaPairing&) = default;
};

/// delta pairs k with -k.
std::vector<std::pair<int, int>> delta_pairs(int n);
/// sigma pairs k with -(k+1) inside each block, wrapping to the block start.
std::vector<std::pair<int, int>> sigma_pairs(const WishartDegreeSeq& deg);

/// Number of cycles of a 2-regular union of two perfect matchings on
/// {±1..±n}.
int cycle_count(const std::vector<std::pair<int, int>>& a,
                const std::vector<std::pair<int, int>>& b, int n);

struct WhiteCount {
  int w = 0;
  /// w_c for colors 1..s (empty when uncolored).
  std::vector<int> by_color;
};

/// Cycles of delta ∪ gamma; per-color counts use the edge color map
/// t: {1..n} -> {1..s}.
WhiteCount white_count(const GammaPairing& gamma,
                       const std::optional<ColorMap>& colors = std::nullopt);

struct BipartiteGraph {
  WishartDegreeSeq degrees;
  GammaPairing gamma;
  int m = 0;  ///< black vertices
  int n = 0;  ///< edges (ribbons)
  int w = 0;  ///< white vertices
  int f = 0;  ///< faces
  int chi = 0;
  int component_count = 0;
  std::vector<int> w_by_color;
};

/// Union-find statistics. Black vertex of degree j carries lowercase slots
/// a_1..a_j and uppercase slots A_1..A_j; slot -k reads entry (A_k, a_k),
/// slot +k reads (A_k, a_{k+1 mod j}). Each gamma pair joins the uppercase
/// slots and the matching lowercase ends; w counts uppercase classes, f
/// lowercase classes, and chi = m + w - n + f.
BipartiteGraph bipartite_stats(const WishartDegreeSeq& deg, const GammaPairing& gamma,
                               const std::optional<ColorMap>& colors = std::nullopt);

/// All perfect matchings of the 2n signed slots, color-constrained when a
/// color map on {1..n} is given. Order: lowest unpaired slot first, slots
/// ordered -1, +1, -2, +2, ...
void for_each_gamma(const WishartDegreeSeq& deg, const std::optional<ColorMap>& colors,
                    const std::function<void(const GammaPairing&)>& visit,
                    const EnumerationOptions& options = {6});

std::vector<GammaPairing> enumerate_gamma(const WishartDegreeSeq& deg,
                                          const std::optional<ColorMap>& colors = std::nullopt,
                                          const EnumerationOptions& options = {6});

/// The quaternion word E(prod_blocks Re(conj(X_-1) X_1 ... conj(X_-j) X_j))
/// whose variables are identified according to gamma, together with the
/// matching Wick pairing.
std::pair<MomentExpr, WickPairing> wishart_word(const WishartDegreeSeq& deg,
                                                const GammaPairing& gamma);

}  // namespace quatwick
