#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quatwick/bipartite.hpp"
#include "quatwick/moebius.hpp"
#include "quatwick/moment_poly.hpp"
#include "quatwick/wick.hpp"

namespace quatwick {

/// GSE and GOE polynomials from one Möbius census.
///
///   GSE: sum over graphs of 4^(n-m) (-2)^chi N^f
///   GOE: sum over graphs of N^f
///
/// with n = (sum of j) / 2 edges and m vertices. Odd total degree gives
/// the zero polynomial.
struct WignerPolys {
  MomentPoly gse;
  MomentPoly goe;
};

WignerPolys wigner_moment_polys(const DegreeSeq& deg, const std::optional<ColorMap>& colors = std::nullopt,
                                const EnumerationOptions& options = {});
MomentPoly gse_moment_poly(const DegreeSeq& deg, const std::optional<ColorMap>& colors = std::nullopt,
                           const EnumerationOptions& options = {});
MomentPoly goe_moment_poly(const DegreeSeq& deg, const std::optional<ColorMap>& colors = std::nullopt,
                           const EnumerationOptions& options = {});

/// Quaternionic and real Wishart polynomials from one bipartite census.
///
///   quaternionic: sum of 4^(n-m) (-2)^chi prod_c M_c^(w_c) N^f
///   real:         sum of prod_c M_c^(w_c) N^f
struct WishartPolys {
  MomentPoly quaternionic;
  MomentPoly real;
};

WishartPolys wishart_moment_polys(const WishartDegreeSeq& deg,
                                  const std::optional<ColorMap>& colors = std::nullopt,
                                  const EnumerationOptions& options = {6});
MomentPoly wishart_quat_poly(const WishartDegreeSeq& deg,
                             const std::optional<ColorMap>& colors = std::nullopt,
                             const EnumerationOptions& options = {6});
MomentPoly wishart_real_poly(const WishartDegreeSeq& deg,
                             const std::optional<ColorMap>& colors = std::nullopt,
                             const EnumerationOptions& options = {6});

/// 4^(n-m) (-2)^chi for the Möbius graph of one pairing of a word moment.
Integer pairing_weight_via_graph(const MomentExpr& expr, const WickPairing& pairing);

/// Word moment as 4^(n-m) times the sum of (-2)^chi over the graphs of all
/// compatible pairings (0 when there are none).
Integer word_moment_via_graphs(const MomentExpr& expr);

/// N -> -2N, M_c -> -2 M_c, then multiply by (-2)^(n-m).
MomentPoly dual_transform(const MomentPoly& p, long n, long m);

enum class DualityKind { Wigner, Wishart };

struct DualityReport {
  DualityKind kind = DualityKind::Wigner;
  DegreeSeq degrees;
  std::optional<ColorMap> colors;
  MomentPoly quaternionic;
  MomentPoly real;
  MomentPoly dual_of_real;
  bool passed = false;

  nlohmann::json to_json() const;
};

DualityReport duality_check(const DegreeSeq& deg, const std::optional<ColorMap>& colors,
                            DualityKind kind);

struct DualitySweepReport {
  DualityKind kind = DualityKind::Wigner;
  int max_size = 0;
  int color_count = 1;
  std::size_t cases = 0;
  std::vector<DualityReport> failures;

  bool passed() const { return failures.empty(); }
  nlohmann::json to_json() const;
};

/// Every composition with total <= max_size (total degree for Wigner, edge
/// count for Wishart). With color_count > 1, every map onto {1..color_count}
/// of the half-edges (Wigner) or edges (Wishart) is checked as well.
DualitySweepReport duality_sweep(DualityKind kind, int max_size, int color_count = 1);

/// Ordered sequences of positive integers summing to `total`, lexicographic.
std::vector<DegreeSeq> compositions(int total);

/// All maps {1..length} -> {1..color_count}, first position varying slowest.
std::vector<ColorMap> all_colorings(int length, int color_count);

std::string to_string(DualityKind kind);

}  // namespace quatwick
