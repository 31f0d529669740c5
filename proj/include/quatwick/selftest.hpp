#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace quatwick {

struct OracleSweepOptions {
  int max_positions = 8;
  int max_ids = 3;
  /// Every expression up to this size also goes through isserlis_moment,
  /// full_moment and word_moment_via_graphs directly; larger ones every
  /// `direct_stride`-th expression.
  int direct_positions = 6;
  std::uint64_t direct_stride = 61;
};

/// Result of the exhaustive constant-free sweep. Every expression is a
/// sequence of nonempty Re-blocks; variable ids are taken up to relabeling
/// (restricted growth strings), with every conjugation pattern and every
/// split of the positions into consecutive blocks.
struct OracleSweepReport {
  OracleSweepOptions options;
  std::uint64_t expressions = 0;
  /// Expressions with an odd occurrence count; no pairing exists for them.
  std::uint64_t vanishing_expressions = 0;
  std::uint64_t pairings = 0;
  /// (conjugation pattern, block split, matching) triples evaluated.
  std::uint64_t distinct_pairings = 0;
  std::uint64_t direct_checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> failure_samples;
  double seconds = 0;

  bool passed() const { return failures == 0; }
  nlohmann::json to_json() const;
};

/// For each pairing checks
///   isserlis_term = wick_reduce = 4^(n-m) (-2)^chi of its graph,
/// and for each expression that the sums over its pairings agree and are
/// real. A pairing's values depend only on the conjugation flags, the block
/// split and the matched positions, so they are computed once per triple on
/// an expression with one variable per pair.
OracleSweepReport oracle_sweep(const OracleSweepOptions& options = {});

}  // namespace quatwick
