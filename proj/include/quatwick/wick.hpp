#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "quatwick/exact.hpp"
#include "quatwick/quaternion.hpp"

namespace quatwick {

enum class FactorKind : std::uint8_t {
  Quaternion,  ///< standard quaternion Gaussian, four unit-variance components
  Real,        ///< real centered Gaussian with a declared variance
  Constant,    ///< a fixed exact quaternion
};

/// One factor of a word. Variable factors with the same `var_id` denote the
/// same random variable; `payload` indexes the owning expression's constant
/// or variance table.
struct Factor {
  FactorKind kind = FactorKind::Quaternion;
  bool conjugated = false;
  std::uint32_t var_id = 0;
  std::uint32_t payload = 0;

  static Factor z(std::uint32_t id) { return {FactorKind::Quaternion, false, id, 0}; }
  static Factor zbar(std::uint32_t id) { return {FactorKind::Quaternion, true, id, 0}; }

  bool is_variable() const { return kind != FactorKind::Constant; }
};

using Word = std::vector<Factor>;

/// E( Re(w_1) Re(w_2) ... Re(w_m) ), or E(w_1) when flagged bare.
///
/// An expression with no words has value 1.
class MomentExpr {
 public:
  MomentExpr() = default;
  explicit MomentExpr(std::vector<Word> words, bool bare = false);

  /// Registers a constant and returns the factor that refers to it.
  Factor constant(ExactQuat value);
  /// Registers a real Gaussian variable of the given variance.
  Factor real_gaussian(std::uint32_t var_id, Rational variance);

  void add_word(Word w) { words_.push_back(std::move(w)); }
  void set_bare(bool bare) { bare_ = bare; }

  const std::vector<Word>& words() const { return words_; }
  std::vector<Word>& words() { return words_; }
  bool bare() const { return bare_; }

  const ExactQuat& constant_value(const Factor& f) const { return constants_.at(f.payload); }
  const Rational& variance(const Factor& f) const { return variances_.at(f.payload); }

  std::size_t position_count() const;
  std::size_t variable_count() const;
  /// Factor at a flat position (words concatenated in order).
  const Factor& at(std::size_t flat) const;
  /// Index of the word holding each flat position.
  std::vector<std::uint32_t> word_of_position() const;

  bool is_const_free() const;
  /// True when every factor is a quaternion-Gaussian variable.
  bool quaternion_only() const;

  /// Throws std::invalid_argument when one var_id is used with two kinds or
  /// two variances, or when a bare expression has more than one word.
  void validate() const;

 private:
  std::vector<Word> words_;
  std::vector<ExactQuat> constants_;
  std::vector<Rational> variances_;
  bool bare_ = false;
};

/// Human-readable form, e.g. "E(Re(Z1 Z1*) Re(Z2 Z2))".
std::string to_string(const MomentExpr& expr);

/// Perfect matching on the variable positions of an expression. Pairs are
/// stored (lower, upper) and sorted by the lower position.
struct WickPairing {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;

  friend bool operator==(const WickPairing&, const WickPairing&) = default;
};

enum class PairType { PlainPlain, PlainConj, ConjConj };

PairType pair_type(const MomentExpr& expr, std::pair<std::uint32_t, std::uint32_t> pair);

/// Calls `visit` for every perfect matching of the variable positions whose
/// pairs share var_id and kind. Lowest unpaired position is paired first, so
/// the order is deterministic.
void for_each_wick_pairing(const MomentExpr& expr,
                           const std::function<void(const WickPairing&)>& visit);

std::vector<WickPairing> enumerate_wick_pairings(const MomentExpr& expr);

/// Throws std::invalid_argument unless `pairing` is a perfect matching of
/// the variable positions with id- and kind-compatible pairs.
void validate_pairing(const MomentExpr& expr, const WickPairing& pairing);

struct IsserlisOptions {
  std::size_t max_positions = 12;
};

/// Brute-force contribution of one pairing: every quaternion factor is
/// expanded into its four real components, the pair shares a component, and
/// all basis products are multiplied out exactly.
ExactQuat isserlis_term(const MomentExpr& expr, const WickPairing& pairing);

/// Exact moment by the real Isserlis formula over component expansions.
/// Throws ResourceLimitError beyond `max_positions` variable positions.
ExactQuat isserlis_moment(const MomentExpr& expr, const IsserlisOptions& options = {});

/// Single-pairing value computed with the four quaternion Wick rewrite rules.
/// Requires a constant-free, quaternion-only expression.
Integer wick_reduce(const MomentExpr& expr, const WickPairing& pairing);

/// Sum over pairings: rewrite rules when the expression is constant-free and
/// quaternion-only, component expansion otherwise.
ExactQuat full_moment(const MomentExpr& expr, const IsserlisOptions& options = {});

}  // namespace quatwick
