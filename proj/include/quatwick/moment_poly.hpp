#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "quatwick/exact.hpp"

namespace quatwick {

/// Polynomial with exact integer coefficients in N and M_1..M_s.
///
/// Exponent vectors are laid out [N, M_1, ..., M_s]. Zero coefficients are
/// never stored, so equality is coefficientwise. Polynomials with different
/// M counts compare as if the shorter were padded with zero exponents.
class MomentPoly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  explicit MomentPoly(std::size_t m_count = 0) : m_count_(m_count) {}

  static MomentPoly constant(const Integer& c, std::size_t m_count = 0);

  std::size_t m_count() const { return m_count_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exponents, Integer>& terms() const { return terms_; }

  /// Adds c * N^e[0] * prod M_c^e[c]; `e` must have 1 + m_count() entries.
  void add_term(const Exponents& e, const Integer& c);

  /// Same polynomial over more M variables.
  MomentPoly with_m_count(std::size_t m_count) const;

  MomentPoly& operator+=(const MomentPoly& other);
  MomentPoly operator-() const;
  friend MomentPoly operator+(MomentPoly a, const MomentPoly& b) { return a += b; }
  friend MomentPoly operator-(MomentPoly a, const MomentPoly& b) { return a += -b; }
  friend MomentPoly operator*(const MomentPoly& p, const Integer& s);

  /// Substitutes N -> a N and every M_c -> a M_c.
  MomentPoly scale_variables(const Integer& a) const;
  /// Divides every coefficient; throws std::domain_error unless exact.
  MomentPoly divide_exact(const Integer& d) const;

  Integer evaluate(const Integer& n, std::span<const Integer> m = {}) const;
  /// Floating evaluation for comparison against Monte Carlo means.
  double evaluate(double n, std::span<const double> m = {}) const;

  /// "16*M^2*N + 16*M*N^2 - 8*M*N"; a single M variable prints as M.
  std::string to_string() const;
  /// Same polynomial with M_c = lambda_c N substituted, e.g. "4*lambda*N^2".
  std::string to_lambda_string() const;

  /// [{"coeff": 16, "exponents": {"N": 1, "M_1": 2}}, ...]
  nlohmann::json to_json() const;
  static MomentPoly from_json(const nlohmann::json& j);

  friend bool operator==(const MomentPoly& a, const MomentPoly& b);
  friend bool operator!=(const MomentPoly& a, const MomentPoly& b) { return !(a == b); }

 private:
  std::size_t m_count_ = 0;
  std::map<Exponents, Integer> terms_;
};

}  // namespace quatwick
