#include "quatwick/wick.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include <boost/container/small_vector.hpp>

namespace quatwick {

MomentExpr::MomentExpr(std::vector<Word> words, bool bare)
    : words_(std::move(words)), bare_(bare) {}

Factor MomentExpr::constant(ExactQuat value) {
  constants_.push_back(std::move(value));
  return {FactorKind::Constant, false, 0, static_cast<std::uint32_t>(constants_.size() - 1)};
}

Factor MomentExpr::real_gaussian(std::uint32_t var_id, Rational variance) {
  if (variance <= 0) throw std::invalid_argument("real Gaussian variance must be positive");
  variances_.push_back(std::move(variance));
  return {FactorKind::Real, false, var_id, static_cast<std::uint32_t>(variances_.size() - 1)};
}

std::size_t MomentExpr::position_count() const {
  std::size_t n = 0;
  for (const auto& w : words_) n += w.size();
  return n;
}

std::size_t MomentExpr::variable_count() const {
  std::size_t n = 0;
  for (const auto& w : words_)
    for (const auto& f : w) n += f.is_variable() ? 1 : 0;
  return n;
}

const Factor& MomentExpr::at(std::size_t flat) const {
  for (const auto& w : words_) {
    if (flat < w.size()) return w[flat];
    flat -= w.size();
  }
  throw std::out_of_range("flat position out of range");
}

std::vector<std::uint32_t> MomentExpr::word_of_position() const {
  std::vector<std::uint32_t> out;
  out.reserve(position_count());
  for (std::uint32_t w = 0; w < words_.size(); ++w) out.insert(out.end(), words_[w].size(), w);
  return out;
}

bool MomentExpr::is_const_free() const {
  for (const auto& w : words_)
    for (const auto& f : w)
      if (f.kind == FactorKind::Constant) return false;
  return true;
}

bool MomentExpr::quaternion_only() const {
  for (const auto& w : words_)
    for (const auto& f : w)
      if (f.kind != FactorKind::Quaternion) return false;
  return true;
}

void MomentExpr::validate() const {
  if (bare_ && words_.size() > 1)
    throw std::invalid_argument("a bare expression holds a single word");
  std::map<std::uint32_t, const Factor*> seen;
  for (const auto& w : words_) {
    for (const auto& f : w) {
      if (f.kind == FactorKind::Constant) {
        if (f.payload >= constants_.size()) throw std::invalid_argument("dangling constant factor");
        continue;
      }
      if (f.kind == FactorKind::Real && f.payload >= variances_.size())
        throw std::invalid_argument("dangling real Gaussian factor");
      auto [it, inserted] = seen.emplace(f.var_id, &f);
      if (inserted) continue;
      const Factor& g = *it->second;
      if (g.kind != f.kind)
        throw std::invalid_argument("variable " + std::to_string(f.var_id) +
                                    " used with two different kinds");
      if (f.kind == FactorKind::Real && variance(f) != variance(g))
        throw std::invalid_argument("variable " + std::to_string(f.var_id) +
                                    " declared with two variances");
    }
  }
}

std::string to_string(const MomentExpr& expr) {
  std::ostringstream os;
  os << "E(";
  bool first_word = true;
  for (const auto& w : expr.words()) {
    if (!first_word) os << ' ';
    first_word = false;
    if (!expr.bare()) os << "Re(";
    bool first = true;
    for (const auto& f : w) {
      if (!first) os << ' ';
      first = false;
      switch (f.kind) {
        case FactorKind::Quaternion: os << 'Z' << f.var_id << (f.conjugated ? "*" : ""); break;
        case FactorKind::Real: os << 'X' << f.var_id; break;
        case FactorKind::Constant: os << "q" << to_string(expr.constant_value(f)); break;
      }
    }
    if (!expr.bare()) os << ')';
  }
  os << ')';
  return os.str();
}

PairType pair_type(const MomentExpr& expr, std::pair<std::uint32_t, std::uint32_t> pair) {
  const bool a = expr.at(pair.first).conjugated;
  const bool b = expr.at(pair.second).conjugated;
  if (a != b) return PairType::PlainConj;
  return a ? PairType::ConjConj : PairType::PlainPlain;
}

namespace {

std::vector<Factor> flatten(const MomentExpr& expr) {
  std::vector<Factor> flat;
  flat.reserve(expr.position_count());
  for (const auto& w : expr.words()) flat.insert(flat.end(), w.begin(), w.end());
  return flat;
}

bool compatible(const Factor& a, const Factor& b) {
  return a.is_variable() && b.is_variable() && a.var_id == b.var_id && a.kind == b.kind;
}

void pair_recursive(const std::vector<Factor>& flat, std::vector<char>& used, std::size_t from,
                    WickPairing& current,
                    const std::function<void(const WickPairing&)>& visit) {
  std::size_t first = from;
  while (first < flat.size() && (used[first] || !flat[first].is_variable())) ++first;
  if (first == flat.size()) {
    visit(current);
    return;
  }
  used[first] = 1;
  for (std::size_t partner = first + 1; partner < flat.size(); ++partner) {
    if (used[partner] || !compatible(flat[first], flat[partner])) continue;
    used[partner] = 1;
    current.pairs.emplace_back(static_cast<std::uint32_t>(first), static_cast<std::uint32_t>(partner));
    pair_recursive(flat, used, first + 1, current, visit);
    current.pairs.pop_back();
    used[partner] = 0;
  }
  used[first] = 0;
}

void require_bound(const MomentExpr& expr, std::size_t max_positions) {
  const std::size_t n = expr.variable_count();
  if (n > max_positions)
    throw ResourceLimitError("expression has " + std::to_string(n) +
                             " variable positions; bound is " + std::to_string(max_positions));
}

// --- Unit quaternions with sign (the group Q8), coded as unit | sign << 2. ---

struct UnitTable {
  std::array<std::array<std::uint8_t, 8>, 8> mul{};

  UnitTable() {
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        Quat<int> qa = Quat<int>::unit(a & 3);
        Quat<int> qb = Quat<int>::unit(b & 3);
        if (a & 4) qa = -qa;
        if (b & 4) qb = -qb;
        const Quat<int> p = qa * qb;
        for (int c = 0; c < 4; ++c) {
          if (p[c] != 0) mul[a][b] = static_cast<std::uint8_t>(c | (p[c] < 0 ? 4 : 0));
        }
      }
    }
  }
};

const UnitTable& units() {
  static const UnitTable table;
  return table;
}

// Signed basis unit of component c of a (possibly conjugated) quaternion Gaussian.
constexpr std::uint8_t component_code(int c, bool conjugated) {
  return static_cast<std::uint8_t>(c | ((conjugated && c != 0) ? 4 : 0));
}

// Component expansion restricted to constant-free quaternion-only
// expressions: every summand is a signed basis unit, accumulated in int64.
// Positions are visited in order; a pair's component is chosen at its first
// position, and a Re-block whose product is not real ends the branch.
class UnitExpansion {
 public:
  UnitExpansion(const MomentExpr& expr, const WickPairing& pairing) : bare_(expr.bare()) {
    std::size_t acc = 0;
    for (const auto& w : expr.words()) {
      for (const auto& f : w) conj_.push_back(f.conjugated);
      block_end_.push_back(acc += w.size());
    }
    partner_.assign(conj_.size(), 0);
    for (const auto& [a, b] : pairing.pairs) {
      partner_[a] = static_cast<std::uint32_t>(b);
      partner_[b] = static_cast<std::uint32_t>(a);
    }
    comp_.assign(conj_.size(), 0);
  }

  Quat<std::int64_t> run() {
    total_ = {};
    visit(0, 0, 0, 1);
    return total_;
  }

 private:
  void visit(std::size_t p, std::size_t block, std::uint8_t prod, int sign) {
    while (block < block_end_.size() && p == block_end_[block]) {
      if (!bare_) {
        if ((prod & 3) != 0) return;
        if (prod & 4) sign = -sign;
        prod = 0;
      }
      ++block;
    }
    if (p == conj_.size()) {
      if (bare_) total_[prod & 3] += (prod & 4) ? -1 : 1;
      else total_.x0 += sign;
      return;
    }
    const auto& mul = units().mul;
    const std::uint32_t q = partner_[p];
    if (q < p) {
      visit(p + 1, block, mul[prod][component_code(comp_[q], conj_[p])], sign);
      return;
    }
    for (int c = 0; c < 4; ++c) {
      comp_[p] = static_cast<std::uint8_t>(c);
      visit(p + 1, block, mul[prod][component_code(c, conj_[p])], sign);
    }
  }

  bool bare_;
  boost::container::small_vector<char, 16> conj_;
  boost::container::small_vector<std::size_t, 8> block_end_;
  boost::container::small_vector<std::uint32_t, 16> partner_;
  boost::container::small_vector<std::uint8_t, 16> comp_;
  Quat<std::int64_t> total_;
};

Quat<std::int64_t> isserlis_term_units(const MomentExpr& expr, const WickPairing& pairing) {
  return UnitExpansion(expr, pairing).run();
}

ExactQuat isserlis_term_general(const MomentExpr& expr, const WickPairing& pairing) {
  const auto flat = flatten(expr);
  const std::size_t n = flat.size();
  constexpr std::uint32_t kNoPair = ~std::uint32_t{0};
  std::vector<std::uint32_t> pair_of(n, kNoPair);
  // Only quaternion pairs carry a free component index; real pairs contribute
  // their variance once.
  std::vector<std::uint32_t> quat_pairs;
  Rational weight = 1;
  for (std::uint32_t k = 0; k < pairing.pairs.size(); ++k) {
    const auto [a, b] = pairing.pairs[k];
    if (flat[a].kind == FactorKind::Real) {
      weight *= expr.variance(flat[a]);
      continue;
    }
    pair_of[a] = pair_of[b] = static_cast<std::uint32_t>(quat_pairs.size());
    quat_pairs.push_back(k);
  }
  std::vector<std::size_t> block_end;
  {
    std::size_t acc = 0;
    for (const auto& w : expr.words()) block_end.push_back(acc += w.size());
  }
  auto coefficient = [&](std::size_t p, const std::vector<int>& comp) -> ExactQuat {
    const Factor& f = flat[p];
    switch (f.kind) {
      case FactorKind::Constant: return expr.constant_value(f);
      case FactorKind::Real: return ExactQuat(Rational(1));
      case FactorKind::Quaternion: {
        const int c = comp[pair_of[p]];
        ExactQuat u = ExactQuat::unit(c);
        return (f.conjugated && c != 0) ? -u : u;
      }
    }
    return {};
  };
  std::vector<int> comp(quat_pairs.size(), 0);
  ExactQuat total;
  while (true) {
    if (expr.bare()) {
      ExactQuat prod(Rational(1));
      for (std::size_t p = 0; p < n; ++p) prod = prod * coefficient(p, comp);
      total += prod;
    } else {
      Rational value = 1;
      std::size_t p = 0;
      for (std::size_t b = 0; b < block_end.size() && value != 0; ++b) {
        ExactQuat prod(Rational(1));
        for (; p < block_end[b]; ++p) prod = prod * coefficient(p, comp);
        value *= prod.x0;
      }
      total.x0 += value;
    }
    std::size_t k = 0;
    while (k < comp.size() && ++comp[k] == 4) comp[k++] = 0;
    if (k == comp.size()) break;
  }
  return total * weight;
}

// --- Rewrite-rule reduction. ---

struct Token {
  std::uint16_t pair;
  bool conj;
};
using Block = boost::container::small_vector<Token, 16>;

Block reverse_conjugate(Block::const_iterator first, Block::const_iterator last) {
  Block out(first, last);
  std::reverse(out.begin(), out.end());
  for (auto& t : out) t.conj = !t.conj;
  return out;
}

}  // namespace

void for_each_wick_pairing(const MomentExpr& expr,
                           const std::function<void(const WickPairing&)>& visit) {
  const auto flat = flatten(expr);
  std::map<std::uint32_t, int> counts;
  for (const auto& f : flat)
    if (f.is_variable()) ++counts[f.var_id];
  for (const auto& [id, count] : counts)
    if (count % 2 != 0) return;
  std::vector<char> used(flat.size(), 0);
  WickPairing current;
  current.pairs.reserve(flat.size() / 2);
  pair_recursive(flat, used, 0, current, visit);
}

std::vector<WickPairing> enumerate_wick_pairings(const MomentExpr& expr) {
  std::vector<WickPairing> out;
  for_each_wick_pairing(expr, [&](const WickPairing& p) { out.push_back(p); });
  return out;
}

void validate_pairing(const MomentExpr& expr, const WickPairing& pairing) {
  const auto flat = flatten(expr);
  std::vector<char> used(flat.size(), 0);
  for (const auto& [a, b] : pairing.pairs) {
    if (a >= flat.size() || b >= flat.size() || a == b)
      throw std::invalid_argument("pairing refers to an invalid position");
    if (used[a] || used[b]) throw std::invalid_argument("pairing reuses a position");
    used[a] = used[b] = 1;
    if (!compatible(flat[a], flat[b]))
      throw std::invalid_argument("paired positions " + std::to_string(a) + " and " +
                                  std::to_string(b) + " are not the same variable");
  }
  for (std::size_t p = 0; p < flat.size(); ++p)
    if (flat[p].is_variable() && !used[p])
      throw std::invalid_argument("position " + std::to_string(p) + " is left unpaired");
}

ExactQuat isserlis_term(const MomentExpr& expr, const WickPairing& pairing) {
  validate_pairing(expr, pairing);
  if (expr.is_const_free() && expr.quaternion_only()) {
    const auto t = isserlis_term_units(expr, pairing);
    return ExactQuat(Rational(t.x0), Rational(t.x1), Rational(t.x2), Rational(t.x3));
  }
  return isserlis_term_general(expr, pairing);
}

ExactQuat isserlis_moment(const MomentExpr& expr, const IsserlisOptions& options) {
  expr.validate();
  require_bound(expr, options.max_positions);
  if (expr.is_const_free() && expr.quaternion_only()) {
    Quat<std::int64_t> total;
    for_each_wick_pairing(expr, [&](const WickPairing& p) { total += isserlis_term_units(expr, p); });
    return ExactQuat(Rational(total.x0), Rational(total.x1), Rational(total.x2), Rational(total.x3));
  }
  ExactQuat total;
  for_each_wick_pairing(expr, [&](const WickPairing& p) { total += isserlis_term(expr, p); });
  return total;
}

Integer wick_reduce(const MomentExpr& expr, const WickPairing& pairing) {
  if (!expr.is_const_free() || !expr.quaternion_only())
    throw std::invalid_argument("wick_reduce requires a constant-free quaternion-only expression");
  validate_pairing(expr, pairing);

  const std::size_t n = expr.position_count();
  std::vector<std::uint16_t> pair_of(n, 0);
  for (std::uint16_t k = 0; k < pairing.pairs.size(); ++k) {
    pair_of[pairing.pairs[k].first] = k;
    pair_of[pairing.pairs[k].second] = k;
  }
  boost::container::small_vector<Block, 8> blocks;
  {
    std::size_t p = 0;
    for (const auto& w : expr.words()) {
      Block b;
      for (const auto& f : w) b.push_back({pair_of[p++], f.conjugated});
      blocks.push_back(std::move(b));
    }
  }

  unsigned fours = 0;      // factors of E(X Xbar) = 4
  unsigned minus_twos = 0; // factors of E(X X) = -2
  while (true) {
    blocks.erase(std::remove_if(blocks.begin(), blocks.end(),
                                [](const Block& b) { return b.empty(); }),
                 blocks.end());
    if (blocks.empty()) break;
    Block& head = blocks.front();
    const Token x = head.front();

    auto same = std::find_if(head.begin() + 1, head.end(),
                             [&](const Token& t) { return t.pair == x.pair; });
    if (same != head.end()) {
      const Token partner = *same;
      if (partner.conj != x.conj) {
        // E(X u Xbar v) = 4 E(Re(u) Re(v)): the vertex splits in two.
        Block u(head.begin() + 1, same);
        Block v(same + 1, head.end());
        head = std::move(u);
        blocks.push_back(std::move(v));
        ++fours;
      } else {
        // E(X u X v) = -2 E(conj(u) v): one side reverses order and orientation.
        Block merged = reverse_conjugate(head.begin() + 1, same);
        merged.insert(merged.end(), same + 1, head.end());
        head = std::move(merged);
        ++minus_twos;
      }
      continue;
    }

    std::size_t other = 1;
    Block::iterator at;
    for (; other < blocks.size(); ++other) {
      at = std::find_if(blocks[other].begin(), blocks[other].end(),
                        [&](const Token& t) { return t.pair == x.pair; });
      if (at != blocks[other].end()) break;
    }
    if (other == blocks.size()) throw std::logic_error("unpaired token during reduction");
    const Token partner = *at;
    // Rotate the other block so the partner leads, then drop both.
    Block rest(at + 1, blocks[other].end());
    rest.insert(rest.end(), blocks[other].begin(), at);
    Block merged = partner.conj != x.conj ? Block(head.begin() + 1, head.end())
                                          : reverse_conjugate(head.begin() + 1, head.end());
    merged.insert(merged.end(), rest.begin(), rest.end());
    head = std::move(merged);
    blocks.erase(blocks.begin() + static_cast<std::ptrdiff_t>(other));
  }
  return ipow(4, fours) * ipow(-2, minus_twos);
}

ExactQuat full_moment(const MomentExpr& expr, const IsserlisOptions& options) {
  expr.validate();
  require_bound(expr, options.max_positions);
  if (expr.is_const_free() && expr.quaternion_only()) {
    Integer total = 0;
    for_each_wick_pairing(expr, [&](const WickPairing& p) { total += wick_reduce(expr, p); });
    return ExactQuat(Rational(total));
  }
  return isserlis_moment(expr, options);
}

}  // namespace quatwick
