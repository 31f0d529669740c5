#include "quatwick/selftest.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "quatwick/moments.hpp"
#include "quatwick/wick.hpp"

namespace quatwick {

namespace {

// Restricted growth strings of the given length with values below max_ids.
std::vector<std::vector<int>> id_patterns(int length, int max_ids) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(static_cast<std::size_t>(length), 0);
  std::function<void(int, int)> build = [&](int pos, int used) {
    if (pos == length) {
      out.push_back(a);
      return;
    }
    for (int v = 0; v <= used && v < max_ids; ++v) {
      a[pos] = v;
      build(pos + 1, std::max(used, v + 1));
    }
  };
  build(0, 0);
  return out;
}

bool even_counts(const std::vector<int>& ids) {
  std::vector<int> count(ids.size() + 1, 0);
  for (int v : ids) ++count[v];
  for (int c : count)
    if (c % 2) return false;
  return true;
}

MomentExpr build_expr(const std::vector<int>& ids, unsigned conj_mask, unsigned cuts) {
  std::vector<Word> words(1);
  for (std::size_t p = 0; p < ids.size(); ++p) {
    if (p > 0 && (cuts >> (p - 1)) & 1U) words.emplace_back();
    const auto id = static_cast<std::uint32_t>(ids[p] + 1);
    words.back().push_back((conj_mask >> p) & 1U ? Factor::zbar(id) : Factor::z(id));
  }
  return MomentExpr(std::move(words));
}

// Perfect matchings of {0..n-1}, lowest open position paired first.
std::vector<WickPairing> all_matchings(int n) {
  std::vector<WickPairing> out;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  WickPairing current;
  std::function<void()> build = [&]() {
    int first = 0;
    while (first < n && used[first]) ++first;
    if (first == n) {
      out.push_back(current);
      return;
    }
    used[first] = 1;
    for (int q = first + 1; q < n; ++q) {
      if (used[q]) continue;
      used[q] = 1;
      current.pairs.emplace_back(first, q);
      build();
      current.pairs.pop_back();
      used[q] = 0;
    }
    used[first] = 0;
  };
  build();
  return out;
}

// 4 bits per position holding its partner.
std::uint64_t matching_key(const WickPairing& m) {
  std::uint64_t key = 0;
  for (const auto& [a, b] : m.pairs) key |= std::uint64_t{b} << (4 * a);
  return key;
}

// Cached per-pairing values; every one is an integer of modest size.
struct PairingValues {
  std::array<std::int64_t, 4> term{};
  std::int64_t rules = 0;
  std::int64_t graph = 0;
};

bool small_integer(const Rational& q) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  return denominator(q) == 1 && abs(numerator(q)) < (Integer(1) << 62);
}

bool small_integer(const Integer& z) { return abs(z) < (Integer(1) << 62); }

}  // namespace

OracleSweepReport oracle_sweep(const OracleSweepOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (options.max_positions > 16) throw ResourceLimitError("sweep supports at most 16 positions");
  OracleSweepReport r;
  r.options = options;
  IsserlisOptions bound;
  bound.max_positions = static_cast<std::size_t>(std::max(options.max_positions, 0));

  auto fail = [&](const MomentExpr& e, const std::string& what) {
    ++r.failures;
    if (r.failure_samples.size() < 20) r.failure_samples.push_back(to_string(e) + ": " + what);
  };

  for (int p = 1; p <= options.max_positions; ++p) {
    const std::uint64_t per_pattern = (std::uint64_t{1} << p) * (std::uint64_t{1} << (p - 1));
    std::vector<std::vector<int>> live;
    for (const auto& ids : id_patterns(p, options.max_ids)) {
      if (even_counts(ids)) {
        live.push_back(ids);
        continue;
      }
      // No compatible pairing for any conjugation pattern or block split.
      const MomentExpr e = build_expr(ids, 0, 0);
      if (!enumerate_wick_pairings(e).empty() || isserlis_moment(e, bound) != ExactQuat())
        fail(e, "odd occurrence count with a nonzero moment");
      r.expressions += per_pattern;
      r.vanishing_expressions += per_pattern;
    }
    if (live.empty()) continue;

    const std::vector<WickPairing> matchings = all_matchings(p);
    std::unordered_map<std::uint64_t, std::size_t> matching_index;
    for (std::size_t k = 0; k < matchings.size(); ++k) matching_index[matching_key(matchings[k])] = k;
    // Canonical ids: one variable per pair, so the matching is the only pairing.
    std::vector<std::vector<int>> canonical_ids;
    for (const auto& m : matchings) {
      std::vector<int> ids(static_cast<std::size_t>(p));
      for (std::size_t k = 0; k < m.pairs.size(); ++k)
        ids[m.pairs[k].first] = ids[m.pairs[k].second] = static_cast<int>(k);
      canonical_ids.push_back(std::move(ids));
    }

    for (unsigned cuts = 0; cuts < (1U << (p - 1)); ++cuts) {
      for (unsigned mask = 0; mask < (1U << p); ++mask) {
        std::vector<std::optional<PairingValues>> cache(matchings.size());
        auto values_of = [&](const WickPairing& pairing) -> const PairingValues& {
          const std::size_t k = matching_index.at(matching_key(pairing));
          auto& slot = cache[k];
          if (!slot) {
            const MomentExpr canon = build_expr(canonical_ids[k], mask, cuts);
            const ExactQuat term = isserlis_term(canon, pairing);
            const Integer rules = wick_reduce(canon, pairing);
            const Integer graph = pairing_weight_via_graph(canon, pairing);
            ++r.distinct_pairings;
            PairingValues v;
            bool ok = small_integer(rules) && small_integer(graph);
            for (int c = 0; c < 4 && ok; ++c) {
              ok = small_integer(term[c]);
              if (ok) v.term[c] = numerator(term[c]).convert_to<std::int64_t>();
            }
            if (ok) {
              v.rules = rules.convert_to<std::int64_t>();
              v.graph = graph.convert_to<std::int64_t>();
            }
            if (!ok || !term.is_real() || term.x0 != rules || rules != graph) {
              std::ostringstream os;
              os << "term " << to_string(term) << " rules " << rules << " graph " << graph;
              fail(canon, os.str());
            }
            slot = v;
          }
          return *slot;
        };

        for (const auto& ids : live) {
          const MomentExpr e = build_expr(ids, mask, cuts);
          ++r.expressions;
          std::int64_t sum_rules = 0, sum_graphs = 0;
          std::array<std::int64_t, 4> sum_terms{};
          for_each_wick_pairing(e, [&](const WickPairing& pairing) {
            ++r.pairings;
            const PairingValues& v = values_of(pairing);
            sum_rules += v.rules;
            sum_graphs += v.graph;
            for (int c = 0; c < 4; ++c) sum_terms[c] += v.term[c];
          });
          if (sum_terms[1] != 0 || sum_terms[2] != 0 || sum_terms[3] != 0 || sum_terms[0] != sum_rules ||
              sum_graphs != sum_rules) {
            std::ostringstream os;
            os << "sum of terms (" << sum_terms[0] << ", " << sum_terms[1] << ", " << sum_terms[2] << ", "
               << sum_terms[3] << ") rules " << sum_rules << " graphs " << sum_graphs;
            fail(e, os.str());
          }
          // End-to-end calls on the expression itself: all of them up to
          // `direct_positions`, a fixed sample beyond.
          if (p <= options.direct_positions || r.expressions % options.direct_stride == 0) {
            ++r.direct_checks;
            const ExactQuat brute = isserlis_moment(e, bound);
            const ExactQuat full = full_moment(e, bound);
            const Integer graphs = word_moment_via_graphs(e);
            if (!brute.is_real() || brute.x0 != sum_rules || full != brute || graphs != sum_rules) {
              std::ostringstream os;
              os << "isserlis " << to_string(brute) << " full " << to_string(full) << " graphs "
                 << graphs << " expected " << sum_rules;
              fail(e, os.str());
            }
          }
        }
      }
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

nlohmann::json OracleSweepReport::to_json() const {
  nlohmann::json j;
  j["max_positions"] = options.max_positions;
  j["max_ids"] = options.max_ids;
  j["expressions"] = expressions;
  j["vanishing_expressions"] = vanishing_expressions;
  j["pairings"] = pairings;
  j["distinct_pairings"] = distinct_pairings;
  j["direct_checks"] = direct_checks;
  j["failures"] = failures;
  j["failure_samples"] = failure_samples;
  j["pass"] = passed();
  return j;
}

}  // namespace quatwick
