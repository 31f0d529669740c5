#include "quatwick/moment_poly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace quatwick {

namespace {

std::uint32_t total_degree(const MomentPoly::Exponents& e) {
  return std::accumulate(e.begin(), e.end(), std::uint32_t{0});
}

// Print order: total degree descending, then exponents of (M_1..M_s, N)
// lexicographically descending.
std::vector<const std::pair<const MomentPoly::Exponents, Integer>*> print_order(
    const std::map<MomentPoly::Exponents, Integer>& terms) {
  std::vector<const std::pair<const MomentPoly::Exponents, Integer>*> out;
  for (const auto& t : terms) out.push_back(&t);
  auto key = [](const MomentPoly::Exponents& e) {
    MomentPoly::Exponents k(e.begin() + 1, e.end());
    k.push_back(e[0]);
    return k;
  };
  std::sort(out.begin(), out.end(), [&](const auto* a, const auto* b) {
    const auto da = total_degree(a->first), db = total_degree(b->first);
    if (da != db) return da > db;
    return key(a->first) > key(b->first);
  });
  return out;
}

void append_power(std::ostringstream& os, bool& first_factor, const std::string& name,
                  std::uint32_t exp) {
  if (exp == 0) return;
  if (!first_factor) os << '*';
  first_factor = false;
  os << name;
  if (exp > 1) os << '^' << exp;
}

std::string format(const std::map<MomentPoly::Exponents, Integer>& terms, std::size_t m_count,
                   bool lambda) {
  if (terms.empty()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto* t : print_order(terms)) {
    const auto& [e, c] = *t;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first_term) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first_term = false;
    const bool constant = total_degree(e) == 0;
    bool first_factor = true;
    if (mag != 1 || constant) {
      os << mag.str();
      first_factor = false;
    }
    std::uint32_t n_exp = e[0];
    for (std::size_t c_idx = 1; c_idx <= m_count; ++c_idx) {
      std::string name = lambda ? "lambda" : "M";
      if (m_count > 1) name += "_" + std::to_string(c_idx);
      append_power(os, first_factor, name, e[c_idx]);
      if (lambda) n_exp += e[c_idx];
    }
    append_power(os, first_factor, "N", n_exp);
  }
  return os.str();
}

}  // namespace

MomentPoly MomentPoly::constant(const Integer& c, std::size_t m_count) {
  MomentPoly p(m_count);
  p.add_term(Exponents(1 + m_count, 0), c);
  return p;
}

void MomentPoly::add_term(const Exponents& e, const Integer& c) {
  if (e.size() != 1 + m_count_)
    throw std::invalid_argument("exponent vector has the wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

MomentPoly MomentPoly::with_m_count(std::size_t m_count) const {
  if (m_count < m_count_) {
    for (const auto& [e, c] : terms_)
      for (std::size_t k = m_count + 1; k < e.size(); ++k)
        if (e[k] != 0) throw std::invalid_argument("cannot drop an M variable that is in use");
  }
  MomentPoly out(m_count);
  for (const auto& [e, c] : terms_) {
    Exponents ne(1 + m_count, 0);
    std::copy_n(e.begin(), std::min(e.size(), ne.size()), ne.begin());
    out.add_term(ne, c);
  }
  return out;
}

MomentPoly& MomentPoly::operator+=(const MomentPoly& other) {
  if (other.m_count_ > m_count_) *this = with_m_count(other.m_count_);
  const MomentPoly& rhs = other.m_count_ == m_count_ ? other : other.with_m_count(m_count_);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

MomentPoly MomentPoly::operator-() const {
  MomentPoly out(m_count_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MomentPoly operator*(const MomentPoly& p, const Integer& s) {
  MomentPoly out(p.m_count_);
  if (s == 0) return out;
  for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, c * s);
  return out;
}

MomentPoly MomentPoly::scale_variables(const Integer& a) const {
  MomentPoly out(m_count_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * pow(a, total_degree(e)));
  return out;
}

MomentPoly MomentPoly::divide_exact(const Integer& d) const {
  if (d == 0) throw std::domain_error("division by zero");
  MomentPoly out(m_count_);
  for (const auto& [e, c] : terms_) {
    if (c % d != 0) throw std::domain_error("coefficient " + c.str() + " not divisible by " + d.str());
    out.terms_.emplace(e, c / d);
  }
  return out;
}

Integer MomentPoly::evaluate(const Integer& n, std::span<const Integer> m) const {
  if (m.size() < m_count_) throw std::invalid_argument("missing M values");
  Integer total = 0;
  for (const auto& [e, c] : terms_) {
    Integer v = c * pow(n, e[0]);
    for (std::size_t k = 1; k < e.size(); ++k) v *= pow(m[k - 1], e[k]);
    total += v;
  }
  return total;
}

double MomentPoly::evaluate(double n, std::span<const double> m) const {
  if (m.size() < m_count_) throw std::invalid_argument("missing M values");
  double total = 0;
  for (const auto& [e, c] : terms_) {
    double v = c.convert_to<double>() * std::pow(n, e[0]);
    for (std::size_t k = 1; k < e.size(); ++k) v *= std::pow(m[k - 1], e[k]);
    total += v;
  }
  return total;
}

std::string MomentPoly::to_string() const { return format(terms_, m_count_, false); }

std::string MomentPoly::to_lambda_string() const { return format(terms_, m_count_, true); }

nlohmann::json MomentPoly::to_json() const {
  nlohmann::json out = nlohmann::json::array();
  for (const auto* t : print_order(terms_)) {
    const auto& [e, c] = *t;
    nlohmann::json term;
    if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
      term["coeff"] = c.convert_to<std::int64_t>();
    else
      term["coeff"] = c.str();
    nlohmann::json exps = nlohmann::json::object();
    exps["N"] = e[0];
    for (std::size_t k = 1; k < e.size(); ++k) exps["M_" + std::to_string(k)] = e[k];
    term["exponents"] = std::move(exps);
    out.push_back(std::move(term));
  }
  return out;
}

MomentPoly MomentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of terms");
  std::size_t m_count = 0;
  for (const auto& term : j)
    for (const auto& [name, v] : term.at("exponents").items())
      if (name.rfind("M_", 0) == 0) m_count = std::max<std::size_t>(m_count, std::stoul(name.substr(2)));
  MomentPoly p(m_count);
  for (const auto& term : j) {
    Exponents e(1 + m_count, 0);
    for (const auto& [name, v] : term.at("exponents").items()) {
      if (name == "N") e[0] = v.get<std::uint32_t>();
      else if (name.rfind("M_", 0) == 0) e[std::stoul(name.substr(2))] = v.get<std::uint32_t>();
      else throw std::invalid_argument("unknown variable " + name);
    }
    const auto& c = term.at("coeff");
    p.add_term(e, c.is_string() ? Integer(c.get<std::string>()) : Integer(c.get<std::int64_t>()));
  }
  return p;
}

bool operator==(const MomentPoly& a, const MomentPoly& b) {
  const std::size_t m = std::max(a.m_count_, b.m_count_);
  if (a.m_count_ == b.m_count_) return a.terms_ == b.terms_;
  return a.with_m_count(m).terms_ == b.with_m_count(m).terms_;
}

}  // namespace quatwick
