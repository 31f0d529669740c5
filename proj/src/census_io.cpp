#include "quatwick/census_io.hpp"

#include <sstream>
#include <stdexcept>

namespace quatwick {

CensusFormat parse_census_format(const std::string& name) {
  if (name == "json") return CensusFormat::JsonLines;
  if (name == "csv") return CensusFormat::Csv;
  if (name == "text") return CensusFormat::Text;
  throw std::invalid_argument("unknown format '" + name + "'");
}

namespace {

template <class Seq>
std::string join(const Seq& s, const char* sep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : s) {
    if (!first) os << sep;
    first = false;
    os << v;
  }
  return os.str();
}

std::string pair_list(const std::vector<std::pair<int, int>>& pairs, int offset, const char* link) {
  std::ostringstream os;
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (k) os << ';';
    os << pairs[k].first + offset << link << pairs[k].second + offset;
  }
  return os.str();
}

}  // namespace

nlohmann::json census_record(const MoebiusGraph& g, std::size_t index) {
  const GraphStats s = analyze(g);
  nlohmann::json j;
  j["kind"] = "wigner";
  j["index"] = index;
  j["degrees"] = g.degrees;
  auto matching = nlohmann::json::array();
  for (const auto& [p, q] : g.edges) matching.push_back({p + 1, q + 1});
  j["matching"] = std::move(matching);
  j["twists"] = std::vector<int>(g.twisted.begin(), g.twisted.end());
  j["v"] = s.v;
  j["e"] = s.e;
  j["f"] = s.f;
  j["chi"] = s.chi;
  j["components"] = s.component_count;
  j["component_chi"] = s.component_chi;
  return j;
}

nlohmann::json census_record(const BipartiteGraph& g, std::size_t index) {
  nlohmann::json j;
  j["kind"] = "wishart";
  j["index"] = index;
  j["degrees"] = g.degrees;
  auto gamma = nlohmann::json::array();
  for (const auto& [a, b] : g.gamma.pairs) gamma.push_back({a, b});
  j["gamma"] = std::move(gamma);
  j["m"] = g.m;
  j["e"] = g.n;
  j["w"] = g.w;
  j["w_by_color"] = g.w_by_color;
  j["f"] = g.f;
  j["chi"] = g.chi;
  j["components"] = g.component_count;
  return j;
}

std::size_t write_wigner_census(std::ostream& out, const DegreeSeq& deg,
                                const std::optional<ColorMap>& colors, CensusFormat format,
                                const EnumerationOptions& options) {
  if (format == CensusFormat::Csv) out << "index,matching,twists,v,e,f,chi,components\n";
  std::size_t index = 0;
  for_each_graph(deg, colors, [&](const MoebiusGraph& g) {
    switch (format) {
      case CensusFormat::JsonLines:
        out << census_record(g, index).dump() << '\n';
        break;
      case CensusFormat::Csv: {
        const GraphStats s = analyze(g);
        out << index << ',' << pair_list(g.edges, 1, "-") << ','
            << join(std::vector<int>(g.twisted.begin(), g.twisted.end()), "") << ',' << s.v << ','
            << s.e << ',' << s.f << ',' << s.chi << ',' << s.component_count << '\n';
        break;
      }
      case CensusFormat::Text: {
        const GraphStats s = analyze(g);
        out << "graph " << index << ": edges " << pair_list(g.edges, 1, "-") << " twists "
            << join(std::vector<int>(g.twisted.begin(), g.twisted.end()), "") << "  f=" << s.f
            << " chi=" << s.chi << " components=" << s.component_count << '\n';
        break;
      }
    }
    ++index;
  }, options);
  return index;
}

std::size_t write_wishart_census(std::ostream& out, const WishartDegreeSeq& deg,
                                 const std::optional<ColorMap>& colors, CensusFormat format,
                                 const EnumerationOptions& options) {
  if (format == CensusFormat::Csv) out << "index,gamma,m,e,w,w_by_color,f,chi,components\n";
  std::size_t index = 0;
  for_each_gamma(deg, colors, [&](const GammaPairing& gamma) {
    const BipartiteGraph g = bipartite_stats(deg, gamma, colors);
    switch (format) {
      case CensusFormat::JsonLines:
        out << census_record(g, index).dump() << '\n';
        break;
      case CensusFormat::Csv:
        out << index << ',' << pair_list(gamma.pairs, 0, ":") << ',' << g.m << ',' << g.n << ','
            << g.w << ',' << join(g.w_by_color, ";") << ',' << g.f << ',' << g.chi << ','
            << g.component_count << '\n';
        break;
      case CensusFormat::Text:
        out << "graph " << index << ": gamma " << pair_list(gamma.pairs, 0, ":") << "  w=" << g.w
            << " f=" << g.f << " chi=" << g.chi << " components=" << g.component_count << '\n';
        break;
    }
    ++index;
  }, options);
  return index;
}

}  // namespace quatwick
