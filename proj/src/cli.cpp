#include "quatwick/cli.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "quatwick/census_io.hpp"
#include "quatwick/ensembles.hpp"
#include "quatwick/moments.hpp"
#include "quatwick/selftest.hpp"

namespace quatwick {

namespace {

struct RunConfig {
  std::string kind;
  std::vector<int> degrees;
  std::vector<int> colors;
  std::string format = "json";
  int max_size = -1;
  int color_count = 1;
  bool lambda = false;
  int n = 0;
  std::vector<int> m;
  std::size_t samples = 100000;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  int max_positions = 8;
  int max_ids = 3;
};

std::optional<ColorMap> colors_of(const RunConfig& c) {
  if (c.colors.empty()) return std::nullopt;
  return c.colors;
}

EnumerationOptions bound_of(const RunConfig& c, int fallback) {
  return {c.max_size > 0 ? c.max_size : fallback};
}

nlohmann::json colors_json(const RunConfig& c) {
  return c.colors.empty() ? nlohmann::json(nullptr) : nlohmann::json(c.colors);
}

int cmd_census(const RunConfig& c, std::ostream& out) {
  const CensusFormat format = parse_census_format(c.format);
  if (c.kind == "wigner") {
    write_wigner_census(out, c.degrees, colors_of(c), format, bound_of(c, 12));
  } else if (c.kind == "wishart") {
    write_wishart_census(out, c.degrees, colors_of(c), format, bound_of(c, 6));
  } else {
    throw std::invalid_argument("census kind must be wigner or wishart");
  }
  return 0;
}

MomentPoly moment_poly(const std::string& kind, const DegreeSeq& deg,
                       const std::optional<ColorMap>& colors, const EnumerationOptions& bound) {
  switch (parse_ensemble_kind(kind)) {
    case EnsembleKind::GSE: return gse_moment_poly(deg, colors, bound);
    case EnsembleKind::GOE: return goe_moment_poly(deg, colors, bound);
    case EnsembleKind::WishartQuat: return wishart_quat_poly(deg, colors, bound);
    case EnsembleKind::WishartReal: return wishart_real_poly(deg, colors, bound);
  }
  throw std::logic_error("unreachable");
}

int cmd_moment(const RunConfig& c, std::ostream& out) {
  validate_degrees(c.degrees);
  const bool wishart = is_wishart(parse_ensemble_kind(c.kind));
  const MomentPoly p = moment_poly(c.kind, c.degrees, colors_of(c), bound_of(c, wishart ? 6 : 12));
  if (c.format == "text") {
    out << (c.lambda ? p.to_lambda_string() : p.to_string()) << '\n';
    return 0;
  }
  if (c.format != "json") throw std::invalid_argument("moment output is json or text");
  nlohmann::json j;
  j["kind"] = c.kind;
  j["degrees"] = c.degrees;
  j["colors"] = colors_json(c);
  j["poly"] = p.to_string();
  if (c.lambda) j["lambda_form"] = p.to_lambda_string();
  j["terms"] = p.to_json();
  out << j.dump() << '\n';
  return 0;
}

int cmd_duality(const RunConfig& c, std::ostream& out) {
  DualityKind kind;
  if (c.kind == "wigner") kind = DualityKind::Wigner;
  else if (c.kind == "wishart") kind = DualityKind::Wishart;
  else throw std::invalid_argument("duality kind must be wigner or wishart");

  bool passed = false;
  nlohmann::json j;
  if (!c.degrees.empty()) {
    validate_degrees(c.degrees);
    const DualityReport r = duality_check(c.degrees, colors_of(c), kind);
    passed = r.passed;
    j = r.to_json();
  } else {
    if (c.max_size < 1) throw std::invalid_argument("duality needs --deg or --max");
    const int limit = kind == DualityKind::Wigner ? 12 : 6;
    if (c.max_size > limit) throw ResourceLimitError("--max exceeds the enumeration bound");
    const DualitySweepReport r = duality_sweep(kind, c.max_size, c.color_count);
    passed = r.passed();
    j = r.to_json();
  }
  if (c.format == "text")
    out << (passed ? "PASS" : "FAIL") << ' ' << j.dump() << '\n';
  else
    out << j.dump() << '\n';
  return passed ? 0 : 1;
}

int cmd_mc(const RunConfig& c, std::ostream& out) {
  EnsembleSpec spec;
  spec.kind = parse_ensemble_kind(c.kind);
  spec.n = c.n;
  spec.m = c.m;
  spec.degrees = c.degrees;
  spec.colors = c.colors;
  spec.validate();
  MCOptions options;
  options.threads = std::max(1U, c.threads);
  const MCEstimate est = mc_moment(spec, c.samples, c.seed, options);

  nlohmann::json j = est.to_json();
  j["kind"] = c.kind;
  j["degrees"] = c.degrees;
  j["colors"] = colors_json(c);
  j["N"] = c.n;
  j["M"] = c.m;
  const int total = std::accumulate(c.degrees.begin(), c.degrees.end(), 0);
  const bool wishart = is_wishart(spec.kind);
  if (total <= (wishart ? 6 : 12)) {
    const MomentPoly p = moment_poly(c.kind, c.degrees, colors_of(c), {wishart ? 6 : 12});
    std::vector<double> ms;
    for (int col = 1; col <= spec.matrix_count(); ++col)
      ms.push_back(wishart ? spec.m_for_color(col) : 0.0);
    const double exact = p.evaluate(static_cast<double>(c.n), ms);
    j["exact"] = exact;
    j["poly"] = p.to_string();
    j["deviation_in_std_errors"] =
        est.std_error > 0 ? nlohmann::json((est.mean - exact) / est.std_error) : nlohmann::json(nullptr);
  } else {
    j["exact"] = nullptr;
  }
  if (c.format == "text")
    out << est.mean << " +- " << est.std_error << '\n';
  else
    out << j.dump() << '\n';
  return 0;
}

int cmd_selftest(const RunConfig& c, std::ostream& out) {
  if (c.max_positions > 10 || c.max_ids > 4)
    throw ResourceLimitError("selftest bounds are at most 10 positions and 4 ids");
  const OracleSweepReport r = oracle_sweep({c.max_positions, c.max_ids});
  out << r.to_json().dump() << '\n';
  return r.passed() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and Monte Carlo moments of real and quaternionic Gaussian ensembles",
               "quatwick"};
  app.require_subcommand(1);
  RunConfig c;

  auto add_deg = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--deg", c.degrees, "Vertex degrees, comma separated")->delimiter(',');
    if (required) o->required();
    sub->add_option("--colors", c.colors, "Color of each position, comma separated")->delimiter(',');
  };
  const std::vector<std::string> ensemble_kinds{"gse", "goe", "wishart-quat", "wishart-real"};

  auto* census = app.add_subcommand("census", "List every graph of a census");
  census->add_option("--kind", c.kind)->required()->check(CLI::IsMember({"wigner", "wishart"}));
  add_deg(census, true);
  census->add_option("--format", c.format)->check(CLI::IsMember({"json", "csv", "text"}));
  census->add_option("--max", c.max_size, "Enumeration bound");

  auto* moment = app.add_subcommand("moment", "Exact moment polynomial");
  moment->add_option("--kind", c.kind)->required()->check(CLI::IsMember(ensemble_kinds));
  add_deg(moment, true);
  moment->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));
  moment->add_flag("--lambda", c.lambda, "Also print the lambda = M/N form");
  moment->add_option("--max", c.max_size, "Enumeration bound");

  auto* duality = app.add_subcommand("duality", "Check the N -> -2N duality");
  duality->add_option("--kind", c.kind)->required()->check(CLI::IsMember({"wigner", "wishart"}));
  add_deg(duality, false);
  duality->add_option("--max", c.max_size, "Sweep every degree sequence up to this size");
  duality->add_option("--color-count", c.color_count, "Sweep all colorings with this many colors")
      ->check(CLI::Range(1, 4));
  duality->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));

  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of a mixed trace moment");
  mc->add_option("--kind", c.kind)->required()->check(CLI::IsMember(ensemble_kinds));
  add_deg(mc, true);
  mc->add_option("--N", c.n)->required()->check(CLI::PositiveNumber);
  mc->add_option("--M", c.m, "Wishart M, one value or one per color")->delimiter(',');
  mc->add_option("--samples", c.samples)->check(CLI::Range(std::size_t{2}, std::size_t{1} << 40));
  mc->add_option("--seed", c.seed)->required();
  mc->add_option("--threads", c.threads)->check(CLI::Range(1U, 256U));
  mc->add_option("--format", c.format)->check(CLI::IsMember({"json", "text"}));

  auto* selftest = app.add_subcommand("selftest", "Exhaustive oracle equivalence sweep");
  selftest->add_option("--max-positions", c.max_positions)->check(CLI::Range(0, 16));
  selftest->add_option("--max-ids", c.max_ids)->check(CLI::Range(1, 8));

  std::vector<const char*> argv{"quatwick"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (census->parsed()) return cmd_census(c, out);
    if (moment->parsed()) return cmd_moment(c, out);
    if (duality->parsed()) return cmd_duality(c, out);
    if (mc->parsed()) return cmd_mc(c, out);
    if (selftest->parsed()) return cmd_selftest(c, out);
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace quatwick
