// Thin layer over the C++ core; structured results cross as JSON text and
// are decoded by the Python package.

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "quatwick/census_io.hpp"
#include "quatwick/cli.hpp"
#include "quatwick/ensembles.hpp"
#include "quatwick/moments.hpp"
#include "quatwick/selftest.hpp"
#include "quatwick/wick.hpp"

namespace py = pybind11;
using namespace quatwick;

namespace {

std::optional<ColorMap> optional_colors(const ColorMap& colors) {
  if (colors.empty()) return std::nullopt;
  return colors;
}

// +k is Z_k, -k its conjugate.
MomentExpr build_expr(const std::vector<std::vector<int>>& words, bool bare) {
  std::vector<Word> ws;
  for (const auto& w : words) {
    Word word;
    for (int id : w) {
      if (id == 0) throw std::invalid_argument("variable ids start at 1");
      const auto v = static_cast<std::uint32_t>(id < 0 ? -id : id);
      word.push_back(id < 0 ? Factor::zbar(v) : Factor::z(v));
    }
    ws.push_back(std::move(word));
  }
  return MomentExpr(std::move(ws), bare);
}

std::vector<std::string> quat_strings(const ExactQuat& q) {
  return {q.x0.str(), q.x1.str(), q.x2.str(), q.x3.str()};
}

std::string census_json(const std::string& kind, const DegreeSeq& deg, const ColorMap& colors) {
  std::ostringstream out;
  {
    py::gil_scoped_release release;
    if (kind == "wigner") {
      write_wigner_census(out, deg, optional_colors(colors), CensusFormat::JsonLines);
    } else if (kind == "wishart") {
      write_wishart_census(out, deg, optional_colors(colors), CensusFormat::JsonLines);
    } else {
      throw std::invalid_argument("kind must be wigner or wishart");
    }
  }
  return out.str();
}

std::string moment_json(const std::string& kind, const DegreeSeq& deg, const ColorMap& colors) {
  const EnsembleKind k = parse_ensemble_kind(kind);
  const auto c = optional_colors(colors);
  MomentPoly p;
  {
    py::gil_scoped_release release;
    switch (k) {
      case EnsembleKind::GSE: p = gse_moment_poly(deg, c); break;
      case EnsembleKind::GOE: p = goe_moment_poly(deg, c); break;
      case EnsembleKind::WishartQuat: p = wishart_quat_poly(deg, c); break;
      case EnsembleKind::WishartReal: p = wishart_real_poly(deg, c); break;
    }
  }
  nlohmann::json j;
  j["poly"] = p.to_string();
  j["lambda_form"] = p.to_lambda_string();
  j["terms"] = p.to_json();
  return j.dump();
}

DualityKind duality_kind(const std::string& kind) {
  if (kind == "wigner") return DualityKind::Wigner;
  if (kind == "wishart") return DualityKind::Wishart;
  throw std::invalid_argument("kind must be wigner or wishart");
}

std::string mc_json(const std::string& kind, const DegreeSeq& deg, int n, const std::vector<int>& m,
                    std::size_t samples, std::uint64_t seed, const ColorMap& colors, unsigned threads) {
  EnsembleSpec spec;
  spec.kind = parse_ensemble_kind(kind);
  spec.n = n;
  spec.m = m;
  spec.degrees = deg;
  spec.colors = colors;
  MCOptions options;
  options.threads = threads;
  py::gil_scoped_release release;
  return mc_moment(spec, samples, seed, options).to_json().dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<ResourceLimitError>(m, "ResourceLimitError", PyExc_RuntimeError);

  m.def("quat_mul", [](const std::array<double, 4>& a, const std::array<double, 4>& b) {
    const RealQuat p = RealQuat(a[0], a[1], a[2], a[3]) * RealQuat(b[0], b[1], b[2], b[3]);
    return std::array<double, 4>{p.x0, p.x1, p.x2, p.x3};
  });

  m.def("word_moment", [](const std::vector<std::vector<int>>& words, bool bare) {
    const MomentExpr e = build_expr(words, bare);
    py::gil_scoped_release release;
    return quat_strings(full_moment(e));
  }, py::arg("words"), py::arg("bare") = false);

  m.def("isserlis_moment", [](const std::vector<std::vector<int>>& words, bool bare) {
    const MomentExpr e = build_expr(words, bare);
    py::gil_scoped_release release;
    return quat_strings(isserlis_moment(e));
  }, py::arg("words"), py::arg("bare") = false);

  m.def("word_moment_via_graphs", [](const std::vector<std::vector<int>>& words) {
    const MomentExpr e = build_expr(words, false);
    py::gil_scoped_release release;
    return word_moment_via_graphs(e).str();
  }, py::arg("words"));

  m.def("census_json", &census_json, py::arg("kind"), py::arg("deg"), py::arg("colors") = ColorMap{});
  m.def("moment_json", &moment_json, py::arg("kind"), py::arg("deg"), py::arg("colors") = ColorMap{});

  m.def("duality_check_json", [](const std::string& kind, const DegreeSeq& deg, const ColorMap& colors) {
    const DualityKind k = duality_kind(kind);
    py::gil_scoped_release release;
    return duality_check(deg, optional_colors(colors), k).to_json().dump();
  }, py::arg("kind"), py::arg("deg"), py::arg("colors") = ColorMap{});

  m.def("duality_sweep_json", [](const std::string& kind, int max_size, int color_count) {
    const DualityKind k = duality_kind(kind);
    py::gil_scoped_release release;
    return duality_sweep(k, max_size, color_count).to_json().dump();
  }, py::arg("kind"), py::arg("max_size"), py::arg("color_count") = 1);

  m.def("mc_json", &mc_json, py::arg("kind"), py::arg("deg"), py::arg("n"), py::arg("m") = std::vector<int>{},
        py::arg("samples") = 100000, py::arg("seed") = 0, py::arg("colors") = ColorMap{},
        py::arg("threads") = 1);

  m.def("selftest_json", [](int max_positions, int max_ids) {
    OracleSweepOptions o;
    o.max_positions = max_positions;
    o.max_ids = max_ids;
    py::gil_scoped_release release;
    return oracle_sweep(o).to_json().dump();
  }, py::arg("max_positions") = 6, py::arg("max_ids") = 3);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
