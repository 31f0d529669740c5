#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "quatwick/bipartite.hpp"
#include "quatwick/moebius.hpp"

namespace quatwick {

enum class CensusFormat { JsonLines, Csv, Text };

CensusFormat parse_census_format(const std::string& name);

/// Half-edges and edges are printed 1-based; Wishart slots keep their sign.
nlohmann::json census_record(const MoebiusGraph& g, std::size_t index);
nlohmann::json census_record(const BipartiteGraph& g, std::size_t index);

/// Writes one record per graph and returns the number written.
std::size_t write_wigner_census(std::ostream& out, const DegreeSeq& deg,
                                const std::optional<ColorMap>& colors, CensusFormat format,
                                const EnumerationOptions& options = {});
std::size_t write_wishart_census(std::ostream& out, const WishartDegreeSeq& deg,
                                 const std::optional<ColorMap>& colors, CensusFormat format,
                                 const EnumerationOptions& options = {6});

}  // namespace quatwick
