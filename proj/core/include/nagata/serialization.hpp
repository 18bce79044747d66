#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

#include "nagata/checkers.hpp"
#include "nagata/covers.hpp"
#include "nagata/metric_space.hpp"
#include "nagata/nagata_space.hpp"
#include "nagata/nesting.hpp"
#include "nagata/report.hpp"

namespace nagata {

/// {"points": [...], "matrix": [[...]], "scale_denominator": k}. Entries are
/// multiplied by the denominator and must land on integers.
FiniteMetricSpace space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const FiniteMetricSpace& space);

/// {"n_colors", "scale_r", "classes": [[[indices]...]...]}.
ColoredCover cover_from_json(const FiniteMetricSpace& space, const nlohmann::json& j);
nlohmann::json cover_to_json(const ColoredCover& cover);

/// {"levels": [{"d_k", "m_k", "cover", "provider_scale", "provider_mesh"}], "saturated"}.
NestedCoverSequence sequence_from_json(const FiniteMetricSpace& space,
                                       const nlohmann::json& j);
nlohmann::json sequence_to_json(const NestedCoverSequence& seq);

/// {"levels_used", "D", "provenance": [{"pair", "level", "color", "witness_set"}]}.
nlohmann::json nagata_to_json(const NagataSpace& ns);
NagataSpace nagata_from_json(const nlohmann::json& j);

/// {"verdict", "checked", "witness", "note"}.
nlohmann::json report_to_json(const CheckReport& report);
CheckReport report_from_json(const nlohmann::json& j);

nlohmann::json control_to_json(const ControlReport& control);

/// CSV: header row of point identifiers, then one row per point.
void write_matrix_csv(std::ostream& out, const std::vector<std::string>& names,
                      const DistanceMatrix& m);
std::string matrix_csv(const std::vector<std::string>& names, const DistanceMatrix& m);
/// Parses the CSV layout above and validates the metric axioms.
FiniteMetricSpace space_from_csv(std::istream& in);

/// Canonical text form (2-space indent, trailing newline) used for every
/// artifact so identical values serialize to identical bytes.
std::string dump(const nlohmann::json& j);

nlohmann::json read_json_file(const std::filesystem::path& path);
/// Writes via a temporary sibling and rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace nagata
