#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "phasebound/bounds.hpp"
#include "phasebound/experiments.hpp"
#include "phasebound/geometry.hpp"
#include "phasebound/grid.hpp"

namespace phasebound {

/**
 * Function/spectrum file:
 *
 *   { "dimension": n, "half_extent": [T...], "points_per_axis": [N...],
 *     "domain": "space" | "frequency", "values_re": [...], "values_im": [...] }
 *
 * Values are row-major over zero-centered coordinates. For "frequency" files
 * the grid fields describe the frequency lattice itself.
 *
 * Non-finite samples may appear as null, as the strings "NaN", "Infinity",
 * "-Infinity", or as the bare tokens NaN / Infinity / -Infinity that Python's
 * json module writes. They parse, then fail validation with NonFiniteSample.
 */
struct FieldFile {
  GridSpec grid;
  Domain domain = Domain::space;
  std::vector<cplx> values;
};

/// Throws MalformedFile on schema violations, NonFiniteSample on NaN/Inf.
FieldFile parse_field_file(std::string_view text);
FieldFile read_field_file(const std::filesystem::path& path);

/// Loads a file as a space-domain function; frequency files are inverted.
SampledFunction load_function(const std::filesystem::path& path);

nlohmann::json field_to_json(const SampledFunction& f);
nlohmann::json field_to_json(const Spectrum& s);

nlohmann::json to_json(const GridSpec& grid);
nlohmann::json to_json(const BoundReport& report);
nlohmann::json to_json(const Corollary1Report& report);
nlohmann::json to_json(const ScalingResult& result);
nlohmann::json to_json(const Lemma1ScanResult& result);

/// Shortest decimal string that round-trips to the same double.
std::string format_double(double value);

/// Header row of field names, then one row of values.
std::string bound_report_csv(const BoundReport& report);
std::string corollary1_csv(const Corollary1Report& report);

/// Columns series,parameter,observable; one row per sweep point.
std::string scaling_csv(const std::vector<ScalingResult>& results);

/// Writes to a sibling temporary file and renames it over `path`.
void write_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace phasebound
