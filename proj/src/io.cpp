#include "phasebound/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <system_error>

namespace phasebound {

using nlohmann::json;

namespace {

// Replaces bare NaN / Infinity / -Infinity tokens outside string literals
// with null so the strict JSON parser accepts Python-written files.
std::string normalize_non_finite_tokens(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool in_string = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_string) {
      out.push_back(c);
      if (c == '\\' && i + 1 < text.size()) {
        out.push_back(text[++i]);
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') {
      in_string = true;
      out.push_back(c);
      continue;
    }
    bool replaced = false;
    for (std::string_view token : {"-Infinity", "Infinity", "NaN"}) {
      if (text.substr(i, token.size()) == token) {
        out += "null";
        i += token.size() - 1;
        replaced = true;
        break;
      }
    }
    if (!replaced) out.push_back(c);
  }
  return out;
}

double sample_value(const json& v, const char* field, std::size_t index) {
  if (v.is_number()) return v.get<double>();
  if (v.is_null()) return std::numeric_limits<double>::quiet_NaN();
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s == "NaN" || s == "nan") return std::numeric_limits<double>::quiet_NaN();
    if (s == "Infinity" || s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-Infinity" || s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw MalformedFile(std::string("malformed file: ") + field + "[" + std::to_string(index) + "] is not a number");
}

const json& require_field(const json& doc, const char* name) {
  const auto it = doc.find(name);
  if (it == doc.end()) throw MalformedFile(std::string("malformed file: missing field \"") + name + "\"");
  return *it;
}

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

template <Domain D>
json field_json(const Field<D>& f, const char* domain) {
  const GridSpec& grid = f.grid();
  json re = json::array();
  json im = json::array();
  for (const cplx& v : f.values()) {
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return json{{"dimension", grid.dimension()},
              {"half_extent", grid.half_extents()},
              {"points_per_axis", grid.points_per_axis()},
              {"domain", domain},
              {"values_re", std::move(re)},
              {"values_im", std::move(im)}};
}

}  // namespace

FieldFile parse_field_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(normalize_non_finite_tokens(text));
  } catch (const json::exception& e) {
    // includes number overflow such as 1e999
    throw MalformedFile(std::string("malformed file: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedFile("malformed file: top level must be a JSON object");

  const json& dimension = require_field(doc, "dimension");
  const json& half_extent = require_field(doc, "half_extent");
  const json& points = require_field(doc, "points_per_axis");
  const json& domain = require_field(doc, "domain");
  const json& re = require_field(doc, "values_re");
  const json& im = require_field(doc, "values_im");

  if (!dimension.is_number_integer() || dimension.get<long long>() < 1 ||
      dimension.get<long long>() > static_cast<long long>(kMaxDimension)) {
    throw MalformedFile("malformed file: \"dimension\" must be an integer in [1, 3]");
  }
  const auto n = static_cast<std::size_t>(dimension.get<long long>());
  if (!half_extent.is_array() || half_extent.size() != n || !points.is_array() || points.size() != n) {
    throw MalformedFile("malformed file: \"half_extent\" and \"points_per_axis\" must be arrays of length dimension");
  }
  std::vector<double> extents;
  std::vector<std::size_t> counts;
  for (std::size_t i = 0; i < n; ++i) {
    if (!half_extent[i].is_number()) throw MalformedFile("malformed file: \"half_extent\" entries must be numbers");
    if (!points[i].is_number_unsigned()) {
      throw MalformedFile("malformed file: \"points_per_axis\" entries must be positive integers");
    }
    extents.push_back(half_extent[i].get<double>());
    counts.push_back(points[i].get<std::size_t>());
  }

  Domain parsed_domain = Domain::space;
  if (domain == "space") {
    parsed_domain = Domain::space;
  } else if (domain == "frequency") {
    parsed_domain = Domain::frequency;
  } else {
    throw MalformedFile("malformed file: \"domain\" must be \"space\" or \"frequency\"");
  }

  std::optional<GridSpec> grid;
  try {
    grid.emplace(std::move(extents), std::move(counts));
  } catch (const GridMismatch& e) {
    throw MalformedFile(std::string("malformed file: invalid grid: ") + e.what());
  }

  if (!re.is_array() || !im.is_array()) throw MalformedFile("malformed file: values must be arrays");
  if (re.size() != grid->size() || im.size() != grid->size()) {
    throw MalformedFile("malformed file: expected " + std::to_string(grid->size()) + " samples, got " +
                        std::to_string(re.size()) + " real and " + std::to_string(im.size()) + " imaginary");
  }
  std::vector<cplx> values(grid->size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = cplx(sample_value(re[i], "values_re", i), sample_value(im[i], "values_im", i));
    if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
      throw NonFiniteSample("non-finite sample at index " + std::to_string(i));
    }
  }
  return FieldFile{std::move(*grid), parsed_domain, std::move(values)};
}

FieldFile read_field_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw MalformedFile("cannot read file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_field_file(buffer.str());
  } catch (const MalformedFile& e) {
    throw MalformedFile(path.string() + ": " + e.what());
  } catch (const NonFiniteSample& e) {
    throw NonFiniteSample(path.string() + ": " + e.what());
  }
}

SampledFunction load_function(const std::filesystem::path& path) {
  FieldFile file = read_field_file(path);
  if (file.domain == Domain::space) return SampledFunction(std::move(file.grid), std::move(file.values));
  return inverse_transform(Spectrum(std::move(file.grid), std::move(file.values)));
}

json field_to_json(const SampledFunction& f) { return field_json(f, "space"); }
json field_to_json(const Spectrum& s) { return field_json(s, "frequency"); }

json to_json(const GridSpec& grid) {
  return json{{"dimension", grid.dimension()},
              {"half_extent", grid.half_extents()},
              {"points_per_axis", grid.points_per_axis()}};
}

json to_json(const BoundReport& r) {
  return json{{"p", r.p},
              {"epsilon", r.epsilon},
              {"lhs", r.lhs},
              {"term_modulus", r.term_modulus},
              {"term_smoothness", r.term_smoothness},
              {"term_translation", r.term_translation},
              {"rhs", r.rhs},
              {"slack", r.slack},
              {"squared_form_slack", r.squared_form_slack}};
}

json to_json(const Corollary1Report& r) {
  return json{{"support_measure", r.support_measure},
              {"epsilon", r.epsilon},
              {"lhs", r.lhs},
              {"term_modulus", r.term_modulus},
              {"term_smoothness", r.term_smoothness},
              {"term_translation", r.term_translation},
              {"rhs", r.rhs},
              {"slack", r.slack}};
}

json to_json(const ScalingResult& r) {
  return json{{"name", r.name},
              {"parameter_values", r.parameter_values},
              {"observable_values", r.observable_values},
              {"fitted_slope", number_or_null(r.fitted_slope)},
              {"slope_stderr", number_or_null(r.slope_stderr)},
              {"expected_slope", r.expected_slope},
              {"slope_tolerance", r.slope_tolerance},
              {"pass", r.pass}};
}

json to_json(const Lemma1ScanResult& r) {
  return json{{"min_gap", r.min_gap},
              {"argmin_z", {r.argmin.real(), r.argmin.imag()}},
              {"steps", {r.radius_steps, r.angle_steps}}};
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, end);
}

namespace {

std::string csv_from_json(const json& row) {
  std::string header;
  std::string values;
  for (const auto& [key, value] : row.items()) {
    if (!header.empty()) {
      header += ',';
      values += ',';
    }
    header += key;
    values += format_double(value.get<double>());
  }
  return header + "\n" + values + "\n";
}

}  // namespace

std::string bound_report_csv(const BoundReport& report) { return csv_from_json(to_json(report)); }

std::string corollary1_csv(const Corollary1Report& report) { return csv_from_json(to_json(report)); }

std::string scaling_csv(const std::vector<ScalingResult>& results) {
  std::string out = "series,parameter,observable\n";
  for (const ScalingResult& r : results) {
    for (std::size_t i = 0; i < r.parameter_values.size(); ++i) {
      out += r.name;
      out += ',';
      out += format_double(r.parameter_values[i]);
      out += ',';
      out += format_double(r.observable_values[i]);
      out += '\n';
    }
  }
  return out;
}

void write_atomically(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open '" + tmp.string() + "' for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) throw std::runtime_error("failed writing '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename '" + tmp.string() + "' to '" + path.string() + "': " + ec.message());
  }
}

}  // namespace phasebound
