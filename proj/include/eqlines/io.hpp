#pragma once

#include <string>

#include <json.hpp>

#include "eqlines/equiangular.hpp"
#include "eqlines/graph.hpp"
#include "eqlines/spectrum.hpp"

namespace eqlines {

inline constexpr int kFormatVersion = 1;

// Text format: "n m" then m lines "u v" (0-based), or a single compact line
// "n:bits" as produced by to_compact. Blank lines and '#' comments are
// skipped. Throws ParseError.
Graph parse_graph(const std::string& text);
std::string format_graph(const Graph& g);

// {r, alpha: "p/q", vectors, provenance}
nlohmann::json code_to_json(const SphericalCode& c, const nlohmann::json& provenance = nlohmann::json::object());
SphericalCode code_from_json(const nlohmann::json& j);

// {alpha, n, entries: fraction-string grid}
nlohmann::json gram_to_json(const GramMatrix& gm);

nlohmann::json spectrum_to_json(const Spectrum& s);

// Throws ParseError when the file cannot be read.
std::string read_file(const std::string& path);
// Throws std::runtime_error when the file cannot be written.
void write_file(const std::string& path, const std::string& content);

nlohmann::json parse_json(const std::string& text);

}  // namespace eqlines
