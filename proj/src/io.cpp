#include "eqlines/io.hpp"

#include <fstream>
#include <sstream>

#include "eqlines/errors.hpp"

namespace eqlines {

namespace {

std::vector<std::string> content_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    out.push_back(line.substr(first, last - first + 1));
  }
  return out;
}

int parse_int(const std::string& token, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got '" + token + "'");
  }
  if (used != token.size()) throw ParseError("expected an integer for " + what + ", got '" + token + "'");
  return value;
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

}  // namespace

Graph parse_graph(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("graph input is empty");
  if (const auto colon = lines[0].find(':'); colon != std::string::npos) {
    if (lines.size() != 1) throw ParseError("compact graph encoding must be a single line");
    const int n = parse_int(lines[0].substr(0, colon), "vertex count");
    if (n < 1) throw ParseError("vertex count must be positive");
    return from_adjacency_bits(n, lines[0].substr(colon + 1));
  }
  const auto head = tokens(lines[0]);
  if (head.size() != 2) throw ParseError("first line must be 'n m'");
  const int n = parse_int(head[0], "vertex count");
  const int m = parse_int(head[1], "edge count");
  if (n < 1) throw ParseError("vertex count must be positive");
  if (m < 0) throw ParseError("edge count must be non-negative");
  if (static_cast<int>(lines.size()) - 1 != m) {
    throw ParseError("header announces " + std::to_string(m) + " edges, found " + std::to_string(lines.size() - 1) + " edge lines");
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) {
    const auto t = tokens(lines[static_cast<std::size_t>(i)]);
    if (t.size() != 2) throw ParseError("edge line " + std::to_string(i) + " must be 'u v'");
    edges.emplace_back(parse_int(t[0], "edge endpoint"), parse_int(t[1], "edge endpoint"));
  }
  try {
    return Graph(n, std::move(edges));
  } catch (const ParameterError& e) {
    throw ParseError(e.what());
  }
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

nlohmann::json code_to_json(const SphericalCode& c, const nlohmann::json& provenance) {
  auto vectors = c.vectors;
  for (auto& v : vectors) {
    for (double& x : v) {
      if (x == 0.0) x = 0.0;  // drops the sign of negative zero
    }
  }
  return {{"r", c.r}, {"alpha", to_string(c.alpha)}, {"vectors", vectors}, {"provenance", provenance}};
}

SphericalCode code_from_json(const nlohmann::json& j) {
  try {
    SphericalCode c;
    c.r = j.at("r").get<int>();
    const auto& a = j.at("alpha");
    if (!a.is_string()) throw ParseError("alpha must be a \"p/q\" string");
    c.alpha = parse_rational(a.get<std::string>());
    c.vectors = j.at("vectors").get<std::vector<std::vector<double>>>();
    if (c.r < 1) throw ParseError("r must be positive");
    for (std::size_t i = 0; i < c.vectors.size(); ++i) {
      if (static_cast<int>(c.vectors[i].size()) != c.r) {
        throw ParseError("vector " + std::to_string(i) + " has " + std::to_string(c.vectors[i].size()) + " coordinates, expected " +
                         std::to_string(c.r));
      }
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed code file: ") + e.what());
  }
}

nlohmann::json gram_to_json(const GramMatrix& gm) {
  return {{"alpha", to_string(gm.alpha)}, {"n", gm.m.rows()}, {"entries", gm.m.to_strings()}};
}

nlohmann::json spectrum_to_json(const Spectrum& s) {
  std::vector<std::string> values;
  for (double v : s.values()) values.push_back(format_decimal(v));
  nlohmann::json clusters = nlohmann::json::array();
  for (const auto& c : s.clusters()) clusters.push_back({{"value", format_decimal(c.value)}, {"multiplicity", c.count}});
  return {{"mode", "numeric"}, {"cluster_tol", format_decimal(s.cluster_tol())}, {"values", values}, {"clusters", clusters}};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

nlohmann::json parse_json(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace eqlines
