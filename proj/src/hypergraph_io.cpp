#include <cctype>
#include <charconv>
#include <sstream>

#include <json.hpp>

#include "bklab/error.hpp"
#include "bklab/hypergraph.hpp"

namespace bklab {

namespace {

std::int64_t parse_int(std::string_view token, std::size_t line_no) {
  std::int64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end)
    throw ParseError("line " + std::to_string(line_no) + ": expected an integer, got '" +
                     std::string(token) + "'");
  return value;
}

}  // namespace

std::string to_hg(const Hypergraph& h) {
  std::string out = "v " + std::to_string(h.vertex_count()) + "\n";
  for (const auto& e : h.edges()) {
    out += 'e';
    for (Vertex v : e) {
      out += ' ';
      out += std::to_string(v);
    }
    out += '\n';
  }
  return out;
}

Hypergraph parse_hg(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::int64_t> vertex_count;
  std::vector<std::vector<std::int64_t>> edges;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream tokens(line);
    std::string tag;
    if (!(tokens >> tag)) continue;
    std::vector<std::int64_t> values;
    for (std::string tok; tokens >> tok;) values.push_back(parse_int(tok, line_no));
    if (tag == "v") {
      if (vertex_count) throw ParseError("line " + std::to_string(line_no) + ": repeated 'v' line");
      if (!edges.empty())
        throw ParseError("line " + std::to_string(line_no) + ": 'v' must precede edges");
      if (values.size() != 1)
        throw ParseError("line " + std::to_string(line_no) + ": 'v' takes exactly one value");
      if (values[0] < 1) throw ParseError("line " + std::to_string(line_no) + ": v must be >= 1");
      vertex_count = values[0];
    } else if (tag == "e") {
      if (!vertex_count)
        throw ParseError("line " + std::to_string(line_no) + ": edge before 'v' line");
      for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] <= values[i - 1])
          throw ParseError("line " + std::to_string(line_no) +
                           ": edge vertices must be strictly ascending");
      edges.push_back(std::move(values));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    }
  }
  if (!vertex_count) throw ParseError("missing 'v' line");
  try {
    return Hypergraph::build(static_cast<std::size_t>(*vertex_count), edges);
  } catch (const InvalidHypergraph& e) {
    throw ParseError(e.what());
  }
}

std::string to_json(const Hypergraph& h) {
  nlohmann::json j;
  j["v"] = h.vertex_count();
  j["edges"] = h.edges();
  return j.dump();
}

Hypergraph parse_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("v") || !j.contains("edges"))
    throw ParseError("expected an object with keys 'v' and 'edges'");
  if (!j["v"].is_number_integer() || j["v"].get<std::int64_t>() < 1)
    throw ParseError("'v' must be a positive integer");
  std::vector<std::vector<std::int64_t>> edges;
  if (!j["edges"].is_array()) throw ParseError("'edges' must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array()) throw ParseError("each edge must be an array of integers");
    std::vector<std::int64_t> edge;
    for (const auto& x : e) {
      if (!x.is_number_integer()) throw ParseError("each edge must be an array of integers");
      edge.push_back(x.get<std::int64_t>());
    }
    edges.push_back(std::move(edge));
  }
  try {
    return Hypergraph::build(j["v"].get<std::size_t>(), edges);
  } catch (const InvalidHypergraph& e) {
    throw ParseError(e.what());
  }
}

Hypergraph parse_any(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_json(text) : parse_hg(text);
  }
  throw ParseError("empty input");
}

}  // namespace bklab
