#include "gcontract/io.hpp"

#include <charconv>
#include <istream>
#include <set>
#include <sstream>

namespace gcontract {

ParseError::ParseError(std::size_t line, const std::string& what)
    : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
      ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
      ++i;
    if (i > start)
      tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::uint64_t> to_uint(std::string_view token) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    return std::nullopt;
  return value;
}

bool is_content(std::string_view line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first != std::string_view::npos && line[first] != '#';
}

} // namespace

ColouredGraph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_content = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (is_content(line))
        return true;
    }
    return false;
  };

  if (!next_content())
    throw ParseError(line_no + 1, "missing header \"n m\"");
  const auto header = split_ws(line);
  std::optional<std::uint64_t> n, m;
  if (header.size() == 2) {
    n = to_uint(header[0]);
    m = to_uint(header[1]);
  }
  if (!n || !m)
    throw ParseError(line_no, "malformed header, expected \"n m\"");
  if (*n > UINT32_MAX)
    throw ParseError(line_no, "vertex count too large");

  std::vector<Colour> colours;
  if (*n > 0) {
    if (!next_content())
      throw ParseError(line_no + 1, "missing colour line");
    const auto tokens = split_ws(line);
    if (tokens.size() != *n)
      throw ParseError(line_no, "colour count mismatch: expected " + std::to_string(*n) +
                                    ", found " + std::to_string(tokens.size()));
    colours.reserve(*n);
    for (auto token : tokens) {
      const auto c = to_uint(token);
      if (!c || *c > UINT32_MAX)
        throw ParseError(line_no, "bad colour \"" + std::string(token) + "\"");
      colours.push_back(static_cast<Colour>(*c));
    }
  }

  std::vector<Edge> edges;
  edges.reserve(*m);
  for (std::uint64_t e = 0; e < *m; ++e) {
    if (!next_content())
      throw ParseError(line_no + 1, "expected " + std::to_string(*m) + " edges, found " +
                                        std::to_string(e));
    const auto tokens = split_ws(line);
    std::optional<std::uint64_t> u, v;
    if (tokens.size() == 2) {
      u = to_uint(tokens[0]);
      v = to_uint(tokens[1]);
    }
    if (!u || !v)
      throw ParseError(line_no, "bad edge line, expected \"u v\"");
    if (*u >= *n || *v >= *n)
      throw ParseError(line_no, "edge endpoint out of range [0, " + std::to_string(*n) + ")");
    if (*u == *v)
      throw ParseError(line_no, "self-loop on vertex " + std::to_string(*u));
    edges.emplace_back(static_cast<Vertex>(*u), static_cast<Vertex>(*v));
  }
  if (next_content())
    throw ParseError(line_no, "unexpected content after the edge list");

  try {
    return ColouredGraph::from_edges(*n, edges, std::move(colours));
  } catch (const GraphError& e) {
    throw ParseError(line_no, e.what());
  }
}

ColouredGraph parse_graph_string(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

std::string serialize_graph(const ColouredGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  if (g.order() > 0) {
    for (Vertex v = 0; v < g.order(); ++v)
      out << (v ? " " : "") << g.colour(v);
    out << '\n';
  }
  for (const auto& [u, v] : g.edge_list())
    out << u << ' ' << v << '\n';
  return out.str();
}

std::string serialize_roles(const std::vector<FibRole>& roles) {
  std::string out = "# roles:";
  for (FibRole r : roles) {
    out += ' ';
    out += role_symbol(r);
  }
  out += '\n';
  return out;
}

std::optional<std::vector<FibRole>> parse_roles(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  constexpr std::string_view tag = "# roles:";
  while (std::getline(in, line)) {
    if (line.rfind(tag, 0) != 0)
      continue;
    std::vector<FibRole> roles;
    for (auto token : split_ws(std::string_view(line).substr(tag.size()))) {
      if (token == "P")
        roles.push_back(FibRole::P);
      else if (token == "Q")
        roles.push_back(FibRole::Q);
      else if (token == "R")
        roles.push_back(FibRole::R_minus_P);
      else
        throw GraphError("unknown role \"" + std::string(token) + "\"");
    }
    return roles;
  }
  return std::nullopt;
}

std::string export_dot(const ColouredGraph& g, const std::vector<FibRole>* roles) {
  if (roles && roles->size() != g.order())
    throw GraphError("role list length does not match the graph");
  // Brewer set3 palette, cycled for colour ids beyond its size.
  constexpr std::size_t palette = 12;
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle, style=filled];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v << " [";
    if (roles) {
      const FibRole role = (*roles)[v];
      const char* fill = role == FibRole::P   ? "\"#e41a1c\""
                         : role == FibRole::Q ? "\"#377eb8\""
                                              : "\"#4daf4a\"";
      out << "class=\"" << role_symbol(role) << "\", fillcolor=" << fill;
    } else {
      out << "class=\"c" << g.colour(v) << "\", fillcolor=\"/set312/"
          << (g.colour(v) % palette) + 1 << '"';
    }
    out << "];\n";
  }
  for (const auto& [u, v] : g.edge_list())
    out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::json stats_json(const ColouredGraph& input, const ContractionResult& result) {
  nlohmann::json doc;
  doc["input"] = {{"n", input.order()}, {"m", input.size()}};
  doc["output"] = {{"n", result.graph.order()}, {"m", result.graph.size()}};
  doc["iterations"] = result.trace.iterations;
  auto per_iteration = nlohmann::json::array();
  double total_ms = 0.0;
  for (std::size_t k = 0; k < result.trace.per_iteration.size(); ++k) {
    const auto& record = result.trace.per_iteration[k];
    nlohmann::json entry = {{"iteration", k + 1},
                            {"n_before", record.n_before},
                            {"m_before", record.m_before},
                            {"n_after", record.n_after},
                            {"wall_time_ms", record.wall_time_ms}};
    if (record.mapping)
      entry["becomes"] = record.mapping->becomes;
    per_iteration.push_back(std::move(entry));
    total_ms += record.wall_time_ms;
  }
  doc["per_iteration"] = std::move(per_iteration);
  doc["total_wall_time_ms"] = total_ms;
  return doc;
}

} // namespace gcontract
