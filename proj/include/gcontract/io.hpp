#pragma once

// Text graph format, line oriented:
//
//   n m
//   c_0 c_1 ... c_{n-1}        (omitted when n = 0)
//   u v                        (m lines, any order and orientation)
//
// Lines whose first non-blank character is '#' are comments. Output is
// canonical: edges as "u v" with u < v, sorted.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "gcontract/beta.hpp"
#include "gcontract/fibonacci.hpp"
#include "gcontract/graph.hpp"

namespace gcontract {

/// GraphError carrying the 1-based input line it refers to.
class ParseError : public GraphError {
public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

ColouredGraph parse_graph(std::istream& in);
ColouredGraph parse_graph_string(const std::string& text);

std::string serialize_graph(const ColouredGraph& g);

/// Role comment ("# roles: P Q R ...") written alongside Fibonacci instances.
std::string serialize_roles(const std::vector<FibRole>& roles);

/// Reads roles back from a "# roles:" comment, if the text has one.
std::optional<std::vector<FibRole>> parse_roles(const std::string& text);

/// Undirected DOT; one fill colour per colour id, or per role when roles are given.
std::string export_dot(const ColouredGraph& g, const std::vector<FibRole>* roles = nullptr);

/**
   Stats document for one contraction run:
   {"input": {"n", "m"}, "output": {"n", "m"}, "iterations",
    "total_wall_time_ms", "per_iteration": [{"iteration", "n_before",
    "m_before", "n_after", "wall_time_ms"[, "becomes"]}]}
   "becomes" is included only for traced runs.
 */
nlohmann::json stats_json(const ColouredGraph& input, const ContractionResult& result);

} // namespace gcontract
