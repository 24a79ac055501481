#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "morsecell/betti.hpp"
#include "morsecell/critical.hpp"
#include "morsecell/graph.hpp"
#include "morsecell/ideal.hpp"
#include "morsecell/order.hpp"
#include "morsecell/search.hpp"

namespace morsecell {

using Json = nlohmann::ordered_json;

/// An ideal with names for its ambient variables.
struct NamedIdeal {
  MonomialIdeal ideal;
  std::vector<std::string> vars;
};

/// Parses "x1^2*x2*x4" (implicit exponent 1, "1" for the unit) over `vars`.
Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars);

/// Parses a comma-separated list of generators, largest first.
TotalOrder parse_order(const std::string& text, const NamedIdeal& named);

/// {"vars": [...], "gens": [[e1,...], ...]}
NamedIdeal ideal_from_json(const Json& j);
Json ideal_to_json(const NamedIdeal& named);

/// {"vertices": [...], "edges": [["u","v"], ...]}
Graph graph_from_json(const Json& j);
Json graph_to_json(const Graph& g);

/// One "u v" edge per line; blank lines and '#' comments are ignored.
/// Vertices are declared in order of first appearance.
Graph graph_from_edge_list(const std::string& text);

/// Graph JSON plus {"weights": [[["u","v"], k], ...]}.
EdgeWeightedTree tree_from_json(const Json& j);
Json tree_to_json(const EdgeWeightedTree& tw);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_file(const std::string& path);

/// Parses JSON text, rethrowing syntax errors as ParseError.
Json parse_json(const std::string& text);

/// Loads an ideal file, or the edge ideal of a graph file (JSON or edge list).
NamedIdeal load_ideal(const std::string& path);
Graph load_graph(const std::string& path);

NamedIdeal named_edge_ideal(const Graph& g);

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars);

/// Members of `mask` as generator strings, in canonical generator order.
Json subset_to_json(GenMask mask, const NamedIdeal& named);

Json order_to_json(const TotalOrder& order, const NamedIdeal& named);

/// {"i", "degree", "value"} records sorted by (i, degree).
Json graded_to_json(const GradedCounts& counts);

Json outcome_to_json(const SearchOutcome& outcome, const NamedIdeal& named);

}  // namespace morsecell
