#include "morsecell/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "morsecell/error.hpp"

namespace morsecell {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string piece;
  std::istringstream in(s);
  while (std::getline(in, piece, sep)) out.push_back(trim(piece));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

int parse_exponent(const std::string& text, const std::string& whole) {
  if (text.empty() || !std::all_of(text.begin(), text.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    throw ParseError("bad exponent in monomial '" + whole + "'");
  }
  if (text.size() > 5) throw ParseError("exponent too large in monomial '" + whole + "'");
  return std::stoi(text);
}

std::vector<std::pair<std::string, std::string>> edges_of(const Json& j) {
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("each edge must be a pair of vertex labels");
    edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return edges;
}

}  // namespace

Monomial parse_monomial(const std::string& text, const std::vector<std::string>& vars) {
  const std::string body = trim(text);
  if (body.empty()) throw ParseError("empty monomial");
  Monomial m(vars.size());
  if (body == "1") return m;
  for (const auto& factor : split(body, '*')) {
    const auto caret = factor.find('^');
    const std::string name = trim(factor.substr(0, caret));
    const int exponent = caret == std::string::npos ? 1 : parse_exponent(trim(factor.substr(caret + 1)), body);
    const auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw ParseError("unknown variable '" + name + "' in monomial '" + body + "'");
    const auto v = static_cast<std::size_t>(it - vars.begin());
    m.set(v, m[v] + exponent);
  }
  return m;
}

TotalOrder parse_order(const std::string& text, const NamedIdeal& named) {
  std::vector<Monomial> listed;
  for (const auto& piece : split(text, ',')) listed.push_back(parse_monomial(piece, named.vars));
  return TotalOrder::from_monomials(named.ideal, listed);
}

NamedIdeal ideal_from_json(const Json& j) {
  try {
    auto vars = j.at("vars").get<std::vector<std::string>>();
    if (vars.size() > kMaxVars) throw CapExceeded("at most " + std::to_string(kMaxVars) + " variables are supported");
    std::vector<Monomial> gens;
    for (const auto& row : j.at("gens")) {
      auto exps = row.get<std::vector<int>>();
      if (exps.size() != vars.size()) {
        throw ParseError("generator has " + std::to_string(exps.size()) + " exponents for " +
                         std::to_string(vars.size()) + " variables");
      }
      if (std::any_of(exps.begin(), exps.end(), [](int e) { return e < 0 || e > 65535; })) {
        throw ParseError("exponents must lie in 0..65535");
      }
      gens.emplace_back(std::span<const int>(exps));
    }
    return NamedIdeal{MonomialIdeal::minimalize(std::move(gens)), std::move(vars)};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ideal JSON: ") + e.what());
  }
}

Json ideal_to_json(const NamedIdeal& named) {
  Json gens = Json::array();
  for (const auto& g : named.ideal.gens()) {
    gens.push_back(std::vector<int>(g.exponents().begin(), g.exponents().end()));
  }
  return Json{{"vars", named.vars}, {"gens", gens}};
}

Graph graph_from_json(const Json& j) {
  try {
    return Graph(j.at("vertices").get<std::vector<std::string>>(), edges_of(j));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed graph JSON: ") + e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  return Json{{"vertices", g.labels()}, {"edges", edges}};
}

Graph graph_from_edge_list(const std::string& text) {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto declare = [&](const std::string& v) {
    if (std::find(vertices.begin(), vertices.end(), v) == vertices.end()) vertices.push_back(v);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    if (tokens.size() == 1) {
      declare(tokens[0]);
      continue;
    }
    if (tokens.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": expected 'u v'");
    declare(tokens[0]);
    declare(tokens[1]);
    edges.emplace_back(tokens[0], tokens[1]);
  }
  return Graph(std::move(vertices), edges);
}

EdgeWeightedTree tree_from_json(const Json& j) {
  EdgeWeightedTree tw;
  tw.tree = graph_from_json(j);
  try {
    for (const auto& entry : j.at("weights")) {
      auto edge = entry.at(0).get<std::vector<std::string>>();
      const int w = entry.at(1).get<int>();
      if (edge.size() != 2 || w < 0) throw ParseError("weights are [[u, v], k] with k >= 0");
      auto [a, b] = std::minmax(edge[0], edge[1], natural_less);
      tw.weights[{a, b}] = static_cast<unsigned>(w);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed weights: ") + e.what());
  }
  tw.validate();
  return tw;
}

Json tree_to_json(const EdgeWeightedTree& tw) {
  Json j = graph_to_json(tw.tree);
  Json weights = Json::array();
  for (const auto& [edge, w] : tw.weights) weights.push_back(Json::array({Json::array({edge.first, edge.second}), w}));
  j["weights"] = weights;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

NamedIdeal named_edge_ideal(const Graph& g) { return NamedIdeal{edge_ideal(g), edge_ideal_variables(g)}; }

Graph load_graph(const std::string& path) {
  const std::string text = read_file(path);
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') return graph_from_json(parse_json(body));
  return graph_from_edge_list(text);
}

NamedIdeal load_ideal(const std::string& path) {
  const std::string text = read_file(path);
  const std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    Json j = parse_json(body);
    if (j.contains("gens")) return ideal_from_json(j);
    return named_edge_ideal(graph_from_json(j));
  }
  return named_edge_ideal(graph_from_edge_list(text));
}

std::string monomial_text(const Monomial& m, const std::vector<std::string>& vars) { return to_string(m, vars); }

Json subset_to_json(GenMask mask, const NamedIdeal& named) {
  Json out = Json::array();
  for (auto g : mask_members(mask)) out.push_back(monomial_text(named.ideal.gen(g), named.vars));
  return out;
}

Json order_to_json(const TotalOrder& order, const NamedIdeal& named) {
  Json out = Json::array();
  for (auto g : order.ranking()) out.push_back(monomial_text(named.ideal.gen(g), named.vars));
  return out;
}

Json graded_to_json(const GradedCounts& counts) {
  Json out = Json::array();
  for (const auto& [key, value] : counts) {
    out.push_back({{"i", key.i},
                   {"degree", std::vector<int>(key.degree.exponents().begin(), key.degree.exponents().end())},
                   {"value", value}});
  }
  return out;
}

Json outcome_to_json(const SearchOutcome& outcome, const NamedIdeal& named) {
  Json j{{"result", to_string(outcome.result)}};
  j["witness"] = outcome.witness ? order_to_json(*outcome.witness, named) : Json(nullptr);
  j["witness_rank"] = outcome.witness_rank ? Json(*outcome.witness_rank) : Json(nullptr);
  j["stats"] = {{"examined", outcome.stats.examined},
                {"pruned", outcome.stats.pruned},
                {"elapsed_seconds", outcome.stats.elapsed_seconds}};
  return j;
}

}  // namespace morsecell
