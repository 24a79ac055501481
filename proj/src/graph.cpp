#include "morsecell/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <deque>
#include <limits>
#include <numeric>

#include "morsecell/error.hpp"

namespace morsecell {

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : labels_(std::move(vertices)), adj_(labels_.size(), 0) {
  if (labels_.size() > kMaxVertices) {
    throw CapExceeded("graphs are limited to " + std::to_string(kMaxVertices) + " vertices");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw InvalidArgument("empty vertex label");
    for (std::size_t j = 0; j < i; ++j) {
      if (labels_[i] == labels_[j]) throw InvalidArgument("duplicate vertex label '" + labels_[i] + "'");
    }
  }
  for (const auto& [a, b] : edges) {
    auto u = index_of(a);
    auto v = index_of(b);
    if (!u || !v) throw InvalidArgument("edge {" + a + "," + b + "} uses an undeclared vertex");
    if (*u == *v) throw InvalidArgument("loop at vertex '" + a + "'");
    if (adjacent(*u, *v)) throw InvalidArgument("repeated edge {" + a + "," + b + "}");
    adj_[*u] |= VertexMask{1} << *v;
    adj_[*v] |= VertexMask{1} << *u;
  }
}

Graph Graph::from_adjacency(std::vector<std::string> vertices, std::vector<VertexMask> adjacency) {
  if (vertices.size() != adjacency.size()) throw InvalidArgument("adjacency size mismatch");
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    for (std::size_t v = u + 1; v < adjacency.size(); ++v) {
      if ((adjacency[u] >> v) & 1U) edges.emplace_back(vertices[u], vertices[v]);
    }
  }
  return Graph(std::move(vertices), edges);
}

std::size_t Graph::num_edges() const {
  std::size_t twice = 0;
  for (auto m : adj_) twice += static_cast<std::size_t>(std::popcount(m));
  return twice / 2;
}

std::optional<std::size_t> Graph::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Graph::degree(std::size_t v) const { return static_cast<std::size_t>(std::popcount(adj_[v])); }

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u) {
    for (std::size_t v = u + 1; v < adj_.size(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::induced(const std::vector<std::size_t>& vertices) const {
  Graph h;
  h.labels_.reserve(vertices.size());
  h.adj_.assign(vertices.size(), 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    h.labels_.push_back(labels_[vertices[i]]);
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      if (adjacent(vertices[i], vertices[j])) h.adj_[i] |= VertexMask{1} << j;
    }
  }
  return h;
}

std::vector<std::size_t> Graph::distances_from(std::size_t source) const {
  constexpr auto kUnreached = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(num_vertices(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    for (VertexMask m = adj_[u]; m != 0; m &= m - 1) {
      auto v = static_cast<std::size_t>(std::countr_zero(m));
      if (dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

bool Graph::is_connected() const {
  if (num_vertices() == 0) return true;
  auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(),
                      [](std::size_t d) { return d == std::numeric_limits<std::size_t>::max(); });
}

bool Graph::is_tree() const {
  return num_vertices() >= 1 && is_connected() && num_edges() + 1 == num_vertices();
}

void EdgeWeightedTree::validate() const {
  if (!tree.is_tree()) throw InvalidArgument("weighted tree: underlying graph is not a tree");
  for (auto [u, v] : tree.edges()) {
    auto key = std::minmax(tree.label(u), tree.label(v), natural_less);
    if (!weights.contains({key.first, key.second})) {
      throw InvalidArgument("weighted tree: edge {" + key.first + "," + key.second + "} has no weight");
    }
  }
  for (const auto& [key, w] : weights) {
    auto u = tree.index_of(key.first);
    auto v = tree.index_of(key.second);
    if (!u || !v || !tree.adjacent(*u, *v)) {
      throw InvalidArgument("weighted tree: weight given for a non-edge {" + key.first + "," + key.second + "}");
    }
  }
}

unsigned EdgeWeightedTree::weight(const std::string& a, const std::string& b) const {
  auto key = std::minmax(a, b, natural_less);
  auto it = weights.find({key.first, key.second});
  return it == weights.end() ? 0U : it->second;
}

RootedTreeLabeling label_rooted_tree(const Graph& tree, std::size_t root) {
  if (root >= tree.num_vertices()) throw InvalidArgument("root is not a vertex of the tree");
  if (!tree.is_tree()) throw InvalidArgument("rooted labeling needs a tree");
  RootedTreeLabeling out;
  out.root = root;
  out.position.assign(tree.num_vertices(), {0, 0});
  out.parent.assign(tree.num_vertices(), root);
  std::vector<bool> seen(tree.num_vertices(), false);
  seen[root] = true;
  out.levels.push_back({root});
  while (true) {
    const auto& current = out.levels.back();
    std::vector<std::size_t> next;
    for (std::size_t j = 0; j < current.size(); ++j) {
      std::vector<std::size_t> children;
      for (VertexMask m = tree.neighbors(current[j]); m != 0; m &= m - 1) {
        auto v = static_cast<std::size_t>(std::countr_zero(m));
        if (!seen[v]) children.push_back(v);
      }
      std::sort(children.begin(), children.end(), [&](std::size_t a, std::size_t b) {
        return natural_less(tree.label(a), tree.label(b));
      });
      for (auto v : children) {
        seen[v] = true;
        out.parent[v] = current[j];
        next.push_back(v);
      }
    }
    if (next.empty()) break;
    out.levels.push_back(std::move(next));
  }
  for (std::size_t i = 0; i < out.levels.size(); ++i) {
    for (std::size_t j = 0; j < out.levels[i].size(); ++j) out.position[out.levels[i][j]] = {i, j};
  }
  return out;
}

namespace {

std::vector<std::string> numbered(std::size_t count, std::size_t first = 1, const std::string& prefix = "x") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(prefix + std::to_string(first + i));
  return out;
}

Graph from_index_edges(std::vector<std::string> labels,
                       const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::pair<std::string, std::string>> named;
  for (auto [u, v] : edges) named.emplace_back(labels[u], labels[v]);
  return Graph(std::move(labels), named);
}

}  // namespace

Graph build_named(NamedGraph name, std::size_t n) {
  using E = std::vector<std::pair<std::size_t, std::size_t>>;
  switch (name) {
    case NamedGraph::path: {
      if (n < 2) throw InvalidArgument("path needs at least 2 vertices");
      E e;
      for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      return from_index_edges(numbered(n), e);
    }
    case NamedGraph::cycle: {
      if (n < 3) throw InvalidArgument("cycle needs at least 3 vertices");
      E e;
      for (std::size_t i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(0, n - 1);
      return from_index_edges(numbered(n), e);
    }
    case NamedGraph::star: {
      if (n < 1) throw InvalidArgument("star needs at least 1 leaf");
      E e;
      for (std::size_t i = 1; i <= n; ++i) e.emplace_back(0, i);
      return from_index_edges(numbered(n + 1, 0), e);
    }
    case NamedGraph::complete: {
      if (n < 2) throw InvalidArgument("complete graph needs at least 2 vertices");
      E e;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
      }
      return from_index_edges(numbered(n), e);
    }
    case NamedGraph::kite:
      // Diamond x1x2x3x4 with chord x2x4, pendant x5 on the degree-2 vertex x1.
      return from_index_edges(numbered(5), {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}, {0, 4}});
    case NamedGraph::gem:
      // Path x1x2x3x4 plus x5 adjacent to all of it.
      return from_index_edges(numbered(5), {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}});
    case NamedGraph::net:
      return from_index_edges(numbered(6), {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}});
    case NamedGraph::paw:
      return from_index_edges(numbered(4), {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
    case NamedGraph::diamond:
      return from_index_edges(numbered(4), {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}});
    case NamedGraph::butterfly:
      return from_index_edges(numbered(5), {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    case NamedGraph::tadpole:
      // Triangle with a path of length 2 hanging off x3.
      return from_index_edges(numbered(5), {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    case NamedGraph::cricket:
      return from_index_edges(numbered(5), {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {2, 4}});
    case NamedGraph::joined_six_cycles:
      return Graph({"s", "t", "u", "v", "w", "x", "y", "z"},
                   {{"v", "y"}, {"u", "x"}, {"x", "z"}, {"t", "w"}, {"y", "z"},
                    {"w", "z"}, {"s", "t"}, {"s", "v"}, {"s", "u"}});
  }
  throw InvalidArgument("unknown named graph");
}

namespace {

std::size_t parse_count(const std::string& s, const std::string& spec) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isdigit(ch); })) {
    throw ParseError("bad size parameter in graph name '" + spec + "'");
  }
  return static_cast<std::size_t>(std::stoul(s));
}

}  // namespace

Graph build_from_name(const std::string& spec) {
  std::string key = spec;
  std::string arg;
  if (auto colon = spec.find(':'); colon != std::string::npos) {
    key = spec.substr(0, colon);
    arg = spec.substr(colon + 1);
  }
  std::string lower = key;
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char ch) { return std::tolower(ch); });
  std::replace(lower.begin(), lower.end(), '-', '_');

  if (arg.empty() && key.size() >= 2 && std::isdigit(static_cast<unsigned char>(key[1]))) {
    // Short forms P5, C4, K4, K1,3.
    if (key.rfind("K1,", 0) == 0) return build_named(NamedGraph::star, parse_count(key.substr(3), spec));
    std::size_t n = parse_count(key.substr(1), spec);
    switch (key[0]) {
      case 'P': return build_named(NamedGraph::path, n);
      case 'C': return build_named(NamedGraph::cycle, n);
      case 'K': return build_named(NamedGraph::complete, n);
      default: break;
    }
  }
  if (lower == "path") return build_named(NamedGraph::path, parse_count(arg, spec));
  if (lower == "cycle") return build_named(NamedGraph::cycle, parse_count(arg, spec));
  if (lower == "star") return build_named(NamedGraph::star, parse_count(arg, spec));
  if (lower == "complete") return build_named(NamedGraph::complete, parse_count(arg, spec));
  if (lower == "labc") {
    std::vector<std::size_t> p;
    std::size_t start = 0;
    while (start <= arg.size()) {
      auto comma = arg.find(',', start);
      if (comma == std::string::npos) comma = arg.size();
      p.push_back(parse_count(arg.substr(start, comma - start), spec));
      start = comma + 1;
    }
    if (p.size() != 3) throw ParseError("labc needs three parameters: '" + spec + "'");
    return build_labc(p[0], p[1], p[2]);
  }
  static const std::pair<const char*, NamedGraph> kFixed[] = {
      {"kite", NamedGraph::kite},           {"gem", NamedGraph::gem},
      {"net", NamedGraph::net},             {"paw", NamedGraph::paw},
      {"diamond", NamedGraph::diamond},     {"butterfly", NamedGraph::butterfly},
      {"tadpole", NamedGraph::tadpole},     {"cricket", NamedGraph::cricket},
      {"joined_six_cycles", NamedGraph::joined_six_cycles},
  };
  for (const auto& [name, value] : kFixed) {
    if (lower == name && arg.empty()) return build_named(value);
  }
  throw ParseError("unknown graph name '" + spec + "'");
}

Graph build_labc(std::size_t a, std::size_t b, std::size_t c) {
  std::vector<std::string> labels{"x", "y"};
  std::vector<std::pair<std::string, std::string>> edges{{"x", "y"}};
  for (std::size_t i = 1; i <= a; ++i) {
    labels.push_back("x" + std::to_string(i));
    edges.emplace_back("x", labels.back());
  }
  for (std::size_t j = 1; j <= b; ++j) {
    labels.push_back("y" + std::to_string(j));
    edges.emplace_back("y", labels.back());
  }
  for (std::size_t k = 1; k <= c; ++k) {
    labels.push_back("z" + std::to_string(k));
    edges.emplace_back("x", labels.back());
    edges.emplace_back("y", labels.back());
  }
  return Graph(std::move(labels), edges);
}

Graph build_bf(const EdgeWeightedTree& tw) {
  tw.validate();
  const Graph& t = tw.tree;
  std::vector<std::string> labels = t.labels();
  std::vector<std::pair<std::string, std::string>> edges;
  for (auto [u, v] : t.edges()) edges.emplace_back(t.label(u), t.label(v));
  for (auto [u, v] : t.edges()) {
    auto [y, z] = std::minmax(t.label(u), t.label(v), natural_less);
    unsigned w = tw.weight(y, z);
    for (unsigned i = 1; i <= w; ++i) {
      labels.push_back("v" + y + "." + z + "." + std::to_string(i));
      edges.emplace_back(y, labels.back());
      edges.emplace_back(z, labels.back());
    }
  }
  return Graph(std::move(labels), edges);
}

bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      std::string na = a.substr(i, ie - i);
      std::string nb = b.substr(j, je - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size() - 1));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size() - 1));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  if (a.size() - i != b.size() - j) return a.size() - i < b.size() - j;
  return a < b;
}

namespace {

std::vector<std::size_t> variable_slots(const Graph& g) {
  std::vector<std::size_t> order(g.num_vertices());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return natural_less(g.label(a), g.label(b)); });
  std::vector<std::size_t> slot(g.num_vertices());
  for (std::size_t i = 0; i < order.size(); ++i) slot[order[i]] = i;
  return slot;
}

}  // namespace

std::vector<std::string> edge_ideal_variables(const Graph& g) {
  std::vector<std::string> names = g.labels();
  std::sort(names.begin(), names.end(), natural_less);
  return names;
}

Monomial edge_monomial(const Graph& g, std::size_t u, std::size_t v) {
  if (!g.adjacent(u, v)) throw InvalidArgument("not an edge: {" + g.label(u) + "," + g.label(v) + "}");
  auto slot = variable_slots(g);
  Monomial m(g.num_vertices());
  m.set(slot[u], 1);
  m.set(slot[v], 1);
  return m;
}

MonomialIdeal edge_ideal(const Graph& g) {
  if (g.num_edges() == 0) throw ZeroIdeal("the edge ideal of an edgeless graph is zero");
  if (g.num_vertices() > kMaxVars) {
    throw CapExceeded("edge ideals are limited to " + std::to_string(kMaxVars) + " variables");
  }
  auto slot = variable_slots(g);
  std::vector<Monomial> gens;
  for (auto [u, v] : g.edges()) {
    Monomial m(g.num_vertices());
    m.set(slot[u], 1);
    m.set(slot[v], 1);
    gens.push_back(m);
  }
  return MonomialIdeal::minimalize(std::move(gens));
}

}  // namespace morsecell
