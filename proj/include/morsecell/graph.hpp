#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "morsecell/ideal.hpp"

namespace morsecell {

inline constexpr std::size_t kMaxVertices = 64;

using VertexMask = std::uint64_t;

/// A simple undirected graph with string-labelled vertices. Vertex indices
/// follow the order in which labels were declared.
class Graph {
 public:
  Graph() = default;

  /// Throws InvalidArgument on duplicate labels, loops, repeated edges or
  /// endpoints that are not declared vertices.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  /// Index-based construction; labels given separately.
  static Graph from_adjacency(std::vector<std::string> vertices, std::vector<VertexMask> adjacency);

  std::size_t num_vertices() const { return labels_.size(); }
  std::size_t num_edges() const;
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t v) const { return labels_[v]; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool adjacent(std::size_t u, std::size_t v) const { return (adj_[u] >> v) & 1U; }
  VertexMask neighbors(std::size_t v) const { return adj_[v]; }
  std::size_t degree(std::size_t v) const;

  /// Edges as index pairs (u < v), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// The subgraph induced on `vertices` (indices into this graph), keeping
  /// their labels, in the order given.
  Graph induced(const std::vector<std::size_t>& vertices) const;

  bool is_connected() const;
  bool is_tree() const;

  /// BFS distances from `source`; unreachable vertices get SIZE_MAX.
  std::vector<std::size_t> distances_from(std::size_t source) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> labels_;
  std::vector<VertexMask> adj_;
};

/// A tree with a nonnegative integer weight on every edge.
struct EdgeWeightedTree {
  Graph tree;
  /// Keyed by the edge's endpoint labels in sorted order.
  std::map<std::pair<std::string, std::string>, unsigned> weights;

  /// Throws InvalidArgument unless `tree` is a tree and every edge has a weight.
  void validate() const;
  unsigned weight(const std::string& a, const std::string& b) const;
};

/// The vertices of a rooted tree grouped by distance from the root. Level
/// i holds x_{i,1}, ..., x_{i,c_i}; level i+1 is ordered by the position of
/// the parent, then by label.
struct RootedTreeLabeling {
  std::size_t root = 0;
  std::vector<std::vector<std::size_t>> levels;
  /// vertex -> (level, position within level), both 0-based.
  std::vector<std::pair<std::size_t, std::size_t>> position;
  std::vector<std::size_t> parent;
};

RootedTreeLabeling label_rooted_tree(const Graph& tree, std::size_t root);

enum class NamedGraph {
  path,
  cycle,
  star,
  complete,
  kite,
  gem,
  net,
  paw,
  diamond,
  butterfly,
  tadpole,
  cricket,
  joined_six_cycles,
};

/// Builds a standard graph on labels x1, x2, ... (`star` uses x0 for the
/// centre and k leaves; `joined_six_cycles` uses s..z). `n` is the size
/// parameter for path, cycle, star and complete and is ignored otherwise.
Graph build_named(NamedGraph name, std::size_t n = 0);

/// Parses names like "diamond", "cycle:5", "P5", "C4", "K4", "K1,3", "labc:1,2,0".
Graph build_from_name(const std::string& spec);

/// L(a,b,c): base edge xy, a leaves at x, b leaves at y, c triangles on xy.
Graph build_labc(std::size_t a, std::size_t b, std::size_t c);

/// BF(T, w): for each tree edge yz, w(yz) new vertices joined to y and z.
/// New vertices are labelled "v<y>.<z>.<i>" (y, z the sorted endpoint labels).
Graph build_bf(const EdgeWeightedTree& tw);

/// I(G) over the variables in sorted (natural) vertex-label order.
MonomialIdeal edge_ideal(const Graph& g);

/// Vertex labels in the variable order used by edge_ideal.
std::vector<std::string> edge_ideal_variables(const Graph& g);

/// The generator x_u x_v of I(G) for vertex indices u, v.
Monomial edge_monomial(const Graph& g, std::size_t u, std::size_t v);

/// Natural ordering on labels: digit runs compare numerically.
bool natural_less(const std::string& a, const std::string& b);

bool is_chordal(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

/// True iff some vertex subset of g induces a graph isomorphic to h.
bool contains_induced(const Graph& g, const Graph& h);

struct LabcParams {
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;
  friend bool operator==(const LabcParams&, const LabcParams&) = default;
};

/// Parameters with build_labc(a,b,c) isomorphic to g (a >= b), or nullopt.
/// Throws InvalidArgument on disconnected or edgeless input.
std::optional<LabcParams> recognize_labc(const Graph& g);

/// A tree and weights with build_bf isomorphic to g, or nullopt.
/// Throws InvalidArgument on disconnected input.
std::optional<EdgeWeightedTree> recognize_bf(const Graph& g);

/// One representative per isomorphism class of connected graphs on n
/// vertices (1 <= n <= 7), labelled x1..xn, sorted by canonical code.
std::vector<Graph> enumerate_connected(std::size_t n);

/// Canonical adjacency code: the lexicographically smallest upper-triangle
/// bit string over all vertex relabellings (n <= 8).
std::uint64_t canonical_code(const Graph& g);

}  // namespace morsecell
