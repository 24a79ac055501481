#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <limits>
#include <set>

#include "morsecell/error.hpp"
#include "morsecell/graph.hpp"

namespace morsecell {

bool is_chordal(const Graph& g) {
  // Maximum cardinality search; the reverse visit order is a perfect
  // elimination ordering exactly when g is chordal.
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> weight(n, 0);
  VertexMask visited = 0;
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v) {
      if ((visited >> v) & 1U) continue;
      if (best == n || weight[v] > weight[best]) best = v;
    }
    // Earlier-visited neighbours must be pairwise adjacent.
    VertexMask earlier = g.neighbors(best) & visited;
    for (VertexMask m = earlier; m != 0; m &= m - 1) {
      auto u = static_cast<std::size_t>(std::countr_zero(m));
      VertexMask others = earlier & ~(VertexMask{1} << u);
      if ((g.neighbors(u) & others) != others) return false;
    }
    visited |= VertexMask{1} << best;
    for (VertexMask m = g.neighbors(best) & ~visited; m != 0; m &= m - 1) {
      ++weight[static_cast<std::size_t>(std::countr_zero(m))];
    }
  }
  return true;
}

namespace {

std::vector<std::size_t> sorted_degrees(const Graph& g) {
  std::vector<std::size_t> d;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) d.push_back(g.degree(v));
  std::sort(d.begin(), d.end());
  return d;
}

bool extend_isomorphism(const Graph& g, const Graph& h, const std::vector<std::size_t>& order,
                        std::size_t k, std::vector<std::size_t>& image, VertexMask used) {
  if (k == order.size()) return true;
  const std::size_t v = order[k];
  for (std::size_t w = 0; w < h.num_vertices(); ++w) {
    if ((used >> w) & 1U) continue;
    if (g.degree(v) != h.degree(w)) continue;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      ok = g.adjacent(v, order[i]) == h.adjacent(w, image[order[i]]);
    }
    if (!ok) continue;
    image[v] = w;
    if (extend_isomorphism(g, h, order, k + 1, image, used | (VertexMask{1} << w))) return true;
  }
  return false;
}

}  // namespace

bool are_isomorphic(const Graph& g, const Graph& h) {
  if (g.num_vertices() != h.num_vertices() || g.num_edges() != h.num_edges()) return false;
  if (sorted_degrees(g) != sorted_degrees(h)) return false;
  // Visit vertices in BFS-like order so adjacency constraints bite early.
  std::vector<std::size_t> order;
  VertexMask placed = 0;
  while (order.size() < g.num_vertices()) {
    std::size_t pick = g.num_vertices();
    int best_links = -1;
    for (std::size_t v = 0; v < g.num_vertices(); ++v) {
      if ((placed >> v) & 1U) continue;
      int links = std::popcount(g.neighbors(v) & placed);
      if (links > best_links || (links == best_links && g.degree(v) > g.degree(pick))) {
        pick = v;
        best_links = links;
      }
    }
    order.push_back(pick);
    placed |= VertexMask{1} << pick;
  }
  std::vector<std::size_t> image(g.num_vertices(), 0);
  return extend_isomorphism(g, h, order, 0, image, 0);
}

bool contains_induced(const Graph& g, const Graph& h) {
  const std::size_t k = h.num_vertices();
  const std::size_t n = g.num_vertices();
  if (k > n) return false;
  if (k == 0) return true;
  const auto target_degrees = sorted_degrees(h);
  const std::size_t target_edges = h.num_edges();
  std::vector<std::size_t> pick;
  std::function<bool(std::size_t)> rec = [&](std::size_t start) -> bool {
    if (pick.size() == k) {
      Graph sub = g.induced(pick);
      if (sub.num_edges() != target_edges || sorted_degrees(sub) != target_degrees) return false;
      return are_isomorphic(sub, h);
    }
    for (std::size_t v = start; v + (k - pick.size()) <= n; ++v) {
      pick.push_back(v);
      if (rec(v + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  return rec(0);
}

namespace {

void require_connected_nonempty(const Graph& g, const char* who) {
  if (g.num_vertices() == 0) throw InvalidArgument(std::string(who) + ": empty graph");
  if (!g.is_connected()) throw InvalidArgument(std::string(who) + ": graph is disconnected");
}

}  // namespace

std::optional<LabcParams> recognize_labc(const Graph& g) {
  require_connected_nonempty(g, "recognize_labc");
  if (g.num_edges() == 0) throw InvalidArgument("recognize_labc: graph has no edges");
  std::optional<LabcParams> best;
  for (auto [x, y] : g.edges()) {
    const VertexMask bx = VertexMask{1} << x;
    const VertexMask by = VertexMask{1} << y;
    LabcParams p;
    bool ok = true;
    for (std::size_t v = 0; v < g.num_vertices() && ok; ++v) {
      if (v == x || v == y) continue;
      VertexMask nb = g.neighbors(v);
      if (nb == bx) {
        ++p.a;
      } else if (nb == by) {
        ++p.b;
      } else if (nb == (bx | by)) {
        ++p.c;
      } else {
        ok = false;
      }
    }
    if (!ok) continue;
    if (p.a < p.b) std::swap(p.a, p.b);
    if (!best || std::tie(p.a, p.b, p.c) > std::tie(best->a, best->b, best->c)) best = p;
  }
  return best;
}

std::optional<EdgeWeightedTree> recognize_bf(const Graph& g) {
  require_connected_nonempty(g, "recognize_bf");
  if (!is_chordal(g)) return std::nullopt;
  const std::size_t n = g.num_vertices();

  struct Triangle {
    std::size_t apex;
    std::size_t y;
    std::size_t z;
  };
  std::vector<Triangle> triangles;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!g.adjacent(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!g.adjacent(a, c) || !g.adjacent(b, c)) continue;
        std::array<std::size_t, 3> tri{a, b, c};
        std::optional<std::size_t> apex;
        for (auto v : tri) {
          if (g.degree(v) != 2) continue;
          if (!apex || natural_less(g.label(v), g.label(*apex))) apex = v;
        }
        if (!apex) return std::nullopt;
        Triangle t{*apex, 0, 0};
        std::vector<std::size_t> rest;
        for (auto v : tri) {
          if (v != *apex) rest.push_back(v);
        }
        t.y = rest[0];
        t.z = rest[1];
        triangles.push_back(t);
      }
    }
  }

  VertexMask removed = 0;
  for (const auto& t : triangles) removed |= VertexMask{1} << t.apex;
  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < n; ++v) {
    if (!((removed >> v) & 1U)) kept.push_back(v);
  }
  EdgeWeightedTree out;
  out.tree = g.induced(kept);
  if (!out.tree.is_tree()) return std::nullopt;
  for (auto [u, v] : out.tree.edges()) {
    auto key = std::minmax(out.tree.label(u), out.tree.label(v), natural_less);
    out.weights[{key.first, key.second}] = 0;
  }
  for (const auto& t : triangles) {
    if (((removed >> t.y) & 1U) || ((removed >> t.z) & 1U)) return std::nullopt;
    auto key = std::minmax(g.label(t.y), g.label(t.z), natural_less);
    ++out.weights[{key.first, key.second}];
  }
  return out;
}

namespace {

constexpr std::size_t kMaxCanonicalVertices = 8;

struct CanonicalSearch {
  const Graph& g;
  std::size_t n;
  std::size_t total_bits;
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::array<std::size_t, kMaxCanonicalVertices> perm{};

  void run(std::size_t k, std::uint64_t code, VertexMask used) {
    if (k == n) {
      best = std::min(best, code);
      return;
    }
    const std::size_t bits = (k + 1) * k / 2;
    for (std::size_t v = 0; v < n; ++v) {
      if ((used >> v) & 1U) continue;
      std::uint64_t next = code;
      for (std::size_t i = 0; i < k; ++i) next = (next << 1) | (g.adjacent(perm[i], v) ? 1U : 0U);
      if (best != std::numeric_limits<std::uint64_t>::max() && next > (best >> (total_bits - bits))) continue;
      perm[k] = v;
      run(k + 1, next, used | (VertexMask{1} << v));
    }
  }
};

Graph decode_canonical(std::uint64_t code, std::size_t n) {
  std::vector<VertexMask> adj(n, 0);
  std::size_t bit_index = n * (n - 1) / 2;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < k; ++i) {
      --bit_index;
      if ((code >> bit_index) & 1U) {
        adj[k] |= VertexMask{1} << i;
        adj[i] |= VertexMask{1} << k;
      }
    }
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  return Graph::from_adjacency(std::move(labels), std::move(adj));
}

}  // namespace

std::uint64_t canonical_code(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxCanonicalVertices) throw CapExceeded("canonical codes are limited to 8 vertices");
  if (n <= 1) return 0;
  CanonicalSearch search{g, n, n * (n - 1) / 2};
  search.run(0, 0, 0);
  return search.best;
}

std::vector<Graph> enumerate_connected(std::size_t n) {
  if (n < 1 || n > 7) throw InvalidArgument("enumerate_connected supports 1 <= n <= 7");
  // All graphs on k vertices, grown one vertex at a time.
  std::set<std::uint64_t> layer{0};
  for (std::size_t k = 1; k < n; ++k) {
    std::set<std::uint64_t> next;
    for (auto code : layer) {
      Graph base = decode_canonical(code, k);
      for (VertexMask nb = 0; nb < (VertexMask{1} << k); ++nb) {
        std::vector<VertexMask> adj;
        for (std::size_t v = 0; v < k; ++v) {
          adj.push_back(base.neighbors(v) | (((nb >> v) & 1U) ? (VertexMask{1} << k) : 0));
        }
        adj.push_back(nb);
        std::vector<std::string> labels;
        for (std::size_t i = 0; i <= k; ++i) labels.push_back("x" + std::to_string(i + 1));
        next.insert(canonical_code(Graph::from_adjacency(std::move(labels), std::move(adj))));
      }
    }
    layer = std::move(next);
  }
  std::vector<Graph> out;
  for (auto code : layer) {
    Graph g = decode_canonical(code, n);
    if (g.is_connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace morsecell
