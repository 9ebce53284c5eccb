#include "phin/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace phin {

namespace {

std::vector<std::size_t> order_by_id(std::size_t n, auto&& id_of) {
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return id_of(a) < id_of(b);
  });
  return idx;
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

void require_connected(const DualGraph& g) {
  if (!g.is_connected()) throw GraphError("graph is disconnected");
}

}  // namespace

DualGraph::DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty()) throw GraphError("graph has no vertices");
  std::set<std::string> seen;
  for (const auto& v : vertices_) {
    if (v.id.empty()) throw GraphError("empty vertex id");
    if (v.genus < 0) throw GraphError("negative genus at vertex '" + v.id + "'");
    if (!seen.insert(v.id).second) throw GraphError("duplicate vertex id '" + v.id + "'");
  }
  seen.clear();
  for (const auto& e : edges_) {
    if (e.id.empty()) throw GraphError("empty edge id");
    if (!seen.insert(e.id).second) throw GraphError("duplicate edge id '" + e.id + "'");
    tails_.push_back(vertex_index(e.tail));
    heads_.push_back(vertex_index(e.head));
  }
}

std::size_t DualGraph::vertex_index(const std::string& id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  throw GraphError("unknown vertex id '" + id + "'");
}

bool DualGraph::is_connected() const {
  DisjointSets sets(vertices_.size());
  std::size_t components = vertices_.size();
  for (std::size_t e = 0; e < edges_.size(); ++e)
    if (sets.unite(tails_[e], heads_[e])) --components;
  return components == 1;
}

std::int64_t DualGraph::total_genus() const {
  std::int64_t g = 0;
  for (const auto& v : vertices_) g += v.genus;
  return g;
}

std::vector<std::size_t> DualGraph::vertices_by_id() const {
  return order_by_id(vertices_.size(), [&](std::size_t i) { return vertices_[i].id; });
}

std::vector<std::size_t> DualGraph::edges_by_id() const {
  return order_by_id(edges_.size(), [&](std::size_t i) { return edges_[i].id; });
}

QMatrix DualGraph::boundary_matrix() const {
  QMatrix d(vertices_.size(), edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    d(heads_[e], e) += 1;
    d(tails_[e], e) -= 1;
  }
  return d;
}

QMatrix CycleBasis::as_columns(std::size_t edge_count) const {
  QMatrix c(edge_count, cycles.size());
  for (std::size_t j = 0; j < cycles.size(); ++j) {
    if (cycles[j].size() != edge_count) throw DimensionError("cycle length mismatch");
    for (std::size_t e = 0; e < edge_count; ++e) c(e, j) = cycles[j][e];
  }
  return c;
}

std::int64_t betti_one(const DualGraph& g) {
  require_connected(g);
  return static_cast<std::int64_t>(g.edges().size()) -
         static_cast<std::int64_t>(g.vertices().size()) + 1;
}

CycleBasis cycle_basis(const DualGraph& g) {
  require_connected(g);
  const std::size_t nv = g.vertices().size();
  const std::size_t ne = g.edges().size();

  DisjointSets sets(nv);
  std::vector<bool> in_tree(ne, false);
  std::vector<std::size_t> non_tree;
  for (std::size_t e : g.edges_by_id()) {
    if (sets.unite(g.tail_index(e), g.head_index(e))) {
      in_tree[e] = true;
    } else {
      non_tree.push_back(e);
    }
  }

  // Root the tree at vertex 0; record each vertex's parent edge and the sign
  // with which walking from the vertex toward the root traverses that edge.
  std::vector<std::vector<std::size_t>> adjacent(nv);
  for (std::size_t e = 0; e < ne; ++e) {
    if (!in_tree[e]) continue;
    adjacent[g.tail_index(e)].push_back(e);
    adjacent[g.head_index(e)].push_back(e);
  }
  std::vector<std::size_t> parent_edge(nv, ne), depth(nv, 0);
  std::vector<std::size_t> parent(nv, nv);
  std::vector<std::size_t> stack{0};
  std::vector<bool> seen(nv, false);
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t e : adjacent[v]) {
      const std::size_t w = g.tail_index(e) == v ? g.head_index(e) : g.tail_index(e);
      if (seen[w]) continue;
      seen[w] = true;
      parent[w] = v;
      parent_edge[w] = e;
      depth[w] = depth[v] + 1;
      stack.push_back(w);
    }
  }
  // +1 when the step w -> parent[w] follows the stored orientation.
  auto step_sign = [&](std::size_t w) -> std::int64_t {
    return g.tail_index(parent_edge[w]) == w ? 1 : -1;
  };

  CycleBasis basis;
  for (std::size_t e : non_tree) {
    std::vector<std::int64_t> cycle(ne, 0);
    cycle[e] = 1;
    // Close the loop: walk head -> tail through the tree.
    std::size_t a = g.head_index(e), b = g.tail_index(e);
    std::vector<std::size_t> from_b;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        cycle[parent_edge[a]] += step_sign(a);
        a = parent[a];
      } else {
        from_b.push_back(b);
        b = parent[b];
      }
    }
    // The b-side was collected walking up from the tail; we traverse it down.
    for (std::size_t w : from_b) cycle[parent_edge[w]] -= step_sign(w);
    basis.cycles.push_back(std::move(cycle));
  }
  return basis;
}

Rational edge_pairing(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) {
  if (x.size() != y.size()) throw DimensionError("edge_pairing: dimension mismatch");
  Integer acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += Integer(static_cast<long>(x[i])) * static_cast<long>(y[i]);
  }
  return Rational(acc);
}

QMatrix monodromy_gram(const DualGraph& g) {
  const CycleBasis basis = cycle_basis(g);
  const std::size_t n = basis.cycles.size();
  QMatrix gram(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      gram(i, j) = edge_pairing(basis.cycles[i], basis.cycles[j]);
  return gram;
}

}  // namespace phin
