#pragma once

#include "phin/matrix.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace phin {

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Vertex {
  std::string id;
  std::int64_t genus = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// One stored orientation of the edge pair {e, tau(e)}; reversing it is
/// coordinate negation.
struct Edge {
  std::string id;
  std::string tail;
  std::string head;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Dual graph of a semistable special fiber: vertices are components
/// (labelled by genus), edges are double points. Loops and parallel edges
/// are allowed.
class DualGraph {
 public:
  /// Validates ids (unique, nonempty) and edge endpoints; connectivity is
  /// checked separately by the homology operations.
  DualGraph(std::vector<Vertex> vertices, std::vector<Edge> edges);

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t vertex_index(const std::string& id) const;
  std::size_t tail_index(std::size_t edge) const { return tails_[edge]; }
  std::size_t head_index(std::size_t edge) const { return heads_[edge]; }

  bool is_connected() const;
  std::int64_t total_genus() const;

  /// Vertex positions ordered by ascending id.
  std::vector<std::size_t> vertices_by_id() const;
  /// Edge positions ordered by ascending id.
  std::vector<std::size_t> edges_by_id() const;

  /// Vertex-by-edge incidence: +1 at the head, -1 at the tail (0 for loops).
  QMatrix boundary_matrix() const;

  friend bool operator==(const DualGraph& a, const DualGraph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> tails_;
  std::vector<std::size_t> heads_;
};

/// Integer 1-cycles, each indexed by edge storage position.
struct CycleBasis {
  std::vector<std::vector<std::int64_t>> cycles;

  /// Edge-by-cycle matrix with the cycles as columns.
  QMatrix as_columns(std::size_t edge_count) const;
};

/// |E| - |V| + 1. Throws GraphError for a disconnected graph.
std::int64_t betti_one(const DualGraph& g);

/// Fundamental cycles of the spanning tree grown by ascending edge id
/// (Kruskal order). Cycles are listed by ascending id of their defining
/// non-tree edge, which carries coefficient +1.
CycleBasis cycle_basis(const DualGraph& g);

/// The edge pairing extended bilinearly: with one stored orientation per
/// edge it is the coordinatewise dot product.
Rational edge_pairing(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y);

/// Gram matrix of the edge pairing on cycle_basis(g).
QMatrix monodromy_gram(const DualGraph& g);

}  // namespace phin
