#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "signut/int_matrix.hpp"

namespace signut {

using Vertex = std::uint32_t;

/// Undirected edge stored as (min, max).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign operator*(Sign a, Sign b) {
  return to_int(a) * to_int(b) > 0 ? Sign::Positive : Sign::Negative;
}
inline Sign operator-(Sign s) { return s == Sign::Positive ? Sign::Negative : Sign::Positive; }

class SwitchingSet;

/// A simple undirected graph on vertices 0..n-1 together with a sign for
/// every edge. Edges are kept in lexicographic (min, max) order; that order is
/// the one every mask, enumeration and serialization in the library refers to.
class SignedGraph {
 public:
  SignedGraph() = default;

  /// All-positive graph. Throws std::invalid_argument on loops, duplicate
  /// edges or out-of-range endpoints.
  SignedGraph(std::size_t order, std::vector<Edge> edges);

  /// Signs are matched to `edges` positionally, before sorting.
  SignedGraph(std::size_t order, std::vector<Edge> edges, std::vector<Sign> signs);

  std::size_t order() const { return order_; }
  std::size_t size() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  std::span<const Sign> signs() const { return signs_; }
  Sign sign(std::size_t edge_index) const { return signs_.at(edge_index); }

  /// Index of {a, b} in the lexicographic edge list, or -1.
  std::ptrdiff_t edge_index(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }
  /// Throws std::out_of_range when {a, b} is not an edge.
  Sign sign_of(Vertex a, Vertex b) const;

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::vector<std::size_t> degree_profile() const;
  bool is_regular(std::size_t rho) const;

  std::vector<Edge> negative_edges() const;
  std::size_t negative_count() const;
  bool all_positive() const { return negative_count() == 0; }
  bool is_connected() const;

  /// Same graph with every sign set to +1.
  SignedGraph underlying() const;
  /// Same edge set with new signs in lexicographic edge order.
  SignedGraph with_signs(std::vector<Sign> signs) const;

  bool same_underlying(const SignedGraph& other) const {
    return order_ == other.order_ && edges_ == other.edges_;
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_ && a.signs_ == b.signs_;
  }
  friend auto operator<=>(const SignedGraph& a, const SignedGraph& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    if (auto c = a.edges_ <=> b.edges_; c != 0) return c;
    return a.signs_ <=> b.signs_;
  }

 private:
  void build();

  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<Sign> signs_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Vertex subset U defining the switching at U. U and its complement are the
/// same switching; `canonical` picks the side without vertex 0.
class SwitchingSet {
 public:
  SwitchingSet() = default;
  explicit SwitchingSet(std::vector<Vertex> members);

  std::span<const Vertex> members() const { return members_; }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;

  SwitchingSet complement(std::size_t order) const;
  SwitchingSet canonical(std::size_t order) const;

  /// ±1 signature: -1 on members.
  std::vector<int> signature(std::size_t order) const;

  friend bool operator==(const SwitchingSet&, const SwitchingSet&) = default;

 private:
  std::vector<Vertex> members_;
};

struct SpanningTree {
  /// parent[0] == 0 (root).
  std::vector<Vertex> parent;
  /// Tree edges in discovery order.
  std::vector<Edge> edges;
  /// Per graph edge (lexicographic index): is it a tree edge.
  std::vector<bool> is_tree_edge;
  /// BFS discovery order, root first.
  std::vector<Vertex> order;
};

/// Symmetric {-1, 0, 1} matrix with zero diagonal.
IntMatrix adjacency_matrix(const SignedGraph& g);

/// Throws std::domain_error for out-of-range members.
SignedGraph switch_at(const SignedGraph& g, const SwitchingSet& u);

/// BFS from vertex 0, neighbours in ascending order. Throws
/// std::domain_error on a disconnected graph.
SpanningTree spanning_tree(const SignedGraph& g);

/// The unique member of the switching class whose spanning-tree edges are all
/// positive, and the canonical switching set that produces it.
std::pair<SignedGraph, SwitchingSet> tree_positive_representative(const SignedGraph& g);

/// Balanced (switching equivalent to all-positive). Connected input only.
bool is_traditional(const SignedGraph& g);

/// Balance test that also accepts disconnected graphs (per component).
bool is_balanced(const SignedGraph& g);

/// Requires identical underlying graphs (std::domain_error otherwise).
bool switching_equivalent(const SignedGraph& a, const SignedGraph& b);

/// One tree-positive representative per switching class, in binary-counter
/// order: representative i has non-tree edge j negative iff bit j of i is set,
/// non-tree edges taken in lexicographic order.
class ClassRepresentatives {
 public:
  explicit ClassRepresentatives(const SignedGraph& g);

  std::uint64_t count() const { return std::uint64_t{1} << non_tree_.size(); }
  std::size_t cyclomatic_number() const { return non_tree_.size(); }
  /// Lexicographic edge indices of the non-tree edges, bit order.
  std::span<const std::size_t> non_tree_edges() const { return non_tree_; }
  const SpanningTree& tree() const { return tree_; }

  SignedGraph operator[](std::uint64_t index) const;
  /// Mask of a tree-positive signing of the same graph, inverse of operator[].
  std::uint64_t index_of(const SignedGraph& representative) const;

  void for_each(const std::function<void(const SignedGraph&)>& fn) const;

 private:
  SignedGraph base_;
  SpanningTree tree_;
  std::vector<std::size_t> non_tree_;
};

}  // namespace signut
