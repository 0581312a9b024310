#include "signut/signed_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace signut {

SignedGraph::SignedGraph(std::size_t order, std::vector<Edge> edges)
    : SignedGraph(order, edges, std::vector<Sign>(edges.size(), Sign::Positive)) {}

SignedGraph::SignedGraph(std::size_t order, std::vector<Edge> edges, std::vector<Sign> signs)
    : order_(order) {
  if (edges.size() != signs.size())
    throw std::invalid_argument("signed graph: " + std::to_string(edges.size()) + " edges but " +
                                std::to_string(signs.size()) + " signs");
  std::vector<std::size_t> perm(edges.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  edges_.reserve(edges.size());
  signs_.reserve(edges.size());
  for (std::size_t i : perm) {
    const Edge& e = edges[i];
    if (e.u == e.v) throw std::invalid_argument("signed graph: loop at vertex " + std::to_string(e.u));
    if (e.v >= order)
      throw std::invalid_argument("signed graph: vertex " + std::to_string(e.v) + " out of range for order " +
                                  std::to_string(order));
    if (!edges_.empty() && edges_.back() == e)
      throw std::invalid_argument("signed graph: duplicate edge {" + std::to_string(e.u) + "," +
                                  std::to_string(e.v) + "}");
    edges_.push_back(e);
    signs_.push_back(signs[i]);
  }
  build();
}

void SignedGraph::build() {
  adjacency_.assign(order_, {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
}

std::ptrdiff_t SignedGraph::edge_index(Vertex a, Vertex b) const {
  if (a == b) return -1;
  const Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return it - edges_.begin();
}

Sign SignedGraph::sign_of(Vertex a, Vertex b) const {
  const auto i = edge_index(a, b);
  if (i < 0) throw std::out_of_range("no edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
  return signs_[static_cast<std::size_t>(i)];
}

std::vector<std::size_t> SignedGraph::degree_profile() const {
  std::vector<std::size_t> out;
  out.reserve(order_);
  for (const auto& list : adjacency_) out.push_back(list.size());
  std::sort(out.begin(), out.end());
  return out;
}

bool SignedGraph::is_regular(std::size_t rho) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(), [&](const auto& l) { return l.size() == rho; });
}

std::vector<Edge> SignedGraph::negative_edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (signs_[i] == Sign::Negative) out.push_back(edges_[i]);
  return out;
}

std::size_t SignedGraph::negative_count() const {
  return static_cast<std::size_t>(std::count(signs_.begin(), signs_.end(), Sign::Negative));
}

bool SignedGraph::is_connected() const {
  if (order_ == 0) return true;
  std::vector<bool> seen(order_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == order_;
}

SignedGraph SignedGraph::underlying() const {
  SignedGraph g = *this;
  std::fill(g.signs_.begin(), g.signs_.end(), Sign::Positive);
  return g;
}

SignedGraph SignedGraph::with_signs(std::vector<Sign> signs) const {
  if (signs.size() != edges_.size()) throw std::invalid_argument("with_signs: sign count does not match edge count");
  SignedGraph g = *this;
  g.signs_ = std::move(signs);
  return g;
}

// ---------------------------------------------------------------------------

SwitchingSet::SwitchingSet(std::vector<Vertex> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SwitchingSet::contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

SwitchingSet SwitchingSet::complement(std::size_t order) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < order; ++v)
    if (!contains(v)) out.push_back(v);
  return SwitchingSet(std::move(out));
}

SwitchingSet SwitchingSet::canonical(std::size_t order) const {
  if (!members_.empty() && members_.back() >= order)
    throw std::domain_error("switching set: vertex " + std::to_string(members_.back()) + " out of range");
  return contains(0) ? complement(order) : *this;
}

std::vector<int> SwitchingSet::signature(std::size_t order) const {
  std::vector<int> s(order, 1);
  for (Vertex v : members_) {
    if (v >= order) throw std::domain_error("switching set: vertex " + std::to_string(v) + " out of range");
    s[v] = -1;
  }
  return s;
}

// ---------------------------------------------------------------------------

IntMatrix adjacency_matrix(const SignedGraph& g) {
  IntMatrix a(g.order(), g.order());
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto s = to_int(g.sign(i));
    a(edges[i].u, edges[i].v) = s;
    a(edges[i].v, edges[i].u) = s;
  }
  return a;
}

SignedGraph switch_at(const SignedGraph& g, const SwitchingSet& u) {
  const auto sig = u.signature(g.order());
  const auto edges = g.edges();
  std::vector<Sign> signs(g.signs().begin(), g.signs().end());
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (sig[edges[i].u] != sig[edges[i].v]) signs[i] = -signs[i];
  return g.with_signs(std::move(signs));
}

SpanningTree spanning_tree(const SignedGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw std::domain_error("spanning tree: empty graph");
  SpanningTree t;
  t.parent.assign(n, 0);
  t.is_tree_edge.assign(g.size(), false);
  std::vector<bool> seen(n, false);
  std::deque<Vertex> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    t.order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (seen[w]) continue;
      seen[w] = true;
      t.parent[w] = v;
      t.edges.emplace_back(v, w);
      t.is_tree_edge[static_cast<std::size_t>(g.edge_index(v, w))] = true;
      queue.push_back(w);
    }
  }
  if (t.order.size() != n) throw std::domain_error("spanning tree: graph is disconnected");
  return t;
}

namespace {

// Parity of negative tree edges on the root path, per vertex.
std::vector<int> tree_parity(const SignedGraph& g, const SpanningTree& t) {
  std::vector<int> parity(g.order(), 0);
  for (std::size_t i = 1; i < t.order.size(); ++i) {
    const Vertex v = t.order[i];
    const Vertex p = t.parent[v];
    parity[v] = parity[p] ^ (g.sign_of(p, v) == Sign::Negative ? 1 : 0);
  }
  return parity;
}

}  // namespace

std::pair<SignedGraph, SwitchingSet> tree_positive_representative(const SignedGraph& g) {
  const auto t = spanning_tree(g);
  const auto parity = tree_parity(g, t);
  // Even-parity vertices contain the root; the odd side is already canonical.
  std::vector<Vertex> odd;
  for (Vertex v = 0; v < g.order(); ++v)
    if (parity[v]) odd.push_back(v);
  SwitchingSet u(std::move(odd));
  return {switch_at(g, u), u};
}

bool is_traditional(const SignedGraph& g) { return tree_positive_representative(g).first.all_positive(); }

bool is_balanced(const SignedGraph& g) {
  // Two-colour by sign parity; an inconsistent edge means an unbalanced cycle.
  const std::size_t n = g.order();
  std::vector<int> colour(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (colour[root] >= 0) continue;
    colour[root] = 0;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v)) {
        const int want = colour[v] ^ (g.sign_of(v, w) == Sign::Negative ? 1 : 0);
        if (colour[w] < 0) {
          colour[w] = want;
          stack.push_back(w);
        } else if (colour[w] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool switching_equivalent(const SignedGraph& a, const SignedGraph& b) {
  if (!a.same_underlying(b)) throw std::domain_error("switching_equivalent: underlying graphs differ");
  std::vector<Sign> product(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) product[i] = a.sign(i) * b.sign(i);
  return is_traditional(a.with_signs(std::move(product)));
}

// ---------------------------------------------------------------------------

ClassRepresentatives::ClassRepresentatives(const SignedGraph& g) : base_(g.underlying()), tree_(spanning_tree(g)) {
  for (std::size_t i = 0; i < base_.size(); ++i)
    if (!tree_.is_tree_edge[i]) non_tree_.push_back(i);
  if (non_tree_.size() >= 64)
    throw std::overflow_error("class representatives: cyclomatic number " + std::to_string(non_tree_.size()) +
                              " exceeds 63");
}

SignedGraph ClassRepresentatives::operator[](std::uint64_t index) const {
  if (index >= count()) throw std::out_of_range("class representative index out of range");
  std::vector<Sign> signs(base_.size(), Sign::Positive);
  for (std::size_t j = 0; j < non_tree_.size(); ++j)
    if ((index >> j) & 1U) signs[non_tree_[j]] = Sign::Negative;
  return base_.with_signs(std::move(signs));
}

std::uint64_t ClassRepresentatives::index_of(const SignedGraph& representative) const {
  if (!representative.same_underlying(base_)) throw std::domain_error("index_of: different underlying graph");
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < base_.size(); ++i)
    if (tree_.is_tree_edge[i] && representative.sign(i) == Sign::Negative)
      throw std::domain_error("index_of: signing is not tree-positive");
  for (std::size_t j = 0; j < non_tree_.size(); ++j)
    if (representative.sign(non_tree_[j]) == Sign::Negative) index |= std::uint64_t{1} << j;
  return index;
}

void ClassRepresentatives::for_each(const std::function<void(const SignedGraph&)>& fn) const {
  for (std::uint64_t i = 0; i < count(); ++i) fn((*this)[i]);
}

}  // namespace signut
