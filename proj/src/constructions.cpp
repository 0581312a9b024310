#include "signut/constructions.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace signut {

FowlerExpansion fowler(const SignedGraph& g, Vertex pivot) {
  if (pivot >= g.order()) throw std::domain_error("fowler: pivot " + std::to_string(pivot) + " out of range");
  const std::size_t rho = g.degree(pivot);
  if (rho < 2) throw std::domain_error("fowler: pivot degree " + std::to_string(rho) + " < 2");

  FowlerExpansion e;
  e.source = g;
  e.pivot = pivot;
  const auto nbrs = g.neighbors(pivot);
  e.neighbors.assign(nbrs.begin(), nbrs.end());
  const auto n = static_cast<Vertex>(g.order());
  for (std::size_t i = 0; i < rho; ++i) {
    e.q.push_back(n + static_cast<Vertex>(i));
    e.p.push_back(n + static_cast<Vertex>(rho + i));
  }

  std::vector<Edge> edges;
  std::vector<Sign> signs;
  const auto src_edges = g.edges();
  for (std::size_t i = 0; i < src_edges.size(); ++i) {
    if (src_edges[i].u == pivot || src_edges[i].v == pivot) continue;
    edges.push_back(src_edges[i]);
    signs.push_back(g.sign(i));
  }
  for (std::size_t i = 0; i < rho; ++i) {
    edges.emplace_back(pivot, e.q[i]);
    signs.push_back(Sign::Positive);
    edges.emplace_back(e.p[i], e.neighbors[i]);
    signs.push_back(g.sign_of(pivot, e.neighbors[i]));
    for (std::size_t j = 0; j < rho; ++j) {
      if (i == j) continue;
      edges.emplace_back(e.q[i], e.p[j]);
      signs.push_back(Sign::Positive);
    }
  }
  e.result = SignedGraph(g.order() + 2 * rho, std::move(edges), std::move(signs));
  return e;
}

std::vector<Integer> transport_eigenvector(const FowlerExpansion& e, std::span<const Integer> x) {
  if (x.size() != e.source.order() || !in_kernel(adjacency_matrix(e.source), x))
    throw std::domain_error("transport_eigenvector: vector is not in the kernel of the source graph");
  std::vector<Integer> out(e.result.order());
  std::copy(x.begin(), x.end(), out.begin());
  const Integer& a = x[e.pivot];
  const auto rho = static_cast<long>(e.rho());
  out[e.pivot] = -(rho - 1) * a;
  for (std::size_t i = 0; i < e.rho(); ++i) {
    const auto s = static_cast<long>(to_int(e.source.sign_of(e.pivot, e.neighbors[i])));
    out[e.q[i]] = s * x[e.neighbors[i]];
    out[e.p[i]] = a;
  }
  if (!in_kernel(adjacency_matrix(e.result), std::span<const Integer>(out)))
    throw std::logic_error("transport_eigenvector: transported vector is not in the expanded kernel");
  return out;
}

CompleteNut complete_nut(unsigned k) {
  if (k < 1) throw std::domain_error("complete_nut: k must be at least 1");
  const std::size_t n = 4 * static_cast<std::size_t>(k) + 1;
  std::vector<Edge> edges;
  std::vector<Sign> signs;
  auto block = [](Vertex v) { return (v - 1) / 4; };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      edges.emplace_back(a, b);
      // Path edges inside a block: consecutive labels in the same block.
      const bool internal = a > 0 && block(a) == block(b) && b == a + 1;
      signs.push_back(internal ? Sign::Negative : Sign::Positive);
    }
  CompleteNut c;
  c.k = k;
  c.graph = SignedGraph(n, std::move(edges), std::move(signs));
  c.eigenvector.reserve(n);
  c.eigenvector.emplace_back(1);
  static constexpr int pattern[4] = {-1, 1, 1, -1};
  for (unsigned j = 0; j < k; ++j)
    for (int s : pattern) c.eigenvector.emplace_back(s);
  return c;
}

double QuadraticSurd::value() const {
  return static_cast<double>(rational) + sign * std::sqrt(static_cast<double>(radicand));
}

std::string QuadraticSurd::to_string() const {
  if (sign == 0) return std::to_string(rational);
  std::string root = "sqrt(" + std::to_string(radicand) + ")";
  if (rational == 0) return (sign < 0 ? "-" : "") + root;
  return std::to_string(rational) + (sign < 0 ? "-" : "+") + root;
}

std::vector<SpectrumEntry> complete_nut_spectrum(unsigned k) {
  if (k < 1) throw std::domain_error("complete_nut_spectrum: k must be at least 1");
  const auto kk = static_cast<std::int64_t>(k);
  const std::int64_t outer = 4 * kk * (kk - 1) + 5;
  const std::vector<SpectrumEntry> raw = {
      {{2 * (kk - 1), +1, outer}, 1},
      {{2 * (kk - 1), -1, outer}, 1},
      {{0, +1, 5}, k},
      {{0, -1, 5}, k},
      {{-2, +1, 5}, k - 1},
      {{-2, -1, 5}, k - 1},
      {{0, 0, 0}, 1},
  };
  std::vector<SpectrumEntry> merged;
  for (const auto& entry : raw) {
    if (entry.multiplicity == 0) continue;
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const SpectrumEntry& m) { return m.eigenvalue == entry.eigenvalue; });
    if (it == merged.end())
      merged.push_back(entry);
    else
      it->multiplicity += entry.multiplicity;
  }
  std::sort(merged.begin(), merged.end(),
            [](const SpectrumEntry& a, const SpectrumEntry& b) { return a.eigenvalue.value() > b.eigenvalue.value(); });
  return merged;
}

std::vector<double> expand_spectrum(const std::vector<SpectrumEntry>& s) {
  std::vector<double> out;
  for (const auto& e : s) out.insert(out.end(), e.multiplicity, e.eigenvalue.value());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<double> numeric_spectrum(const SignedGraph& g) {
  const auto a = adjacency_matrix(g);
  Eigen::MatrixXd m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = static_cast<double>(a(r, c));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("numeric_spectrum: eigensolver did not converge");
  std::vector<double> out(solver.eigenvalues().data(), solver.eigenvalues().data() + solver.eigenvalues().size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

EquivLabelingVerdict check_equiv_labeling(const SignedGraph& g, std::span<const Integer> x, Vertex u, Vertex v,
                                          Vertex u_private, Vertex v_private) {
  const std::size_t n = g.order();
  for (Vertex w : {u, v, u_private, v_private})
    if (w >= n) throw std::invalid_argument("check_equiv_labeling: vertex " + std::to_string(w) + " out of range");
  if (x.size() != n) throw std::invalid_argument("check_equiv_labeling: vector length differs from graph order");
  if (u == v) throw std::invalid_argument("check_equiv_labeling: u and v must be distinct");
  if (g.has_edge(u, v)) throw std::invalid_argument("check_equiv_labeling: u and v are adjacent");
  if (g.degree(u) != g.degree(v)) throw std::invalid_argument("check_equiv_labeling: u and v differ in degree");
  if (!g.has_edge(u, u_private) || g.has_edge(v, u_private))
    throw std::invalid_argument("check_equiv_labeling: u' is not a private neighbour of u");
  if (!g.has_edge(v, v_private) || g.has_edge(u, v_private))
    throw std::invalid_argument("check_equiv_labeling: v' is not a private neighbour of v");

  std::vector<Vertex> shared;
  for (Vertex w : g.neighbors(u))
    if (w != u_private) shared.push_back(w);
  std::vector<Vertex> other;
  for (Vertex w : g.neighbors(v))
    if (w != v_private) other.push_back(w);
  if (shared != other || shared.size() + 1 != g.degree(u))
    throw std::invalid_argument("check_equiv_labeling: u and v do not share exactly rho-1 neighbours");
  for (Vertex w : shared)
    if (g.sign_of(u, w) != g.sign_of(w, v))
      throw std::invalid_argument("check_equiv_labeling: sigma(uw) != sigma(wv) for shared neighbour " +
                                  std::to_string(w));

  EquivLabelingVerdict r;
  r.x_u_private = x[u_private];
  r.x_v_private = x[v_private];
  r.sign_u_private = g.sign_of(u, u_private);
  r.sign_v_private = g.sign_of(v, v_private);
  r.values_equal = r.x_u_private == r.x_v_private;
  r.values_opposite = r.x_u_private == -r.x_v_private;
  r.passed = to_int(r.sign_u_private) * r.x_u_private == to_int(r.sign_v_private) * r.x_v_private;
  return r;
}

}  // namespace signut
