#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "signut/exact_linalg.hpp"
#include "signut/signed_graph.hpp"

namespace signut {

/// Vertex expansion of a signed graph about a pivot v of degree rho.
///
/// With the neighbours u_1 < ... < u_rho of v, the result keeps every vertex
/// of the source and adds q_i = n + i - 1 and p_i = n + rho + i - 1. Edges
/// v u_i are removed; v q_i, q_i p_j (i != j) and p_i u_i are added. The new
/// gadget edges are positive except p_i u_i, which inherits sigma(v u_i).
struct FowlerExpansion {
  SignedGraph source;
  Vertex pivot = 0;
  SignedGraph result;
  std::vector<Vertex> neighbors;  // u_1..u_rho
  std::vector<Vertex> q;          // q_1..q_rho
  std::vector<Vertex> p;          // p_1..p_rho

  std::size_t rho() const { return neighbors.size(); }
};

/// Throws std::domain_error for an out-of-range pivot or one of degree < 2.
FowlerExpansion fowler(const SignedGraph& g, Vertex pivot);

/// Carries a kernel vector of the source to one of the expansion:
/// x'(v) = -(rho-1) x(v), x'(q_i) = sigma(v u_i) x(u_i), x'(p_i) = x(v), and
/// x' = x elsewhere. Throws std::domain_error if x is not in the source kernel;
/// the result is checked against the expanded adjacency matrix.
std::vector<Integer> transport_eigenvector(const FowlerExpansion& e, std::span<const Integer> x);

/// Signed K_{4k+1}: vertex 0 is the apex, and each block 4j+1..4j+4 is a path
/// P4 whose three internal edges are negative.
struct CompleteNut {
  unsigned k = 0;
  SignedGraph graph;
  /// +1 on the apex, (-1, +1, +1, -1) on every block.
  std::vector<Integer> eigenvector;
};

/// Throws std::domain_error for k < 1.
CompleteNut complete_nut(unsigned k);

/// Real number of the form a + s * sqrt(d) with integer a, s in {-1, 0, 1} and
/// d > 0 (s == 0 iff the value is rational). Equality is exact on the triple.
struct QuadraticSurd {
  std::int64_t rational = 0;
  int sign = 0;
  std::int64_t radicand = 0;

  double value() const;
  std::string to_string() const;
  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;
};

struct SpectrumEntry {
  QuadraticSurd eigenvalue;
  std::size_t multiplicity = 0;
};

/// Closed-form adjacency spectrum of complete_nut(k): 2(k-1) ± sqrt(4k(k-1)+5)
/// once each, ±sqrt(5) k times each, -2 ± sqrt(5) (k-1) times each, and 0 once.
/// Coincident values are merged; entries are sorted by value, descending.
std::vector<SpectrumEntry> complete_nut_spectrum(unsigned k);

/// Multiset expansion of a spectrum, descending.
std::vector<double> expand_spectrum(const std::vector<SpectrumEntry>& s);

/// Floating-point eigenvalues of the symmetric adjacency matrix, descending.
std::vector<double> numeric_spectrum(const SignedGraph& g);

/// Outcome of the equal-neighbourhood labelling check.
struct EquivLabelingVerdict {
  bool passed = false;
  Integer x_u_private;  // x(u')
  Integer x_v_private;  // x(v')
  Sign sign_u_private = Sign::Positive;  // sigma(u u')
  Sign sign_v_private = Sign::Positive;  // sigma(v v')
  /// x(u') == x(v') (equal) or x(u') == -x(v') (opposite) as observed.
  bool values_equal = false;
  bool values_opposite = false;
};

/// For non-adjacent u, v of equal degree rho sharing exactly rho-1 neighbours
/// w with sigma(u w) == sigma(w v), with private neighbours u' and v': checks
/// sigma(u u') x(u') == sigma(v v') x(v'), i.e. |x(u')| == |x(v')| with
/// x(u') == x(v') exactly when the two private edges have the same sign.
/// Throws std::invalid_argument naming the first violated hypothesis.
EquivLabelingVerdict check_equiv_labeling(const SignedGraph& g, std::span<const Integer> x, Vertex u, Vertex v,
                                          Vertex u_private, Vertex v_private);

}  // namespace signut
