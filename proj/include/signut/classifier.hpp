#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "signut/exact_linalg.hpp"
#include "signut/signed_graph.hpp"
#include "signut/simd/modular_rank.hpp"

namespace signut {

enum class SignedClass { AllPositiveInput, Traditional, Proper };

std::string_view to_string(SignedClass c);

struct NutReport {
  std::size_t order = 0;
  std::size_t size = 0;
  std::vector<std::size_t> degree_profile;
  std::size_t nullity = 0;
  bool is_singular = false;
  bool is_core = false;
  bool is_nut = false;
  bool is_connected = false;
  /// Present iff nullity == 1.
  std::optional<std::vector<Integer>> kernel_vector;
  SignedClass signed_class = SignedClass::AllPositiveInput;

  friend bool operator==(const NutReport&, const NutReport&) = default;
};

/// Throws std::domain_error when the graph has fewer than two vertices.
NutReport classify(const SignedGraph& g);

/// The switching-class member whose kernel eigenvector is entrywise positive,
/// with the canonical switching set {v : x(v) < 0}. Throws std::domain_error
/// when g is not a signed nut graph.
std::pair<SignedGraph, SwitchingSet> positive_representative(const SignedGraph& g);

/// classify(g.underlying()).is_nut.
bool is_unsigned_nut(const SignedGraph& g);

/// Nut test for repeated use on graphs of a common order. Nonsingular
/// matrices are rejected by a rank computation mod p; only the survivors go
/// through exact elimination.
class NutTester {
 public:
  bool is_nut(const IntMatrix& adjacency);
  bool is_nut(const SignedGraph& g) { return is_nut(adjacency_matrix(g)); }

  std::size_t filtered() const { return filtered_; }
  std::size_t exact_checks() const { return exact_; }

 private:
  simd::ModularRankWorkspace modular_;
  std::size_t filtered_ = 0;
  std::size_t exact_ = 0;
};

}  // namespace signut
