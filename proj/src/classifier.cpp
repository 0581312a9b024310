#include "signut/classifier.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "elimination.hpp"

namespace signut {

std::string_view to_string(SignedClass c) {
  switch (c) {
    case SignedClass::AllPositiveInput:
      return "all-positive-input";
    case SignedClass::Traditional:
      return "traditional";
    case SignedClass::Proper:
      return "proper";
  }
  return "unknown";
}

NutReport classify(const SignedGraph& g) {
  if (g.order() < 2)
    throw std::domain_error("classify: a nut graph needs at least 2 vertices, got " + std::to_string(g.order()));
  NutReport r;
  r.order = g.order();
  r.size = g.size();
  r.degree_profile = g.degree_profile();
  r.is_connected = g.is_connected();

  const auto a = adjacency_matrix(g);
  const auto kernel = kernel_basis(a);
  r.nullity = kernel.nullity();
  r.is_singular = r.nullity > 0;
  const auto support = kernel.support();
  r.is_core = r.is_singular && std::all_of(support.begin(), support.end(), [](bool b) { return b; });
  r.is_nut = r.nullity == 1 && kernel.is_full && r.is_connected;
  if (r.nullity == 1) r.kernel_vector = canonical_eigenvector(kernel);

  if (g.all_positive())
    r.signed_class = SignedClass::AllPositiveInput;
  else if (r.is_connected)
    r.signed_class = is_traditional(g) ? SignedClass::Traditional : SignedClass::Proper;
  else
    r.signed_class = is_balanced(g) ? SignedClass::Traditional : SignedClass::Proper;
  return r;
}

std::pair<SignedGraph, SwitchingSet> positive_representative(const SignedGraph& g) {
  const auto report = classify(g);
  if (!report.is_nut) throw std::domain_error("positive_representative: input is not a signed nut graph");
  const auto& x = *report.kernel_vector;
  std::vector<Vertex> negative;
  for (Vertex v = 0; v < x.size(); ++v)
    if (x[v] < 0) negative.push_back(v);
  SwitchingSet u = SwitchingSet(std::move(negative)).canonical(g.order());
  return {switch_at(g, u), u};
}

bool is_unsigned_nut(const SignedGraph& g) { return classify(g.underlying()).is_nut; }

bool NutTester::is_nut(const IntMatrix& adjacency) {
  const std::size_t n = adjacency.rows();
  if (n < 2) return false;
  if (modular_.rank(adjacency) == n) {
    ++filtered_;
    return false;
  }
  ++exact_;
  if (!fits_machine_elimination(adjacency)) {
    const auto kernel = kernel_basis(adjacency);
    return kernel.nullity() == 1 && kernel.is_full;
  }
  detail::Echelon<detail::MachineOps> e;
  e.rows = n;
  e.cols = adjacency.cols();
  e.data.assign(adjacency.data().begin(), adjacency.data().end());
  detail::gauss_jordan(e);
  if (e.cols - e.pivot_cols.size() != 1) return false;
  // The single kernel vector is (scale at the free column, -column entries at
  // pivot columns); it is full iff the free column of the echelon form has no
  // zero in any pivot row.
  std::size_t free_col = 0;
  for (std::size_t i = 0; i < e.pivot_cols.size() && e.pivot_cols[i] == free_col; ++i) ++free_col;
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i)
    if (e.at(i, free_col) == 0) return false;
  return true;
}

}  // namespace signut
