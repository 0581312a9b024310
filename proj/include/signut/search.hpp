#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "signut/classifier.hpp"
#include "signut/signed_graph.hpp"

namespace signut {

enum class SearchMode {
  /// Stop at the first wanted nut.
  FirstWitness,
  /// Exhaust every representative; count nuts, keep the first witness only.
  CountAll,
  /// Exhaust every representative; keep every wanted nut as a witness.
  FullVerdict,
};

enum class WantFlag : unsigned {
  UnsignedNut = 1U << 0,
  TraditionalSignedNut = 1U << 1,
  ProperSignedNut = 1U << 2,
};

struct Want {
  unsigned bits = 0b111;
  bool has(WantFlag f) const { return (bits & static_cast<unsigned>(f)) != 0; }
  /// A traditional representative is the all-positive signing itself.
  bool wants_traditional() const { return has(WantFlag::UnsignedNut) || has(WantFlag::TraditionalSignedNut); }
  bool wants_proper() const { return has(WantFlag::ProperSignedNut); }
};

struct SearchConfig {
  SearchMode mode = SearchMode::FullVerdict;
  Want want;
  std::size_t worker_count = 1;
  /// Only the first `graph_limit` graphs of the stream are searched.
  std::optional<std::uint64_t> graph_limit;
  /// At most this many representatives per graph.
  std::optional<std::uint64_t> signing_limit;
  /// Try low-weight signings and a negated Hamiltonian cycle before the
  /// exhaustive loop of each graph.
  bool heuristics = false;
  /// Node budget of the Hamiltonian-cycle backtracking.
  std::uint64_t hamiltonian_budget = 100000;
  /// When false, graphs need only be connected and of order n; rho is then
  /// the degree of vertex 0 of the first graph.
  bool require_regular = true;
};

enum class Verdict { UnsignedNutExists, ProperOnly, NoneFound, Capped };

std::string_view to_string(Verdict v);
std::string_view to_string(SearchMode m);

struct Witness {
  std::size_t graph_index = 0;
  /// Index of the representative in ClassRepresentatives order.
  std::uint64_t representative = 0;
  SignedGraph graph;
  NutReport report;
};

struct GraphError {
  std::size_t graph_index = 0;
  std::string message;
};

struct SearchOutcome {
  std::size_t n = 0;
  std::size_t rho = 0;
  std::uint64_t graphs_scanned = 0;
  std::uint64_t signings_tested = 0;
  std::uint64_t heuristic_signings_tested = 0;
  std::uint64_t unsigned_nuts = 0;
  std::uint64_t proper_nuts = 0;
  Verdict verdict = Verdict::NoneFound;
  bool exhaustive = true;
  std::vector<Witness> witnesses;
  std::vector<GraphError> errors;
};

/// Searches every switching class of every graph for signed nut graphs.
///
/// Graphs must be connected and rho-regular of order n, where (n, rho) is
/// taken from the first graph; a graph failing that is recorded in `errors`
/// and skipped. All-positive signings of every graph are tested first, so the
/// verdict always distinguishes "an unsigned nut exists" from "proper only".
/// Results do not depend on worker_count.
SearchOutcome search_class(const std::vector<SignedGraph>& graphs, const SearchConfig& cfg);

/// Every signing of g, exhaustively (2^m classifications). Test oracle for
/// search_class on small graphs.
struct NaiveSearchResult {
  bool unsigned_nut = false;
  bool traditional_nut = false;
  bool proper_nut = false;
  std::uint64_t signings = 0;
  std::uint64_t nut_signings = 0;
};
NaiveSearchResult naive_signing_search(const SignedGraph& g);

struct SigningCounts {
  std::uint64_t total = 0;       // 2^m
  std::uint64_t classes = 0;     // 2^(m-n+1)
  std::uint64_t class_size = 0;  // 2^(n-1)
  friend bool operator==(const SigningCounts&, const SigningCounts&) = default;
};

/// Connected graphs only; throws std::overflow_error when m >= 64.
SigningCounts count_signings(const SignedGraph& g);

/// One cell of the existence table.
enum class CellLabel {
  Traditional,         // a traditional signed nut (equivalently an unsigned nut) exists
  ProperOnly,          // proper signed nut exists, no traditional one
  NoneByExhaustion,    // exhaustive search found none
  NoneCompleteGraph,   // complete graph, exhaustive search found none
  Undecided,           // search was capped before a verdict
  NotAttempted,        // no catalogue
};

struct CellVerdict {
  std::size_t rho = 0;
  std::size_t n = 0;
  CellLabel label = CellLabel::NotAttempted;
  /// False when the catalogue was flagged incomplete or the search capped.
  bool exhaustive = true;
};

std::string_view symbol(CellLabel label);
std::string_view to_string(CellLabel label);

/// Maps a search outcome over a census of connected rho-regular graphs of
/// order n to a table cell. With `catalogue_complete` false, only positive
/// existence verdicts are reported as such; negative ones become Undecided.
CellVerdict existence_verdict(std::size_t n, std::size_t rho, const SearchOutcome& outcome,
                              bool catalogue_complete = true);

/// Runs search_class with `cfg` and maps the outcome to a cell.
CellVerdict existence_verdict(std::size_t n, std::size_t rho, const std::vector<SignedGraph>& catalogue,
                              const SearchConfig& cfg, bool catalogue_complete = true);

/// Hamiltonian cycle by depth-first backtracking from vertex 0, within a node
/// budget. Returns the vertex sequence, or nothing.
std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const SignedGraph& g, std::uint64_t node_budget);

}  // namespace signut
