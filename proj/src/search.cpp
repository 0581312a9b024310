#include "signut/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace signut {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::UnsignedNutExists:
      return "unsigned-nut-exists";
    case Verdict::ProperOnly:
      return "proper-only";
    case Verdict::NoneFound:
      return "none-found";
    case Verdict::Capped:
      return "capped";
  }
  return "unknown";
}

std::string_view to_string(SearchMode m) {
  switch (m) {
    case SearchMode::FirstWitness:
      return "first-witness";
    case SearchMode::CountAll:
      return "count-all";
    case SearchMode::FullVerdict:
      return "full-verdict";
  }
  return "unknown";
}

std::string_view symbol(CellLabel label) {
  switch (label) {
    case CellLabel::Traditional:
      return "✓";
    case CellLabel::ProperOnly:
      return "✠";
    case CellLabel::NoneByExhaustion:
      return "✗";
    case CellLabel::NoneCompleteGraph:
      return "∄";
    case CellLabel::Undecided:
      return "?";
    case CellLabel::NotAttempted:
      return "·";
  }
  return "?";
}

std::string_view to_string(CellLabel label) {
  switch (label) {
    case CellLabel::Traditional:
      return "traditional";
    case CellLabel::ProperOnly:
      return "proper-only";
    case CellLabel::NoneByExhaustion:
      return "none";
    case CellLabel::NoneCompleteGraph:
      return "none-complete";
    case CellLabel::Undecided:
      return "undecided";
    case CellLabel::NotAttempted:
      return "not-attempted";
  }
  return "unknown";
}

SigningCounts count_signings(const SignedGraph& g) {
  if (!g.is_connected()) throw std::domain_error("count_signings: graph is disconnected");
  const std::size_t m = g.size();
  const std::size_t n = g.order();
  if (m >= 64) throw std::overflow_error("count_signings: 2^m does not fit in 64 bits");
  return {std::uint64_t{1} << m, std::uint64_t{1} << (m - n + 1), std::uint64_t{1} << (n - 1)};
}

std::optional<std::vector<Vertex>> find_hamiltonian_cycle(const SignedGraph& g, std::uint64_t node_budget) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;
  std::vector<Vertex> path{0};
  std::vector<bool> used(n, false);
  used[0] = true;
  std::uint64_t nodes = 0;
  // Explicit stack of next-neighbour cursors.
  std::vector<std::size_t> cursor{0};
  while (!path.empty()) {
    if (++nodes > node_budget) return std::nullopt;
    const Vertex v = path.back();
    if (path.size() == n && g.has_edge(v, 0)) return path;
    const auto nbrs = g.neighbors(v);
    std::size_t& c = cursor.back();
    while (c < nbrs.size() && used[nbrs[c]]) ++c;
    if (path.size() < n && c < nbrs.size()) {
      const Vertex w = nbrs[c++];
      used[w] = true;
      path.push_back(w);
      cursor.push_back(0);
    } else {
      used[v] = path.size() == 1 ? used[v] : false;
      path.pop_back();
      cursor.pop_back();
    }
  }
  return std::nullopt;
}

NaiveSearchResult naive_signing_search(const SignedGraph& g) {
  if (g.size() >= 40) throw std::overflow_error("naive_signing_search: too many edges");
  NaiveSearchResult r;
  NutTester tester;
  const auto base = adjacency_matrix(g.underlying());
  const auto edges = g.edges();
  const std::uint64_t total = std::uint64_t{1} << g.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    IntMatrix a = base;
    std::vector<Sign> signs(g.size(), Sign::Positive);
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((mask >> i) & 1U) {
        a(edges[i].u, edges[i].v) = -1;
        a(edges[i].v, edges[i].u) = -1;
        signs[i] = Sign::Negative;
      }
    ++r.signings;
    if (!tester.is_nut(a)) continue;
    ++r.nut_signings;
    if (mask == 0) r.unsigned_nut = true;
    if (is_balanced(g.with_signs(std::move(signs))))
      r.traditional_nut = true;
    else
      r.proper_nut = true;
  }
  return r;
}

namespace {

struct GraphJob {
  const SignedGraph* graph = nullptr;
  std::optional<ClassRepresentatives> reps;
  IntMatrix base;
  std::string error;
};

struct GraphResult {
  bool done = false;
  std::uint64_t tested = 0;
  std::uint64_t heuristic_tested = 0;
  std::uint64_t proper = 0;
  bool capped = false;
  std::vector<Witness> witnesses;
};

IntMatrix signed_matrix(const GraphJob& job, std::uint64_t index) {
  IntMatrix a = job.base;
  const auto edges = job.graph->edges();
  const auto non_tree = job.reps->non_tree_edges();
  for (std::size_t j = 0; j < non_tree.size(); ++j)
    if ((index >> j) & 1U) {
      const Edge& e = edges[non_tree[j]];
      a(e.u, e.v) = -1;
      a(e.v, e.u) = -1;
    }
  return a;
}

Witness make_witness(std::size_t graph_index, const GraphJob& job, std::uint64_t index) {
  Witness w;
  w.graph_index = graph_index;
  w.representative = index;
  w.graph = (*job.reps)[index];
  w.report = classify(w.graph);
  if (!w.report.is_nut) throw std::logic_error("search: witness failed re-classification");
  return w;
}

// Low-weight signings, then a negated Hamiltonian cycle. Returns the index of
// a proper representative that is a nut.
std::optional<std::uint64_t> heuristic_probe(const GraphJob& job, const SearchConfig& cfg, NutTester& tester,
                                             std::uint64_t& tested) {
  const SignedGraph& g = *job.graph;
  auto try_signing = [&](const std::vector<std::size_t>& negative) -> std::optional<std::uint64_t> {
    std::vector<Sign> signs(g.size(), Sign::Positive);
    for (auto i : negative) signs[i] = Sign::Negative;
    const SignedGraph s = g.with_signs(std::move(signs));
    ++tested;
    if (!tester.is_nut(s)) return std::nullopt;
    const auto rep = tree_positive_representative(s).first;
    if (rep.all_positive()) return std::nullopt;  // traditional
    return job.reps->index_of(rep);
  };
  const std::size_t m = g.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (auto hit = try_signing({i})) return hit;
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (auto hit = try_signing({i, j})) return hit;
  if (auto cycle = find_hamiltonian_cycle(g, cfg.hamiltonian_budget)) {
    std::vector<std::size_t> negative;
    for (std::size_t i = 0; i < cycle->size(); ++i) {
      const Vertex a = (*cycle)[i];
      const Vertex b = (*cycle)[(i + 1) % cycle->size()];
      negative.push_back(static_cast<std::size_t>(g.edge_index(a, b)));
    }
    if (auto hit = try_signing(negative)) return hit;
  }
  return std::nullopt;
}

// Runs fn(i) for i in [0, count) on `workers` threads, pulling indices in order.
template <class Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

SearchOutcome search_class(const std::vector<SignedGraph>& graphs, const SearchConfig& cfg) {
  if (cfg.worker_count < 1) throw std::invalid_argument("search: worker_count must be at least 1");
  SearchOutcome out;
  if (graphs.empty()) return out;
  out.n = graphs.front().order();
  out.rho = graphs.front().order() > 0 ? graphs.front().degree(0) : 0;

  const std::size_t limit =
      cfg.graph_limit ? static_cast<std::size_t>(std::min<std::uint64_t>(*cfg.graph_limit, graphs.size()))
                      : graphs.size();
  const bool truncated = limit < graphs.size();

  std::vector<GraphJob> jobs(limit);
  for (std::size_t i = 0; i < limit; ++i) {
    const SignedGraph& g = graphs[i];
    jobs[i].graph = &g;
    if (g.order() != out.n)
      jobs[i].error = "order " + std::to_string(g.order()) + " != " + std::to_string(out.n);
    else if (cfg.require_regular && !g.is_regular(out.rho))
      jobs[i].error = "not " + std::to_string(out.rho) + "-regular";
    else if (!g.is_connected())
      jobs[i].error = "disconnected";
    else if (g.order() < 2)
      jobs[i].error = "fewer than 2 vertices";
    if (jobs[i].error.empty()) {
      try {
        jobs[i].reps.emplace(g);
        jobs[i].base = adjacency_matrix(g.underlying());
      } catch (const std::exception& ex) {
        jobs[i].error = ex.what();
      }
    }
  }
  for (std::size_t i = 0; i < limit; ++i)
    if (!jobs[i].error.empty()) out.errors.push_back({i, jobs[i].error});

  // Pass 1: the all-positive signing of every graph.
  std::vector<char> unsigned_nut(limit, 0);
  parallel_for(limit, cfg.worker_count, [&](std::size_t i) {
    if (!jobs[i].error.empty()) return;
    NutTester tester;
    unsigned_nut[i] = tester.is_nut(jobs[i].base) ? 1 : 0;
  });
  std::vector<GraphResult> results(limit);
  for (std::size_t i = 0; i < limit; ++i) {
    if (!jobs[i].error.empty()) continue;
    ++out.graphs_scanned;
    ++out.signings_tested;
    if (unsigned_nut[i]) ++out.unsigned_nuts;
  }
  const bool unsigned_exists = out.unsigned_nuts > 0;

  auto unsigned_witnesses = [&](bool first_only) {
    for (std::size_t i = 0; i < limit; ++i)
      if (unsigned_nut[i]) {
        out.witnesses.push_back(make_witness(i, jobs[i], 0));
        if (first_only) return;
      }
  };

  const bool first_witness = cfg.mode == SearchMode::FirstWitness;
  if (first_witness && unsigned_exists && cfg.want.wants_traditional()) {
    unsigned_witnesses(true);
    out.verdict = Verdict::UnsignedNutExists;
    out.exhaustive = !truncated;
    return out;
  }

  // Pass 2: the remaining representatives of every graph.
  std::atomic<std::size_t> best{std::numeric_limits<std::size_t>::max()};
  parallel_for(limit, cfg.worker_count, [&](std::size_t i) {
    GraphJob& job = jobs[i];
    GraphResult& res = results[i];
    if (!job.error.empty()) return;
    if (first_witness && i > best.load()) return;
    NutTester tester;
    const std::uint64_t count = job.reps->count();
    std::uint64_t end = count;
    if (cfg.signing_limit && *cfg.signing_limit < count) {
      end = *cfg.signing_limit;
      res.capped = true;
    }
    auto found = [&](std::uint64_t index) {
      ++res.proper;
      if (first_witness) {
        res.witnesses.push_back(make_witness(i, job, index));
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
        return true;
      }
      if (cfg.want.wants_proper() && (cfg.mode == SearchMode::FullVerdict || res.witnesses.empty()))
        res.witnesses.push_back(make_witness(i, job, index));
      return false;
    };
    if (first_witness && cfg.heuristics) {
      if (auto hit = heuristic_probe(job, cfg, tester, res.heuristic_tested)) {
        res.done = true;
        found(*hit);
        return;
      }
    }
    for (std::uint64_t index = 1; index < end; ++index) {
      if (first_witness && (index & 0xFFF) == 0 && i > best.load()) return;
      ++res.tested;
      if (tester.is_nut(signed_matrix(job, index)) && found(index)) break;
    }
    res.done = true;
  });

  // Ordered reduction. In first-witness mode graphs after the winner are
  // dropped so that counters match a single-threaded run.
  const std::size_t stop = first_witness ? best.load() : std::numeric_limits<std::size_t>::max();
  bool capped = truncated;
  std::vector<Witness> proper_witnesses;
  for (std::size_t i = 0; i < limit && i <= stop; ++i) {
    const GraphResult& res = results[i];
    if (!jobs[i].error.empty()) continue;
    if (!res.done) throw std::logic_error("search: graph left unprocessed");
    out.signings_tested += res.tested;
    out.heuristic_signings_tested += res.heuristic_tested;
    out.proper_nuts += res.proper;
    capped = capped || res.capped;
    if (cfg.mode == SearchMode::CountAll && !proper_witnesses.empty()) continue;
    for (const auto& w : res.witnesses) proper_witnesses.push_back(w);
  }

  if (cfg.mode != SearchMode::FirstWitness && cfg.want.wants_traditional())
    unsigned_witnesses(cfg.mode == SearchMode::CountAll);
  if (cfg.want.wants_proper())
    for (auto& w : proper_witnesses) out.witnesses.push_back(std::move(w));
  if (cfg.mode == SearchMode::CountAll && out.witnesses.size() > 1) out.witnesses.resize(1);

  // Deduplicate by exact (edges, signs) identity, keeping the first occurrence.
  std::set<SignedGraph> seen;
  std::erase_if(out.witnesses, [&](const Witness& w) { return !seen.insert(w.graph).second; });

  out.exhaustive = !capped;
  if (unsigned_exists)
    out.verdict = Verdict::UnsignedNutExists;
  else if (out.proper_nuts > 0)
    out.verdict = truncated ? Verdict::Capped : Verdict::ProperOnly;
  else
    out.verdict = capped ? Verdict::Capped : Verdict::NoneFound;
  return out;
}

CellVerdict existence_verdict(std::size_t n, std::size_t rho, const SearchOutcome& outcome, bool catalogue_complete) {
  CellVerdict c;
  c.n = n;
  c.rho = rho;
  if (outcome.unsigned_nuts > 0) {
    c.label = CellLabel::Traditional;
    c.exhaustive = true;
  } else if (outcome.proper_nuts > 0) {
    c.label = CellLabel::ProperOnly;
    c.exhaustive = catalogue_complete && outcome.verdict == Verdict::ProperOnly;
  } else if (outcome.verdict == Verdict::NoneFound && catalogue_complete) {
    c.label = n == rho + 1 ? CellLabel::NoneCompleteGraph : CellLabel::NoneByExhaustion;
    c.exhaustive = true;
  } else {
    c.label = CellLabel::Undecided;
    c.exhaustive = false;
  }
  return c;
}

CellVerdict existence_verdict(std::size_t n, std::size_t rho, const std::vector<SignedGraph>& catalogue,
                              const SearchConfig& cfg, bool catalogue_complete) {
  auto outcome = search_class(catalogue, cfg);
  if (!catalogue.empty() && (outcome.n != n || outcome.rho != rho))
    throw std::invalid_argument("existence_verdict: catalogue is not of order " + std::to_string(n) + " and degree " +
                                std::to_string(rho));
  return existence_verdict(n, rho, outcome, catalogue_complete && outcome.errors.empty());
}

}  // namespace signut
