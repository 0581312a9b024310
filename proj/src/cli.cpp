#include "signut/cli.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "signut/classifier.hpp"
#include "signut/constructions.hpp"
#include "signut/graph_io.hpp"
#include "signut/search.hpp"

#ifndef SIGNUT_FIXTURES_DIR
#define SIGNUT_FIXTURES_DIR "fixtures"
#endif

namespace signut::cli {

namespace {

namespace fs = std::filesystem;

struct Streams {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

// Calls fn on the named file, or on `in` for "-".
int with_input(const std::string& path, Streams& s, const std::function<int(std::istream&)>& fn) {
  if (path == "-") return fn(s.in);
  std::ifstream file(path);
  if (!file) {
    s.err << "signut: cannot open " << path << '\n';
    return kExitFailure;
  }
  return fn(file);
}

// Applies fn to every signed record of the input and prints the returned
// records. Parse errors are reported per line and give exit code 2.
int map_records(const std::string& path, Streams& s,
                const std::function<std::vector<SignedGraph>(const SignedGraph&)>& fn) {
  return with_input(path, s, [&](std::istream& in) {
    int status = kExitOk;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.find_first_not_of(" \t") == std::string::npos) continue;
      SignedGraph g;
      try {
        g = io::parse_signed(line);
      } catch (const io::ParseError& e) {
        s.err << "signut: line " << line_no << ": " << e.what() << '\n';
        status = kExitParseError;
        continue;
      }
      try {
        for (const auto& r : fn(g)) s.out << io::emit_signed(r) << '\n';
      } catch (const std::exception& e) {
        s.err << "signut: line " << line_no << ": " << e.what() << '\n';
        if (status == kExitOk) status = kExitFailure;
      }
    }
    return status;
  });
}

std::size_t default_workers() {
  if (const char* env = std::getenv("SIGNUT_WORKERS")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return v;
  }
  return 1;
}

std::optional<SearchMode> parse_mode(const std::string& s) {
  if (s == "first-witness" || s == "first") return SearchMode::FirstWitness;
  if (s == "count-all" || s == "count") return SearchMode::CountAll;
  if (s == "full-verdict" || s == "full") return SearchMode::FullVerdict;
  return std::nullopt;
}

std::optional<Want> parse_want(const std::string& s) {
  Want w{0};
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "unsigned" || item == "unsigned-nut")
      w.bits |= static_cast<unsigned>(WantFlag::UnsignedNut);
    else if (item == "traditional" || item == "traditional-signed-nut")
      w.bits |= static_cast<unsigned>(WantFlag::TraditionalSignedNut);
    else if (item == "proper" || item == "proper-signed-nut")
      w.bits |= static_cast<unsigned>(WantFlag::ProperSignedNut);
    else if (item == "all")
      w.bits = 0b111;
    else
      return std::nullopt;
  }
  if (w.bits == 0) return std::nullopt;
  return w;
}

SignedGraph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  return SignedGraph(n, std::move(edges));
}

fs::path catalogue_path(const std::string& fixtures, std::size_t rho, std::size_t n) {
  return fs::path(fixtures) / "reg" / std::to_string(rho) / (std::to_string(n) + ".g6");
}

// Complete graphs are generated; everything else comes from the fixture tree.
// Returns nothing when no catalogue is available.
std::optional<std::vector<SignedGraph>> load_catalogue(const std::string& fixtures, std::size_t rho, std::size_t n,
                                                       bool& complete) {
  complete = true;
  if (n == rho + 1 && n >= 2) return std::vector<SignedGraph>{complete_graph(n)};
  const fs::path path = catalogue_path(fixtures, rho, n);
  std::ifstream file(path);
  if (!file) return std::nullopt;
  fs::path marker = path;
  marker.replace_extension(".incomplete");
  complete = !fs::exists(marker);
  return io::read_graph6_stream(file);
}

std::string format_vector(const std::vector<Rational>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].get_str();
  return s + "]";
}

void print_outcome_text(const SearchOutcome& o, std::ostream& out) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  out << "n=" << o.n << " rho=" << o.rho << " verdict=" << to_string(o.verdict) << " exhaustive=" << yn(o.exhaustive)
      << " graphs=" << o.graphs_scanned << " signings=" << o.signings_tested
      << " heuristic_signings=" << o.heuristic_signings_tested << " unsigned_nuts=" << o.unsigned_nuts
      << " proper_nuts=" << o.proper_nuts << '\n';
  for (const auto& w : o.witnesses)
    out << "witness graph=" << w.graph_index << " representative=" << w.representative << ' '
        << io::emit_signed(w.graph) << " class=" << to_string(w.report.signed_class) << '\n';
}

std::vector<std::pair<std::size_t, std::size_t>> default_cells() {
  return {{3, 8}, {3, 10}, {3, 12}, {3, 14}, {4, 5}, {4, 6}, {4, 7}, {4, 8}, {5, 8}, {5, 10}, {6, 8}};
}

std::optional<std::vector<std::pair<std::size_t, std::size_t>>> parse_cells(const std::string& s) {
  static const std::regex cell(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))");
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  std::string rest;
  auto begin = std::sregex_iterator(s.begin(), s.end(), cell);
  std::size_t last = 0;
  for (auto it = begin; it != std::sregex_iterator(); ++it) {
    rest += s.substr(last, static_cast<std::size_t>(it->position()) - last);
    last = static_cast<std::size_t>(it->position() + it->length());
    cells.emplace_back(std::stoul((*it)[1]), std::stoul((*it)[2]));
  }
  rest += s.substr(last);
  if (rest.find_first_not_of(" ,;\t") != std::string::npos) return std::nullopt;
  return cells;
}

}  // namespace

std::string default_fixtures_dir() {
  if (const char* env = std::getenv("SIGNUT_FIXTURES")) return env;
  return SIGNUT_FIXTURES_DIR;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Streams s{in, out, err};
  CLI::App app{"Signed nut graph toolkit", "signut"};
  app.require_subcommand(1);

  std::string input = "-";
  bool json = false;
  bool underlying_only = false;
  auto* classify_cmd = app.add_subcommand("classify", "Classify signed records (one report per line)");
  classify_cmd->add_option("input", input, "Input file, '-' for stdin");
  classify_cmd->add_flag("--json", json, "Emit JSON reports");
  classify_cmd->add_flag("--underlying-only", underlying_only, "Read graph6 only and classify the unsigned graph");

  std::string graphs_path;
  std::optional<std::size_t> n_opt, rho_opt;
  std::string mode_str = "full-verdict";
  std::string want_str = "all";
  std::size_t workers = default_workers();
  std::optional<std::uint64_t> limit, signing_limit;
  bool heuristics = false;
  std::string fixtures = default_fixtures_dir();
  auto* search_cmd = app.add_subcommand("search", "Search a class of regular graphs for signed nut graphs");
  search_cmd->add_option("--graphs", graphs_path, "graph6 catalogue ('-' for stdin)");
  search_cmd->add_option("--n", n_opt, "Order");
  search_cmd->add_option("--rho", rho_opt, "Degree");
  search_cmd->add_option("--mode", mode_str, "first-witness | count-all | full-verdict");
  search_cmd->add_option("--want", want_str, "Comma list of unsigned, traditional, proper");
  search_cmd->add_option("--workers", workers, "Worker threads (default $SIGNUT_WORKERS or 1)")
      ->check(CLI::PositiveNumber);
  search_cmd->add_option("--limit", limit, "Search only the first N graphs");
  search_cmd->add_option("--signing-limit", signing_limit, "At most N representatives per graph");
  search_cmd->add_flag("--heuristics", heuristics, "Low-weight and Hamiltonian-cycle probes (first-witness mode)");
  search_cmd->add_option("--fixtures", fixtures, "Catalogue directory used when --graphs is absent");
  search_cmd->add_flag("--json", json, "Emit JSON");

  std::string cells_str;
  auto* table_cmd = app.add_subcommand("table", "Existence table for (rho, n) cells");
  table_cmd->add_option("--cells", cells_str, "Cells as \"(rho,n),(rho,n),...\"");
  table_cmd->add_option("--fixtures", fixtures, "Catalogue directory");
  table_cmd->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
  table_cmd->add_flag("--json", json, "Emit JSON");

  Vertex pivot = 0;
  auto* fowler_cmd = app.add_subcommand("fowler", "Vertex expansion about a pivot");
  fowler_cmd->add_option("--pivot", pivot, "Pivot vertex")->required();
  fowler_cmd->add_option("input", input, "Input file, '-' for stdin");

  unsigned k = 1;
  auto* complete_cmd = app.add_subcommand("complete-nut", "Signed complete nut graph of order 4k+1");
  complete_cmd->add_option("--k", k, "k >= 1")->required();

  std::string at;
  auto* switch_cmd = app.add_subcommand("switch", "Switch at a vertex set");
  switch_cmd->add_option("--at", at, "Comma list of vertices")->required();
  switch_cmd->add_option("input", input, "Input file, '-' for stdin");

  auto* canonical_cmd = app.add_subcommand("canonical", "Representative with a positive kernel eigenvector");
  canonical_cmd->add_option("input", input, "Input file, '-' for stdin");

  bool fullify = false;
  auto* kernel_cmd = app.add_subcommand("kernel", "Exact kernel basis");
  kernel_cmd->add_flag("--fullify", fullify, "Transform to a nowhere-zero basis");
  kernel_cmd->add_option("input", input, "Input file, '-' for stdin");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParseError;
  }

  try {
    if (*classify_cmd) {
      return with_input(input, s, [&](std::istream& stream) {
        int status = kExitOk;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(stream, line)) {
          ++line_no;
          if (!line.empty() && line.back() == '\r') line.pop_back();
          const auto first = line.find_first_not_of(" \t");
          if (first == std::string::npos) continue;
          SignedGraph g;
          try {
            if (underlying_only) {
              const auto end = line.find_first_of(" \t", first);
              g = io::parse_graph6(std::string_view(line).substr(0, end));
            } else {
              g = io::parse_signed(line);
            }
          } catch (const io::ParseError& e) {
            err << "signut: line " << line_no << ": " << e.what() << '\n';
            status = kExitParseError;
            continue;
          }
          try {
            const NutReport r = classify(g);
            out << (json ? io::emit_report(r, g) : io::format_report_line(g, r)) << '\n';
          } catch (const std::exception& e) {
            err << "signut: line " << line_no << ": " << e.what() << '\n';
            if (status == kExitOk) status = kExitFailure;
          }
        }
        return status;
      });
    }

    if (*search_cmd) {
      SearchConfig cfg;
      const auto mode = parse_mode(mode_str);
      const auto want = parse_want(want_str);
      if (!mode || !want) {
        err << "signut: invalid " << (mode ? "--want" : "--mode") << " value\n";
        return kExitParseError;
      }
      cfg.mode = *mode;
      cfg.want = *want;
      cfg.worker_count = workers;
      cfg.graph_limit = limit;
      cfg.signing_limit = signing_limit;
      cfg.heuristics = heuristics;

      std::vector<SignedGraph> graphs;
      bool catalogue_complete = true;
      if (!graphs_path.empty()) {
        try {
          const int status = with_input(graphs_path, s, [&](std::istream& stream) {
            graphs = io::read_graph6_stream(stream);
            return kExitOk;
          });
          if (status != kExitOk) return status;
        } catch (const io::ParseError& e) {
          err << "signut: " << e.what() << '\n';
          return kExitParseError;
        }
      } else if (n_opt && rho_opt) {
        bool complete = true;
        auto catalogue = load_catalogue(fixtures, *rho_opt, *n_opt, complete);
        if (!catalogue) {
          err << "signut: no catalogue " << catalogue_path(fixtures, *rho_opt, *n_opt).string() << '\n';
          return kExitFailure;
        }
        graphs = std::move(*catalogue);
        catalogue_complete = complete;
      } else {
        err << "signut: search needs --graphs or both --n and --rho\n";
        return kExitParseError;
      }

      SearchOutcome outcome = search_class(graphs, cfg);
      outcome.exhaustive = outcome.exhaustive && catalogue_complete;
      if (!graphs.empty() && ((n_opt && *n_opt != outcome.n) || (rho_opt && *rho_opt != outcome.rho))) {
        err << "signut: catalogue has order " << outcome.n << " and degree " << outcome.rho << '\n';
        return kExitFailure;
      }
      for (const auto& e : outcome.errors) err << "signut: graph " << e.graph_index << ": " << e.message << '\n';
      if (json)
        out << io::emit_report(outcome) << '\n';
      else
        print_outcome_text(outcome, out);
      return outcome.verdict == Verdict::Capped ? kExitCapped : kExitOk;
    }

    if (*table_cmd) {
      auto cells = cells_str.empty() ? std::optional(default_cells()) : parse_cells(cells_str);
      if (!cells) {
        err << "signut: cannot parse --cells\n";
        return kExitParseError;
      }
      SearchConfig cfg;
      cfg.mode = SearchMode::FirstWitness;
      cfg.heuristics = true;
      cfg.worker_count = workers;
      std::vector<CellVerdict> verdicts;
      for (const auto& [rho, n] : *cells) {
        bool complete = true;
        auto catalogue = load_catalogue(fixtures, rho, n, complete);
        CellVerdict c;
        c.rho = rho;
        c.n = n;
        if (catalogue && !catalogue->empty()) {
          c = existence_verdict(n, rho, *catalogue, cfg, complete);
        } else {
          c.label = CellLabel::NotAttempted;
          c.exhaustive = false;
        }
        verdicts.push_back(c);
      }
      if (json) {
        out << "{\"schema\":1,\"type\":\"existence-table\",\"cells\":[";
        for (std::size_t i = 0; i < verdicts.size(); ++i) {
          const auto& c = verdicts[i];
          out << (i ? "," : "") << "{\"rho\":" << c.rho << ",\"n\":" << c.n << ",\"label\":\"" << to_string(c.label)
              << "\",\"symbol\":\"" << symbol(c.label) << "\",\"exhaustive\":" << (c.exhaustive ? "true" : "false")
              << "}";
        }
        out << "]}\n";
      } else {
        out << io::format_table(verdicts);
      }
      return kExitOk;
    }

    if (*fowler_cmd)
      return map_records(input, s, [&](const SignedGraph& g) { return std::vector{fowler(g, pivot).result}; });

    if (*complete_cmd) {
      out << io::emit_signed(complete_nut(k).graph) << '\n';
      return kExitOk;
    }

    if (*switch_cmd) {
      std::vector<Vertex> members;
      std::stringstream ss(at);
      std::string item;
      while (std::getline(ss, item, ',')) {
        if (item.find_first_not_of(" \t") == std::string::npos) continue;
        std::size_t used = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(item, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos) {
          err << "signut: invalid vertex '" << item << "' in --at\n";
          return kExitParseError;
        }
        members.push_back(static_cast<Vertex>(v));
      }
      const SwitchingSet set(members);
      return map_records(input, s, [&](const SignedGraph& g) { return std::vector{switch_at(g, set)}; });
    }

    if (*canonical_cmd)
      return map_records(input, s,
                         [](const SignedGraph& g) { return std::vector{positive_representative(g).first}; });

    if (*kernel_cmd) {
      return with_input(input, s, [&](std::istream& stream) {
        int status = kExitOk;
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(stream, line)) {
          ++line_no;
          if (!line.empty() && line.back() == '\r') line.pop_back();
          if (line.find_first_not_of(" \t") == std::string::npos) continue;
          try {
            const SignedGraph g = io::parse_signed(line);
            KernelBasis b = kernel_basis(adjacency_matrix(g));
            if (fullify && b.nullity() > 0) b = fullify_basis(b);
            out << io::emit_signed(g) << " nullity=" << b.nullity() << " basis=[";
            for (std::size_t i = 0; i < b.vectors.size(); ++i) out << (i ? "," : "") << format_vector(b.vectors[i]);
            out << "]\n";
          } catch (const io::ParseError& e) {
            err << "signut: line " << line_no << ": " << e.what() << '\n';
            status = kExitParseError;
          } catch (const std::exception& e) {
            err << "signut: line " << line_no << ": " << e.what() << '\n';
            if (status == kExitOk) status = kExitFailure;
          }
        }
        return status;
      });
    }
  } catch (const io::ParseError& e) {
    err << "signut: " << e.what() << '\n';
    return kExitParseError;
  } catch (const std::exception& e) {
    err << "signut: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitFailure;
}

}  // namespace signut::cli
