#include "signut/graph_io.hpp"

#include "json.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace signut::io {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  return s;
}

int decode_byte(std::string_view s, std::size_t pos, std::size_t base_offset) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126)
    throw ParseError("graph6: invalid byte " + std::to_string(static_cast<int>(c)), base_offset + pos);
  return c - 63;
}

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

nlohmann::ordered_json integer_array(const std::vector<Integer>& v) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw std::range_error("report: kernel entry exceeds 64-bit range");
    arr.push_back(static_cast<std::int64_t>(x.get_si()));
  }
  return arr;
}

nlohmann::ordered_json report_json(const NutReport& r, const SignedGraph* g) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["type"] = "nut-report";
  if (g) {
    j["graph6"] = emit_graph6(*g);
    j["mask"] = emit_mask(*g);
  }
  j["order"] = r.order;
  j["size"] = r.size;
  j["degree_profile"] = r.degree_profile;
  j["nullity"] = r.nullity;
  j["is_singular"] = r.is_singular;
  j["is_core"] = r.is_core;
  j["is_nut"] = r.is_nut;
  j["is_connected"] = r.is_connected;
  j["signed_class"] = std::string(to_string(r.signed_class));
  if (r.kernel_vector) j["kernel_vector"] = integer_array(*r.kernel_vector);
  return j;
}

std::size_t display_width(std::string_view s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

}  // namespace

SignedGraph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  {
    const auto trimmed_end = trim(line);
    line = line.substr(0, static_cast<std::size_t>(trimmed_end.data() - line.data()) + trimmed_end.size());
  }
  if (line.starts_with(kHeader)) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (line.empty()) throw ParseError("graph6: empty input", base);

  std::size_t n = 0;
  std::size_t pos = 0;
  if (static_cast<unsigned char>(line[0]) == 126) {
    if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == 126)
      throw ParseError("graph6: 8-byte order form is not supported", base + 1);
    if (line.size() < 4) throw ParseError("graph6: truncated extended order", base + line.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(decode_byte(line, i, base));
    pos = 4;
  } else {
    n = static_cast<std::size_t>(decode_byte(line, 0, base));
    pos = 1;
  }
  if (n == 0) throw ParseError("graph6: empty graphs are not supported", base);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (line.size() - pos != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes for order " + std::to_string(n) +
                         ", found " + std::to_string(line.size() - pos),
                     base + std::min(line.size(), pos + bytes));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t b = 0; b < bytes; ++b) {
    const int value = decode_byte(line, pos + b, base);
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool set = (value >> bit) & 1;
      if (k >= bits) {
        if (set) throw ParseError("graph6: non-zero padding bit", base + pos + b);
        continue;
      }
      if (!set) continue;
      // Column-wise upper triangle: k enumerates (i, j), i < j, j ascending.
      std::size_t j = 1;
      while (j * (j + 1) / 2 <= k) ++j;
      const std::size_t i = k - j * (j - 1) / 2;
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return SignedGraph(n, std::move(edges));
}

std::string emit_graph6(const SignedGraph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw std::domain_error("graph6: empty graphs are not supported");
  if (n > 258047) throw std::domain_error("graph6: order too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  const std::size_t bits = n * (n - 1) / 2;
  std::vector<bool> x(bits, false);
  for (const Edge& e : g.edges()) x[static_cast<std::size_t>(e.v) * (e.v - 1) / 2 + e.u] = true;
  for (std::size_t k = 0; k < bits; k += 6) {
    int value = 0;
    for (std::size_t t = 0; t < 6; ++t) value = (value << 1) | ((k + t < bits && x[k + t]) ? 1 : 0);
    out.push_back(static_cast<char>(value + 63));
  }
  return out;
}

std::string emit_mask(const SignedGraph& g) {
  const std::size_t m = g.size();
  static constexpr char digits[] = "0123456789ABCDEF";
  std::string out(mask_digits(m), '0');
  for (std::size_t d = 0; d < out.size(); ++d) {
    int value = 0;
    for (std::size_t t = 0; t < 4; ++t) {
      const std::size_t i = 4 * d + t;
      value = (value << 1) | ((i < m && g.sign(i) == Sign::Negative) ? 1 : 0);
    }
    out[d] = digits[value];
  }
  return out;
}

std::string emit_signed(const SignedGraph& g) { return emit_graph6(g) + " " + emit_mask(g); }

SignedGraph parse_signed(std::string_view line) {
  const std::string_view body = trim(line);
  const std::size_t lead = static_cast<std::size_t>(body.data() - line.data());
  const std::size_t space = body.find_first_of(" \t");
  const std::string_view g6 = body.substr(0, space);
  SignedGraph g;
  try {
    g = parse_graph6(g6);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" (at byte")), lead + e.offset());
  }
  std::string_view mask;
  std::size_t mask_offset = lead + body.size();
  if (space != std::string_view::npos) {
    std::size_t start = space;
    while (start < body.size() && (body[start] == ' ' || body[start] == '\t')) ++start;
    mask = body.substr(start);
    mask_offset = lead + start;
    if (mask.find_first_of(" \t") != std::string_view::npos)
      throw ParseError("signed record: unexpected trailing field", mask_offset + mask.find_first_of(" \t"));
  }
  const std::size_t m = g.size();
  if (mask.size() * 4 < m)
    throw ParseError("signed record: mask has " + std::to_string(mask.size() * 4) + " bits for " +
                         std::to_string(m) + " edges",
                     mask_offset + mask.size());
  std::vector<Sign> signs(m, Sign::Positive);
  for (std::size_t d = 0; d < mask.size(); ++d) {
    const int value = hex_value(mask[d]);
    if (value < 0) throw ParseError("signed record: invalid hex digit", mask_offset + d);
    for (std::size_t t = 0; t < 4; ++t) {
      const bool set = (value >> (3 - t)) & 1;
      const std::size_t i = 4 * d + t;
      if (i < m) {
        if (set) signs[i] = Sign::Negative;
      } else if (set) {
        throw ParseError("signed record: mask bit set beyond edge count", mask_offset + d);
      }
    }
  }
  return g.with_signs(std::move(signs));
}

std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    out.push_back(line);
  }
  return out;
}

std::vector<SignedGraph> read_graph6_stream(std::istream& in) {
  std::vector<SignedGraph> out;
  for (const auto& line : read_lines(in)) out.push_back(parse_graph6(line));
  return out;
}

std::string emit_report(const NutReport& r) { return report_json(r, nullptr).dump(); }

std::string emit_report(const NutReport& r, const SignedGraph& g) { return report_json(r, &g).dump(); }

std::string emit_report(const SearchOutcome& o) {
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["type"] = "search-outcome";
  j["n"] = o.n;
  j["rho"] = o.rho;
  j["verdict"] = std::string(to_string(o.verdict));
  j["exhaustive"] = o.exhaustive;
  j["graphs_scanned"] = o.graphs_scanned;
  j["signings_tested"] = o.signings_tested;
  j["heuristic_signings_tested"] = o.heuristic_signings_tested;
  j["unsigned_nuts"] = o.unsigned_nuts;
  j["proper_nuts"] = o.proper_nuts;
  auto witnesses = nlohmann::ordered_json::array();
  for (const auto& w : o.witnesses) {
    nlohmann::ordered_json wj;
    wj["graph_index"] = w.graph_index;
    wj["representative"] = w.representative;
    wj["record"] = emit_signed(w.graph);
    wj["report"] = report_json(w.report, nullptr);
    witnesses.push_back(std::move(wj));
  }
  j["witnesses"] = std::move(witnesses);
  auto errors = nlohmann::ordered_json::array();
  for (const auto& e : o.errors) {
    nlohmann::ordered_json ej;
    ej["graph_index"] = e.graph_index;
    ej["message"] = e.message;
    errors.push_back(std::move(ej));
  }
  j["errors"] = std::move(errors);
  return j.dump();
}

std::string format_report_line(const SignedGraph& g, const NutReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream os;
  os << emit_signed(g) << " order=" << r.order << " size=" << r.size << " nullity=" << r.nullity
     << " singular=" << yn(r.is_singular) << " core=" << yn(r.is_core) << " nut=" << yn(r.is_nut)
     << " connected=" << yn(r.is_connected) << " class=" << to_string(r.signed_class);
  if (r.kernel_vector) {
    os << " kernel=[";
    for (std::size_t i = 0; i < r.kernel_vector->size(); ++i) os << (i ? "," : "") << (*r.kernel_vector)[i];
    os << "]";
  }
  return os.str();
}

std::string format_table(const std::vector<CellVerdict>& cells) {
  std::set<std::size_t> rhos, orders;
  std::map<std::pair<std::size_t, std::size_t>, std::string> text;
  for (const auto& c : cells) {
    rhos.insert(c.rho);
    orders.insert(c.n);
    std::string s(symbol(c.label));
    if (!c.exhaustive && c.label != CellLabel::Undecided && c.label != CellLabel::NotAttempted) s += "*";
    text[{c.rho, c.n}] = s;
  }
  constexpr std::size_t width = 4;
  auto pad = [&](const std::string& s) {
    const std::size_t w = display_width(s);
    return std::string(w < width ? width - w : 0, ' ') + s;
  };
  std::ostringstream os;
  os << "rho\\n";
  for (auto n : orders) os << pad(std::to_string(n));
  os << '\n';
  for (auto rho : rhos) {
    std::string label = std::to_string(rho);
    os << label << std::string(5 - std::min<std::size_t>(5, label.size()), ' ');
    for (auto n : orders) {
      auto it = text.find({rho, n});
      os << pad(it == text.end() ? "" : it->second);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace signut::io
