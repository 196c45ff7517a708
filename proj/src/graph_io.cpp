#include "splitnull/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace splitnull {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c);
  if (v < kBias || v > kBias + 63)
    throw ParseError(std::string("graph6: byte ") + std::to_string(v) + " outside 63..126");
  return v - kBias;
}

std::string_view strip_comment(std::string_view line) {
  const auto hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  return trim(line);
}

long long parse_int(std::string_view tok, std::size_t line_no) {
  long long value = 0;
  const auto* first = tok.data();
  const auto* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError("edge list line " + std::to_string(line_no) + ": '" + std::string(tok) +
                     "' is not an integer");
  return value;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  text = trim(text);
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError("graph6: empty input");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != '~') {
    n = sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw ParseError("graph6: truncated size header");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) throw ParseError("graph6: long header used for n < 63");
    pos = 4;
  } else {
    if (text.size() < 8) throw ParseError("graph6: truncated size header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | sextet(text[i]);
    if (n <= 258047) throw ParseError("graph6: 8-byte header used for n <= 258047");
    pos = 8;
  }
  if (n > (1LL << 20)) throw ParseError("graph6: graph too large");

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != bytes)
    throw ParseError("graph6: expected " + std::to_string(bytes) + " data bytes for n=" +
                     std::to_string(n) + ", found " + std::to_string(text.size() - pos));

  Graph g(static_cast<Vertex>(n));
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = sextet(text[pos + static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int last = sextet(text.back());
    if (last & ((1 << (6 - k % 6)) - 1)) throw ParseError("graph6: nonzero padding bits");
  }
  for (std::size_t i = pos; i < text.size(); ++i) sextet(text[i]);
  return g;
}

std::string write_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  long long n = -1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = strip_comment(raw);
    if (line.empty()) continue;
    std::vector<std::string_view> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) toks.push_back(line.substr(i, j - i));
      i = j;
    }
    if (n < 0) {
      if (toks.size() != 1)
        throw ParseError("edge list line " + std::to_string(line_no) +
                         ": expected the vertex count");
      n = parse_int(toks[0], line_no);
      if (n < 0 || n > (1LL << 20))
        throw ParseError("edge list: vertex count " + std::to_string(n) + " out of range");
      continue;
    }
    if (toks.size() != 2)
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected 'u v'");
    const long long u = parse_int(toks[0], line_no);
    const long long v = parse_int(toks[1], line_no);
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError("edge list line " + std::to_string(line_no) + ": vertex out of range 0.." +
                       std::to_string(n - 1));
    if (u == v)
      throw ParseError("edge list line " + std::to_string(line_no) + ": self-loop at " +
                       std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) throw ParseError("edge list: missing vertex count");
  return Graph::from_edges(static_cast<Vertex>(n), edges);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.order() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

GraphFormat parse_format_name(std::string_view name) {
  if (name == "graph6" || name == "g6") return GraphFormat::graph6;
  if (name == "edges" || name == "edgelist") return GraphFormat::edges;
  if (name == "auto") return GraphFormat::automatic;
  throw ParseError("unknown graph format '" + std::string(name) + "'");
}

Graph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::automatic) {
    format = GraphFormat::graph6;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
      const auto line = strip_comment(raw);
      if (line.empty()) continue;
      bool digits = true;
      for (char c : line) digits = digits && std::isdigit(static_cast<unsigned char>(c));
      if (digits) format = GraphFormat::edges;
      break;
    }
  }
  if (format == GraphFormat::edges) return parse_edge_list(text);
  // graph6 files hold one graph per line; take the first.
  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    if (!trim(raw).empty()) return parse_graph6(raw);
  }
  throw ParseError("graph6: empty input");
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace splitnull
