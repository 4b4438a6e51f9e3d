#pragma once

// Text formats: the "n m / u v" edge list and graph6.
//
// graph6 layout (nauty format notes): N(n) followed by the upper triangle of
// the adjacency matrix read column by column, x(0,1) x(0,2) x(1,2) x(0,3) ...,
// packed six bits per byte (most significant first), each byte offset by 63,
// zero-padded to a multiple of six bits.

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "elimdist/graph.hpp"

namespace elimdist {

enum class ParseErrc {
  malformed_line,
  endpoint_out_of_range,
  self_loop,
  duplicate_edge,
  bad_header_byte,
  truncated,
  trailing_data,
};

inline const char* to_string(ParseErrc c) {
  switch (c) {
    case ParseErrc::malformed_line: return "malformed line";
    case ParseErrc::endpoint_out_of_range: return "endpoint out of range";
    case ParseErrc::self_loop: return "self-loop";
    case ParseErrc::duplicate_edge: return "duplicate edge";
    case ParseErrc::bad_header_byte: return "bad header byte";
    case ParseErrc::truncated: return "truncated bit field";
    case ParseErrc::trailing_data: return "trailing data";
  }
  return "parse error";
}

class parse_error : public std::runtime_error {
 public:
  parse_error(ParseErrc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}
  ParseErrc code() const { return code_; }

 private:
  ParseErrc code_;
};

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_int(std::string_view tok, long long& out) {
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace detail

inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  {
    std::size_t start = 0;
    while (start <= text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(start, end - start);
      if (!detail::split_ws(line).empty()) lines.push_back(line);
      start = end + 1;
    }
  }
  if (lines.empty()) throw parse_error(ParseErrc::malformed_line, "missing header line");

  auto header = detail::split_ws(lines[0]);
  long long n = 0, m = 0;
  if (header.size() != 2 || !detail::parse_int(header[0], n) || !detail::parse_int(header[1], m) || n < 0 ||
      m < 0)
    throw parse_error(ParseErrc::malformed_line, "header must be \"n m\"");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw parse_error(ParseErrc::malformed_line,
                      "expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto tok = detail::split_ws(lines[i]);
    long long u = 0, v = 0;
    if (tok.size() != 2 || !detail::parse_int(tok[0], u) || !detail::parse_int(tok[1], v))
      throw parse_error(ParseErrc::malformed_line, "line " + std::to_string(i + 1));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error(ParseErrc::endpoint_out_of_range, "line " + std::to_string(i + 1));
    if (u == v) throw parse_error(ParseErrc::self_loop, "line " + std::to_string(i + 1));
    edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
  }
  seen = edges;
  std::sort(seen.begin(), seen.end());
  if (auto it = std::adjacent_find(seen.begin(), seen.end()); it != seen.end())
    throw parse_error(ParseErrc::duplicate_edge,
                      std::to_string(it->first) + " " + std::to_string(it->second));
  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw parse_error(ParseErrc::truncated, "empty input");
  for (char ch : text) {
    auto b = static_cast<unsigned char>(ch);
    if (b < 63 || b > 126) throw parse_error(ParseErrc::bad_header_byte, "byte outside 63..126");
  }

  std::size_t pos = 0;
  auto next = [&]() -> long long {
    if (pos >= text.size()) throw parse_error(ParseErrc::truncated, "vertex count");
    return static_cast<unsigned char>(text[pos++]) - 63;
  };
  long long n = next();
  if (n == 63) {
    long long b = next();
    int width = 3;
    if (b == 63) {
      width = 6;
      b = next();
    }
    n = b;
    for (int i = 1; i < width; ++i) n = (n << 6) | next();
  }
  if (n > (1LL << 31) - 1) throw parse_error(ParseErrc::bad_header_byte, "vertex count too large");

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  const long long have = static_cast<long long>(text.size() - pos);
  if (have < bytes) throw parse_error(ParseErrc::truncated, "adjacency bits");
  if (have > bytes) throw parse_error(ParseErrc::trailing_data, "extra bytes after adjacency bits");

  std::vector<Edge> edges;
  long long k = 0;
  for (long long j = 1; j < n; ++j) {
    for (long long i = 0; i < j; ++i, ++k) {
      int byte = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(k / 6)]) - 63;
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string emit_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
  }
  const long long bits = n * (n - 1) / 2;
  std::vector<unsigned char> packed(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (const auto& [u, v] : g.edges()) {
    // u < v: bit index of x(u, v) in column-major upper triangle
    long long k = static_cast<long long>(v) * (v - 1) / 2 + u;
    packed[static_cast<std::size_t>(k / 6)] |= static_cast<unsigned char>(1 << (5 - k % 6));
  }
  for (unsigned char b : packed) out.push_back(static_cast<char>(b + 63));
  return out;
}

enum class GraphFormat { automatic, graph6, edgelist };

/// Edge lists start with a decimal digit; graph6 never does.
inline Graph parse_graph(std::string_view text, GraphFormat fmt = GraphFormat::automatic) {
  if (fmt == GraphFormat::automatic) {
    std::size_t i = 0;
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    fmt = (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ? GraphFormat::edgelist
                                                                                  : GraphFormat::graph6;
    text.remove_prefix(i);
  }
  return fmt == GraphFormat::edgelist ? parse_edge_list(text) : parse_graph6(text);
}

}  // namespace elimdist
