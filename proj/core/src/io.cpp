#include "starspan/io.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace starspan {

std::string to_graph6(const Graph& g) {
  long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

Graph from_graph6(std::string_view s) {
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) s.remove_prefix(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw std::invalid_argument("graph6: empty input");

  size_t pos = 0;
  auto take = [&]() -> long long {
    if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
    unsigned char c = static_cast<unsigned char>(s[pos++]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    return c - 63;
  };

  long long n;
  long long c0 = take();
  if (c0 < 63) {
    n = c0;
  } else {
    long long c1 = take();
    if (c1 == 63) {
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | take();
    } else {
      n = c1;
      n = (n << 6) | take();
      n = (n << 6) | take();
    }
  }
  long long nbits = n * (n - 1) / 2;
  size_t expect = static_cast<size_t>((nbits + 5) / 6);
  if (s.size() - pos != expect)
    throw std::invalid_argument("graph6: body length mismatch for stated order");
  if (n > (1LL << 30)) throw std::invalid_argument("graph6: order out of supported range");

  std::vector<std::pair<int, int>> edges;
  int i = 0, j = 1;
  for (size_t p = pos; p < s.size(); ++p) {
    unsigned char c = static_cast<unsigned char>(s[p]);
    if (c < 63 || c > 126) throw std::invalid_argument("graph6: byte out of range");
    int x = c - 63;
    for (int b = 5; b >= 0; --b) {
      int bit = (x >> b) & 1;
      if (j >= n) {
        if (bit) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (bit) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::string out;
  for (auto [u, v] : g.edge_list()) {
    out += std::to_string(u);
    out += ' ';
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

Graph from_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  int max_vertex = -1;
  size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                             : end - start);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    long long u, v;
    if (in >> u) {
      if (!(in >> v))
        throw std::invalid_argument("edge list: line " + std::to_string(line_no) +
                                    ": expected two vertex indices");
      std::string rest;
      if (in >> rest)
        throw std::invalid_argument("edge list: line " + std::to_string(line_no) +
                                    ": trailing tokens");
      if (u < 0 || v < 0)
        throw std::invalid_argument("edge list: line " + std::to_string(line_no) +
                                    ": negative vertex index");
      if (u > 10000000 || v > 10000000)
        throw std::invalid_argument("edge list: vertex index out of supported range");
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      max_vertex = std::max(max_vertex, static_cast<int>(std::max(u, v)));
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return Graph::from_edges(max_vertex + 1, edges);
}

}  // namespace starspan
