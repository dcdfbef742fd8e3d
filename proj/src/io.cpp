#include "kbg/io.hpp"

#include <charconv>
#include <cstdint>

namespace kbg {

namespace {

constexpr int kOffset = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int payload_value(char c) {
  unsigned char u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126) throw ParseError("graph6: byte outside printable range 63..126");
  return u - kOffset;
}

// N(n): one byte for n <= 62, "~" + 3 bytes for n <= 258047, "~~" + 6 bytes above.
long long decode_size(std::string_view& rest) {
  if (rest.empty()) throw ParseError("graph6: empty record");
  int c0 = payload_value(rest[0]);
  if (c0 < 63) {
    rest.remove_prefix(1);
    return c0;
  }
  if (rest.size() >= 2 && rest[1] == '~') {
    if (rest.size() < 8) throw ParseError("graph6: truncated size field");
    long long n = 0;
    for (int i = 2; i < 8; ++i) n = (n << 6) | payload_value(rest[i]);
    rest.remove_prefix(8);
    return n;
  }
  if (rest.size() < 4) throw ParseError("graph6: truncated size field");
  long long n = 0;
  for (int i = 1; i < 4; ++i) n = (n << 6) | payload_value(rest[i]);
  rest.remove_prefix(4);
  return n;
}

void encode_size(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kOffset));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  } else {
    out.push_back('~');
    out.push_back('~');
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + kOffset));
  }
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  if (record.substr(0, kHeader.size()) == kHeader) record.remove_prefix(kHeader.size());
  while (!record.empty() && (record.back() == '\n' || record.back() == '\r')) record.remove_suffix(1);

  std::string_view rest = record;
  long long n = decode_size(rest);
  if (n > 1'000'000) throw ParseError("graph6: vertex count too large");

  long long bits = n * (n - 1) / 2;
  long long need = (bits + 5) / 6;
  if (static_cast<long long>(rest.size()) < need) throw ParseError("graph6: truncated bit payload");
  if (static_cast<long long>(rest.size()) > need) throw ParseError("graph6: trailing bytes after payload");

  Graph g(static_cast<int>(n));
  long long k = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row, ++k) {
      int byte = payload_value(rest[static_cast<size_t>(k / 6)]);
      if ((byte >> (5 - (k % 6))) & 1) g.add_edge(row, col);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  encode_size(out, n);
  long long bits = static_cast<long long>(n) * (n - 1) / 2;
  out.reserve(out.size() + static_cast<size_t>((bits + 5) / 6));
  int acc = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.adjacent(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kOffset));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kOffset));
  return out;
}

namespace {

int parse_int(std::string_view tok, int line, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(std::string("edge list: bad ") + what, line);
  return value;
}

struct LineReader {
  std::string_view text;
  int line = 0;
  // next non-blank line, stripped of \r; empty optional at end of input
  bool next(std::string_view& out) {
    while (!text.empty()) {
      size_t nl = text.find('\n');
      std::string_view raw = text.substr(0, nl);
      text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
      ++line;
      while (!raw.empty() && (raw.back() == '\r' || raw.back() == ' ' || raw.back() == '\t'))
        raw.remove_suffix(1);
      while (!raw.empty() && (raw.front() == ' ' || raw.front() == '\t')) raw.remove_prefix(1);
      if (!raw.empty()) {
        out = raw;
        return true;
      }
    }
    return false;
  }
};

std::pair<std::string_view, std::string_view> split_two(std::string_view s, int line) {
  size_t sp = s.find_first_of(" \t");
  if (sp == std::string_view::npos) throw ParseError("edge list: expected two fields", line);
  std::string_view a = s.substr(0, sp);
  std::string_view b = s.substr(sp);
  while (!b.empty() && (b.front() == ' ' || b.front() == '\t')) b.remove_prefix(1);
  if (b.find_first_of(" \t") != std::string_view::npos)
    throw ParseError("edge list: expected two fields", line);
  return {a, b};
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  LineReader rd{text};
  std::string_view header;
  if (!rd.next(header)) throw ParseError("edge list: missing \"n m\" header", 1);
  auto [ntok, mtok] = split_two(header, rd.line);
  int n = parse_int(ntok, rd.line, "vertex count");
  int m = parse_int(mtok, rd.line, "edge count");
  if (n < 0 || m < 0) throw ParseError("edge list: negative counts", rd.line);

  Graph g(n);
  for (int i = 0; i < m; ++i) {
    std::string_view row;
    if (!rd.next(row)) throw ParseError("edge list: fewer edge lines than announced", rd.line + 1);
    auto [utok, vtok] = split_two(row, rd.line);
    int u = parse_int(utok, rd.line, "endpoint");
    int v = parse_int(vtok, rd.line, "endpoint");
    try {
      g.add_edge(u, v);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), rd.line);
    }
  }
  std::string_view extra;
  if (rd.next(extra)) throw ParseError("edge list: trailing content", rd.line);
  return g;
}

}  // namespace kbg
