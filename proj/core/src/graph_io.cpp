#include "vrel/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "vrel/error.hpp"

namespace vrel {

std::string to_edge_list(const SimpleGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& e : g.edges()) out << e.i << ' ' << e.j << '\n';
  return out.str();
}

SimpleGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw Error(Errc::kParse, "edge list: missing \"n m\" header");
  if (n < 1 || n > kMaxVertices || m < 0) {
    throw Error(Errc::kParse, "edge list: header values out of range");
  }
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long k = 0; k < m; ++k) {
    long long a = 0;
    long long b = 0;
    if (!(in >> a >> b)) {
      throw Error(Errc::kParse, "edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(k));
    }
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw Error(Errc::kParse, "edge list: vertex index out of range on edge " + std::to_string(k));
    }
    edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  std::string rest;
  if (in >> rest) throw Error(Errc::kParse, "edge list: trailing data after " + std::to_string(m) + " edges");
  try {
    return build_graph(static_cast<int>(n), edges);
  } catch (const Error& e) {
    throw Error(Errc::kParse, std::string("edge list: ") + e.what());
  }
}

std::string to_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

SimpleGraph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error(Errc::kParse, "graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw Error(Errc::kParse, "graph6: byte outside printable range");
  }
  std::size_t pos = 0;
  int n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw Error(Errc::kParse, "graph6: unsupported order encoding");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  if (n < 1 || n > kMaxVertices) throw Error(Errc::kParse, "graph6: order " + std::to_string(n) + " unsupported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) throw Error(Errc::kParse, "graph6: wrong body length");
  std::vector<std::pair<int, int>> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int chunk = text[pos + k / 6] - 63;
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  return build_graph(n, edges);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::kIo, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::kIo, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(Errc::kIo, "write failed for " + path.string());
}

SimpleGraph read_graph_file(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".el") return parse_edge_list(read_text_file(path));
  if (ext == ".g6") return parse_graph6(read_text_file(path));
  throw Error(Errc::kParse, "unknown graph file extension '" + ext + "' (expected .el or .g6)");
}

void write_graph_file(const std::filesystem::path& path, const SimpleGraph& g) {
  const auto ext = path.extension().string();
  if (ext == ".el") {
    write_text_file(path, to_edge_list(g));
  } else if (ext == ".g6") {
    write_text_file(path, to_graph6(g) + "\n");
  } else {
    throw Error(Errc::kParse, "unknown graph file extension '" + ext + "' (expected .el or .g6)");
  }
}

}  // namespace vrel
