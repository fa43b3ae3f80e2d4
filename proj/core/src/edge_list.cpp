#include "cyclepack/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace cyclepack {

namespace {

std::string format_parse_error(std::size_t line, const std::string& message,
                               const std::string& source) {
  std::string where = source.empty() ? (line == 0 ? "" : "line " + std::to_string(line))
                                     : source + (line == 0 ? "" : ":" + std::to_string(line));
  return where.empty() ? message : where + ": " + message;
}

}  // namespace

ParseError::ParseError(std::size_t line, std::string message, const std::string& source)
    : std::runtime_error(format_parse_error(line, message, source)),
      line_(line),
      message_(std::move(message)) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_nat(std::string_view tok, std::size_t line) {
  std::size_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t seen = 0;
  GraphBuilder builder(0);

  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    const auto toks = split_ws(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) {
      throw ParseError(line_no, "expected two integers, got " + std::to_string(toks.size()) +
                                    " fields");
    }
    const std::size_t a = parse_nat(toks[0], line_no);
    const std::size_t b = parse_nat(toks[1], line_no);

    if (!have_header) {
      n = a;
      m = b;
      if (n > kRemoved) throw ParseError(line_no, "vertex count too large");
      builder = GraphBuilder(n);
      have_header = true;
      continue;
    }
    if (seen == m) throw ParseError(line_no, "more edge lines than the header's m=" +
                                                 std::to_string(m));
    if (a >= n || b >= n) {
      throw ParseError(line_no, "vertex id " + std::to_string(a >= n ? a : b) +
                                    " out of range for n=" + std::to_string(n));
    }
    if (a == b) throw ParseError(line_no, "self-loop at vertex " + std::to_string(a));
    if (!builder.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(b))) {
      throw ParseError(line_no, "duplicate edge " + std::to_string(a) + " " + std::to_string(b));
    }
    ++seen;
  }

  if (!have_header) throw ParseError(0, "missing header line 'n m'");
  if (seen != m) {
    throw ParseError(0, "end of input: expected " + std::to_string(m) + " edges, found " +
                            std::to_string(seen));
  }
  return std::move(builder).build();
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Graph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_edge_list(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.line(), e.message(), path.string());
  }
}

void write_edge_list_file(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(path.string() + ": cannot write file");
  out << serialize_edge_list(g);
}

}  // namespace cyclepack
