#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cyclepack/graph.hpp"

namespace cyclepack {

/// Malformed edge-list input. line() is 1-based; 0 means "end of input".
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::string message, const std::string& source = {});
  std::size_t line() const noexcept { return line_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::string message_;
};

/// Parses "n m" followed by m lines "u v" (0-indexed). Blank lines are
/// skipped but still counted for error positions.
Graph parse_edge_list(std::string_view text);

/// Inverse of parse_edge_list: header, then edges sorted with u < v.
std::string serialize_edge_list(const Graph& g);

/// Reads a file; parse errors are rethrown as "path:line: message".
Graph read_edge_list_file(const std::filesystem::path& path);
void write_edge_list_file(const std::filesystem::path& path, const Graph& g);

}  // namespace cyclepack
