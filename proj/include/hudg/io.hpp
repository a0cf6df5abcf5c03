#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hudg/graph.hpp"
#include "hudg/repr.hpp"

namespace hudg {

// Malformed input file; carries the 1-based line number when known.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Shortest decimal text with 17 significant digits; parses back bit-exactly.
std::string format_double(double x);

// Representation text format:
//   hudg 1 <n> <R> <Rprime> <metric>
//   <vertex-id> <coord1> <coord2>      (n lines)
void write_representation(std::ostream& out, const DiskRepresentation& rep);
DiskRepresentation read_representation(std::istream& in);

struct EdgeList {
  Graph graph;
  std::vector<std::uint64_t> original_ids;  // internal id -> id in the file
};

// Whitespace-separated "<u> <v>" pairs; '#' and '%' lines are comments.
// Ids are remapped to 0..n-1 by first appearance; duplicates and self-loops
// are dropped.
EdgeList read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

void save_representation(const std::string& path, const DiskRepresentation& rep);
DiskRepresentation load_representation(const std::string& path);

// Either a representation file (detected by its magic) or an edge list.
struct GraphInput {
  Graph graph;
  std::optional<DiskRepresentation> representation;
};
GraphInput load_graph(const std::string& path);

}  // namespace hudg
