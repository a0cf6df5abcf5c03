#include "hudg/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

namespace hudg {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

double parse_double(std::string_view s, std::size_t line) {
  double x = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("expected a number, got '" + std::string(s) + "'", line);
  }
  return x;
}

std::uint64_t parse_uint(std::string_view s, std::size_t line) {
  std::uint64_t x = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("expected a non-negative integer, got '" + std::string(s) + "'", line);
  }
  return x;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_representation(std::ostream& out, const DiskRepresentation& rep) {
  out << "hudg 1 " << rep.size() << ' ' << format_double(rep.threshold) << ' '
      << format_double(rep.ground_radius) << ' ' << metric_name(rep.metric) << '\n';
  for (std::size_t v = 0; v < rep.size(); ++v) {
    out << v << ' ' << format_double(rep.coords[v][0]) << ' ' << format_double(rep.coords[v][1])
        << '\n';
  }
}

DiskRepresentation read_representation(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  if (!std::getline(in, line)) throw FormatError("empty representation file", 1);
  ++lineno;
  const auto header = split_ws(line);
  if (header.size() != 6 || header[0] != "hudg") {
    throw FormatError("expected header 'hudg 1 <n> <R> <Rprime> <metric>'", lineno);
  }
  if (header[1] != "1") throw FormatError("unsupported representation version", lineno);
  const std::uint64_t n = parse_uint(header[2], lineno);
  DiskRepresentation rep;
  rep.threshold = parse_double(header[3], lineno);
  rep.ground_radius = parse_double(header[4], lineno);
  const auto metric = parse_metric(header[5]);
  if (!metric) throw FormatError("unknown metric '" + std::string(header[5]) + "'", lineno);
  rep.metric = *metric;
  rep.coords.resize(n);
  std::vector<bool> seen(n, false);
  std::size_t points = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) throw FormatError("expected '<vertex-id> <coord1> <coord2>'", lineno);
    const std::uint64_t v = parse_uint(tokens[0], lineno);
    if (v >= n) throw FormatError("vertex id out of range", lineno);
    if (seen[v]) throw FormatError("duplicate vertex id " + std::to_string(v), lineno);
    seen[v] = true;
    rep.coords[v] = {parse_double(tokens[1], lineno), parse_double(tokens[2], lineno)};
    ++points;
  }
  if (points != n) {
    throw FormatError("expected " + std::to_string(n) + " points, found " + std::to_string(points),
                      lineno);
  }
  try {
    validate(rep);
  } catch (const RepresentationError& e) {
    throw FormatError(e.what());
  }
  return rep;
}

EdgeList read_edge_list(std::istream& in) {
  std::unordered_map<std::uint64_t, Vertex> ids;
  EdgeList result;
  std::vector<std::pair<Vertex, Vertex>> edges;
  auto intern = [&](std::uint64_t id) {
    auto [it, inserted] = ids.try_emplace(id, static_cast<Vertex>(result.original_ids.size()));
    if (inserted) result.original_ids.push_back(id);
    return it->second;
  };
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0][0] == '#' || tokens[0][0] == '%') continue;
    if (tokens.size() < 2) throw FormatError("expected '<u> <v>'", lineno);
    const Vertex u = intern(parse_uint(tokens[0], lineno));
    const Vertex v = intern(parse_uint(tokens[1], lineno));
    edges.emplace_back(u, v);
  }
  result.graph = Graph::from_edges(result.original_ids.size(), edges);
  return result;
}

void write_edge_list(std::ostream& out, const Graph& g) {
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void save_representation(const std::string& path, const DiskRepresentation& rep) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_representation(out, rep);
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

DiskRepresentation load_representation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return read_representation(in);
}

GraphInput load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  std::string first;
  in >> first;
  in.clear();
  in.seekg(0);
  GraphInput result;
  if (first == "hudg") {
    result.representation = read_representation(in);
    result.graph = build_udg(*result.representation);
  } else {
    result.graph = read_edge_list(in).graph;
  }
  return result;
}

}  // namespace hudg
