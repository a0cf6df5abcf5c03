#pragma once

#include <iosfwd>
#include <vector>

#include "hudg/geom.hpp"
#include "hudg/graph.hpp"
#include "hudg/repr.hpp"

namespace hudg {

// Partition of a vertex subset into parts that each induce a clique.
struct CliqueCover {
  std::vector<std::vector<Vertex>> parts;
  std::vector<PolarPoint> disk_centers;  // centers of the covering disks, if any
  double spacing = 0.0;                  // angular distance between consecutive centers

  std::size_t num_parts() const { return parts.size(); }
};

// Vertices inside D_R(p) with radius at most r(p), split into the half-plane
// [phi(p), phi(p) + pi) and its complement. Each non-empty half is one part.
CliqueCover two_clique_cover_inner(const DiskRepresentation& rep, const Graph& g,
                                   const PolarPoint& p);

// Covers the whole graph using ceil(pi / theta(R, R)) disks of radius R whose
// centers sit on the ground circle, 2 theta(R, R) apart.
CliqueCover clique_cover(const DiskRepresentation& rep, const Graph& g);

// ceil(max{2 pi sqrt 2, 2 pi e^(R/2)}): the part-count bound for clique_cover
// before integer slack.
double clique_cover_bound(double R);

// True iff the parts are disjoint, each induces a clique in g, and (when
// require_all) every vertex of g is covered.
bool is_valid_clique_cover(const CliqueCover& cover, const Graph& g, bool require_all);

// One line per part, vertex ids separated by spaces.
void write_clique_cover(std::ostream& out, const CliqueCover& cover);

}  // namespace hudg
