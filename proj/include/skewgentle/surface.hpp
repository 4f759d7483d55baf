#pragma once

#include <string>
#include <vector>

#include "skewgentle/presentation.hpp"

namespace sg {

// Combinatorial surface model of a smooth-proper connected (skew-)gentle
// presentation. Arcs are the quiver vertices; each ordinary arc has two ends
// distributed over marked-point fans so that an (in, out) pair of arrows
// composes at one end exactly when it is not a relation. Special loops give
// pending arcs with a single boundary end; their far end wraps an orbifold
// point of order two.

struct Fan {
  std::vector<int> ends;    // global end ids, in fan-chain order
  std::vector<int> arrows;  // arrows[i] sits between ends[i] and ends[i+1]
};

struct Corner {
  enum class Kind { arrow, cap };
  Kind kind;
  int arrow;  // arrow position for Kind::arrow, arc vertex for Kind::cap
};

struct Side {
  int arc;    // quiver vertex
  int which;  // 0 or 1
  bool operator==(const Side& o) const { return arc == o.arc && which == o.which; }
};

struct Polygon {
  std::vector<Side> sides;     // in boundary order between the two extremes
  std::vector<Corner> inner;   // inner.size() == sides.size() - 1
  int fan_start = -1;          // fan of the leading extreme sector
  int fan_end = -1;            // fan of the trailing extreme sector
};

struct BoundaryComponent {
  std::vector<int> fans;      // traversal order
  std::vector<int> polygons;  // stretch polygons, same order (red points)
  long long winding = 0;
  long long m_value = 0;
};

struct SurfaceModel {
  int genus = 0;
  int orbifold_count = 0;
  long long euler_characteristic = 0;
  int black_points = 0;
  int red_points = 0;
  std::vector<Fan> fans;
  std::vector<Polygon> polygons;
  std::vector<BoundaryComponent> boundaries;
  std::vector<long long> arrow_degree;            // by arrow position
  std::vector<std::pair<int, int>> arrow_arcs;    // (source, target) vertices

  int polygon_of_arrow(int arrow) const;        // polygon whose inner corners hold it
  int polygon_of_side(const Side& s) const;
  long long stretch_block(int polygon) const;   // 2 - sum over arrow corners of (1-|a|)
};

SurfaceModel build_surface(const Presentation& p);

std::vector<long long> boundary_windings(const SurfaceModel& m);

// Winding of the simple closed curve separating the boundary components in
// `subset` from the rest of a genus-zero surface: 2 - sum of their m-values.
// With one orbifold present the convention places it outside the subset.
long long scc_winding_genus0(const SurfaceModel& m, const std::vector<int>& subset);

// A curve is a cyclic sequence of polygon passages: each segment crosses in
// through one arc side and out through another, either past the inner corner
// chain between them or around the stretch (the red point). `sense` is +1
// when the passed chain lies left of the directed segment.
struct CurveSegment {
  int polygon = -1;
  Side from;
  Side to;
  bool through_stretch = false;
  int sense = +1;
};

long long winding_of_curve(const SurfaceModel& m, const std::vector<CurveSegment>& curve);

// The push-off of a boundary component as a curve, for cross-checking the
// two winding routes against each other.
std::vector<CurveSegment> boundary_parallel_curve(const SurfaceModel& m, int boundary);

std::string surface_to_json(const SurfaceModel& m, const Presentation& p);

}  // namespace sg
