#include "skewgentle/surface.hpp"

#include <algorithm>
#include <map>

#include "json.hpp"

namespace sg {

using ojson = nlohmann::ordered_json;

namespace {

struct EndInfo {
  int arc;      // quiver vertex
  int in_arrow = -1;
  int out_arrow = -1;
};

struct Builder {
  const Presentation& p;
  Index ix;
  std::vector<EndInfo> ends;                  // global end table
  std::vector<std::array<int, 2>> arc_ends;   // per arc; -1 when absent (pending far end)
  std::vector<int> out_end, in_end;           // per arrow position

  explicit Builder(const Presentation& pres) : p(pres), ix(build_index(pres)) {}

  bool relation(int a, int b) const { return ix.is_relation(a, b); }

  void assign_ends() {
    int nv = (int)p.vertices.size();
    arc_ends.assign(nv, {-1, -1});
    out_end.assign(p.arrows.size(), -1);
    in_end.assign(p.arrows.size(), -1);
    for (int v = 0; v < nv; ++v) {
      bool pending = ix.special_at[v] >= 0;
      int e0 = (int)ends.size();
      ends.push_back({v});
      arc_ends[v][0] = e0;
      int e1 = -1;
      if (!pending) {
        e1 = (int)ends.size();
        ends.push_back({v});
        arc_ends[v][1] = e1;
      }
      const auto& ins = ix.ins[v];
      const auto& outs = ix.outs[v];
      auto place_in = [&](int a, int e) {
        internal_check(ends[e].in_arrow < 0, "two in-arrows at one arc end");
        ends[e].in_arrow = a;
        in_end[a] = e;
      };
      auto place_out = [&](int b, int e) {
        internal_check(ends[e].out_arrow < 0, "two out-arrows at one arc end");
        ends[e].out_arrow = b;
        out_end[b] = e;
      };
      if (pending) {
        for (int a : ins) place_in(a, e0);
        for (int b : outs) place_out(b, e0);
        continue;
      }
      if (ins.size() == 2) {
        place_in(ins[0], e0);
        place_in(ins[1], e1);
        for (int b : outs) {
          if (!relation(ins[0], b))
            place_out(b, e0);
          else if (!relation(ins[1], b))
            place_out(b, e1);
          else
            internal_check(false, "out-arrow relates to both in-arrows");
        }
      } else if (ins.size() == 1) {
        place_in(ins[0], e0);
        for (int b : outs) place_out(b, relation(ins[0], b) ? e1 : e0);
      } else {
        for (size_t i = 0; i < outs.size(); ++i) place_out(outs[i], i == 0 ? e0 : e1);
      }
    }
    // relation pattern must be realized exactly
    for (int v = 0; v < nv; ++v) {
      bool pending = ix.special_at[v] >= 0;
      for (int a : ix.ins[v])
        for (int b : ix.outs[v]) {
          bool same = in_end[a] == out_end[b];
          bool rel = relation(a, b);
          internal_check(pending ? rel : (same != rel), "fan end assignment inconsistent");
        }
    }
  }

  std::vector<Fan> chain_fans() const {
    int ne = (int)ends.size();
    std::vector<int> incoming(ne, -1);
    for (size_t a = 0; a < p.arrows.size(); ++a)
      if (in_end[a] >= 0) incoming[in_end[a]] = (int)a;
    std::vector<char> used(ne, 0);
    std::vector<Fan> fans;
    for (int e = 0; e < ne; ++e) {
      if (incoming[e] >= 0 || used[e]) continue;
      Fan f;
      int cur = e;
      while (true) {
        internal_check(!used[cur], "cyclic fan chain");
        used[cur] = 1;
        f.ends.push_back(cur);
        int out = ends[cur].out_arrow;
        if (out < 0) break;
        f.arrows.push_back(out);
        cur = in_end[out];
      }
      fans.push_back(std::move(f));
    }
    for (int e = 0; e < ne; ++e) internal_check(used[e], "cyclic fan chain");
    return fans;
  }
};

// sector-node bookkeeping for polygon assembly
struct Node {
  enum class Kind { ext0, extk, corner, cap };
  Kind kind;
  int fan = -1;     // for fan sectors
  int arrow = -1;   // for corner
  int arc = -1;     // for cap
};

}  // namespace

int SurfaceModel::polygon_of_arrow(int arrow) const {
  for (size_t i = 0; i < polygons.size(); ++i)
    for (const auto& c : polygons[i].inner)
      if (c.kind == Corner::Kind::arrow && c.arrow == arrow) return (int)i;
  fail(Errc::internal_inconsistency, "arrow corner not found in any polygon");
}

int SurfaceModel::polygon_of_side(const Side& s) const {
  for (size_t i = 0; i < polygons.size(); ++i)
    for (const auto& t : polygons[i].sides)
      if (t == s) return (int)i;
  fail(Errc::internal_inconsistency, "arc side not found in any polygon");
}

long long SurfaceModel::stretch_block(int polygon) const {
  long long w = 2;
  for (const auto& c : polygons[polygon].inner)
    if (c.kind == Corner::Kind::arrow) w -= 1 - arrow_degree[c.arrow];
  return w;
}

SurfaceModel build_surface(const Presentation& p) {
  ValidationReport rep = validate(p);
  check(rep.valid_class(), Errc::invalid_input, "surface requires a (skew-)gentle presentation");
  check(rep.smooth_proper, Errc::invalid_input, "surface requires a smooth-proper presentation");
  check(rep.connected, Errc::invalid_input, "surface requires a connected presentation");

  Builder b(p);
  b.assign_ends();
  SurfaceModel model;
  model.fans = b.chain_fans();
  model.orbifold_count = (int)b.ix.special.size();
  model.arrow_degree.resize(p.arrows.size());
  model.arrow_arcs.resize(p.arrows.size());
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    model.arrow_degree[i] = p.arrows[i].degree;
    model.arrow_arcs[i] = {b.ix.vertex.at(p.arrows[i].source), b.ix.vertex.at(p.arrows[i].target)};
  }

  // flags: 2 per end, plus 2 per pending arc for the orbifold far end
  // flag of end e: P = 2e, N = 2e+1; orbifold flags appended after
  int ne = (int)b.ends.size();
  std::vector<Node> nodes;
  std::vector<int> node_of_flag(2 * ne + 2 * (int)b.ix.special.size(), -1);
  std::vector<int> fan_ext0(model.fans.size(), -1), fan_extk(model.fans.size(), -1);

  for (size_t f = 0; f < model.fans.size(); ++f) {
    const Fan& fan = model.fans[f];
    int k = (int)fan.ends.size();
    for (int s = 0; s <= k; ++s) {
      Node n;
      n.fan = (int)f;
      if (s == 0) {
        n.kind = Node::Kind::ext0;
        fan_ext0[f] = (int)nodes.size();
      } else if (s == k) {
        n.kind = Node::Kind::extk;
        fan_extk[f] = (int)nodes.size();
      } else {
        n.kind = Node::Kind::corner;
        n.arrow = fan.arrows[s - 1];
      }
      if (s > 0) node_of_flag[2 * fan.ends[s - 1] + 1] = (int)nodes.size();
      if (s < k) node_of_flag[2 * fan.ends[s]] = (int)nodes.size();
      nodes.push_back(n);
    }
  }
  // orbifold caps
  std::map<int, int> orb_flag_base;  // arc -> first orbifold flag id
  {
    int next_flag = 2 * ne;
    for (int sp : b.ix.special) {
      int arc = b.ix.vertex.at(p.arrows[sp].source);
      Node n;
      n.kind = Node::Kind::cap;
      n.arc = arc;
      orb_flag_base[arc] = next_flag;
      node_of_flag[next_flag] = (int)nodes.size();
      node_of_flag[next_flag + 1] = (int)nodes.size();
      next_flag += 2;
      nodes.push_back(n);
    }
  }

  // sides: side 0 of arc v joins flagN(end0) with flagP(end1)
  struct SideEdge {
    Side side;
    int node_a, node_b;
  };
  std::vector<SideEdge> side_edges;
  auto flagP = [&](int end) { return 2 * end; };
  auto flagN = [&](int end) { return 2 * end + 1; };
  for (size_t v = 0; v < p.vertices.size(); ++v) {
    int e0 = b.arc_ends[v][0];
    int e1 = b.arc_ends[v][1];
    int fp1, fn1;
    if (e1 >= 0) {
      fp1 = flagP(e1);
      fn1 = flagN(e1);
    } else {
      fp1 = orb_flag_base.at((int)v);
      fn1 = orb_flag_base.at((int)v) + 1;
    }
    side_edges.push_back({{(int)v, 0}, node_of_flag[flagN(e0)], node_of_flag[fp1]});
    side_edges.push_back({{(int)v, 1}, node_of_flag[flagP(e0)], node_of_flag[fn1]});
  }

  // adjacency: node -> (side index, other node)
  std::vector<std::vector<std::pair<int, int>>> adj(nodes.size());
  for (size_t s = 0; s < side_edges.size(); ++s) {
    internal_check(side_edges[s].node_a >= 0 && side_edges[s].node_b >= 0,
                   "unattached arc side flag");
    adj[side_edges[s].node_a].push_back({(int)s, side_edges[s].node_b});
    adj[side_edges[s].node_b].push_back({(int)s, side_edges[s].node_a});
  }
  for (size_t n = 0; n < nodes.size(); ++n) {
    size_t want = (nodes[n].kind == Node::Kind::ext0 || nodes[n].kind == Node::Kind::extk) ? 1 : 2;
    internal_check(adj[n].size() == want, "sector node with unexpected side count");
  }

  // polygons: paths between extreme sectors, oriented from the k-type end
  std::vector<char> node_used(nodes.size(), 0);
  std::vector<int> poly_with_extk_at_fan(model.fans.size(), -1);
  for (size_t start = 0; start < nodes.size(); ++start) {
    if (node_used[start] || nodes[start].kind != Node::Kind::extk) continue;
    Polygon poly;
    poly.fan_start = nodes[start].fan;
    int prev_side = -1;
    int cur = (int)start;
    while (true) {
      node_used[cur] = 1;
      const Node& n = nodes[cur];
      if (n.kind == Node::Kind::corner)
        poly.inner.push_back({Corner::Kind::arrow, n.arrow});
      else if (n.kind == Node::Kind::cap)
        poly.inner.push_back({Corner::Kind::cap, n.arc});
      else if (cur != (int)start) {
        internal_check(n.kind == Node::Kind::ext0, "polygon path joins two like extremes");
        poly.fan_end = n.fan;
        break;
      }
      int next_side = -1, next_node = -1;
      for (auto [s, other] : adj[cur])
        if (s != prev_side) {
          next_side = s;
          next_node = other;
        }
      internal_check(next_side >= 0, "polygon path stalled");
      poly.sides.push_back(side_edges[next_side].side);
      prev_side = next_side;
      cur = next_node;
    }
    internal_check(poly.inner.size() + 1 == poly.sides.size(), "polygon corner count");
    poly_with_extk_at_fan[poly.fan_start] = (int)model.polygons.size();
    model.polygons.push_back(std::move(poly));
  }
  for (size_t n = 0; n < nodes.size(); ++n)
    internal_check(node_used[n], "sector node missed by polygon assembly (closed chain)");

  // boundary walk: fan -> stretch with its k-type extreme there -> next fan
  std::vector<char> fan_seen(model.fans.size(), 0);
  for (size_t f0 = 0; f0 < model.fans.size(); ++f0) {
    if (fan_seen[f0]) continue;
    BoundaryComponent comp;
    int f = (int)f0;
    do {
      fan_seen[f] = 1;
      comp.fans.push_back(f);
      int poly = poly_with_extk_at_fan[f];
      internal_check(poly >= 0, "fan without a stretch polygon");
      comp.polygons.push_back(poly);
      f = model.polygons[poly].fan_end;
    } while (f != (int)f0);
    model.boundaries.push_back(std::move(comp));
  }

  // counts and Euler characteristic
  model.black_points = (int)model.fans.size();
  model.red_points = (int)model.polygons.size();
  long long n_arcs = (long long)p.vertices.size();
  model.euler_characteristic = model.red_points + model.orbifold_count - n_arcs;
  long long b_count = (long long)model.boundaries.size();
  long long two_g = 2 - b_count - model.euler_characteristic;
  internal_check(two_g >= 0 && two_g % 2 == 0, "non-integral or negative genus");
  model.genus = (int)(two_g / 2);

  // windings per component
  long long total = 0;
  for (auto& comp : model.boundaries) {
    long long w = 0;
    for (int f : comp.fans) {
      long long s = 1;
      for (int a : model.fans[f].arrows) s -= model.arrow_degree[a];
      w += s;
    }
    for (int poly : comp.polygons)
      for (const auto& c : model.polygons[poly].inner)
        if (c.kind == Corner::Kind::arrow) w -= 1 - model.arrow_degree[c.arrow];
    comp.winding = w;
    comp.m_value = w + 2;
    total += w;
  }
  long long expected = 4 - 4 * (long long)model.genus - 2 * b_count - model.orbifold_count;
  internal_check(total == expected, "Poincare-Hopf index formula violated");

  return model;
}

std::vector<long long> boundary_windings(const SurfaceModel& m) {
  std::vector<long long> out;
  for (const auto& c : m.boundaries) out.push_back(c.winding);
  return out;
}

long long scc_winding_genus0(const SurfaceModel& m, const std::vector<int>& subset) {
  check(m.genus == 0, Errc::genus_error, "separating-curve windings need genus zero");
  long long s = 0;
  for (int j : subset) {
    check(j >= 0 && j < (int)m.boundaries.size(), Errc::unknown_boundary,
          "boundary index out of range");
    s += m.boundaries[j].m_value;
  }
  return 2 - s;
}

long long winding_of_curve(const SurfaceModel& m, const std::vector<CurveSegment>& curve) {
  check(!curve.empty(), Errc::invalid_curve, "empty curve");
  long long total = 0;
  for (size_t i = 0; i < curve.size(); ++i) {
    const CurveSegment& seg = curve[i];
    check(seg.polygon >= 0 && seg.polygon < (int)m.polygons.size(), Errc::invalid_curve,
          "segment names an unknown polygon");
    const Polygon& poly = m.polygons[seg.polygon];
    auto position = [&](const Side& s) {
      for (size_t k = 0; k < poly.sides.size(); ++k)
        if (poly.sides[k] == s) return (int)k;
      fail(Errc::invalid_curve, "segment side does not bound its polygon");
    };
    int a = position(seg.from);
    int c = position(seg.to);
    int lo = std::min(a, c), hi = std::max(a, c);
    long long sum = 0;
    auto corner_weight = [&](const Corner& cr) {
      return cr.kind == Corner::Kind::arrow ? 1 - m.arrow_degree[cr.arrow] : 1;
    };
    if (!seg.through_stretch) {
      for (int k = lo; k < hi; ++k) sum += corner_weight(poly.inner[k]);
    } else {
      for (int k = 0; k < lo; ++k) sum += corner_weight(poly.inner[k]);
      for (int k = hi; k < (int)poly.inner.size(); ++k) sum += corner_weight(poly.inner[k]);
      sum += m.stretch_block(seg.polygon);
    }
    total += seg.sense * (sum - 1);

    const CurveSegment& next = curve[(i + 1) % curve.size()];
    check(seg.to.arc == next.from.arc && seg.to.which != next.from.which, Errc::invalid_curve,
          "consecutive segments do not cross a common arc");
  }
  return total;
}

std::vector<CurveSegment> boundary_parallel_curve(const SurfaceModel& m, int boundary) {
  check(boundary >= 0 && boundary < (int)m.boundaries.size(), Errc::unknown_boundary,
        "boundary index out of range");
  const BoundaryComponent& comp = m.boundaries[boundary];
  std::vector<CurveSegment> curve;
  for (size_t i = 0; i < comp.fans.size(); ++i) {
    int f = comp.fans[i];
    const Fan& fan = m.fans[f];
    // passages between consecutive fan arcs
    for (size_t k = 0; k < fan.arrows.size(); ++k) {
      int arrow = fan.arrows[k];
      int poly = m.polygon_of_arrow(arrow);
      const Polygon& pg = m.polygons[poly];
      int pos = -1;
      for (size_t c = 0; c < pg.inner.size(); ++c)
        if (pg.inner[c].kind == Corner::Kind::arrow && pg.inner[c].arrow == arrow) pos = (int)c;
      internal_check(pos >= 0, "arrow corner lookup failed");
      CurveSegment seg;
      seg.polygon = poly;
      // the corner joins sides pos and pos+1; orient source arc -> target arc
      Side s1 = pg.sides[pos], s2 = pg.sides[pos + 1];
      if (s1.arc != m.arrow_arcs[arrow].first) std::swap(s1, s2);
      internal_check(s1.arc == m.arrow_arcs[arrow].first && s2.arc == m.arrow_arcs[arrow].second,
                     "corner sides disagree with arrow endpoints");
      seg.from = s1;
      seg.to = s2;
      seg.through_stretch = false;
      seg.sense = +1;
      curve.push_back(seg);
    }
    // stretch passage from this fan to the next
    int poly = comp.polygons[i];
    const Polygon& pg = m.polygons[poly];
    CurveSegment seg;
    seg.polygon = poly;
    seg.from = pg.sides.front();
    seg.to = pg.sides.back();
    seg.through_stretch = true;
    seg.sense = +1;
    curve.push_back(seg);
  }
  return curve;
}

std::string surface_to_json(const SurfaceModel& m, const Presentation& p) {
  (void)p;
  ojson doc;
  doc["genus"] = m.genus;
  doc["boundaries"] = ojson::array();
  for (const auto& c : m.boundaries) {
    ojson jc;
    jc["black_points"] = c.fans.size();
    jc["red_points"] = c.polygons.size();
    jc["winding"] = c.winding;
    jc["m"] = c.m_value;
    doc["boundaries"].push_back(jc);
  }
  doc["orbifolds"] = m.orbifold_count;
  doc["euler_characteristic"] = m.euler_characteristic;
  return doc.dump(2);
}

}  // namespace sg
