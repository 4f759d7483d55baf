#include "skewgentle/presentation.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "json.hpp"

namespace sg {

using ojson = nlohmann::ordered_json;

bool Index::is_special_arrow(int a) const {
  return std::find(special.begin(), special.end(), a) != special.end();
}

bool Index::is_relation(int first, int second) const {
  for (const auto& r : relation_pairs)
    if (r.first == first && r.second == second) return true;
  return false;
}

Index build_index(const Presentation& p) {
  Index ix;
  for (size_t i = 0; i < p.vertices.size(); ++i) ix.vertex[p.vertices[i]] = (int)i;
  for (size_t i = 0; i < p.arrows.size(); ++i) ix.arrow[p.arrows[i].id] = (int)i;
  std::unordered_set<std::string> specials(p.special_loops.begin(), p.special_loops.end());
  ix.outs.assign(p.vertices.size(), {});
  ix.ins.assign(p.vertices.size(), {});
  ix.special_at.assign(p.vertices.size(), -1);
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    const Arrow& a = p.arrows[i];
    if (specials.count(a.id)) {
      ix.special.push_back((int)i);
      ix.special_at[ix.vertex.at(a.source)] = (int)i;
    } else {
      ix.ordinary.push_back((int)i);
      ix.outs[ix.vertex.at(a.source)].push_back((int)i);
      ix.ins[ix.vertex.at(a.target)].push_back((int)i);
    }
  }
  for (const auto& r : p.relations)
    ix.relation_pairs.push_back({ix.arrow.at(r.first), ix.arrow.at(r.second)});
  return ix;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

[[noreturn]] void schema_fail(const std::string& path, const std::string& what) {
  fail(Errc::schema_error, path + ": " + what);
}

std::string require_string(const ojson& j, const std::string& path) {
  if (!j.is_string()) schema_fail(path, "expected a string");
  return j.get<std::string>();
}

}  // namespace

Presentation parse_presentation(const std::string& json_text) {
  ojson doc;
  try {
    doc = ojson::parse(json_text);
  } catch (const std::exception& e) {
    fail(Errc::parse_error, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) schema_fail("$", "expected an object");

  Presentation p;
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    schema_fail("vertices", "missing or not an array");
  std::unordered_set<std::string> vset;
  for (size_t i = 0; i < doc["vertices"].size(); ++i) {
    std::string v = require_string(doc["vertices"][i], "vertices[" + std::to_string(i) + "]");
    if (!vset.insert(v).second)
      schema_fail("vertices[" + std::to_string(i) + "]", "duplicate vertex id '" + v + "'");
    p.vertices.push_back(v);
  }

  if (!doc.contains("arrows") || !doc["arrows"].is_array())
    schema_fail("arrows", "missing or not an array");
  std::unordered_set<std::string> aset;
  for (size_t i = 0; i < doc["arrows"].size(); ++i) {
    const std::string path = "arrows[" + std::to_string(i) + "]";
    const ojson& ja = doc["arrows"][i];
    if (!ja.is_object()) schema_fail(path, "expected an object");
    Arrow a;
    if (!ja.contains("id")) schema_fail(path + ".id", "missing field");
    a.id = require_string(ja["id"], path + ".id");
    if (!aset.insert(a.id).second) schema_fail(path + ".id", "duplicate arrow id '" + a.id + "'");
    if (!ja.contains("source")) schema_fail(path + ".source", "missing field");
    a.source = require_string(ja["source"], path + ".source");
    if (!vset.count(a.source)) schema_fail(path + ".source", "undeclared vertex '" + a.source + "'");
    if (!ja.contains("target")) schema_fail(path + ".target", "missing field");
    a.target = require_string(ja["target"], path + ".target");
    if (!vset.count(a.target)) schema_fail(path + ".target", "undeclared vertex '" + a.target + "'");
    if (ja.contains("degree")) {
      if (!ja["degree"].is_number_integer()) schema_fail(path + ".degree", "expected an integer");
      a.degree = ja["degree"].get<long long>();
    }
    p.arrows.push_back(a);
  }

  std::unordered_set<std::string> sset;
  if (doc.contains("special_loops")) {
    if (!doc["special_loops"].is_array()) schema_fail("special_loops", "expected an array");
    for (size_t i = 0; i < doc["special_loops"].size(); ++i) {
      const std::string path = "special_loops[" + std::to_string(i) + "]";
      std::string s = require_string(doc["special_loops"][i], path);
      if (!aset.count(s)) schema_fail(path, "undeclared arrow '" + s + "'");
      if (!sset.insert(s).second) schema_fail(path, "duplicate special loop '" + s + "'");
      p.special_loops.push_back(s);
    }
  }

  if (doc.contains("relations")) {
    if (!doc["relations"].is_array()) schema_fail("relations", "expected an array");
    for (size_t i = 0; i < doc["relations"].size(); ++i) {
      const std::string path = "relations[" + std::to_string(i) + "]";
      const ojson& jr = doc["relations"][i];
      if (!jr.is_array() || jr.size() != 2) schema_fail(path, "expected a pair [first, second]");
      std::string f = require_string(jr[0], path + "[0]");
      std::string s = require_string(jr[1], path + "[1]");
      if (!aset.count(f)) schema_fail(path + "[0]", "undeclared arrow '" + f + "'");
      if (!aset.count(s)) schema_fail(path + "[1]", "undeclared arrow '" + s + "'");
      if (sset.count(f) || sset.count(s)) schema_fail(path, "special loop mentioned in a relation");
      p.relations.push_back({f, s});
    }
  }

  // Structural invariants of the type itself.
  std::unordered_map<std::string, const Arrow*> by_id;
  for (const auto& a : p.arrows) by_id[a.id] = &a;
  for (size_t i = 0; i < p.relations.size(); ++i) {
    const auto& r = p.relations[i];
    if (by_id[r.first]->target != by_id[r.second]->source)
      schema_fail("relations[" + std::to_string(i) + "]",
                  "path not composable: target(" + r.first + ") != source(" + r.second + ")");
  }
  std::unordered_set<std::string> special_vertices;
  for (size_t i = 0; i < p.special_loops.size(); ++i) {
    const Arrow* a = by_id[p.special_loops[i]];
    const std::string path = "special_loops[" + std::to_string(i) + "]";
    if (a->source != a->target) schema_fail(path, "special loop '" + a->id + "' is not a loop");
    if (!special_vertices.insert(a->source).second)
      schema_fail(path, "two special loops share vertex '" + a->source + "'");
  }
  return p;
}

std::string presentation_to_json(const Presentation& p) {
  ojson doc;
  doc["vertices"] = p.vertices;
  doc["arrows"] = ojson::array();
  for (const auto& a : p.arrows) {
    ojson ja;
    ja["id"] = a.id;
    ja["source"] = a.source;
    ja["target"] = a.target;
    ja["degree"] = a.degree;
    doc["arrows"].push_back(ja);
  }
  doc["relations"] = ojson::array();
  for (const auto& r : p.relations) doc["relations"].push_back({r.first, r.second});
  doc["special_loops"] = p.special_loops;
  return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Validation

namespace {

// Directed reachability-based cycle test on arrow-composition graphs.
bool has_cycle(int n, const std::vector<std::vector<int>>& adj) {
  std::vector<int> state(n, 0);
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (state[s] != 0) continue;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      if (state[v] == 0) {
        state[v] = 1;
        for (int w : adj[v]) {
          if (state[w] == 1) return true;
          if (state[w] == 0) stack.push_back(w);
        }
      } else {
        if (state[v] == 1) state[v] = 2;
        stack.pop_back();
      }
    }
  }
  return false;
}

}  // namespace

ValidationReport validate(const Presentation& p) {
  ValidationReport rep;
  Index ix = build_index(p);
  auto add = [&rep](const std::string& code, const std::string& where, const std::string& detail) {
    rep.violations.push_back({code, where, detail});
  };

  bool class_ok = true;

  // (a) vertex degree bounds on ordinary arrows
  for (size_t v = 0; v < p.vertices.size(); ++v) {
    if (ix.outs[v].size() > 2) {
      add("OUT_DEGREE", p.vertices[v], "more than two ordinary arrows start here");
      class_ok = false;
    }
    if (ix.ins[v].size() > 2) {
      add("IN_DEGREE", p.vertices[v], "more than two ordinary arrows end here");
      class_ok = false;
    }
  }

  // (b) unique relation / non-relation continuations per arrow
  for (int a : ix.ordinary) {
    int tv = ix.vertex.at(p.arrows[a].target);
    int sv = ix.vertex.at(p.arrows[a].source);
    int rel_next = 0, nonrel_next = 0;
    for (int b : ix.outs[tv]) (ix.is_relation(a, b) ? rel_next : nonrel_next)++;
    if (rel_next > 1) {
      add("RELATION_FANOUT", p.arrows[a].id, "more than one relation continuation");
      class_ok = false;
    }
    if (nonrel_next > 1) {
      add("NONRELATION_FANOUT", p.arrows[a].id, "more than one non-relation continuation");
      class_ok = false;
    }
    int rel_prev = 0, nonrel_prev = 0;
    for (int g : ix.ins[sv]) (ix.is_relation(g, a) ? rel_prev : nonrel_prev)++;
    if (rel_prev > 1) {
      add("RELATION_FANIN", p.arrows[a].id, "more than one relation predecessor");
      class_ok = false;
    }
    if (nonrel_prev > 1) {
      add("NONRELATION_FANIN", p.arrows[a].id, "more than one non-relation predecessor");
      class_ok = false;
    }
  }

  // (c) special vertices
  for (int s : ix.special) {
    int v = ix.vertex.at(p.arrows[s].source);
    if (ix.ins[v].size() > 1) {
      add("SPECIAL_IN_DEGREE", p.vertices[v], "special vertex with two ordinary arrows in");
      class_ok = false;
    }
    if (ix.outs[v].size() > 1) {
      add("SPECIAL_OUT_DEGREE", p.vertices[v], "special vertex with two ordinary arrows out");
      class_ok = false;
    }
    if (ix.ins[v].size() == 1 && ix.outs[v].size() == 1 &&
        !ix.is_relation(ix.ins[v][0], ix.outs[v][0])) {
      add("SPECIAL_COMPOSITION", p.vertices[v],
          "composition through a special vertex must be a relation");
      class_ok = false;
    }
  }

  // (d) finite-dimensionality. Compositions through a special vertex never
  // die: the idempotent loop can always be inserted between the two ordinary
  // arrows, so those edges stay even when the straight composition is a
  // relation.
  int na = (int)p.arrows.size();
  std::vector<std::vector<int>> allowed(na), augmented(na), relonly(na);
  for (int a : ix.ordinary) {
    int tv = ix.vertex.at(p.arrows[a].target);
    bool tv_special = ix.special_at[tv] >= 0;
    for (int b : ix.outs[tv]) {
      bool rel = ix.is_relation(a, b);
      if (!rel) allowed[a].push_back(b);
      if (!rel || tv_special) augmented[a].push_back(b);
      if (rel) relonly[a].push_back(b);
    }
  }
  rep.finite_dimensional = !has_cycle(na, augmented);
  if (!rep.finite_dimensional)
    add("INFINITE_DIMENSIONAL", "", "a directed cycle survives all relations");

  // (e) smooth & proper: on top of finite dimension no cycle may consist
  // entirely of relations.
  bool full_rel_cycle = has_cycle(na, relonly);
  rep.smooth_proper = rep.finite_dimensional && !full_rel_cycle;
  if (full_rel_cycle) add("FULL_RELATION_CYCLE", "", "a cycle with relations at every step");

  // (f) connectivity of the underlying graph
  if (p.vertices.empty()) {
    rep.connected = false;
    add("EMPTY", "", "no vertices");
    class_ok = false;
  } else {
    std::vector<std::vector<int>> und(p.vertices.size());
    for (const auto& a : p.arrows) {
      int s = ix.vertex.at(a.source), t = ix.vertex.at(a.target);
      und[s].push_back(t);
      und[t].push_back(s);
    }
    std::vector<char> seen(p.vertices.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : und[v])
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
    rep.connected = std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
    if (!rep.connected) add("DISCONNECTED", "", "underlying graph is not connected");
  }

  rep.algebra_class = !class_ok            ? AlgebraClass::invalid
                      : ix.special.empty() ? AlgebraClass::gentle
                                           : AlgebraClass::skew_gentle;
  return rep;
}

std::string validation_to_json(const ValidationReport& r) {
  ojson doc;
  doc["algebra_class"] = r.algebra_class == AlgebraClass::gentle       ? "gentle"
                         : r.algebra_class == AlgebraClass::skew_gentle ? "skew_gentle"
                                                                        : "invalid";
  doc["finite_dimensional"] = r.finite_dimensional;
  doc["smooth_proper"] = r.smooth_proper;
  doc["connected"] = r.connected;
  doc["violations"] = ojson::array();
  for (const auto& v : r.violations) {
    ojson jv;
    jv["code"] = v.code;
    jv["where"] = v.where;
    jv["detail"] = v.detail;
    doc["violations"].push_back(jv);
  }
  return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Dual dissection algebra

Presentation dual(const Presentation& p) {
  ValidationReport r = validate(p);
  check(r.algebra_class == AlgebraClass::gentle && r.smooth_proper, Errc::invalid_input,
        "dual requires a gentle smooth-proper presentation");
  Index ix = build_index(p);
  Presentation d;
  d.vertices = p.vertices;
  for (const auto& a : p.arrows)
    d.arrows.push_back({a.id + "*", a.target, a.source, 1 - a.degree});
  // (b*, a*) is a dual relation exactly when ab composes but is not a
  // relation of p.
  for (int a : ix.ordinary) {
    int tv = ix.vertex.at(p.arrows[a].target);
    for (int b : ix.outs[tv])
      if (!ix.is_relation(a, b))
        d.relations.push_back({p.arrows[b].id + "*", p.arrows[a].id + "*"});
  }
  return d;
}

// ---------------------------------------------------------------------------
// Admissible presentation A^s

namespace {

std::string split_vertex(const std::string& v, int sign) {
  return sign > 0 ? v + "+" : v + "-";
}

std::string resolved_arrow_id(const Arrow& a, const std::string& src, const std::string& tgt,
                              bool split) {
  if (!split) return a.id;
  return a.id + "[" + src + "," + tgt + "]";
}

}  // namespace

WeightedPresentation specialize(const Presentation& p) {
  ValidationReport r = validate(p);
  check(r.valid_class(), Errc::invalid_input, "specialize requires a (skew-)gentle presentation");
  Index ix = build_index(p);

  auto resolved = [&](const std::string& v) {
    std::vector<std::string> out;
    int vi = ix.vertex.at(v);
    if (ix.special_at[vi] >= 0) {
      out.push_back(split_vertex(v, +1));
      out.push_back(split_vertex(v, -1));
    } else {
      out.push_back(v);
    }
    return out;
  };

  WeightedPresentation w;
  for (const auto& v : p.vertices)
    for (const auto& rv : resolved(v)) w.vertices.push_back(rv);

  for (int ai : ix.ordinary) {
    const Arrow& a = p.arrows[ai];
    auto ss = resolved(a.source), ts = resolved(a.target);
    bool split = ss.size() > 1 || ts.size() > 1;
    for (const auto& s : ss)
      for (const auto& t : ts)
        w.arrows.push_back({resolved_arrow_id(a, s, t, split), s, t, a.degree, a.id});
  }

  for (const auto& [f, s] : ix.relation_pairs) {
    const Arrow& first = p.arrows[f];
    const Arrow& second = p.arrows[s];
    auto outers_l = resolved(first.source);
    auto mid = resolved(second.source);
    auto outers_r = resolved(second.target);
    bool split_f = outers_l.size() > 1 || mid.size() > 1;
    bool split_s = mid.size() > 1 || outers_r.size() > 1;
    for (const auto& i : outers_l)
      for (const auto& k : outers_r) {
        std::vector<WeightedTerm> terms;
        for (size_t jx = 0; jx < mid.size(); ++jx) {
          const auto& j = mid[jx];
          // lambda_{l^-} = -1: the minus split of the middle vertex
          Rational coeff = (mid.size() > 1 && jx == 1) ? Rational(-1) : Rational(1);
          terms.push_back({coeff, resolved_arrow_id(first, i, j, split_f),
                           resolved_arrow_id(second, j, k, split_s)});
        }
        w.relations.push_back(std::move(terms));
      }
  }
  return w;
}

std::string weighted_to_json(const WeightedPresentation& w) {
  ojson doc;
  doc["vertices"] = w.vertices;
  doc["arrows"] = ojson::array();
  for (const auto& a : w.arrows) {
    ojson ja;
    ja["id"] = a.id;
    ja["source"] = a.source;
    ja["target"] = a.target;
    ja["degree"] = a.degree;
    ja["base"] = a.base;
    doc["arrows"].push_back(ja);
  }
  doc["relations"] = ojson::array();
  for (const auto& rel : w.relations) {
    ojson jr = ojson::array();
    for (const auto& t : rel) {
      ojson jt;
      jt["coeff"] = t.coeff.str();
      jt["first"] = t.first;
      jt["second"] = t.second;
      jr.push_back(jt);
    }
    doc["relations"].push_back(jr);
  }
  return doc.dump(2);
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

Presentation fixture_a_n(long long n) {
  check(n >= 1, Errc::bad_params, "A_n requires n >= 1");
  Presentation p;
  for (long long i = 1; i <= n; ++i) p.vertices.push_back(std::to_string(i));
  for (long long i = 1; i < n; ++i)
    p.arrows.push_back({"a" + std::to_string(i), std::to_string(i), std::to_string(i + 1), 0});
  return p;
}

Presentation fixture_kronecker() {
  Presentation p;
  p.vertices = {"1", "2"};
  p.arrows = {{"a", "1", "2", 0}, {"b", "1", "2", 0}};
  return p;
}

Presentation fixture_e1() {
  Presentation p;
  p.vertices = {"1", "2", "3", "4"};
  p.arrows = {{"alpha", "1", "2", 1},
              {"beta", "1", "2", 0},
              {"theta", "2", "3", 0},
              {"gamma", "3", "4", 1},
              {"delta", "3", "4", 0}};
  p.relations = {{"beta", "theta"}, {"theta", "delta"}};
  return p;
}

Presentation fixture_e2() {
  Presentation p;
  p.vertices = {"1", "2", "3", "4", "5"};
  p.arrows = {{"eps", "1", "1", 0},   {"alpha", "1", "3", 0}, {"gamma", "2", "2", 0},
              {"mu", "2", "3", 0},    {"nu", "3", "4", 0},    {"beta", "3", "5", 0},
              {"eta", "4", "4", 0},   {"sigma", "4", "5", 0}};
  p.relations = {{"alpha", "beta"}, {"mu", "nu"}, {"nu", "sigma"}, {"gamma", "gamma"}};
  p.special_loops = {"eps", "eta"};
  return p;
}

// S1(n): special loop at vertex 1, a chain oriented away from it, and a
// cycle at vertex n completed through two extra vertices so that the algebra
// stays finite-dimensional; (beta, alpha) is the one relation.
Presentation fixture_s1(long long n) {
  check(n >= 1, Errc::bad_params, "S1 requires n >= 1");
  Presentation p;
  for (long long i = 1; i <= n; ++i) p.vertices.push_back(std::to_string(i));
  p.vertices.push_back("c1");
  p.vertices.push_back("c2");
  p.arrows.push_back({"eps", "1", "1", 0});
  for (long long i = 1; i < n; ++i)
    p.arrows.push_back({"s" + std::to_string(i), std::to_string(i), std::to_string(i + 1), 0});
  p.arrows.push_back({"alpha", std::to_string(n), "c1", 0});
  p.arrows.push_back({"d", "c2", "c1", 0});
  p.arrows.push_back({"beta", "c2", std::to_string(n), 0});
  p.relations = {{"beta", "alpha"}};
  p.special_loops = {"eps"};
  return p;
}

Presentation fixture_s2(long long n) {
  check(n >= 2, Errc::bad_params, "S2 requires n >= 2");
  Presentation p;
  for (long long i = 1; i <= n; ++i) p.vertices.push_back(std::to_string(i));
  p.arrows.push_back({"eps1", "1", "1", 0});
  for (long long i = 1; i < n; ++i)
    p.arrows.push_back({"s" + std::to_string(i), std::to_string(i), std::to_string(i + 1), 0});
  p.arrows.push_back({"eps" + std::to_string(n), std::to_string(n), std::to_string(n), 0});
  p.special_loops = {"eps1", "eps" + std::to_string(n)};
  return p;
}

// Lambda(r,n,m): the gentle one-cycle algebras of derived-discrete type.
// Cycle 0 -> 1 -> ... -> n-1 -> 0 with relations a_{n-1}a_0 and a_i a_{i+1}
// for n-r <= i <= n-2, plus a tail -m -> ... -> 0.
Presentation fixture_lambda(long long r, long long n, long long m) {
  check(r >= 1 && n > r && m >= 0, Errc::bad_params, "Lambda requires n > r >= 1, m >= 0");
  Presentation p;
  for (long long i = 0; i < n; ++i) p.vertices.push_back(std::to_string(i));
  for (long long j = 1; j <= m; ++j) p.vertices.push_back(std::to_string(-j));
  for (long long i = 0; i < n; ++i)
    p.arrows.push_back({"a" + std::to_string(i), std::to_string(i),
                        std::to_string((i + 1) % n), 0});
  for (long long j = 1; j <= m; ++j)
    p.arrows.push_back({"a" + std::to_string(-j), std::to_string(-j), std::to_string(-j + 1), 0});
  p.relations.push_back({"a" + std::to_string(n - 1), "a0"});
  for (long long i = n - r; i <= n - 2; ++i)
    p.relations.push_back({"a" + std::to_string(i), "a" + std::to_string(i + 1)});
  return p;
}

}  // namespace

Presentation fixture(const std::string& name, const FixtureParams& params) {
  if (name == "A_n") return fixture_a_n(params.n.value_or(2));
  if (name == "Kronecker") return fixture_kronecker();
  if (name == "E1") return fixture_e1();
  if (name == "E2") return fixture_e2();
  if (name == "S1") return fixture_s1(params.n.value_or(1));
  if (name == "S2") return fixture_s2(params.n.value_or(2));
  if (name == "Lambda")
    return fixture_lambda(params.r.value_or(1), params.n.value_or(2), params.m.value_or(0));
  fail(Errc::unknown_fixture, "unknown fixture '" + name + "'");
}

// ---------------------------------------------------------------------------
// Random generator
//
// Works directly with arc ends: every vertex owns two end slots (one for a
// special vertex), each slot hosts at most one incoming and one outgoing
// arrow. Relations are then forced: an (in, out) pair at the same slot of an
// ordinary vertex composes freely, at different slots it is a relation, and
// at a special vertex the unique pair is a relation. This yields gentle data
// by construction; cycle conditions are checked and failures resampled.

namespace {

struct SplitMix {
  unsigned long long state;
  explicit SplitMix(unsigned long long seed) : state(seed) {}
  unsigned long long next() {
    unsigned long long z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // uniform in [0, bound)
  unsigned long long below(unsigned long long bound) { return next() % bound; }
};

struct EndSlot {
  int vertex;
  int slot;  // 0 or 1
  int in_arrow = -1;
  int out_arrow = -1;
};

Presentation attempt_random(SplitMix& rng, const GeneratorOptions& opts) {
  int nv = 2 + (int)rng.below((unsigned long long)std::max(1, opts.max_vertices - 1));
  int nspecial = 0;
  if (opts.allow_special) nspecial = 1 + (int)rng.below(2);
  nspecial = std::min(nspecial, nv);

  Presentation p;
  for (int i = 0; i < nv; ++i) p.vertices.push_back("v" + std::to_string(i));

  std::vector<EndSlot> slots;
  std::vector<std::vector<int>> slot_of_vertex(nv);
  for (int v = 0; v < nv; ++v) {
    int nslots = v < nspecial ? 1 : 2;
    for (int s = 0; s < nslots; ++s) {
      slot_of_vertex[v].push_back((int)slots.size());
      slots.push_back({v, s});
    }
  }

  struct GenArrow {
    int src_slot, tgt_slot;
  };
  std::vector<GenArrow> arrows;
  int target_arrows = 1 + (int)rng.below((unsigned long long)(2 * nv));
  for (int tries = 0; tries < 6 * target_arrows && (int)arrows.size() < target_arrows; ++tries) {
    int s = (int)rng.below(slots.size());
    int t = (int)rng.below(slots.size());
    if (slots[s].vertex == slots[t].vertex) continue;  // no ordinary loops
    if (slots[s].out_arrow >= 0 || slots[t].in_arrow >= 0) continue;
    slots[s].out_arrow = (int)arrows.size();
    slots[t].in_arrow = (int)arrows.size();
    arrows.push_back({s, t});
  }
  if (arrows.empty() && nv > 1) return {};  // would be disconnected

  for (size_t i = 0; i < arrows.size(); ++i)
    p.arrows.push_back({"x" + std::to_string(i), p.vertices[slots[arrows[i].src_slot].vertex],
                        p.vertices[slots[arrows[i].tgt_slot].vertex], 0});
  for (int v = 0; v < nspecial; ++v) {
    std::string id = "e" + std::to_string(v);
    p.arrows.push_back({id, p.vertices[v], p.vertices[v], 0});
    p.special_loops.push_back(id);
  }

  // forced relations from the slot structure
  for (size_t i = 0; i < arrows.size(); ++i) {
    int tv = slots[arrows[i].tgt_slot].vertex;
    bool tv_special = tv < nspecial;
    for (int sl : slot_of_vertex[tv]) {
      int out = slots[sl].out_arrow;
      if (out < 0) continue;
      bool same_slot = (sl == arrows[i].tgt_slot);
      bool relation = tv_special ? true : !same_slot;
      if (relation) p.relations.push_back({p.arrows[i].id, p.arrows[out].id});
    }
  }

  if (!opts.trivial_grading) {
    for (auto& a : p.arrows) a.degree = (long long)rng.below(5) - 2;
    for (const auto& s : p.special_loops)
      for (auto& a : p.arrows)
        if (a.id == s) a.degree = 0;
  }

  return p;
}

}  // namespace

Presentation random_presentation(unsigned long long seed, const GeneratorOptions& opts) {
  SplitMix rng(seed * 0x9e3779b97f4a7c15ull + 1);
  for (int attempt = 0; attempt < opts.max_retries; ++attempt) {
    Presentation p = attempt_random(rng, opts);
    if (p.vertices.empty()) continue;
    ValidationReport r = validate(p);
    if (!r.valid_class()) continue;
    if (!r.finite_dimensional || !r.smooth_proper || !r.connected) continue;
    if (opts.allow_special && p.special_loops.empty()) continue;
    return p;
  }
  fail(Errc::generation_failure, "no valid presentation within retry budget");
}

}  // namespace sg
