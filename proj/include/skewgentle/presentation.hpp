#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "skewgentle/rational.hpp"

namespace sg {

struct Arrow {
  std::string id;
  std::string source;
  std::string target;
  long long degree = 0;
};

// A bound-quiver presentation: ordinary arrows plus a set of special loops,
// with quadratic monomial relations stored as ordered pairs (first, second)
// meaning the path "first then second". The oracle works over exact
// rationals; no other base field is supported.
struct Presentation {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::pair<std::string, std::string>> relations;
  std::vector<std::string> special_loops;
};

struct Violation {
  std::string code;
  std::string where;
  std::string detail;
};

enum class AlgebraClass { gentle, skew_gentle, invalid };

struct ValidationReport {
  AlgebraClass algebra_class = AlgebraClass::invalid;
  bool finite_dimensional = false;
  bool smooth_proper = false;
  bool connected = false;
  std::vector<Violation> violations;

  bool valid_class() const { return algebra_class != AlgebraClass::invalid; }
};

// Weighted quadratic relations arise from the admissible presentation A^s of
// a skew-gentle algebra: each relation is a signed sum of parallel
// length-two paths.
struct WeightedTerm {
  Rational coeff;
  std::string first;
  std::string second;
};

struct WeightedArrow {
  std::string id;
  std::string source;
  std::string target;
  long long degree = 0;
  std::string base;  // arrow of the original presentation this one resolves
};

struct WeightedPresentation {
  std::vector<std::string> vertices;
  std::vector<WeightedArrow> arrows;
  std::vector<std::vector<WeightedTerm>> relations;
};

// Index tables shared by the word/surface layers. Built once per validated
// presentation; all members reference positions in the Presentation vectors.
struct Index {
  std::unordered_map<std::string, int> vertex;
  std::unordered_map<std::string, int> arrow;
  std::vector<int> ordinary;                   // arrow positions, declaration order
  std::vector<int> special;                    // arrow positions of special loops
  std::vector<std::vector<int>> outs;          // ordinary arrows by source vertex
  std::vector<std::vector<int>> ins;           // ordinary arrows by target vertex
  std::vector<int> special_at;                 // vertex -> special arrow position or -1
  std::vector<std::pair<int, int>> relation_pairs;

  bool is_special_arrow(int a) const;
  bool is_relation(int first, int second) const;
};

Index build_index(const Presentation& p);

Presentation parse_presentation(const std::string& json_text);
std::string presentation_to_json(const Presentation& p);

ValidationReport validate(const Presentation& p);
std::string validation_to_json(const ValidationReport& r);

// Dual dissection algebra of a gentle, smooth-proper presentation: reversed
// arrows graded by 1 - d, relations the complement compositions.
Presentation dual(const Presentation& p);

WeightedPresentation specialize(const Presentation& p);
std::string weighted_to_json(const WeightedPresentation& w);

struct FixtureParams {
  std::optional<long long> n;
  std::optional<long long> r;
  std::optional<long long> m;
};

Presentation fixture(const std::string& name, const FixtureParams& params = {});

struct GeneratorOptions {
  int max_vertices = 8;
  bool allow_special = false;
  bool trivial_grading = false;
  int max_retries = 1000;
};

Presentation random_presentation(unsigned long long seed, const GeneratorOptions& opts);

}  // namespace sg
