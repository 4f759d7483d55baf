#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "skewgentle/rational.hpp"
#include "skewgentle/words.hpp"

namespace sg {

using Matrix = std::vector<std::vector<Rational>>;  // rows x cols

Matrix zero_matrix(int rows, int cols);
Matrix identity_matrix(int n);
Matrix matmul(const Matrix& a, const Matrix& b);
bool is_zero_matrix(const Matrix& m);

// A quiver representation over the admissible presentation A^s: exact
// rational matrices, one per arrow, with every weighted relation checked to
// vanish at construction time.
struct Representation {
  std::shared_ptr<const WeightedPresentation> over;
  std::map<std::string, int> dims;        // vertex -> dimension
  std::map<std::string, Matrix> action;   // arrow id -> dim(target) x dim(source)
};

Representation make_representation(std::shared_ptr<const WeightedPresentation> over,
                                   std::map<std::string, int> dims,
                                   std::map<std::string, Matrix> action);

// String module of an ordinary string over a gentle presentation (always
// taken through its specialized form, which is the identity for gentle
// input).
Representation string_module(const Presentation& p, const Word& w, const LetterTable& t);

// The brick family of the tau-tilting-infinity proof for S1(n), n >= 2.
Representation m_lambda(long long n, const Rational& lambda);

Representation simple_module(std::shared_ptr<const WeightedPresentation> over,
                             const std::string& vertex);
Representation direct_sum(const Representation& a, const Representation& b);

struct HomBasis {
  int dimension = 0;
  // basis elements: per vertex, a dim_N(v) x dim_M(v) block
  std::vector<std::map<std::string, Matrix>> basis;
};

HomBasis hom_basis(const Representation& M, const Representation& N);
int hom_dim(const Representation& M, const Representation& N);
bool is_brick(const Representation& M);

struct IsoResult {
  bool isomorphic = false;
  std::string transcript;
};

IsoResult are_isomorphic(const Representation& M, const Representation& N,
                         unsigned long long seed = 12345);

std::string representation_to_json(const Representation& r);

}  // namespace sg
