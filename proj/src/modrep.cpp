#include "skewgentle/modrep.hpp"

#include <algorithm>

#include "json.hpp"

namespace sg {

using ojson = nlohmann::ordered_json;

Matrix zero_matrix(int rows, int cols) {
  return Matrix((size_t)rows, std::vector<Rational>((size_t)cols));
}

Matrix identity_matrix(int n) {
  Matrix m = zero_matrix(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = Rational(1);
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b) {
  int ar = (int)a.size(), ac = ar ? (int)a[0].size() : 0;
  int br = (int)b.size(), bc = br ? (int)b[0].size() : 0;
  // empty factors lose their inner extent in this representation; the
  // product is the zero matrix of the outer shape either way
  if (ar == 0 || br == 0 || ac == 0 || bc == 0) return zero_matrix(ar, bc);
  internal_check(ac == br, "matrix shape mismatch");
  Matrix c = zero_matrix(ar, bc);
  for (int i = 0; i < ar; ++i)
    for (int k = 0; k < ac; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < bc; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

bool is_zero_matrix(const Matrix& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

namespace {

const WeightedArrow& find_arrow(const WeightedPresentation& w, const std::string& id) {
  for (const auto& a : w.arrows)
    if (a.id == id) return a;
  fail(Errc::invalid_input, "unknown arrow '" + id + "' in representation");
}

}  // namespace

Representation make_representation(std::shared_ptr<const WeightedPresentation> over,
                                   std::map<std::string, int> dims,
                                   std::map<std::string, Matrix> action) {
  Representation r;
  r.over = std::move(over);
  r.dims = std::move(dims);
  r.action = std::move(action);
  for (const auto& v : r.over->vertices)
    if (!r.dims.count(v)) r.dims[v] = 0;
  for (const auto& a : r.over->arrows) {
    if (!r.action.count(a.id)) r.action[a.id] = zero_matrix(r.dims[a.target], r.dims[a.source]);
    const Matrix& m = r.action[a.id];
    check((int)m.size() == r.dims[a.target] &&
              (m.empty() || (int)m[0].size() == r.dims[a.source]),
          Errc::invalid_input, "matrix shape does not match endpoints of '" + a.id + "'");
  }
  // every weighted relation must vanish exactly
  for (const auto& rel : r.over->relations) {
    if (rel.empty()) continue;
    const auto& f0 = find_arrow(*r.over, rel[0].first);
    const auto& s0 = find_arrow(*r.over, rel[0].second);
    int acc_rows = r.dims[s0.target], acc_cols = r.dims[f0.source];
    if (acc_rows == 0 || acc_cols == 0) continue;
    Matrix acc = zero_matrix(acc_rows, acc_cols);
    for (const auto& term : rel) {
      const auto& fa = find_arrow(*r.over, term.first);
      if (r.dims[fa.target] == 0) continue;  // factors through a zero space
      Matrix prod = matmul(r.action[term.second], r.action[term.first]);
      for (size_t i = 0; i < acc.size(); ++i)
        for (size_t j = 0; j < acc[i].size(); ++j) acc[i][j] += term.coeff * prod[i][j];
    }
    check(is_zero_matrix(acc), Errc::invalid_input, "a weighted relation does not vanish");
  }
  return r;
}

Representation string_module(const Presentation& p, const Word& w, const LetterTable& t) {
  for (int l : w.letters)
    check(!t.special(l), Errc::special_letter_present,
          "string modules are defined for ordinary strings only");
  check(validate(p).algebra_class == AlgebraClass::gentle, Errc::invalid_input,
        "string modules are built over gentle presentations");
  auto over = std::make_shared<WeightedPresentation>(specialize(p));
  // visits of the walk
  std::vector<int> verts;
  if (w.trivial()) {
    verts.push_back(w.base_vertex);
  } else {
    verts.push_back(t.source(w.letters.front()));
    for (int l : w.letters) verts.push_back(t.target(l));
  }
  std::map<std::string, int> dims;
  std::vector<int> slot(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) {
    const std::string& name = p.vertices[verts[i]];
    slot[i] = dims[name]++;
  }
  std::map<std::string, Matrix> action;
  for (const auto& a : over->arrows)
    action[a.id] = zero_matrix(dims.count(a.target) ? dims[a.target] : 0,
                               dims.count(a.source) ? dims[a.source] : 0);
  for (size_t i = 0; i < w.letters.size(); ++i) {
    const Letter& l = t.letter(w.letters[i]);
    const std::string& id = p.arrows[l.arrow].id;  // gentle: ids survive specialization
    if (l.kind == Letter::Kind::direct)
      action[id][slot[i + 1]][slot[i]] = Rational(1);
    else
      action[id][slot[i]][slot[i + 1]] = Rational(1);
  }
  return make_representation(over, std::move(dims), std::move(action));
}

Representation m_lambda(long long n, const Rational& lambda) {
  check(n >= 2, Errc::bad_params, "m_lambda is defined for n >= 2");
  Presentation s1 = fixture("S1", {.n = n, .r = {}, .m = {}});
  auto over = std::make_shared<WeightedPresentation>(specialize(s1));

  std::map<std::string, int> dims;
  dims["1+"] = 1;
  dims["1-"] = 1;
  for (long long i = 2; i <= n; ++i) dims[std::to_string(i)] = 2;
  dims["c1"] = 1;
  dims["c2"] = 1;

  std::map<std::string, Matrix> action;
  // split chain start: embeddings (1 lambda)^t and (1 1)^t
  action["s1[1+,2]"] = {{Rational(1)}, {lambda}};
  action["s1[1-,2]"] = {{Rational(1)}, {Rational(1)}};
  for (long long i = 2; i < n; ++i) action["s" + std::to_string(i)] = identity_matrix(2);
  action["alpha"] = {{Rational(0), Rational(1)}};
  action["beta"] = {{Rational(1)}, {Rational(0)}};
  action["d"] = {{Rational(1)}};
  return make_representation(over, std::move(dims), std::move(action));
}

Representation simple_module(std::shared_ptr<const WeightedPresentation> over,
                             const std::string& vertex) {
  std::map<std::string, int> dims;
  dims[vertex] = 1;
  return make_representation(std::move(over), std::move(dims), {});
}

Representation direct_sum(const Representation& a, const Representation& b) {
  check(a.over == b.over || weighted_to_json(*a.over) == weighted_to_json(*b.over),
        Errc::mismatched_presentations, "direct sum over different presentations");
  Representation r;
  r.over = a.over;
  for (const auto& v : a.over->vertices) {
    int da = a.dims.at(v), db = b.dims.at(v);
    r.dims[v] = da + db;
  }
  std::map<std::string, Matrix> action;
  for (const auto& arr : a.over->arrows) {
    int rt = r.dims[arr.target], rs = r.dims[arr.source];
    int at = a.dims.at(arr.target), as = a.dims.at(arr.source);
    Matrix m = zero_matrix(rt, rs);
    const Matrix& ma = a.action.at(arr.id);
    const Matrix& mb = b.action.at(arr.id);
    for (int i = 0; i < at; ++i)
      for (int j = 0; j < as; ++j) m[i][j] = ma[i][j];
    for (int i = at; i < rt; ++i)
      for (int j = as; j < rs; ++j) m[i][j] = mb[i - at][j - as];
    action[arr.id] = std::move(m);
  }
  return make_representation(r.over, std::move(r.dims), std::move(action));
}

// ---------------------------------------------------------------------------
// Hom spaces: exact kernel of the intertwining system

namespace {

// returns a basis of the kernel of the homogeneous system rows x vars
std::vector<std::vector<Rational>> kernel_basis(std::vector<std::vector<Rational>> m, int vars) {
  int rows = (int)m.size();
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < vars && r < rows; ++c) {
    int sel = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(m[sel], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (int j = c; j < vars; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (int j = c; j < vars; ++j) m[i][j] -= f * m[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(vars, 0);
  for (int c : pivot_col) is_pivot[c] = 1;
  std::vector<std::vector<Rational>> basis;
  for (int c = 0; c < vars; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Rational> v(vars);
    v[c] = Rational(1);
    for (int i = 0; i < (int)pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

Rational determinant(Matrix m) {
  int n = (int)m.size();
  Rational det(1);
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (!m[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) return Rational(0);
    if (sel != c) {
      std::swap(m[sel], m[c]);
      det = -det;
    }
    det *= m[c][c];
    Rational inv = Rational(1) / m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      Rational f = m[i][c] * inv;
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

struct VarLayout {
  // variable offsets of the per-vertex blocks f_v: dimN(v) x dimM(v)
  std::map<std::string, int> offset;
  int total = 0;
};

VarLayout layout(const Representation& M, const Representation& N) {
  VarLayout l;
  for (const auto& v : M.over->vertices) {
    l.offset[v] = l.total;
    l.total += M.dims.at(v) * N.dims.at(v);
  }
  return l;
}

}  // namespace

HomBasis hom_basis(const Representation& M, const Representation& N) {
  check(M.over == N.over || weighted_to_json(*M.over) == weighted_to_json(*N.over),
        Errc::mismatched_presentations, "hom over different presentations");
  VarLayout vl = layout(M, N);
  std::vector<std::vector<Rational>> rows;
  // per arrow a: f_{t(a)} M_a - N_a f_{s(a)} = 0
  for (const auto& a : M.over->arrows) {
    const Matrix& ma = M.action.at(a.id);
    const Matrix& na = N.action.at(a.id);
    int ms = M.dims.at(a.source), mt = M.dims.at(a.target);
    int ns = N.dims.at(a.source), nt = N.dims.at(a.target);
    // equation entry (i, j): i over dimN(target), j over dimM(source)
    for (int i = 0; i < nt; ++i)
      for (int j = 0; j < ms; ++j) {
        std::vector<Rational> row(vl.total);
        // f_t[i][k] * ma[k][j]
        for (int k = 0; k < mt; ++k)
          row[vl.offset.at(a.target) + i * mt + k] += ma[k][j];
        // - na[i][k] * f_s[k][j]
        for (int k = 0; k < ns; ++k)
          row[vl.offset.at(a.source) + k * ms + j] -= na[i][k];
        rows.push_back(std::move(row));
      }
  }
  auto kb = kernel_basis(std::move(rows), vl.total);
  HomBasis hb;
  hb.dimension = (int)kb.size();
  for (const auto& vec : kb) {
    std::map<std::string, Matrix> f;
    for (const auto& v : M.over->vertices) {
      int dm = M.dims.at(v), dn = N.dims.at(v);
      Matrix block = zero_matrix(dn, dm);
      for (int i = 0; i < dn; ++i)
        for (int j = 0; j < dm; ++j) block[i][j] = vec[vl.offset.at(v) + i * dm + j];
      f[v] = std::move(block);
    }
    hb.basis.push_back(std::move(f));
  }
  return hb;
}

int hom_dim(const Representation& M, const Representation& N) {
  return hom_basis(M, N).dimension;
}

bool is_brick(const Representation& M) { return hom_dim(M, M) == 1; }

IsoResult are_isomorphic(const Representation& M, const Representation& N,
                         unsigned long long seed) {
  IsoResult res;
  for (const auto& v : M.over->vertices)
    if (M.dims.at(v) != N.dims.at(v)) {
      res.transcript = "dimension vectors differ";
      return res;
    }
  HomBasis hb = hom_basis(M, N);
  if (hb.dimension == 0) {
    res.transcript = "hom space is zero";
    return res;
  }
  auto invertible = [&](const std::vector<Rational>& coeffs) {
    for (const auto& v : M.over->vertices) {
      int d = M.dims.at(v);
      if (d == 0) continue;
      Matrix sum = zero_matrix(d, d);
      for (size_t b = 0; b < hb.basis.size(); ++b) {
        if (coeffs[b].is_zero()) continue;
        const Matrix& blk = hb.basis[b].at(v);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) sum[i][j] += coeffs[b] * blk[i][j];
      }
      if (determinant(sum).is_zero()) return false;
    }
    return true;
  };

  int trials = 0;
  // single basis elements, then a bounded grid, then seeded random combos
  for (int b = 0; b < hb.dimension; ++b) {
    std::vector<Rational> c(hb.dimension);
    c[b] = Rational(1);
    ++trials;
    if (invertible(c)) {
      res.isomorphic = true;
      res.transcript = "basis element " + std::to_string(b) + " is invertible";
      return res;
    }
  }
  if (hb.dimension <= 4) {
    std::vector<int> grid(hb.dimension, -1);
    while (true) {
      std::vector<Rational> c(hb.dimension);
      bool all_zero = true;
      for (int i = 0; i < hb.dimension; ++i) {
        c[i] = Rational(grid[i]);
        if (grid[i] != 0) all_zero = false;
      }
      if (!all_zero) {
        ++trials;
        if (invertible(c)) {
          res.isomorphic = true;
          res.transcript = "grid combination found after " + std::to_string(trials) + " trials";
          return res;
        }
      }
      int i = 0;
      for (; i < hb.dimension; ++i) {
        if (grid[i] < 1) {
          ++grid[i];
          break;
        }
        grid[i] = -1;
      }
      if (i == hb.dimension) break;
    }
  }
  unsigned long long state = seed;
  auto next = [&state]() {
    state ^= state << 13;
    state ^= state >> 7;
    state ^= state << 17;
    return state;
  };
  for (int r = 0; r < 64; ++r) {
    std::vector<Rational> c(hb.dimension);
    for (int i = 0; i < hb.dimension; ++i) c[i] = Rational((long long)(next() % 7) - 3);
    ++trials;
    if (invertible(c)) {
      res.isomorphic = true;
      res.transcript = "random combination found after " + std::to_string(trials) + " trials";
      return res;
    }
  }
  res.transcript = "no invertible element after " + std::to_string(trials) +
                   " trials over a hom space of dimension " + std::to_string(hb.dimension);
  return res;
}

std::string representation_to_json(const Representation& r) {
  ojson doc;
  doc["dims"] = ojson::object();
  for (const auto& v : r.over->vertices) doc["dims"][v] = r.dims.at(v);
  doc["matrices"] = ojson::object();
  for (const auto& a : r.over->arrows) {
    ojson rows = ojson::array();
    for (const auto& row : r.action.at(a.id)) {
      ojson jr = ojson::array();
      for (const auto& x : row) jr.push_back(x.str());
      rows.push_back(jr);
    }
    doc["matrices"][a.id] = rows;
  }
  return doc.dump(2);
}

}  // namespace sg
