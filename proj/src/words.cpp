#include "skewgentle/words.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace sg {

LetterTable LetterTable::build(const Presentation& p) {
  LetterTable t;
  t.p_ = &p;
  t.ix_ = build_index(p);
  for (int a : t.ix_.ordinary) {
    t.letters_.push_back({Letter::Kind::direct, a});
    t.letters_.push_back({Letter::Kind::inverse, a});
  }
  for (int s : t.ix_.special) t.letters_.push_back({Letter::Kind::special, s});

  int n = (int)t.letters_.size();
  t.src_.resize(n);
  t.tgt_.resize(n);
  t.inv_.resize(n);
  t.tokens_.resize(n);
  t.special_letter_at_.assign(p.vertices.size(), -1);
  for (int i = 0; i < n; ++i) {
    const Letter& l = t.letters_[i];
    const Arrow& a = p.arrows[l.arrow];
    int sv = t.ix_.vertex.at(a.source), tv = t.ix_.vertex.at(a.target);
    switch (l.kind) {
      case Letter::Kind::direct:
        t.src_[i] = sv;
        t.tgt_[i] = tv;
        t.inv_[i] = i + 1;
        t.tokens_[i] = a.id;
        break;
      case Letter::Kind::inverse:
        t.src_[i] = tv;
        t.tgt_[i] = sv;
        t.inv_[i] = i - 1;
        t.tokens_[i] = a.id + "^-1";
        break;
      case Letter::Kind::special:
        t.src_[i] = sv;
        t.tgt_[i] = sv;
        t.inv_[i] = i;
        t.tokens_[i] = a.id + "*";
        t.special_letter_at_[sv] = i;
        break;
    }
  }

  t.pair_ok_.assign((size_t)n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t.tgt_[a] != t.src_[b]) continue;
      if (t.inv_[a] == b) continue;  // condition (2); covers special-special same loop
      const Letter& la = t.letters_[a];
      const Letter& lb = t.letters_[b];
      if (la.kind == Letter::Kind::special && lb.kind == Letter::Kind::special) continue;
      if (la.kind == Letter::Kind::direct && lb.kind == Letter::Kind::direct &&
          t.ix_.is_relation(la.arrow, lb.arrow))
        continue;  // condition (4)
      if (la.kind == Letter::Kind::inverse && lb.kind == Letter::Kind::inverse &&
          t.ix_.is_relation(lb.arrow, la.arrow))
        continue;  // condition (4) on the inverse path
      t.pair_ok_[(size_t)a * n + b] = 1;
    }
  return t;
}

int LetterTable::pair_violation(int a, int b) const {
  if (tgt_[a] != src_[b]) return 1;
  const Letter& la = letters_[a];
  const Letter& lb = letters_[b];
  if (la.kind == Letter::Kind::special && lb.kind == Letter::Kind::special) return 3;
  if (inv_[a] == b) return 2;
  if (la.kind == Letter::Kind::direct && lb.kind == Letter::Kind::direct &&
      ix_.is_relation(la.arrow, lb.arrow))
    return 4;
  if (la.kind == Letter::Kind::inverse && lb.kind == Letter::Kind::inverse &&
      ix_.is_relation(lb.arrow, la.arrow))
    return 4;
  return 0;
}

int LetterTable::letter_from_token(const std::string& tok) const {
  for (int i = 0; i < size(); ++i)
    if (tokens_[i] == tok) return i;
  fail(Errc::foreign_letter, "letter '" + tok + "' does not belong to this presentation");
}

WordCheck check_word(const LetterTable& t, const std::vector<int>& seq) {
  for (int l : seq)
    check(l >= 0 && l < t.size(), Errc::foreign_letter, "letter index out of range");
  for (size_t i = 0; i + 1 < seq.size(); ++i) {
    int v = t.pair_violation(seq[i], seq[i + 1]);
    if (v != 0) return {false, (int)i + 1, v};
  }
  return {};
}

Word make_word(const LetterTable& t, const std::vector<std::string>& tokens,
               const std::string& trivial_at) {
  Word w;
  if (tokens.empty()) {
    auto it = t.index().vertex.find(trivial_at);
    check(it != t.index().vertex.end(), Errc::invalid_input,
          "trivial word needs a declared base vertex");
    w.base_vertex = it->second;
    return w;
  }
  for (const auto& tok : tokens) w.letters.push_back(t.letter_from_token(tok));
  WordCheck c = check_word(t, w.letters);
  check(c.ok, Errc::invalid_input,
        "not a word: condition (" + std::to_string(c.condition) + ") fails at position " +
            std::to_string(c.position));
  return w;
}

std::vector<std::string> word_tokens(const LetterTable& t, const Word& w) {
  std::vector<std::string> out;
  for (int l : w.letters) out.push_back(t.token(l));
  return out;
}

Word inverse_word(const LetterTable& t, const Word& w) {
  Word r;
  r.base_vertex = w.base_vertex;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    r.letters.push_back(t.inverse(*it));
  return r;
}

int word_source(const LetterTable& t, const Word& w) {
  return w.trivial() ? w.base_vertex : t.source(w.letters.front());
}

int word_target(const LetterTable& t, const Word& w) {
  return w.trivial() ? w.base_vertex : t.target(w.letters.back());
}

// ---------------------------------------------------------------------------
// String classification

namespace {

// Per the paper's remark: eps* w fails to be a word iff the first letter is
// special, or no special loop sits at the source. Same on the right.
bool coadmissible(const LetterTable& t, const Word& w) {
  if (w.trivial()) return t.special_letter_at_vertex(w.base_vertex) < 0;
  int first = w.letters.front();
  int last = w.letters.back();
  bool left_ok = t.special(first) || t.special_letter_at_vertex(t.source(first)) < 0;
  bool right_ok = t.special(last) || t.special_letter_at_vertex(t.target(last)) < 0;
  return left_ok && right_ok;
}

// u == (v eps* v^-1 eta*)^k v for some k >= 1 and special eta?
bool forbidden_symmetric_shape(const LetterTable& t, const std::vector<int>& u, int eps_letter) {
  int n = (int)u.size();
  for (int k = 1; 2 * k <= n + 1; ++k) {
    // |u| = k(2|v|+2) + |v|  =>  |v| = (n - 2k) / (2k+1)
    int num = n - 2 * k;
    if (num < 0 || num % (2 * k + 1) != 0) continue;
    int lv = num / (2 * k + 1);
    std::vector<int> v(u.begin(), u.begin() + lv);
    std::vector<int> vinv(v.rbegin(), v.rend());
    for (auto& l : vinv) l = t.inverse(l);
    // candidate eta from the pattern position
    int pos = 0;
    bool match = true;
    int eta = -1;
    for (int rep = 0; rep < k && match; ++rep) {
      for (int i = 0; i < lv && match; ++i) match = u[pos++] == v[i];
      if (match) match = u[pos] == eps_letter, ++pos;
      for (int i = 0; i < lv && match; ++i) match = u[pos++] == vinv[i];
      if (match) {
        int cand = u[pos++];
        if (!t.special(cand) || (eta >= 0 && cand != eta)) match = false;
        eta = cand;
      }
    }
    for (int i = 0; i < lv && match; ++i) match = u[pos++] == v[i];
    if (match && pos == n) return true;
  }
  return false;
}

}  // namespace

StringClass classify_string(const LetterTable& t, const Word& w) {
  if (!coadmissible(t, w))
    return {StringKind::not_coadmissible, "a special letter extends the word"};
  Word winv = inverse_word(t, w);
  if (w.letters != winv.letters) return {StringKind::asymmetric_string, ""};
  if (w.trivial()) return {StringKind::not_string, "trivial word equals its inverse"};
  // w == w^-1 forces odd length with a special letter in the middle
  int n = (int)w.letters.size();
  internal_check(n % 2 == 1, "palindromic word of even length");
  int mid = w.letters[n / 2];
  internal_check(t.special(mid), "palindromic word without special middle");
  std::vector<int> u(w.letters.begin(), w.letters.begin() + n / 2);
  std::vector<int> uinv(u.rbegin(), u.rend());
  for (auto& l : uinv) l = t.inverse(l);
  if (u == uinv) return {StringKind::not_string, "u = u^-1 in the decomposition u eps* u^-1"};
  if (forbidden_symmetric_shape(t, u, mid))
    return {StringKind::not_string, "u matches the excluded shape (v eps* v^-1 eta*)^k v"};
  return {StringKind::symmetric_string, ""};
}

// ---------------------------------------------------------------------------
// Bands

namespace {

int minimal_rotation_period(const std::vector<int>& w) {
  int n = (int)w.size();
  for (int p = 1; p <= n; ++p) {
    if (n % p != 0) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = w[i] == w[(i + p) % n];
    if (ok) return p;
  }
  return n;
}

std::vector<int> rotate(const std::vector<int>& w, int k) {
  std::vector<int> r;
  int n = (int)w.size();
  r.reserve(n);
  for (int i = 0; i < n; ++i) r.push_back(w[(i + k) % n]);
  return r;
}

std::vector<int> cyclic_inverse(const LetterTable& t, const std::vector<int>& w) {
  std::vector<int> r(w.rbegin(), w.rend());
  for (auto& l : r) l = t.inverse(l);
  return r;
}

}  // namespace

std::optional<Band> make_band(const LetterTable& t, const std::vector<int>& cyc) {
  if (cyc.empty()) return std::nullopt;
  int n = (int)cyc.size();
  for (int i = 0; i < n; ++i)
    if (!t.valid_pair(cyc[i], cyc[(i + 1) % n])) return std::nullopt;
  int p = minimal_rotation_period(cyc);
  if (p != n) return std::nullopt;  // not primitive

  Band b;
  b.periodic = cyc;
  b.period = n;
  std::vector<int> inv = cyclic_inverse(t, cyc);
  b.symmetric = false;
  for (int k = 0; k < n && !b.symmetric; ++k) b.symmetric = rotate(inv, k) == cyc;
  b.canonical_key = cyc;
  for (int k = 0; k < n; ++k) {
    b.canonical_key = std::min(b.canonical_key, rotate(cyc, k));
    b.canonical_key = std::min(b.canonical_key, rotate(inv, k));
  }
  return b;
}

std::optional<Band> band_exists(const LetterTable& t) {
  ValidationReport r = validate(t.presentation());
  check(r.finite_dimensional, Errc::invalid_input,
        "band detection requires a finite-dimensional presentation");
  int n = t.size();
  // Shortest directed cycle: BFS tree from each letter plus one closing edge.
  std::vector<int> best;
  for (int s = 0; s < n; ++s) {
    std::vector<int> dist(n, -1), par(n, -1);
    std::deque<int> queue;
    dist[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int w = 0; w < n; ++w)
        if (t.valid_pair(v, w) && dist[w] < 0) {
          dist[w] = dist[v] + 1;
          par[w] = v;
          queue.push_back(w);
        }
    }
    int close = -1;
    for (int v = 0; v < n; ++v)
      if (dist[v] >= 0 && t.valid_pair(v, s) && (close < 0 || dist[v] < dist[close])) close = v;
    if (close < 0) continue;
    std::vector<int> cyc;
    for (int cur = close; cur != s; cur = par[cur]) cyc.push_back(cur);
    cyc.push_back(s);
    std::reverse(cyc.begin(), cyc.end());
    if (best.empty() || cyc.size() < best.size()) best = cyc;
  }
  if (best.empty()) return std::nullopt;
  auto b = make_band(t, best);
  internal_check(b.has_value(), "shortest letter cycle failed band validation");
  return b;
}

std::vector<ClassifiedWord> enumerate_strings(const LetterTable& t, int max_len, size_t cap) {
  check(max_len >= 0, Errc::bad_params, "max_len must be >= 0");
  std::set<std::vector<int>> seen;  // canonical representatives, non-trivial
  std::vector<ClassifiedWord> out;
  for (size_t v = 0; v < t.presentation().vertices.size(); ++v) {
    Word w;
    w.base_vertex = (int)v;
    out.push_back({w, classify_string(t, w)});
  }
  std::vector<std::vector<int>> frontier;
  for (int l = 0; l < t.size(); ++l) frontier.push_back({l});
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::vector<int>> next;
    for (auto& seq : frontier) {
      std::vector<int> inv(seq.rbegin(), seq.rend());
      for (auto& l : inv) l = t.inverse(l);
      std::vector<int> canon = std::min(seq, inv);
      if (seen.insert(canon).second) {
        check(seen.size() <= cap, Errc::budget_exceeded, "string enumeration cap exceeded");
        Word w;
        w.letters = canon;
        out.push_back({w, classify_string(t, w)});
      }
      if (len < max_len)
        for (int l = 0; l < t.size(); ++l)
          if (t.valid_pair(seq.back(), l)) {
            next.push_back(seq);
            next.back().push_back(l);
          }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(), [](const ClassifiedWord& a, const ClassifiedWord& b) {
    if (a.word.letters.size() != b.word.letters.size())
      return a.word.letters.size() < b.word.letters.size();
    if (a.word.trivial()) return a.word.base_vertex < b.word.base_vertex;
    return a.word.letters < b.word.letters;
  });
  return out;
}

std::vector<Band> enumerate_bands(const LetterTable& t, int max_period, size_t cap) {
  check(max_period >= 1, Errc::bad_params, "max_period must be >= 1");
  int n = t.size();
  std::map<std::vector<int>, Band> found;  // keyed by canonical key

  // simple cycles: DFS from each start letter using only letters >= start
  std::vector<int> path;
  std::vector<char> on_path(n, 0);
  auto dfs = [&](auto&& self, int start, int v) -> void {
    if ((int)path.size() > max_period) return;
    for (int w = start; w < n; ++w) {
      if (!t.valid_pair(v, w)) continue;
      if (w == start) {
        if (auto b = make_band(t, path)) {
          check(found.size() <= cap, Errc::budget_exceeded, "band enumeration cap exceeded");
          found.emplace(b->canonical_key, *b);
        }
        continue;
      }
      if (on_path[w] || (int)path.size() >= max_period) continue;
      on_path[w] = 1;
      path.push_back(w);
      self(self, start, w);
      path.pop_back();
      on_path[w] = 0;
    }
  };
  for (int s = 0; s < n; ++s) {
    path = {s};
    std::fill(on_path.begin(), on_path.end(), 0);
    on_path[s] = 1;
    dfs(dfs, s, s);
  }

  std::vector<Band> out;
  for (auto& [k, b] : found) out.push_back(b);
  std::sort(out.begin(), out.end(), [](const Band& a, const Band& b) {
    if (a.period != b.period) return a.period < b.period;
    return a.canonical_key < b.canonical_key;
  });
  return out;
}

bool symmetric_band_normal_form(const LetterTable& t, const Band& b) {
  int n = b.period;
  for (int k = 0; k < n; ++k) {
    std::vector<int> w = rotate(b.periodic, k);
    if (!t.special(w[0])) continue;
    // w = eps* u eta* u^-1 with |u| = (n-2)/2
    if (n < 4 || n % 2 != 0) continue;
    int lu = (n - 2) / 2;
    if (!t.special(w[lu + 1])) continue;
    std::vector<int> u(w.begin() + 1, w.begin() + 1 + lu);
    std::vector<int> tail(w.begin() + lu + 2, w.end());
    std::vector<int> uinv(u.rbegin(), u.rend());
    for (auto& l : uinv) l = t.inverse(l);
    if (tail == uinv && lu >= 1) return true;
  }
  return false;
}

}  // namespace sg
