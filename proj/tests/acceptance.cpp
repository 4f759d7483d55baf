// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "skewgentle/analysis.hpp"
#include "skewgentle/modrep.hpp"

using namespace sg;

namespace {

int g_failures = 0;

void criterion(const std::string& name, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  auto start = std::chrono::steady_clock::now();
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
  }
  printf("%s criterion %s (%.2fs)%s%s\n", ok ? "PASS" : "FAIL", name.c_str(), secs,
         detail.empty() ? "" : ": ", detail.c_str());
  if (!ok) ++g_failures;
}

bool expect(bool cond, const std::string& what, std::string& detail) {
  if (!cond && detail.empty()) detail = what;
  return cond;
}

std::multiset<long long> windings(const SurfaceModel& m) {
  std::multiset<long long> out;
  for (const auto& c : m.boundaries) out.insert(c.winding);
  return out;
}

}  // namespace

int main() {
  criterion("1 (E1 end-to-end)", 1.0, [](std::string& detail) {
    Presentation p = fixture("E1");
    SurfaceModel m = build_surface(p);
    bool ok = expect(m.genus == 0, "genus", detail);
    ok &= expect(m.boundaries.size() == 3, "boundary count", detail);
    ok &= expect(windings(m) == std::multiset<long long>{-4, 1, 1}, "windings", detail);

    // figure-eight around the two inner holes
    Index ix = build_index(p);
    int big = m.polygon_of_arrow(ix.arrow.at("beta"));
    int pa = m.polygon_of_arrow(ix.arrow.at("alpha"));
    int pg = m.polygon_of_arrow(ix.arrow.at("gamma"));
    auto side_in = [&](int poly, const char* arc) {
      for (const auto& s : m.polygons[poly].sides)
        if (s.arc == ix.vertex.at(arc)) return s;
      fail(Errc::internal_inconsistency, "side lookup");
    };
    auto other = [](Side s) { return Side{s.arc, 1 - s.which}; };
    Side f1 = side_in(big, "1"), f3 = side_in(big, "3");
    Side g3 = other(f3), g4 = side_in(pg, "4");
    Side h4 = other(g4), h2 = side_in(big, "2");
    Side i2 = other(h2), i1 = other(f1);
    std::vector<CurveSegment> fig8{{big, f1, f3, false, +1},
                                   {pg, g3, g4, true, -1},
                                   {big, h4, h2, false, -1},
                                   {pa, i2, i1, true, +1}};
    ok &= expect(winding_of_curve(m, fig8) == 0, "figure-eight winding", detail);

    DecisionReport r;
    ok &= expect(silting_discrete(p, r) == SiltingVerdict::yes, "silting verdict", detail);
    return ok;
  });

  criterion("2 (Lambda sweep)", 5.0, [](std::string& detail) {
    bool ok = true;
    for (long long r = 1; r < 6; ++r)
      for (long long n = r + 1; n <= 6; ++n)
        for (long long mm = 0; mm <= 3; ++mm) {
          Presentation p = fixture("Lambda", {.n = n, .r = r, .m = mm});
          SurfaceModel m = build_surface(p);
          std::string at = " at Lambda(" + std::to_string(r) + "," + std::to_string(n) + "," +
                           std::to_string(mm) + ")";
          ok &= expect(m.genus == 0 && m.boundaries.size() == 2, "annulus" + at, detail);
          std::multiset<long long> blacks{(long long)m.boundaries[0].fans.size(),
                                          (long long)m.boundaries[1].fans.size()};
          ok &= expect(blacks == std::multiset<long long>{mm + r, n - r},
                       "marked point counts" + at, detail);
          std::multiset<long long> ms{m.boundaries[0].m_value, m.boundaries[1].m_value};
          ok &= expect(ms == std::multiset<long long>{2 + r, 2 - r}, "m-values" + at, detail);
          DecisionReport dd, ds;
          ok &= expect(derived_discrete(p, dd) == DerivedVerdict::discrete_lambda,
                       "derived verdict" + at, detail);
          ok &= expect(silting_discrete(p, ds) == SiltingVerdict::yes, "silting verdict" + at,
                       detail);
        }
    return ok;
  });

  criterion("3 (Kronecker)", 1.0, [](std::string& detail) {
    Presentation p = fixture("Kronecker");
    LetterTable t = LetterTable::build(p);
    auto band = band_exists(t);
    bool ok = expect(band.has_value(), "band existence", detail);
    if (band) {
      std::set<std::string> toks;
      for (int l : band->periodic) toks.insert(t.token(l));
      bool witness_ok = toks == std::set<std::string>{"a", "b^-1"} ||
                        toks == std::set<std::string>{"a^-1", "b"};
      ok &= expect(witness_ok, "band witness a b^-1", detail);
    }
    DecisionReport rt;
    ok &= expect(tau_tilting_finite(p, rt) == YesNo::no, "tau verdict", detail);
    SurfaceModel m = build_surface(p);
    ok &= expect(m.genus == 0 && m.boundaries.size() == 2, "annulus", detail);
    ok &= expect(m.boundaries[0].m_value == 2 && m.boundaries[1].m_value == 2, "m-values",
                 detail);
    DecisionReport rs;
    ok &= expect(silting_discrete(p, rs) == SiltingVerdict::no, "silting verdict", detail);
    ok &= expect(rs.evidence.subset_m_sum.has_value() && *rs.evidence.subset_m_sum == 2,
                 "equipartition evidence", detail);
    return ok;
  });

  criterion("4 (S1 family and the brick family)", 10.0, [](std::string& detail) {
    bool ok = true;
    for (long long n : {1, 2, 3}) {
      Presentation p = fixture("S1", {.n = n, .r = {}, .m = {}});
      DecisionReport r;
      std::string at = " at S1(" + std::to_string(n) + ")";
      ok &= expect(tau_tilting_finite(p, r) == YesNo::no, "tau verdict" + at, detail);
      ok &= expect(r.evidence.minimal_band_shape.has_value() &&
                       *r.evidence.minimal_band_shape == "asym_special_barbell",
                   "minimal band shape" + at, detail);
    }
    for (long long n : {2, 3}) {
      std::vector<Representation> family;
      for (long long l = 0; l <= 4; ++l) family.push_back(m_lambda(n, Rational(l)));
      for (size_t i = 0; i < family.size(); ++i) {
        ok &= expect(hom_dim(family[i], family[i]) == 1,
                     "endomorphism dimension at n=" + std::to_string(n), detail);
        for (size_t j = i + 1; j < family.size(); ++j)
          ok &= expect(!are_isomorphic(family[i], family[j]).isomorphic,
                       "pairwise non-isomorphic at n=" + std::to_string(n), detail);
      }
    }
    return ok;
  });

  criterion("5 (S2 family)", 1.0, [](std::string& detail) {
    bool ok = true;
    for (long long n : {2, 3}) {
      Presentation p = fixture("S2", {.n = n, .r = {}, .m = {}});
      LetterTable t = LetterTable::build(p);
      auto cert = find_minimal_band(t);
      std::string at = " at S2(" + std::to_string(n) + ")";
      ok &= expect(cert.has_value() && cert->shape == MinimalShape::sym_dumbbell,
                   "symmetric minimal band" + at, detail);
      if (cert) {
        ok &= expect(cert->band.symmetric, "band symmetry" + at, detail);
        ok &= expect((int)cert->z.size() == (int)n - 1, "z length" + at, detail);
      }
      DecisionReport r;
      ok &= expect(tau_tilting_finite(p, r) == YesNo::no, "tau verdict" + at, detail);
    }
    return ok;
  });

  criterion("6 (E2 classification)", 1.0, [](std::string& detail) {
    Presentation p = fixture("E2");
    LetterTable t = LetterTable::build(p);
    auto w = [&](std::vector<std::string> toks) { return make_word(t, toks); };
    bool ok = true;
    ok &= expect(classify_string(t, w({"gamma", "mu", "beta", "sigma^-1"})).kind ==
                     StringKind::not_coadmissible,
                 "gamma mu beta sigma^-1 coadmissibility", detail);
    ok &= expect(classify_string(t, w({"gamma", "mu", "beta", "sigma^-1", "eta*"})).kind ==
                     StringKind::asymmetric_string,
                 "asymmetric string", detail);
    ok &= expect(classify_string(t, w({"gamma", "mu", "beta", "sigma^-1", "eta*", "sigma",
                                       "beta^-1", "mu^-1", "gamma^-1"}))
                         .kind == StringKind::symmetric_string,
                 "symmetric string", detail);
    ok &= expect(classify_string(t, w({"eps*", "alpha", "nu", "eta*", "sigma", "beta^-1"}))
                         .kind == StringKind::asymmetric_string,
                 "second asymmetric string", detail);
    auto bands = enumerate_bands(t, 6);
    auto key = [&](std::vector<std::string> toks) {
      std::vector<int> seq;
      for (const auto& tok : toks) seq.push_back(t.letter_from_token(tok));
      return make_band(t, seq)->canonical_key;
    };
    auto asym_key = key({"gamma", "mu", "alpha^-1", "eps*", "alpha", "mu^-1"});
    auto sym_key = key({"eps*", "alpha", "nu", "eta*", "nu^-1", "alpha^-1"});
    bool saw_asym = false, saw_sym = false;
    for (const auto& b : bands) {
      if (b.canonical_key == asym_key) saw_asym = !b.symmetric;
      if (b.canonical_key == sym_key) saw_sym = b.symmetric;
    }
    ok &= expect(saw_asym, "asymmetric band class found", detail);
    ok &= expect(saw_sym, "symmetric band class found", detail);
    DecisionReport r;
    ok &= expect(silting_discrete(p, r) == SiltingVerdict::no, "silting verdict", detail);
    ok &= expect(r.evidence.orbifold_count.has_value() && *r.evidence.orbifold_count == 2,
                 "orbifold evidence", detail);
    return ok;
  });

  criterion("7a (index formula on 200 random presentations)", 30.0, [](std::string& detail) {
    bool ok = true;
    for (unsigned long long seed = 0; seed < 200; ++seed) {
      GeneratorOptions opts;
      opts.allow_special = seed % 2 == 1;
      Presentation p = random_presentation(seed, opts);
      SurfaceModel m = build_surface(p);
      long long total = 0;
      for (const auto& c : m.boundaries) total += c.winding;
      long long want = 4 - 4LL * m.genus - 2LL * (long long)m.boundaries.size() -
                       m.orbifold_count;
      ok &= expect(total == want, "index formula at seed " + std::to_string(seed), detail);
      long long chi = m.red_points + m.orbifold_count - (long long)p.vertices.size();
      ok &= expect(chi == 2 - 2LL * m.genus - (long long)m.boundaries.size(),
                   "Euler consistency at seed " + std::to_string(seed), detail);
    }
    return ok;
  });

  criterion("7b (dual involution on 100 random gentle presentations)", 10.0,
            [](std::string& detail) {
              bool ok = true;
              for (unsigned long long seed = 0; seed < 100; ++seed) {
                Presentation p = random_presentation(seed, {});
                Presentation d = dual(p);
                for (size_t i = 0; i < p.arrows.size(); ++i)
                  ok &= expect(p.arrows[i].degree + d.arrows[i].degree == 1,
                               "degree sum at seed " + std::to_string(seed), detail);
                Presentation dd = dual(d);
                bool same = dd.vertices == p.vertices && dd.arrows.size() == p.arrows.size() &&
                            dd.relations.size() == p.relations.size();
                for (size_t i = 0; same && i < p.arrows.size(); ++i)
                  same = dd.arrows[i].source == p.arrows[i].source &&
                         dd.arrows[i].target == p.arrows[i].target &&
                         dd.arrows[i].degree == p.arrows[i].degree;
                ok &= expect(same, "involution at seed " + std::to_string(seed), detail);
              }
              return ok;
            });

  criterion("7c (band detection routes agree on 100 random presentations)", 20.0,
            [](std::string& detail) {
              bool ok = true;
              for (unsigned long long seed = 0; seed < 100; ++seed) {
                GeneratorOptions opts;
                opts.max_vertices = 5;
                opts.allow_special = seed % 3 == 0;
                Presentation p = random_presentation(seed, opts);
                LetterTable t = LetterTable::build(p);
                bool direct = band_exists(t).has_value();
                bool enumerated = !enumerate_bands(t, std::max(1, t.size())).empty();
                size_t at = enumerate_strings(t, t.size()).size();
                size_t past = enumerate_strings(t, t.size() + 1).size();
                bool stabilized = at == past;
                std::string s = " at seed " + std::to_string(seed);
                ok &= expect(direct == enumerated, "existence vs enumeration" + s, detail);
                ok &= expect(direct == !stabilized, "existence vs stabilization" + s, detail);
              }
              return ok;
            });

  criterion("7d (band normal forms and certificates re-verify)", 30.0, [](std::string& detail) {
    bool ok = true;
    int bands_seen = 0, symmetric_seen = 0;
    for (unsigned long long seed = 0; seed < 100; ++seed) {
      GeneratorOptions opts;
      opts.max_vertices = 5;
      opts.allow_special = true;
      Presentation p = random_presentation(seed, opts);
      LetterTable t = LetterTable::build(p);
      for (const auto& b : enumerate_bands(t, std::min(t.size(), 10)))
        if (b.symmetric) {
          ++symmetric_seen;
          ok &= expect(symmetric_band_normal_form(t, b),
                       "symmetric normal form at seed " + std::to_string(seed), detail);
        }
      if (auto cert = find_minimal_band(t)) {
        ++bands_seen;
        ok &= expect(is_minimal_band(t, cert->band).has_value(),
                     "certificate re-verifies at seed " + std::to_string(seed), detail);
      }
    }
    // the fixtures exercise both symmetric shapes regardless of the sample
    for (long long n : {2, 3}) {
      Presentation p = fixture("S2", {.n = n, .r = {}, .m = {}});
      LetterTable t = LetterTable::build(p);
      for (const auto& b : enumerate_bands(t, t.size()))
        if (b.symmetric) {
          ++symmetric_seen;
          ok &= expect(symmetric_band_normal_form(t, b), "fixture symmetric normal form",
                       detail);
        }
    }
    ok &= expect(bands_seen > 10, "enough band samples", detail);
    ok &= expect(symmetric_seen > 0, "symmetric bands exercised", detail);
    return ok;
  });

  criterion("7e (equipartition routes and sign flip)", 20.0, [](std::string& detail) {
    bool ok = true;
    std::vector<Presentation> samples{fixture("E1"), fixture("Kronecker"),
                                      fixture("A_n", {.n = 3, .r = {}, .m = {}})};
    for (long long r = 1; r <= 3; ++r)
      for (long long n = r + 1; n <= 5; ++n)
        samples.push_back(fixture("Lambda", {.n = n, .r = r, .m = 1}));
    for (unsigned long long seed = 0; seed < 80; ++seed)
      samples.push_back(random_presentation(seed, {}));
    int genus0 = 0;
    for (const auto& p : samples) {
      SurfaceModel m = build_surface(p);
      if (m.genus != 0) continue;
      ++genus0;
      bool via_sums = equipartition_violated(m, nullptr);
      bool via_scc = false;
      int b = (int)m.boundaries.size();
      for (int mask = 1; mask < (1 << b); ++mask) {
        std::vector<int> subset;
        for (int j = 0; j < b; ++j)
          if (mask & (1 << j)) subset.push_back(j);
        via_scc = via_scc || scc_winding_genus0(m, subset) == 0;
      }
      ok &= expect(via_sums == via_scc, "subset sums vs scc zero test", detail);
      ok &= expect(via_sums == equipartition_violated(m, nullptr, true),
                   "sign flip invariance", detail);
    }
    ok &= expect(genus0 > 20, "enough genus-zero samples", detail);
    return ok;
  });

  if (g_failures) {
    printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  printf("all acceptance criteria passed\n");
  return 0;
}
