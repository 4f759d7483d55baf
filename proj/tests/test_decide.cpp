#include "doctest.h"
#include "skewgentle/analysis.hpp"
#include "skewgentle/decide.hpp"

using namespace sg;

TEST_CASE("tau-tilting finiteness by band existence") {
  DecisionReport r;
  CHECK(tau_tilting_finite(fixture("A_n", {.n = 2, .r = {}, .m = {}}), r) == YesNo::yes);
  for (long long n : {1, 2, 3}) {
    DecisionReport rr;
    CHECK(tau_tilting_finite(fixture("S1", {.n = n, .r = {}, .m = {}}), rr) == YesNo::no);
    CHECK_FALSE(rr.evidence.band_witness.empty());
    REQUIRE(rr.evidence.minimal_band_shape.has_value());
    CHECK(*rr.evidence.minimal_band_shape == "asym_special_barbell");
  }
  for (long long n : {2, 3}) {
    DecisionReport rr;
    CHECK(tau_tilting_finite(fixture("S2", {.n = n, .r = {}, .m = {}}), rr) == YesNo::no);
    REQUIRE(rr.evidence.minimal_band_shape.has_value());
    CHECK(*rr.evidence.minimal_band_shape == "sym_dumbbell");
  }
}

TEST_CASE("graded input gets NotApplicable for module-theoretic questions") {
  DecisionReport r;
  CHECK(tau_tilting_finite(fixture("E1"), r) == YesNo::not_applicable);  // E1 is graded
}

TEST_CASE("silting-discreteness of the anchors") {
  DecisionReport r1;
  CHECK(silting_discrete(fixture("E1"), r1) == SiltingVerdict::yes);

  DecisionReport r2;
  CHECK(silting_discrete(fixture("Kronecker"), r2) == SiltingVerdict::no);
  REQUIRE(r2.evidence.subset_m_sum.has_value());
  CHECK(*r2.evidence.subset_m_sum == 2);
  CHECK(r2.evidence.violating_subset.size() == 1);

  DecisionReport r3;
  CHECK(silting_discrete(fixture("E2"), r3) == SiltingVerdict::no);
  REQUIRE(r3.evidence.orbifold_count.has_value());
  CHECK(*r3.evidence.orbifold_count == 2);

  // S1: one orbifold, genus zero, but an m-value equals 2
  for (long long n : {1, 2, 3}) {
    DecisionReport rr;
    CHECK(silting_discrete(fixture("S1", {.n = n, .r = {}, .m = {}}), rr) ==
          SiltingVerdict::no);
  }
  for (long long n : {2, 3}) {
    DecisionReport rr;
    CHECK(silting_discrete(fixture("S2", {.n = n, .r = {}, .m = {}}), rr) ==
          SiltingVerdict::no);
  }
}

TEST_CASE("graded Kronecker is silting-discrete exactly when the degrees differ") {
  for (long long da = -2; da <= 2; ++da)
    for (long long db = -2; db <= 2; ++db) {
      Presentation p = fixture("Kronecker");
      p.arrows[0].degree = da;
      p.arrows[1].degree = db;
      DecisionReport r;
      SiltingVerdict v = silting_discrete(p, r);
      if (da == db)
        CHECK(v == SiltingVerdict::no);
      else
        CHECK(v == SiltingVerdict::yes);
    }
}

TEST_CASE("positive genus defeats silting-discreteness") {
  Presentation p;
  p.vertices = {"1", "2"};
  p.arrows = {{"a", "1", "2", 0}, {"b", "1", "2", 0}, {"c", "2", "1", 0}};
  p.relations = {{"c", "a"}, {"b", "c"}};
  DecisionReport r;
  CHECK(silting_discrete(p, r) == SiltingVerdict::no);
  REQUIRE(r.evidence.genus.has_value());
  CHECK(*r.evidence.genus == 1);
}

TEST_CASE("a skew-gentle algebra with one orbifold and no equipartition is conjectural") {
  // single special vertex, no ordinary arrows: the orbifold disk
  Presentation p;
  p.vertices = {"1"};
  p.arrows = {{"e", "1", "1", 0}};
  p.special_loops = {"e"};
  DecisionReport r;
  CHECK(silting_discrete(p, r) == SiltingVerdict::conjectural_yes);
}

TEST_CASE("derived-discreteness classification") {
  DecisionReport r;
  CHECK(derived_discrete(fixture("A_n", {.n = 2, .r = {}, .m = {}}), r) ==
        DerivedVerdict::dynkin_type);
  for (long long rr = 1; rr <= 3; ++rr)
    for (long long n = rr + 1; n <= 5; ++n)
      for (long long mm = 0; mm <= 2; ++mm) {
        DecisionReport dr;
        CHECK(derived_discrete(fixture("Lambda", {.n = n, .r = rr, .m = mm}), dr) ==
              DerivedVerdict::discrete_lambda);
        // Cor: derived-discrete Lambda implies silting-discrete
        DecisionReport ds;
        CHECK(silting_discrete(fixture("Lambda", {.n = n, .r = rr, .m = mm}), ds) ==
              SiltingVerdict::yes);
      }
  DecisionReport rk;
  CHECK(derived_discrete(fixture("Kronecker"), rk) == DerivedVerdict::no);
  DecisionReport re;
  CHECK(derived_discrete(fixture("E1"), re) == DerivedVerdict::not_applicable);  // graded
  DecisionReport rs;
  CHECK(derived_discrete(fixture("S2", {.n = 2, .r = {}, .m = {}}), rs) ==
        DerivedVerdict::not_applicable);  // skew
}

TEST_CASE("pre-silting is partial silting at genus zero, gcd-gated at genus one") {
  DecisionReport r;
  CHECK(presilting_partial_silting(fixture("E1"), std::nullopt, r) == PresiltingVerdict::yes);

  Presentation torus;
  torus.vertices = {"1", "2"};
  torus.arrows = {{"a", "1", "2", 0}, {"b", "1", "2", 0}, {"c", "2", "1", 0}};
  torus.relations = {{"c", "a"}, {"b", "c"}};
  DecisionReport r1;
  CHECK(presilting_partial_silting(torus, std::nullopt, r1) ==
        PresiltingVerdict::needs_handle_windings);
  DecisionReport r2;
  // m = (0): gcd(m) = 0; handle windings (1,1) give gcd 1 != 0
  CHECK(presilting_partial_silting(torus, HandleWindings{1, 1}, r2) == PresiltingVerdict::yes);
  DecisionReport r3;
  // handle windings (0,0): both gcds are 0, criterion fails
  CHECK(presilting_partial_silting(torus, HandleWindings{0, 0}, r3) == PresiltingVerdict::no);
}

TEST_CASE("genus two or more answers No regardless of handle data") {
  GeneratorOptions opts;
  opts.max_vertices = 7;
  opts.trivial_grading = true;
  Presentation p = random_presentation(7, opts);
  SurfaceModel m = build_surface(p);
  REQUIRE(m.genus == 2);
  DecisionReport r;
  CHECK(presilting_partial_silting(p, HandleWindings{3, 5}, r) == PresiltingVerdict::no);
  DecisionReport r2;
  CHECK(silting_discrete(p, r2) == SiltingVerdict::no);
}

TEST_CASE("gcd of the empty or all-zero set is zero") {
  CHECK(gcd_nonneg(0, 0) == 0);
  CHECK(gcd_nonneg(0, 5) == 5);
  CHECK(gcd_nonneg(-4, 6) == 2);
}

TEST_CASE("degree-zero band check") {
  std::vector<std::string> witness;
  CHECK_FALSE(h0_band_check(fixture("E1"), witness));
  CHECK(h0_band_check(fixture("Kronecker"), witness));
  CHECK(witness.size() == 2);
  Presentation p = fixture("Kronecker");
  for (auto& a : p.arrows) a.degree = 1;
  CHECK_FALSE(h0_band_check(p, witness));  // degree-0 part has no arrows
}

TEST_CASE("equipartition via subset sums equals the scc zero test") {
  std::vector<Presentation> samples{fixture("E1"), fixture("Kronecker"),
                                    fixture("Lambda", {.n = 3, .r = 1, .m = 1})};
  for (unsigned long long seed = 0; seed < 80; ++seed)
    samples.push_back(random_presentation(seed, {}));
  for (const auto& p : samples) {
    SurfaceModel m = build_surface(p);
    if (m.genus != 0) continue;
    std::vector<int> witness;
    bool via_sums = equipartition_violated(m, &witness);
    bool via_scc = false;
    int b = (int)m.boundaries.size();
    for (int mask = 0; mask < (1 << b); ++mask) {
      std::vector<int> subset;
      for (int j = 0; j < b; ++j)
        if (mask & (1 << j)) subset.push_back(j);
      via_scc = via_scc || (!subset.empty() && scc_winding_genus0(m, subset) == 0);
    }
    CHECK(via_sums == via_scc);
    bool via_flipped = equipartition_violated(m, nullptr, true);
    CHECK(via_sums == via_flipped);
    if (via_sums) {
      long long sum = 0;
      for (int j : witness) sum += m.boundaries[j].m_value;
      CHECK(sum == 2);
    }
  }
}

TEST_CASE("silting-discrete implies tau-tilting finite on trivially graded gentle input") {
  int silting_yes = 0;
  for (unsigned long long seed = 0; seed < 150; ++seed) {
    GeneratorOptions opts;
    opts.trivial_grading = true;
    Presentation p = random_presentation(seed, opts);
    DecisionReport r;
    SiltingVerdict sv = silting_discrete(p, r);
    DecisionReport rt;
    YesNo tv = tau_tilting_finite(p, rt);
    if (sv == SiltingVerdict::yes) {
      ++silting_yes;
      CHECK(tv == YesNo::yes);
    }
  }
  MESSAGE("silting-discrete samples: ", silting_yes);
  CHECK(silting_yes > 5);
}

TEST_CASE("evidence re-verifies") {
  DecisionReport r;
  REQUIRE(silting_discrete(fixture("Kronecker"), r) == SiltingVerdict::no);
  SurfaceModel m = build_surface(fixture("Kronecker"));
  long long sum = 0;
  for (int j : r.evidence.violating_subset) sum += m.boundaries[j].m_value;
  CHECK(sum == 2);

  DecisionReport rt;
  Presentation s1 = fixture("S1", {.n = 2, .r = {}, .m = {}});
  REQUIRE(tau_tilting_finite(s1, rt) == YesNo::no);
  LetterTable t = LetterTable::build(s1);
  std::vector<int> seq;
  for (const auto& tok : rt.evidence.band_witness) seq.push_back(t.letter_from_token(tok));
  CHECK(make_band(t, seq).has_value());
}

TEST_CASE("decide_all populates the report and serializes") {
  DecisionReport r = decide_all(fixture("Kronecker"));
  CHECK(r.tau_tilting_finite == YesNo::no);
  CHECK(r.representation_finite == YesNo::no);
  CHECK(r.silting_discrete == SiltingVerdict::no);
  CHECK(r.derived_discrete == DerivedVerdict::no);
  CHECK(r.presilting_partial == PresiltingVerdict::yes);
  CHECK(r.h0_band_found);
  std::string j = decision_to_json(r);
  CHECK(j.find("\"verdict\": \"No\"") != std::string::npos);
  // NotApplicable never coexists with a definite verdict for one property
  std::string ja = analyze_to_json(fixture("E2"));
  CHECK(ja.find("\"tau_tilting_finite\"") != std::string::npos);
}
