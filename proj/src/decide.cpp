#include "skewgentle/decide.hpp"

#include <algorithm>
#include <numeric>

#include "json.hpp"

namespace sg {

using ojson = nlohmann::ordered_json;

long long gcd_nonneg(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

namespace {

bool trivially_graded(const Presentation& p) {
  return std::all_of(p.arrows.begin(), p.arrows.end(),
                     [](const Arrow& a) { return a.degree == 0; });
}

std::vector<std::string> tokens_of(const LetterTable& t, const std::vector<int>& letters) {
  std::vector<std::string> out;
  for (int l : letters) out.push_back(t.token(l));
  return out;
}

}  // namespace

bool equipartition_violated(const SurfaceModel& m, std::vector<int>* witness,
                            bool flipped_signs) {
  int b = (int)m.boundaries.size();
  internal_check(b <= 30, "too many boundary components for subset scan");
  for (int mask = 0; mask < (1 << b); ++mask) {
    long long sum = 0;
    int count = 0;
    for (int j = 0; j < b; ++j)
      if (mask & (1 << j)) {
        long long mj = flipped_signs ? 2 - m.boundaries[j].winding : m.boundaries[j].m_value;
        sum += mj;
        ++count;
      }
    // under the flipped convention the separating-curve identity reads
    // omega(l) = 4|J| - 2 - sum, so the zero test moves with it
    long long threshold = flipped_signs ? 4LL * count - 2 : 2;
    if (sum == threshold) {
      if (witness) {
        witness->clear();
        for (int j = 0; j < b; ++j)
          if (mask & (1 << j)) witness->push_back(j);
      }
      return true;
    }
  }
  return false;
}

YesNo tau_tilting_finite(const Presentation& p, DecisionReport& out) {
  ValidationReport rep = validate(p);
  if (!rep.valid_class()) {
    out.tau_reason = "input is not (skew-)gentle";
    return YesNo::not_applicable;
  }
  if (!rep.finite_dimensional) {
    out.tau_reason = "algebra is infinite-dimensional";
    return YesNo::not_applicable;
  }
  if (!trivially_graded(p)) {
    out.tau_reason = "module-theoretic question needs the trivial grading";
    return YesNo::not_applicable;
  }
  LetterTable t = LetterTable::build(p);
  auto band = band_exists(t);
  if (!band) {
    out.tau_reason = "no band";
    return YesNo::yes;
  }
  out.evidence.band_witness = tokens_of(t, band->periodic);
  if (auto cert = find_minimal_band(t)) {
    out.evidence.minimal_band_shape = shape_name(cert->shape);
    out.evidence.minimal_band_tokens = tokens_of(t, cert->band.periodic);
    out.evidence.cert_u = tokens_of(t, cert->u);
    out.evidence.cert_uprime = tokens_of(t, cert->uprime);
    out.evidence.cert_z = tokens_of(t, cert->z);
  }
  out.tau_reason = "band found";
  return YesNo::no;
}

SiltingVerdict silting_discrete(const Presentation& p, DecisionReport& out) {
  ValidationReport rep = validate(p);
  if (!rep.valid_class() || !rep.finite_dimensional || !rep.connected) {
    out.silting_reason = "needs a connected finite-dimensional (skew-)gentle input";
    return SiltingVerdict::not_applicable;
  }
  bool skew = rep.algebra_class == AlgebraClass::skew_gentle;
  int orbifolds = (int)p.special_loops.size();
  // Two or more orbifold points force infinitely many silting objects; this
  // needs no surface data beyond the special-loop count.
  if (skew && orbifolds >= 2) {
    out.evidence.orbifold_count = orbifolds;
    out.silting_reason = "two or more orbifold points";
    return SiltingVerdict::no;
  }
  if (!rep.smooth_proper) {
    out.silting_reason = "surface model needs a smooth proper presentation";
    return SiltingVerdict::not_applicable;
  }
  SurfaceModel m = build_surface(p);
  out.evidence.genus = m.genus;
  if (m.genus > 0) {
    out.silting_reason = "positive genus";
    return SiltingVerdict::no;
  }
  std::vector<int> witness;
  if (equipartition_violated(m, &witness)) {
    out.evidence.violating_subset = witness;
    long long sum = 0;
    for (int j : witness) sum += m.boundaries[j].m_value;
    out.evidence.subset_m_sum = sum;
    out.silting_reason = "a subset of boundary m-values sums to 2";
    return SiltingVerdict::no;
  }
  if (skew && orbifolds == 1) {
    out.silting_reason = "necessary conditions hold; the converse is conjectural";
    return SiltingVerdict::conjectural_yes;
  }
  out.silting_reason = "genus zero and no equipartition";
  return SiltingVerdict::yes;
}

DerivedVerdict derived_discrete(const Presentation& p, DecisionReport& out) {
  ValidationReport rep = validate(p);
  if (rep.algebra_class != AlgebraClass::gentle || !trivially_graded(p) || !rep.smooth_proper ||
      !rep.connected) {
    out.derived_reason = "needs an ungraded gentle smooth-proper connected input";
    return DerivedVerdict::not_applicable;
  }
  SurfaceModel m = build_surface(p);
  if (m.genus == 0 && m.boundaries.size() == 1) {
    out.derived_reason = "disk";
    return DerivedVerdict::dynkin_type;
  }
  if (m.genus == 0 && m.boundaries.size() == 2) {
    bool some_two = m.boundaries[0].m_value == 2 || m.boundaries[1].m_value == 2;
    if (!some_two) {
      out.derived_reason = "annulus with nonzero core winding";
      return DerivedVerdict::discrete_lambda;
    }
    out.derived_reason = "annulus with a zero-winding core curve";
    return DerivedVerdict::no;
  }
  out.derived_reason = "surface is neither a disk nor an annulus";
  return DerivedVerdict::no;
}

PresiltingVerdict presilting_partial_silting(const Presentation& p,
                                             const std::optional<HandleWindings>& hw,
                                             DecisionReport& out) {
  ValidationReport rep = validate(p);
  if (rep.algebra_class != AlgebraClass::gentle || !rep.smooth_proper || !rep.connected) {
    out.presilting_reason = "needs a gentle smooth-proper connected input";
    return PresiltingVerdict::not_applicable;
  }
  SurfaceModel m = build_surface(p);
  if (m.genus == 0) {
    out.presilting_reason = "genus zero";
    return PresiltingVerdict::yes;
  }
  if (m.genus == 1) {
    if (!hw) {
      out.presilting_reason = "genus one needs the handle-curve windings";
      return PresiltingVerdict::needs_handle_windings;
    }
    long long g_m = 0;
    for (const auto& c : m.boundaries) g_m = gcd_nonneg(g_m, c.m_value);
    long long g_all = gcd_nonneg(gcd_nonneg(hw->s, hw->t), g_m);
    if (g_all != g_m) {
      out.presilting_reason = "gcd criterion holds at genus one";
      return PresiltingVerdict::yes;
    }
    out.presilting_reason = "gcd criterion fails at genus one";
    return PresiltingVerdict::no;
  }
  out.presilting_reason = "genus two or more";
  return PresiltingVerdict::no;
}

bool h0_band_check(const Presentation& p, std::vector<std::string>& witness) {
  ValidationReport rep = validate(p);
  check(rep.algebra_class == AlgebraClass::gentle, Errc::invalid_input,
        "degree-zero band check is for gentle presentations");
  Presentation sub;
  sub.vertices = p.vertices;
  for (const auto& a : p.arrows)
    if (a.degree == 0) sub.arrows.push_back(a);
  for (const auto& r : p.relations) {
    bool keep = true;
    for (const auto& id : {r.first, r.second}) {
      bool found = false;
      for (const auto& a : sub.arrows) found = found || a.id == id;
      keep = keep && found;
    }
    if (keep) sub.relations.push_back(r);
  }
  LetterTable t = LetterTable::build(sub);
  auto band = band_exists(t);
  if (!band) return false;
  witness = tokens_of(t, band->periodic);
  return true;
}

DecisionReport decide_all(const Presentation& p, const std::optional<HandleWindings>& hw) {
  DecisionReport r;
  r.tau_tilting_finite = tau_tilting_finite(p, r);
  r.representation_finite = r.tau_tilting_finite;
  r.silting_discrete = silting_discrete(p, r);
  r.derived_discrete = derived_discrete(p, r);
  r.presilting_partial = presilting_partial_silting(p, hw, r);
  ValidationReport rep = validate(p);
  if (rep.algebra_class == AlgebraClass::gentle && rep.finite_dimensional)
    r.h0_band_found = h0_band_check(p, r.h0_band_witness);
  return r;
}

namespace {

std::string yesno_str(YesNo v) {
  switch (v) {
    case YesNo::yes: return "Yes";
    case YesNo::no: return "No";
    default: return "NotApplicable";
  }
}

std::string silting_str(SiltingVerdict v) {
  switch (v) {
    case SiltingVerdict::yes: return "Yes";
    case SiltingVerdict::no: return "No";
    case SiltingVerdict::conjectural_yes: return "ConjecturalYes";
    default: return "NotApplicable";
  }
}

std::string derived_str(DerivedVerdict v) {
  switch (v) {
    case DerivedVerdict::dynkin_type: return "DynkinType";
    case DerivedVerdict::discrete_lambda: return "DiscreteLambda";
    case DerivedVerdict::no: return "No";
    default: return "NotApplicable";
  }
}

std::string presilting_str(PresiltingVerdict v) {
  switch (v) {
    case PresiltingVerdict::yes: return "Yes";
    case PresiltingVerdict::no: return "No";
    case PresiltingVerdict::needs_handle_windings: return "NeedsHandleWindings";
    default: return "NotApplicable";
  }
}

}  // namespace

std::string decision_to_json(const DecisionReport& r) {
  ojson doc;
  doc["tau_tilting_finite"] = {{"verdict", yesno_str(r.tau_tilting_finite)},
                               {"reason", r.tau_reason}};
  doc["representation_finite"] = {{"verdict", yesno_str(r.representation_finite)}};
  doc["silting_discrete"] = {{"verdict", silting_str(r.silting_discrete)},
                             {"reason", r.silting_reason}};
  doc["derived_discrete"] = {{"verdict", derived_str(r.derived_discrete)},
                             {"reason", r.derived_reason}};
  doc["presilting_partial_silting"] = {{"verdict", presilting_str(r.presilting_partial)},
                                       {"reason", r.presilting_reason}};
  doc["h0_band"] = {{"found", r.h0_band_found}, {"witness", r.h0_band_witness}};
  ojson ev;
  ev["band_witness"] = r.evidence.band_witness;
  if (r.evidence.minimal_band_shape) {
    ev["minimal_band_shape"] = *r.evidence.minimal_band_shape;
    ev["minimal_band"] = r.evidence.minimal_band_tokens;
    ev["u"] = r.evidence.cert_u;
    ev["u_prime"] = r.evidence.cert_uprime;
    ev["z"] = r.evidence.cert_z;
  }
  if (!r.evidence.violating_subset.empty() || r.evidence.subset_m_sum) {
    ev["violating_subset"] = r.evidence.violating_subset;
    if (r.evidence.subset_m_sum) ev["subset_m_sum"] = *r.evidence.subset_m_sum;
  }
  if (r.evidence.orbifold_count) ev["orbifold_count"] = *r.evidence.orbifold_count;
  if (r.evidence.genus) ev["genus"] = *r.evidence.genus;
  doc["evidence"] = ev;
  return doc.dump(2);
}

}  // namespace sg
