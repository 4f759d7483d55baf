#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skewgentle/minimality.hpp"
#include "skewgentle/surface.hpp"

namespace sg {

// Verdict vocabulary mirrors exactly what the theorems prove: the
// skew-gentle silting criterion is only known to be necessary, hence the
// three-valued answer.
enum class YesNo { yes, no, not_applicable };
enum class SiltingVerdict { yes, no, conjectural_yes, not_applicable };
enum class DerivedVerdict { dynkin_type, discrete_lambda, no, not_applicable };
enum class PresiltingVerdict { yes, no, needs_handle_windings, not_applicable };

struct DecisionEvidence {
  std::vector<std::string> band_witness;          // tokens of a band's periodic part
  std::optional<std::string> minimal_band_shape;  // shape tag when extraction succeeded
  std::vector<std::string> minimal_band_tokens;
  std::vector<std::string> cert_u, cert_uprime, cert_z;  // decomposition pieces
  std::vector<int> violating_subset;              // boundary indices with m-sum 2
  std::optional<long long> subset_m_sum;
  std::optional<int> orbifold_count;
  std::optional<int> genus;
  std::string note;
};

struct DecisionReport {
  YesNo tau_tilting_finite = YesNo::not_applicable;
  YesNo representation_finite = YesNo::not_applicable;
  SiltingVerdict silting_discrete = SiltingVerdict::not_applicable;
  DerivedVerdict derived_discrete = DerivedVerdict::not_applicable;
  PresiltingVerdict presilting_partial = PresiltingVerdict::not_applicable;
  bool h0_band_found = false;
  std::vector<std::string> h0_band_witness;
  DecisionEvidence evidence;
  std::string tau_reason, silting_reason, derived_reason, presilting_reason;
};

struct HandleWindings {
  long long s = 0;
  long long t = 0;
};

YesNo tau_tilting_finite(const Presentation& p, DecisionReport& out);
SiltingVerdict silting_discrete(const Presentation& p, DecisionReport& out);
DerivedVerdict derived_discrete(const Presentation& p, DecisionReport& out);
PresiltingVerdict presilting_partial_silting(const Presentation& p,
                                             const std::optional<HandleWindings>& hw,
                                             DecisionReport& out);
bool h0_band_check(const Presentation& p, std::vector<std::string>& witness);

DecisionReport decide_all(const Presentation& p,
                          const std::optional<HandleWindings>& hw = std::nullopt);

std::string decision_to_json(const DecisionReport& r);

// Evaluates the equipartition criterion under the reversed orientation
// convention (all boundary windings negated); the verdict must agree.
bool equipartition_violated(const SurfaceModel& m, std::vector<int>* witness,
                            bool flipped_signs = false);

long long gcd_nonneg(long long a, long long b);

}  // namespace sg
