#pragma once

#include <optional>

#include "skewgentle/words.hpp"

namespace sg {

enum class MinimalShape {
  asym_type_a,         // periodic part visits each vertex once
  asym_barbell,        // u z u' z^-1
  asym_special_barbell,  // eps* z u z^-1
  sym_dumbbell,        // eps* z eta* z^-1
};

struct MinimalBandCertificate {
  Band band;
  MinimalShape shape;
  std::vector<int> u;       // letters; empty when unused
  std::vector<int> uprime;
  std::vector<int> z;
  int eps_letter = -1;
  int eta_letter = -1;
};

// Pure pattern verification of Definitions 3.1 / 3.2 over all rotations of
// the periodic part. Shapes are tried in the fixed order type A < barbell <
// special barbell < dumbbell.
std::optional<MinimalBandCertificate> is_minimal_band(const LetterTable& t, const Band& b);

// Returns a certificate iff the presentation admits a band: a witness band
// is shrunk by the excision surgeries of the existence proof, and when those
// stall an exhaustive search over the four shapes completes the job.
std::optional<MinimalBandCertificate> find_minimal_band(const LetterTable& t);

std::string shape_name(MinimalShape s);

}  // namespace sg
