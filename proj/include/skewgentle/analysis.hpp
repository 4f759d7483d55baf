#pragma once

#include <optional>
#include <string>

#include "skewgentle/decide.hpp"

namespace sg {

inline constexpr const char* kVersion = "0.1.0";

struct AnalyzeOptions {
  std::optional<HandleWindings> handle_windings;
  int max_band_period = 0;  // 0: use the letter count
};

// Full pipeline: validation, band search, surface summary and all decision
// procedures, assembled into one JSON document with a stable input digest.
std::string analyze_to_json(const Presentation& p, const AnalyzeOptions& opts = {});

std::string input_digest(const Presentation& p);

}  // namespace sg
