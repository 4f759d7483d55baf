#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sg {

// Error codes shared between the C++ core and the C API. The numeric values
// past `ok` line up with the CLI exit codes where that matters (parse/schema
// errors exit 2, internal inconsistencies exit 3).
enum class Errc : int {
  ok = 0,
  validation_rejected = 1,
  parse_error = 2,
  schema_error = 3,
  internal_inconsistency = 4,
  invalid_input = 5,
  unknown_fixture = 6,
  bad_params = 7,
  generation_failure = 8,
  foreign_letter = 9,
  budget_exceeded = 10,
  genus_error = 11,
  unknown_boundary = 12,
  invalid_curve = 13,
  mismatched_presentations = 14,
  special_letter_present = 15,
  graded_input = 16,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) {
  throw Error(code, message);
}

inline void check(bool cond, Errc code, const std::string& message) {
  if (!cond) fail(code, message);
}

// Used for conditions that must hold on validated input; a failure indicates
// a bug in the construction, never a user error.
inline void internal_check(bool cond, const std::string& message) {
  if (!cond) fail(Errc::internal_inconsistency, message);
}

}  // namespace sg
