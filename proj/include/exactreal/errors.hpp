#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace exactreal {

// Base class for every library error.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 0 lies in the closure of an interval handed to iv_recip.
struct ContainsZero : Error {
  using Error::Error;
};

// iv_enlarge called with a non-positive enlargement.
struct NonPositiveEnlargement : Error {
  using Error::Error;
};

// An approximation oracle could not produce the requested precision.
struct OracleFailure : Error {
  using Error::Error;
};

// A sign search exhausted its budget without certifying a sign. Carries the
// source span of the offending subexpression when raised through eval.
struct SignUnknown : Error {
  using Error::Error;
  bool has_span = false;
  std::size_t span_begin = 0;
  std::size_t span_end = 0;
};

// rational_between called on a pair the budget could not separate.
struct NotSeparated : Error {
  using Error::Error;
};

// A desk-scale cap was exceeded (e.g. transcendence checks past the cap).
struct DeskScaleExceeded : Error {
  using Error::Error;
};

// A search (e.g. completeness sift) ran out of budget before certifying.
struct BudgetExhausted : Error {
  using Error::Error;
};

// Consistency of the representation itself was violated: an oracle answer
// exceeded its radius bound or failed to intersect earlier answers. Never
// recoverable; maps to exit code 4 in the calculator.
struct InternalInvariant : Error {
  using Error::Error;
};

}  // namespace exactreal
