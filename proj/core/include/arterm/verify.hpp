#pragma once

// Index-by-index comparison of a term against a recurrence oracle.

#include "arterm/algebra.hpp"
#include "arterm/catalog.hpp"
#include "arterm/recurrence.hpp"
#include "arterm/term.hpp"

#include <nlohmann/json.hpp>

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arterm {

struct FailureRecord {
  std::size_t n = 0;
  BigInt expected;
  /// Absent when evaluation itself failed (see VerificationReport::error).
  std::optional<BigInt> got;
};

struct VerificationReport {
  std::size_t lo = 0;
  std::size_t hi = 0;
  std::size_t checked = 0;
  std::optional<FailureRecord> first_failure;
  std::chrono::nanoseconds elapsed{0};
  std::size_t peak_bits = 0;
  std::string error;

  bool ok() const noexcept { return !first_failure; }
};

/// Compares evaluate(term, n) - c^(n+1) with oracle[n] for lo <= n <= hi,
/// stopping at the first mismatch. Indices are spread over `threads`
/// workers; the report is the same for every thread count. Throws
/// DomainError when the oracle does not cover the range.
VerificationReport verify_term(const SequenceWindow& oracle, const Term& term, const BigInt& c, std::size_t lo,
                               std::size_t hi, unsigned threads = 1, EvalOptions options = {});

/// Every fixture's reference term on [valid_from, horizon].
std::vector<std::pair<std::string, VerificationReport>> verify_fixtures(const std::vector<Fixture>& list,
                                                                        std::size_t horizon, unsigned threads = 1);

std::vector<std::pair<std::string, VerificationReport>> verify_catalog(std::size_t horizon, unsigned threads = 1);

/// {"range":[lo,hi],"ok":..,"first_failure":{..}|null,"peak_bits":..,
///  "checked":..,"elapsed_ms":..} plus "error" when evaluation aborted.
nlohmann::json to_json(const VerificationReport& report);

/// One line: "ok [lo, hi] checked=N peak_bits=B" or the failure.
std::string describe(const VerificationReport& report);

}  // namespace arterm
