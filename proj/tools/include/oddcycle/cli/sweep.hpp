#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "oddcycle/composition.hpp"

namespace oddcycle::cli {

struct SweepRange {
  unsigned max_n = 3;
  unsigned max_N = 5;
  unsigned hilbert_degree = 4;
  bool enable_buchberger = true;
  bool enable_bruteforce_complex = true;
};

/// Throws InvalidInput unless max_N >= max_n >= 1.
void validate(const SweepRange& range);

/// Every k-multiset (descending k) with n <= max_n and N <= max_N, ordered
/// by n and then lexicographically by k.
std::vector<OddCycleComposition> enumerate_compositions(unsigned max_n, unsigned max_N);

enum class Status { pass, fail, skip };

inline constexpr std::array<std::string_view, 11> kCheckNames = {
    "h_agree",   "h_shape", "facets",     "f_vector",      "bruteforce", "initial",
    "kernel",    "buchberger", "hilbert", "decomposition", "classify",
};

struct CheckOutcome {
  Status status = Status::skip;
  std::string detail;
};

struct PointResult {
  std::vector<unsigned> k;
  std::array<CheckOutcome, kCheckNames.size()> checks;

  bool passed() const;
};

struct SweepSummary {
  std::vector<PointResult> points;
  std::size_t failures = 0;
  std::size_t skips = 0;

  bool passed() const { return failures == 0; }
};

/// Runs every invariant on one composition.
PointResult check_composition(const OddCycleComposition& c, const SweepRange& range);

/// Points run independently on `jobs` threads (0 = hardware concurrency);
/// results come back in enumeration order.
SweepSummary run_sweep(const SweepRange& range, unsigned jobs = 0);

}  // namespace oddcycle::cli
