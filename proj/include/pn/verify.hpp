#pragma once

// Named verification suites comparing closed-form claims against the brute
// force engines. Every check yields one line with an expected and an actual
// value; disagreement is reported, never reconciled.
//
//   periods   period engine cross-checks: pinned values, lcm law, prime-power
//             lifting, matrix order divisibility, pure periodicity
//   orbits    Q8 and the Q8 x Z_2m / Q8 x| Z_2m families
//   lengths   cyclic products and the polyhedral / binary polyhedral columns

#include <cstdint>
#include <string>
#include <vector>

namespace pn::verify {

struct CheckLine {
  std::string suite;
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
  std::string note;
};

struct SuiteLimits {
  std::uint64_t max_mod = 100;  // periods: crt sweep, pure periodicity, matrix order
  unsigned max_n = 8;           // lengths: cyclic product bound and presentation entry bound
  unsigned max_m = 6;           // orbits: Q8 x Z_2m / semidirect parameter bound
  // Appends one deliberately failing synthetic line, for exit-code testing.
  bool inject_mismatch = false;
};

std::vector<CheckLine> periods_suite(const SuiteLimits& limits);
std::vector<CheckLine> orbits_suite(const SuiteLimits& limits);
std::vector<CheckLine> lengths_suite(const SuiteLimits& limits);

// suite: periods | orbits | lengths | all. Unknown names raise
// std::invalid_argument.
std::vector<CheckLine> run_suite(const std::string& suite, const SuiteLimits& limits);

}  // namespace pn::verify
