#pragma once

// Bulk period tables over a modulus range, with a line-oriented text format:
//
//   # pn period table
//   # schema 1
//   # range 2 6
//   # created 2026-08-19T12:00:00Z
//   m=2 period=3 method=direct millis=0.001
//
// One record per line; every record carries exactly the fields m, period,
// method and millis. When several methods were requested for the same
// modulus they all must agree, otherwise the modulus is flagged as a
// discrepancy (and kept, so the disagreement stays visible).

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "pn/period.hpp"

namespace pn::periods {

struct PeriodTable {
  // Records per modulus, in the canonical method order of the enum.
  std::map<std::uint64_t, std::vector<PeriodRecord>> entries;
  std::uint64_t range_lo = 0;
  std::uint64_t range_hi = 0;
  std::string created;  // ISO-8601, informational only

  bool empty() const { return entries.empty(); }
  // Moduli whose records disagree.
  std::vector<std::uint64_t> discrepancies() const;
  // The record for a modulus, preferring the earliest method in enum order.
  const PeriodRecord* find(std::uint64_t m) const;

  bool operator==(const PeriodTable&) const = default;
};

// Compute periods for every m in [lo, hi] with each requested method.
// lo > hi yields an empty table. `threads` = 0 picks the hardware count.
PeriodTable build_table(std::uint64_t lo, std::uint64_t hi,
                        const std::vector<Method>& methods,
                        unsigned threads = 0);

void write_table(const PeriodTable& t, std::ostream& out);
PeriodTable parse_table(std::istream& in);

void save_table(const PeriodTable& t, const std::filesystem::path& path);
// A missing or empty file loads as an empty table; malformed content raises
// a std::runtime_error naming the offending line.
PeriodTable load_table(const std::filesystem::path& path);

}  // namespace pn::periods
