#include <stdexcept>
#include <string>

#include "doctest.h"
#include "pn/verify.hpp"

using pn::verify::CheckLine;
using pn::verify::run_suite;
using pn::verify::SuiteLimits;

namespace {

std::size_t failures(const std::vector<CheckLine>& lines) {
  std::size_t n = 0;
  for (const auto& l : lines)
    if (!l.ok) ++n;
  return n;
}

const CheckLine* find(const std::vector<CheckLine>& lines, const std::string& name) {
  for (const auto& l : lines)
    if (l.name == name) return &l;
  return nullptr;
}

}  // namespace

TEST_CASE("periods suite is fully green") {
  SuiteLimits limits;
  limits.max_mod = 60;
  const auto lines = run_suite("periods", limits);
  CHECK(lines.size() >= 12);
  CHECK(failures(lines) == 0);
  const auto* p6 = find(lines, "per(6)");
  REQUIRE(p6 != nullptr);
  CHECK(p6->expected == "39");
  CHECK(p6->actual == "39");
  CHECK(p6->suite == "periods");
  CHECK(find(lines, "per(6)=lcm(per(2),per(3))") != nullptr);
  CHECK(find(lines, "k^6 rows") != nullptr);
  CHECK(find(lines, "crt=direct for m in [2,60]") != nullptr);
}

TEST_CASE("orbits suite flags exactly the rotation twists") {
  SuiteLimits limits;
  const auto lines = run_suite("orbits", limits);
  CHECK(lines.size() == 28);
  CHECK(failures(lines) == 2);
  for (const auto& l : lines) {
    if (!l.ok) {
      CHECK(l.name.find("rot3") != std::string::npos);
      CHECK(l.note.find("trace:") != std::string::npos);
    }
  }
  const auto* trace = find(lines, "Q8 trace");
  REQUIRE(trace != nullptr);
  CHECK(trace->ok);
  CHECK(trace->actual == "i j -1 i -j 1");
  const auto* twin = find(lines, "trace(Q8sd:3:triv)=trace(Q8xZ:6)");
  REQUIRE(twin != nullptr);
  CHECK(twin->ok);
}

TEST_CASE("lengths suite flags exactly the slot three columns") {
  SuiteLimits limits;
  const auto lines = run_suite("lengths", limits);
  // 49 cyclic pairs + 2 base triples + 6 columns of 6 entries
  CHECK(lines.size() == 49 + 2 + 36);
  CHECK(failures(lines) == 12);
  for (const auto& l : lines) {
    const bool slot3 = l.name.find(":2,2,") != std::string::npos &&
                       l.name != "poly:2,2,2" && l.name != "bpoly:2,2,2";
    CHECK(l.ok == !slot3);
  }
  const auto* deg = find(lines, "poly:2,2,6");
  REQUIRE(deg != nullptr);
  CHECK(deg->expected == "9");
  CHECK(deg->actual == "3");
}

TEST_CASE("all concatenates the three suites") {
  SuiteLimits limits;
  limits.max_mod = 30;
  const auto all = run_suite("all", limits);
  const auto p = run_suite("periods", limits);
  const auto o = run_suite("orbits", limits);
  const auto l = run_suite("lengths", limits);
  CHECK(all.size() == p.size() + o.size() + l.size());
}

TEST_CASE("inject mismatch appends one failing line") {
  SuiteLimits limits;
  limits.max_mod = 20;
  limits.inject_mismatch = true;
  const auto lines = run_suite("periods", limits);
  REQUIRE(!lines.empty());
  const auto& last = lines.back();
  CHECK(last.name == "synthetic mismatch");
  CHECK_FALSE(last.ok);
  CHECK(failures(lines) == 1);
}

TEST_CASE("unknown suites are refused") {
  CHECK_THROWS_AS((void)run_suite("bogus", SuiteLimits{}), std::invalid_argument);
}

TEST_CASE("tight limits shrink the sweeps") {
  SuiteLimits limits;
  limits.max_n = 3;
  limits.max_m = 3;
  limits.max_mod = 10;
  const auto o = run_suite("orbits", limits);
  // Q8 period + trace, one product, five semidirect actions, one trace twin
  CHECK(o.size() == 9);
  const auto l = run_suite("lengths", limits);
  // 4 cyclic pairs + 2 base triples + 6 column entries at v=3
  CHECK(l.size() == 12);
}
