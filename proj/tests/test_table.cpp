#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "pn/table.hpp"

using pn::periods::build_table;
using pn::periods::load_table;
using pn::periods::Method;
using pn::periods::parse_table;
using pn::periods::PeriodRecord;
using pn::periods::PeriodTable;
using pn::periods::save_table;
using pn::periods::write_table;

namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "pn_table_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("build covers the range with every method") {
  const auto t = build_table(2, 8, {Method::direct, Method::crt}, 1);
  CHECK(t.entries.size() == 7);
  CHECK(t.range_lo == 2);
  CHECK(t.range_hi == 8);
  for (const auto& [m, records] : t.entries) {
    REQUIRE(records.size() == 2);
    CHECK(records[0].method == Method::direct);
    CHECK(records[1].method == Method::crt);
    CHECK(records[0].period == records[1].period);
    CHECK(records[0].modulus == m);
  }
  CHECK(t.find(6)->period == 39);
  CHECK(t.find(8) != nullptr);
  CHECK(t.find(1) == nullptr);
  CHECK(t.find(9) == nullptr);
  CHECK(t.discrepancies().empty());
}

TEST_CASE("empty range yields an empty table") {
  CHECK(build_table(5, 4, {Method::direct}, 1).empty());
}

TEST_CASE("threaded build matches single threaded") {
  const auto seq = build_table(2, 60, {Method::direct}, 1);
  const auto par = build_table(2, 60, {Method::direct}, 4);
  REQUIRE(seq.entries.size() == par.entries.size());
  for (const auto& [m, records] : seq.entries) {
    const auto* r = par.find(m);
    REQUIRE(r != nullptr);
    CHECK(r->period == records.front().period);
  }
}

TEST_CASE("save and load round trip") {
  const auto t = build_table(2, 10, {Method::direct, Method::crt}, 1);
  const auto path = temp_file("roundtrip.table");
  save_table(t, path);
  const auto back = load_table(path);
  CHECK(back.range_lo == t.range_lo);
  CHECK(back.range_hi == t.range_hi);
  REQUIRE(back.entries.size() == t.entries.size());
  for (const auto& [m, records] : t.entries) {
    const auto it = back.entries.find(m);
    REQUIRE(it != back.entries.end());
    REQUIRE(it->second.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i) {
      CHECK(it->second[i].period == records[i].period);
      CHECK(it->second[i].method == records[i].method);
    }
  }
  fs::remove(path);
}

TEST_CASE("missing file loads as empty") {
  CHECK(load_table(temp_file("does_not_exist.table")).empty());
}

TEST_CASE("empty file loads as empty") {
  const auto path = temp_file("empty.table");
  std::ofstream(path).close();
  CHECK(load_table(path).empty());
  fs::remove(path);
}

TEST_CASE("malformed line is named in the error") {
  const auto path = temp_file("broken.table");
  {
    std::ofstream out(path);
    out << "# pn period table\n";
    out << "m=2 period=3 method=direct millis=0.001\n";
    out << "m=4 period=banana method=direct millis=0.001\n";
  }
  try {
    (void)load_table(path);
    FAIL("expected a parse error");
  } catch (const std::runtime_error& e) {
    const std::string msg = e.what();
    CHECK(msg.find("line 3") != std::string::npos);
    CHECK(msg.find(path.filename().string()) != std::string::npos);
  }
  fs::remove(path);
}

TEST_CASE("unknown method is rejected at parse") {
  std::istringstream in("m=2 period=3 method=wizardry millis=0.1\n");
  CHECK_THROWS_AS((void)parse_table(in), std::runtime_error);
}

TEST_CASE("disagreeing records are flagged, not dropped") {
  PeriodTable t;
  t.entries[5] = {PeriodRecord{5, 31, Method::direct, 0.0},
                  PeriodRecord{5, 30, Method::crt, 0.0}};
  t.entries[6] = {PeriodRecord{6, 39, Method::direct, 0.0}};
  const auto bad = t.discrepancies();
  REQUIRE(bad.size() == 1);
  CHECK(bad[0] == 5);
  CHECK(t.entries.at(5).size() == 2);
}

TEST_CASE("write emits one record per line") {
  const auto t = build_table(2, 4, {Method::direct}, 1);
  std::ostringstream out;
  write_table(t, out);
  const auto text = out.str();
  CHECK(text.find("m=2 period=3 method=direct millis=") != std::string::npos);
  CHECK(text.find("m=3 period=13 method=direct millis=") != std::string::npos);
  CHECK(text.find("m=4 period=6 method=direct millis=") != std::string::npos);
  std::istringstream in(text);
  const auto back = parse_table(in);
  CHECK(back.entries.size() == 3);
}
