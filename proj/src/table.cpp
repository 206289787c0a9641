#include "pn/table.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace pn::periods {

namespace {

std::string now_iso8601() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

PeriodRecord compute(std::uint64_t m, Method method) {
  switch (method) {
    case Method::direct:
      return period_direct(m);
    case Method::matrix_order: {
      auto start = std::chrono::steady_clock::now();
      std::uint64_t e = matrix_order(m);
      double raw =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3f", raw);
      return {m, e, Method::matrix_order, std::strtod(buf, nullptr)};
    }
    case Method::crt:
      return period_crt(m);
    case Method::lifted:
      throw std::invalid_argument("build_table: `lifted` is internal to the crt engine");
  }
  throw std::logic_error("build_table: unknown method");
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string& why) {
  std::ostringstream os;
  os << "period table: line " << line_no << ": " << why;
  throw std::runtime_error(os.str());
}

}  // namespace

std::vector<std::uint64_t> PeriodTable::discrepancies() const {
  std::vector<std::uint64_t> out;
  for (const auto& [m, records] : entries) {
    for (const auto& r : records) {
      if (r.period != records.front().period) {
        out.push_back(m);
        break;
      }
    }
  }
  return out;
}

const PeriodRecord* PeriodTable::find(std::uint64_t m) const {
  auto it = entries.find(m);
  if (it == entries.end() || it->second.empty()) return nullptr;
  return &it->second.front();
}

PeriodTable build_table(std::uint64_t lo, std::uint64_t hi,
                        const std::vector<Method>& methods, unsigned threads) {
  if (lo < 2 || hi > kModulusCap) {
    if (lo <= hi) throw std::invalid_argument("build_table: range must lie within [2, cap]");
  }
  std::vector<Method> order = methods;
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  if (order.empty()) throw std::invalid_argument("build_table: no methods requested");

  PeriodTable table;
  table.created = now_iso8601();
  if (lo > hi) return table;
  table.range_lo = lo;
  table.range_hi = hi;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t count = hi - lo + 1;
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));

  std::mutex mu;
  std::exception_ptr failure;
  std::uint64_t next = lo;
  auto worker = [&] {
    for (;;) {
      std::uint64_t m;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (failure || next > hi) return;
        m = next++;
      }
      try {
        std::vector<PeriodRecord> records;
        records.reserve(order.size());
        for (Method method : order) records.push_back(compute(m, method));
        std::lock_guard<std::mutex> lock(mu);
        table.entries.emplace(m, std::move(records));
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return table;
}

void write_table(const PeriodTable& t, std::ostream& out) {
  out << "# pn period table\n";
  out << "# schema 1\n";
  if (!t.empty() || t.range_lo || t.range_hi)
    out << "# range " << t.range_lo << " " << t.range_hi << "\n";
  if (!t.created.empty()) out << "# created " << t.created << "\n";
  char millis[64];
  for (const auto& [m, records] : t.entries) {
    for (const auto& r : records) {
      std::snprintf(millis, sizeof millis, "%.3f", r.millis);
      out << "m=" << m << " period=" << r.period << " method=" << to_string(r.method)
          << " millis=" << millis << "\n";
    }
  }
}

PeriodTable parse_table(std::istream& in) {
  PeriodTable t;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream meta(line.substr(1));
      std::string word;
      meta >> word;
      if (word == "range") {
        if (!(meta >> t.range_lo >> t.range_hi)) parse_fail(line_no, "bad range header");
      } else if (word == "created") {
        meta >> t.created;
      }
      continue;
    }
    std::istringstream fields(line);
    std::string token;
    std::optional<std::uint64_t> m, period;
    std::optional<Method> method;
    std::optional<double> millis;
    while (fields >> token) {
      auto eq = token.find('=');
      if (eq == std::string::npos) parse_fail(line_no, "expected key=value, got '" + token + "'");
      std::string key = token.substr(0, eq);
      std::string value = token.substr(eq + 1);
      if (value.empty()) parse_fail(line_no, "empty value for '" + key + "'");
      try {
        if (key == "m") {
          m = std::stoull(value);
        } else if (key == "period") {
          period = std::stoull(value);
        } else if (key == "method") {
          method = method_from_string(value);
          if (!method) parse_fail(line_no, "unknown method '" + value + "'");
        } else if (key == "millis") {
          millis = std::stod(value);
        } else {
          parse_fail(line_no, "unknown field '" + key + "'");
        }
      } catch (const std::invalid_argument&) {
        parse_fail(line_no, "bad value for '" + key + "'");
      } catch (const std::out_of_range&) {
        parse_fail(line_no, "value out of range for '" + key + "'");
      }
    }
    if (!m) parse_fail(line_no, "missing m field");
    if (!period) parse_fail(line_no, "missing period field");
    if (!method) parse_fail(line_no, "missing method field");
    if (!millis) parse_fail(line_no, "missing millis field");
    auto& records = t.entries[*m];
    for (const auto& r : records)
      if (r.method == *method) parse_fail(line_no, "duplicate record for this modulus and method");
    records.push_back({*m, *period, *method, *millis});
  }
  for (auto& [m, records] : t.entries) {
    std::sort(records.begin(), records.end(),
              [](const PeriodRecord& a, const PeriodRecord& b) { return a.method < b.method; });
  }
  return t;
}

void save_table(const PeriodTable& t, const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw std::runtime_error("save_table: cannot open " + path.string());
  write_table(t, out);
  if (!out.flush()) throw std::runtime_error("save_table: write failed for " + path.string());
}

PeriodTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return PeriodTable{};  // absent cache reads as empty
  try {
    return parse_table(in);
  } catch (const std::runtime_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

}  // namespace pn::periods
