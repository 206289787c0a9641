// Command-line frontend.
//
//   pn term <n> [--mod m]                 sequence terms, exact or modular
//   pn period <m> [--method ...]          period of the sequence mod m
//   pn table --from a --to b [...]        bulk period tables
//   pn orbit --group SPEC [--seed ...]    orbit trace and period in a group
//   pn length --group SPEC [--seed ...]   prediction vs simulation for one group
//   pn verify --suite NAME [...]          named verification suites
//
// Exit codes: 0 success, 1 verification disagreement or engine discrepancy,
// 2 usage or input errors.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pn/groups.hpp"
#include "pn/orbit.hpp"
#include "pn/period.hpp"
#include "pn/sequence.hpp"
#include "pn/table.hpp"
#include "pn/verify.hpp"

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;
using u64 = std::uint64_t;

enum class Format { human, csv, structured };

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::csv;
  if (s == "structured") return Format::structured;
  return Format::human;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

void emit_structured(const char* verb, const ordered_json& results,
                     const std::vector<std::pair<std::string, ordered_json>>& extra = {}) {
  ordered_json top;
  top["schema_version"] = 1;
  top["verb"] = verb;
  for (const auto& [key, value] : extra) top[key] = value;
  top["results"] = results;
  std::cout << top.dump(2) << "\n";
}

// Splits a comma-separated element list, ignoring commas inside parentheses
// (product elements are written "(left,right)").
std::vector<std::string> split_elements(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  for (auto& p : parts) {
    while (!p.empty() && p.front() == ' ') p.erase(p.begin());
    while (!p.empty() && p.back() == ' ') p.pop_back();
  }
  return parts;
}

pn::orbit::OrbitSeed seed_for(const pn::groups::Group& g, const std::string& seed_text) {
  if (seed_text.empty()) return pn::orbit::designated_seed(g);
  std::vector<pn::groups::Element> elems;
  for (const auto& part : split_elements(seed_text)) elems.push_back(g.parse_element(part));
  return pn::orbit::make_seed(g, std::move(elems));
}

std::optional<fs::path> resolve_cache(const std::string& flag_path, bool no_cache) {
  if (no_cache) return std::nullopt;
  if (!flag_path.empty()) return fs::path(flag_path);
  if (const char* env = std::getenv("PN_CACHE"); env && *env) return fs::path(env);
  if (const char* home = std::getenv("HOME"); home && *home)
    return fs::path(home) / ".pn" / "periods.table";
  return std::nullopt;
}

struct TermOptions {
  u64 n = 0;
  std::optional<u64> mod;
};

int run_term(const TermOptions& opt, Format fmt) {
  constexpr u64 kExactCap = 1'000'000;
  std::string value;
  if (opt.mod) {
    value = std::to_string(pn::seq::pn_term_mod(opt.n, *opt.mod));
  } else {
    if (opt.n > kExactCap)
      throw std::invalid_argument("exact terms are limited to n <= 1000000; pass --mod");
    value = pn::seq::pn_term(opt.n).str();
  }
  switch (fmt) {
    case Format::human:
      if (opt.mod)
        std::cout << "PN_" << opt.n << " mod " << *opt.mod << " = " << value << "\n";
      else
        std::cout << "PN_" << opt.n << " = " << value << "\n";
      break;
    case Format::csv:
      std::cout << "n,modulus,value\n"
                << opt.n << "," << (opt.mod ? std::to_string(*opt.mod) : "") << "," << value
                << "\n";
      break;
    case Format::structured: {
      ordered_json row;
      row["n"] = opt.n;
      if (opt.mod) row["modulus"] = *opt.mod;
      else row["modulus"] = nullptr;
      row["value"] = value;
      emit_structured("term", ordered_json::array({row}));
      break;
    }
  }
  return 0;
}

struct PeriodOptions {
  u64 m = 0;
  std::vector<std::string> methods;
  std::string cache_flag;
  bool no_cache = false;
};

int run_period(const PeriodOptions& opt, Format fmt) {
  std::vector<pn::periods::Method> methods;
  for (const auto& s : opt.methods) {
    auto m = pn::periods::method_from_string(s);
    if (!m || *m == pn::periods::Method::lifted)
      throw std::invalid_argument("unknown method '" + s +
                                  "'; expected direct, matrix-order or crt");
    if (std::find(methods.begin(), methods.end(), *m) == methods.end()) methods.push_back(*m);
  }
  if (methods.empty()) methods.push_back(pn::periods::Method::direct);

  const auto cache = resolve_cache(opt.cache_flag, opt.no_cache);
  pn::periods::PeriodTable table;
  if (cache) table = pn::periods::load_table(*cache);

  auto find_record = [&](pn::periods::Method m) -> const pn::periods::PeriodRecord* {
    auto it = table.entries.find(opt.m);
    if (it == table.entries.end()) return nullptr;
    for (const auto& r : it->second)
      if (r.method == m) return &r;
    return nullptr;
  };

  std::vector<pn::periods::Method> missing;
  for (auto m : methods)
    if (!find_record(m)) missing.push_back(m);
  if (!missing.empty()) {
    const auto fresh = pn::periods::build_table(opt.m, opt.m, missing, 1);
    auto& dest = table.entries[opt.m];
    for (const auto& r : fresh.entries.at(opt.m)) dest.push_back(r);
    std::sort(dest.begin(), dest.end(), [](const auto& a, const auto& b) {
      return static_cast<int>(a.method) < static_cast<int>(b.method);
    });
    if (table.range_lo == 0 || opt.m < table.range_lo) table.range_lo = opt.m;
    if (opt.m > table.range_hi) table.range_hi = opt.m;
    if (cache) {
      if (const auto parent = cache->parent_path(); !parent.empty())
        fs::create_directories(parent);
      pn::periods::save_table(table, *cache);
    }
  }

  std::vector<pn::periods::PeriodRecord> records;
  for (auto m : methods) records.push_back(*find_record(m));

  bool discrepancy = false;
  for (const auto& r : records)
    if (r.period != records.front().period) discrepancy = true;

  switch (fmt) {
    case Format::human:
      for (const auto& r : records) {
        std::cout << "m=" << r.modulus << " period=" << r.period;
        if (records.size() > 1) std::cout << " method=" << pn::periods::to_string(r.method);
        std::cout << "\n";
      }
      if (discrepancy) std::cout << "discrepancy: methods disagree for m=" << opt.m << "\n";
      break;
    case Format::csv:
      std::cout << "m,period,method,millis\n";
      for (const auto& r : records)
        std::cout << r.modulus << "," << r.period << "," << pn::periods::to_string(r.method)
                  << ",\n";
      break;
    case Format::structured: {
      ordered_json rows = ordered_json::array();
      for (const auto& r : records) {
        ordered_json row;
        row["m"] = r.modulus;
        row["period"] = r.period;
        row["method"] = pn::periods::to_string(r.method);
        rows.push_back(row);
      }
      std::vector<std::pair<std::string, ordered_json>> extra;
      if (discrepancy) extra.emplace_back("discrepancy", true);
      emit_structured("period", rows, extra);
      break;
    }
  }
  return discrepancy ? 1 : 0;
}

struct TableOptions {
  u64 from = 0;
  u64 to = 0;
  std::vector<std::string> methods;
  std::string out;
  unsigned threads = 0;
};

int run_table(const TableOptions& opt, Format fmt) {
  std::vector<pn::periods::Method> methods;
  for (const auto& s : opt.methods) {
    auto m = pn::periods::method_from_string(s);
    if (!m || *m == pn::periods::Method::lifted)
      throw std::invalid_argument("unknown method '" + s +
                                  "'; expected direct, matrix-order or crt");
    methods.push_back(*m);
  }
  if (methods.empty()) methods.push_back(pn::periods::Method::direct);

  const auto table = pn::periods::build_table(opt.from, opt.to, methods, opt.threads);
  const auto bad = table.discrepancies();

  if (!opt.out.empty()) {
    pn::periods::save_table(table, opt.out);
    std::cout << "wrote " << table.entries.size() << " moduli to " << opt.out << "\n";
  } else {
    switch (fmt) {
      case Format::human:
        pn::periods::write_table(table, std::cout);
        break;
      case Format::csv:
        std::cout << "m,period,method,millis\n";
        for (const auto& [m, records] : table.entries)
          for (const auto& r : records)
            std::cout << m << "," << r.period << "," << pn::periods::to_string(r.method)
                      << ",\n";
        break;
      case Format::structured: {
        ordered_json rows = ordered_json::array();
        for (const auto& [m, records] : table.entries)
          for (const auto& r : records) {
            ordered_json row;
            row["m"] = m;
            row["period"] = r.period;
            row["method"] = pn::periods::to_string(r.method);
            rows.push_back(row);
          }
        std::vector<std::pair<std::string, ordered_json>> extra;
        if (!bad.empty()) extra.emplace_back("discrepancies", ordered_json(bad));
        emit_structured("table", rows, extra);
        break;
      }
    }
  }
  for (auto m : bad) std::cerr << "discrepancy: methods disagree for m=" << m << "\n";
  return bad.empty() ? 0 : 1;
}

struct OrbitOptions {
  std::string group;
  std::string seed;
  u64 limit = 50;
};

int run_orbit(const OrbitOptions& opt, Format fmt) {
  const auto spec = pn::groups::parse_spec(opt.group);
  const auto g = pn::groups::realize(spec);
  const auto seed = seed_for(g, opt.seed);
  const u64 trace_cap = std::max<u64>(pn::orbit::kTraceCap, opt.limit);
  const auto rep = pn::orbit::orbit_period(seed, false, trace_cap);
  const std::size_t shown = std::min<std::size_t>(rep.trace.size(), opt.limit);

  switch (fmt) {
    case Format::human: {
      std::cout << "group=" << g.name() << " order=" << g.order() << "\n";
      std::cout << "period=" << rep.period << " distinct=" << rep.distinct
                << " sequenceable=" << (rep.sequenceable ? "yes" : "no") << "\n";
      std::cout << "trace:";
      for (std::size_t i = 0; i < shown; ++i) std::cout << " " << rep.trace[i];
      if (shown < rep.period) std::cout << " ...";
      std::cout << "\n";
      break;
    }
    case Format::csv:
      std::cout << "index,element\n";
      for (std::size_t i = 0; i < shown; ++i)
        std::cout << i << "," << csv_escape(rep.trace[i]) << "\n";
      break;
    case Format::structured: {
      ordered_json row;
      row["group"] = g.name();
      row["order"] = g.order();
      row["period"] = rep.period;
      row["distinct"] = rep.distinct;
      row["sequenceable"] = rep.sequenceable;
      ordered_json trace = ordered_json::array();
      for (std::size_t i = 0; i < shown; ++i) trace.push_back(rep.trace[i]);
      row["trace"] = trace;
      emit_structured("orbit", ordered_json::array({row}));
      break;
    }
  }
  return 0;
}

struct LengthOptions {
  std::string group;
  std::string seed;
};

int run_length(const LengthOptions& opt, Format fmt) {
  const auto spec = pn::groups::parse_spec(opt.group);
  const auto g = pn::groups::realize(spec);
  const auto seed = seed_for(g, opt.seed);
  const auto r = pn::orbit::verify_prediction(spec, g, seed);

  switch (fmt) {
    case Format::human:
      std::cout << "predicted=" << r.prediction.length << " simulated=" << r.simulated
                << " agree=" << (r.agree ? "yes" : "no") << "\n";
      if (!r.note.empty()) std::cout << "note: " << r.note << "\n";
      if (!r.agree && !r.trace_excerpt.empty()) {
        std::cout << "trace:";
        for (const auto& t : r.trace_excerpt) std::cout << " " << t;
        std::cout << "\n";
      }
      break;
    case Format::csv:
      std::cout << "group,predicted,simulated,agree,note\n";
      std::cout << csv_escape(r.group_name) << "," << r.prediction.length << "," << r.simulated
                << "," << (r.agree ? "yes" : "no") << "," << csv_escape(r.note) << "\n";
      break;
    case Format::structured: {
      ordered_json row;
      row["group"] = r.group_name;
      row["family"] = r.prediction.family;
      row["params"] = r.prediction.params;
      row["law"] = r.prediction.law;
      row["predicted"] = r.prediction.length;
      row["simulated"] = r.simulated;
      row["agree"] = r.agree;
      row["sequenceable"] = r.sequenceable;
      row["distinct"] = r.distinct;
      row["order"] = r.order;
      row["note"] = r.note;
      if (!r.agree) {
        ordered_json trace = ordered_json::array();
        for (const auto& t : r.trace_excerpt) trace.push_back(t);
        row["trace_excerpt"] = trace;
      }
      emit_structured("length", ordered_json::array({row}));
      break;
    }
  }
  return r.agree ? 0 : 1;
}

struct VerifyOptions {
  std::string suite;
  pn::verify::SuiteLimits limits;
};

int run_verify(const VerifyOptions& opt, Format fmt) {
  const auto lines = pn::verify::run_suite(opt.suite, opt.limits);
  std::size_t failed = 0;
  for (const auto& l : lines)
    if (!l.ok) ++failed;

  switch (fmt) {
    case Format::human:
      for (const auto& l : lines) {
        std::cout << "suite=" << l.suite << " check=\"" << l.name << "\" expected=\""
                  << l.expected << "\" actual=\"" << l.actual << "\" agree="
                  << (l.ok ? "yes" : "no");
        if (!l.note.empty()) std::cout << " note=\"" << l.note << "\"";
        std::cout << "\n";
      }
      std::cout << "checks=" << lines.size() << " pass=" << (lines.size() - failed)
                << " fail=" << failed << "\n";
      break;
    case Format::csv:
      std::cout << "suite,check,expected,actual,ok,note\n";
      for (const auto& l : lines)
        std::cout << l.suite << "," << csv_escape(l.name) << "," << csv_escape(l.expected)
                  << "," << csv_escape(l.actual) << "," << (l.ok ? "yes" : "no") << ","
                  << csv_escape(l.note) << "\n";
      break;
    case Format::structured: {
      ordered_json rows = ordered_json::array();
      for (const auto& l : lines) {
        ordered_json row;
        row["suite"] = l.suite;
        row["check"] = l.name;
        row["expected"] = l.expected;
        row["actual"] = l.actual;
        row["ok"] = l.ok;
        row["note"] = l.note;
        rows.push_back(row);
      }
      emit_structured("verify", rows);
      break;
    }
  }
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pell-Narayana sequence, periods and group orbits"};
  app.require_subcommand(1);

  std::string format = "human";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"human", "csv", "structured"}));
  };

  TermOptions term_opt;
  u64 term_mod = 0;
  auto* term = app.add_subcommand("term", "Print a sequence term");
  term->add_option("n", term_opt.n, "Term index")->required();
  auto* mod_opt = term->add_option("--mod", term_mod, "Reduce modulo this value");
  add_format(term);

  PeriodOptions period_opt;
  auto* period = app.add_subcommand("period", "Period of the sequence modulo m");
  period->add_option("m", period_opt.m, "Modulus")->required();
  period->add_option("--method", period_opt.methods, "Engine (repeatable)")
      ->check(CLI::IsMember({"direct", "matrix-order", "crt"}));
  period->add_option("--cache", period_opt.cache_flag, "Cache file path");
  period->add_flag("--no-cache", period_opt.no_cache, "Disable the period cache");
  add_format(period);

  TableOptions table_opt;
  auto* table = app.add_subcommand("table", "Bulk period table over a modulus range");
  table->add_option("--from", table_opt.from, "First modulus")->required();
  table->add_option("--to", table_opt.to, "Last modulus")->required();
  table->add_option("--method", table_opt.methods, "Engine (repeatable)")
      ->check(CLI::IsMember({"direct", "matrix-order", "crt"}));
  table->add_option("--out", table_opt.out, "Write the native table format to this file");
  table->add_option("--threads", table_opt.threads, "Worker threads (0 = hardware)");
  add_format(table);

  OrbitOptions orbit_opt;
  auto* orbit = app.add_subcommand("orbit", "Orbit trace and period in a finite group");
  orbit->add_option("--group", orbit_opt.group, "Group spec, e.g. Q8, Z:3xZ:4, poly:2,5,2")
      ->required();
  orbit->add_option("--seed", orbit_opt.seed,
                    "Comma-separated 2- or 3-element seed (defaults to the designated "
                    "generators; aliases e, x, y, z)");
  orbit->add_option("--limit", orbit_opt.limit, "Trace prefix cap (default 50)");
  add_format(orbit);

  LengthOptions length_opt;
  auto* length = app.add_subcommand("length", "Compare predicted and simulated orbit period");
  length->add_option("--group", length_opt.group, "Group spec")->required();
  length->add_option("--seed", length_opt.seed, "Seed override (defaults to designated)");
  add_format(length);

  VerifyOptions verify_opt;
  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  verify->add_option("--suite", verify_opt.suite, "periods | orbits | lengths | all")
      ->required()
      ->check(CLI::IsMember({"periods", "orbits", "lengths", "all"}));
  verify->add_option("--max-mod", verify_opt.limits.max_mod, "Modulus bound (default 100)");
  verify->add_option("--max-n", verify_opt.limits.max_n,
                     "Cyclic product and presentation bound (default 8)");
  verify->add_option("--max-m", verify_opt.limits.max_m, "Q8 product bound (default 6)");
  verify->add_flag("--inject-mismatch", verify_opt.limits.inject_mismatch,
                   "Append a deliberately failing check (exit-code testing)");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Format fmt = parse_format(format);
    if (term->parsed()) {
      if (*mod_opt) term_opt.mod = term_mod;
      return run_term(term_opt, fmt);
    }
    if (period->parsed()) return run_period(period_opt, fmt);
    if (table->parsed()) return run_table(table_opt, fmt);
    if (orbit->parsed()) return run_orbit(orbit_opt, fmt);
    if (length->parsed()) return run_length(length_opt, fmt);
    if (verify->parsed()) return run_verify(verify_opt, fmt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
