#include "pn/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "pn/groups.hpp"
#include "pn/orbit.hpp"
#include "pn/period.hpp"
#include "pn/sequence.hpp"

namespace pn::verify {

namespace {

using u64 = std::uint64_t;

std::string u2s(u64 v) { return std::to_string(v); }

CheckLine line(std::string suite, std::string name, std::string expected, std::string actual,
               std::string note = {}) {
  CheckLine l;
  l.suite = std::move(suite);
  l.name = std::move(name);
  l.expected = std::move(expected);
  l.actual = std::move(actual);
  l.ok = l.expected == l.actual;
  l.note = std::move(note);
  return l;
}

std::string join(const std::vector<std::string>& parts, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// True iff the residue stream mod m returns to the seed without repeating
// any intermediate window first (pure periodicity).
bool stream_purely_periodic(u64 m, u64& period_out) {
  const seq::ResidueTriple seed = seq::ResidueTriple::seed(m);
  std::unordered_set<u64> seen;
  auto key = [m](const seq::ResidueTriple& t) { return (t.a * m + t.b) * m + t.c; };
  seq::ResidueTriple cur = seed;
  u64 steps = 0;
  const u64 bound = m * m * m;
  do {
    if (!seen.insert(key(cur)).second) return false;
    cur = cur.step();
    if (++steps > bound) return false;
  } while (!(cur == seed));
  period_out = steps;
  return seen.size() == steps;
}

std::string format_matrix_rows(const seq::CompanionMatrix& k) {
  std::ostringstream os;
  for (int r = 0; r < 3; ++r) {
    os << "(" << k.at(r, 0) << "," << k.at(r, 1) << "," << k.at(r, 2) << ")";
  }
  return os.str();
}

void add_lift_checks(std::vector<CheckLine>& out) {
  for (u64 p : {2ull, 3ull, 5ull}) {
    std::vector<std::string> bad;
    unsigned levels = 0;
    u64 pw = p;
    unsigned alpha = 1;
    while (pw <= 100000) {
      auto r = periods::period_prime_power(p, alpha);
      ++levels;
      if (!r.consistent) {
        std::ostringstream os;
        os << p << "^" << alpha << " lifted=" << r.record.period;
        if (r.direct_check) os << " direct=" << *r.direct_check;
        bad.push_back(os.str());
      }
      pw *= p;
      ++alpha;
    }
    out.push_back(line("periods", "lift p=" + u2s(p) + " up to 1e5", "all consistent",
                       bad.empty() ? "all consistent" : u2s(bad.size()) + " inconsistent",
                       bad.empty() ? u2s(levels) + " levels checked" : join(bad, "; ")));
  }
}

std::vector<groups::Q8Automorphism> valid_actions(u64 m) {
  std::vector<groups::Q8Automorphism> out;
  for (auto a : {groups::Q8Automorphism::triv, groups::Q8Automorphism::conj_i,
                 groups::Q8Automorphism::conj_j, groups::Q8Automorphism::conj_k,
                 groups::Q8Automorphism::rot3})
    if ((2 * m) % groups::q8_automorphism_order(a) == 0) out.push_back(a);
  return out;
}

CheckLine prediction_line(const char* suite, const groups::GroupSpec& spec) {
  const auto r = pn::orbit::verify_prediction(spec);
  std::string note = r.note;
  if (!r.agree) {
    if (!note.empty()) note += "; ";
    note += "trace: " + join(r.trace_excerpt);
  }
  return line(suite, spec.text, u2s(r.prediction.length), u2s(r.simulated), note);
}

}  // namespace

std::vector<CheckLine> periods_suite(const SuiteLimits& limits) {
  std::vector<CheckLine> out;

  const std::pair<u64, u64> pinned[] = {{2, 3}, {3, 13}, {4, 6}, {5, 31}, {6, 39}};
  for (auto [m, expected] : pinned)
    out.push_back(line("periods", "per(" + u2s(m) + ")", u2s(expected),
                       u2s(periods::period_direct(m).period)));

  out.push_back(line("periods", "per(6)=lcm(per(2),per(3))",
                     u2s(periods::period_direct(6).period),
                     u2s(periods::lcm_u64(periods::period_direct(2).period,
                                          periods::period_direct(3).period))));

  {
    std::vector<std::string> bad;
    for (u64 m = 2; m <= limits.max_mod; ++m) {
      const u64 direct = periods::period_direct(m).period;
      const u64 crt = periods::period_crt(m).period;
      if (direct != crt)
        bad.push_back("m=" + u2s(m) + " direct=" + u2s(direct) + " crt=" + u2s(crt));
    }
    out.push_back(line("periods", "crt=direct for m in [2," + u2s(limits.max_mod) + "]",
                       "0 mismatches", u2s(bad.size()) + " mismatches", join(bad, "; ")));
  }

  {
    std::vector<std::string> bad;
    for (u64 m = 2; m <= limits.max_mod; ++m) {
      u64 period = 0;
      if (!stream_purely_periodic(m, period)) bad.push_back("m=" + u2s(m));
    }
    out.push_back(line("periods", "pure periodicity for m in [2," + u2s(limits.max_mod) + "]",
                       "0 impure", u2s(bad.size()) + " impure", join(bad, "; ")));
  }

  out.push_back(line("periods", "per(4)=2*per(2)",
                     u2s(2 * periods::period_direct(2).period),
                     u2s(periods::period_prime_power(2, 2).record.period)));

  out.push_back(line("periods", "k^6 rows", "(9,4,20)(20,9,44)(44,20,97)",
                     format_matrix_rows(seq::mat_pow(seq::CompanionMatrix::k(), 6))));

  out.push_back(line("periods", "k^6=I mod 4", "identity",
                     seq::mat_pow(seq::CompanionMatrix::k(4), 6).is_identity() ? "identity"
                                                                               : "not identity"));

  add_lift_checks(out);

  {
    std::vector<std::string> strict;
    std::vector<std::string> nondiv;
    for (u64 m = 2; m <= limits.max_mod; ++m) {
      const u64 per = periods::period_direct(m).period;
      const u64 ord = periods::matrix_order(m);
      if (ord % per != 0)
        nondiv.push_back("m=" + u2s(m) + " per=" + u2s(per) + " ord=" + u2s(ord));
      else if (ord != per)
        strict.push_back("m=" + u2s(m) + " per=" + u2s(per) + " ord=" + u2s(ord));
    }
    std::string note = strict.empty() ? std::string("no strict-divisibility cases")
                                      : "strict cases: " + join(strict, "; ");
    if (!nondiv.empty()) note += "; violations: " + join(nondiv, "; ");
    out.push_back(line("periods", "per divides matrix order for m in [2," +
                                      u2s(limits.max_mod) + "]",
                       "0 violations", u2s(nondiv.size()) + " violations", note));
  }

  return out;
}

std::vector<CheckLine> orbits_suite(const SuiteLimits& limits) {
  std::vector<CheckLine> out;

  {
    const auto g = groups::make_q8();
    const auto rep = pn::orbit::orbit_period(pn::orbit::designated_seed(g));
    out.push_back(line("orbits", "Q8 period", "6", u2s(rep.period),
                       "distinct=" + u2s(rep.distinct) +
                           " sequenceable=" + (rep.sequenceable ? "yes" : "no")));
    std::vector<std::string> prefix(rep.trace.begin(),
                                    rep.trace.begin() +
                                        std::min<std::size_t>(rep.trace.size(), 6));
    out.push_back(line("orbits", "Q8 trace", "i j -1 i -j 1", join(prefix)));
  }

  for (u64 m = 3; m <= limits.max_m; ++m) {
    const auto spec = groups::parse_spec("Q8xZ:" + u2s(2 * m));
    out.push_back(prediction_line("orbits", spec));
  }

  for (u64 m = 3; m <= limits.max_m; ++m)
    for (auto a : valid_actions(m)) {
      const auto spec =
          groups::parse_spec("Q8sd:" + u2s(m) + ":" + groups::to_string(a));
      out.push_back(prediction_line("orbits", spec));
    }

  // With the trivial action the semidirect orbit must equal the product
  // orbit termwise.
  for (u64 m = 3; m <= limits.max_m; ++m) {
    const auto product = groups::parse_group_spec("Q8xZ:" + u2s(2 * m));
    const auto semi = groups::parse_group_spec("Q8sd:" + u2s(m) + ":triv");
    const u64 period =
        pn::orbit::orbit_period(pn::orbit::designated_seed(product)).period;
    pn::orbit::OrbitIterator a(pn::orbit::designated_seed(product));
    pn::orbit::OrbitIterator b(pn::orbit::designated_seed(semi));
    u64 differ_at = 0;
    bool equal = true;
    for (u64 i = 0; i < period + 2; ++i) {
      if (product.format(a.current()) != semi.format(b.current())) {
        equal = false;
        differ_at = i;
        break;
      }
      a.advance();
      b.advance();
    }
    out.push_back(line("orbits", "trace(Q8sd:" + u2s(m) + ":triv)=trace(Q8xZ:" + u2s(2 * m) + ")",
                       "equal for " + u2s(period + 2) + " terms",
                       equal ? "equal for " + u2s(period + 2) + " terms"
                             : "differs at index " + u2s(differ_at)));
  }

  return out;
}

std::vector<CheckLine> lengths_suite(const SuiteLimits& limits) {
  std::vector<CheckLine> out;

  for (u64 n = 2; n <= limits.max_n; ++n)
    for (u64 m = 2; m <= limits.max_n; ++m)
      out.push_back(prediction_line("lengths",
                                    groups::parse_spec("Z:" + u2s(n) + "xZ:" + u2s(m))));

  auto triple = [](const char* prefix, unsigned l, unsigned m, unsigned n) {
    return groups::parse_spec(std::string(prefix) + ":" + std::to_string(l) + "," +
                              std::to_string(m) + "," + std::to_string(n));
  };

  out.push_back(prediction_line("lengths", triple("poly", 2, 2, 2)));
  out.push_back(prediction_line("lengths", triple("bpoly", 2, 2, 2)));
  for (unsigned v = 3; v <= limits.max_n; ++v) {
    out.push_back(prediction_line("lengths", triple("poly", v, 2, 2)));
    out.push_back(prediction_line("lengths", triple("poly", 2, v, 2)));
    out.push_back(prediction_line("lengths", triple("poly", 2, 2, v)));
    out.push_back(prediction_line("lengths", triple("bpoly", v, 2, 2)));
    out.push_back(prediction_line("lengths", triple("bpoly", 2, v, 2)));
    out.push_back(prediction_line("lengths", triple("bpoly", 2, 2, v)));
  }

  return out;
}

std::vector<CheckLine> run_suite(const std::string& suite, const SuiteLimits& limits) {
  std::vector<CheckLine> out;
  if (suite == "periods") {
    out = periods_suite(limits);
  } else if (suite == "orbits") {
    out = orbits_suite(limits);
  } else if (suite == "lengths") {
    out = lengths_suite(limits);
  } else if (suite == "all") {
    out = periods_suite(limits);
    auto orbits = orbits_suite(limits);
    out.insert(out.end(), orbits.begin(), orbits.end());
    auto lengths = lengths_suite(limits);
    out.insert(out.end(), lengths.begin(), lengths.end());
  } else {
    throw std::invalid_argument("unknown suite '" + suite +
                                "'; expected periods, orbits, lengths or all");
  }
  if (limits.inject_mismatch)
    out.push_back(line(suite, "synthetic mismatch", "0", "1",
                       "deliberately failing line injected by --inject-mismatch"));
  return out;
}

}  // namespace pn::verify
