#include "pn/orbit.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pn/period.hpp"

namespace pn::orbit {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

// Per(m) with the degenerate modulus handled locally: mod 1 every stream is
// constant zero, so the period is 1.
u64 per(u64 m) { return m == 1 ? 1 : periods::period_direct(m).period; }

std::vector<u32> window_key(const std::array<groups::Element, 3>& w) {
  std::vector<u32> key;
  for (const auto& e : w) key.insert(key.end(), e.coords().begin(), e.coords().end());
  return key;
}

}  // namespace

OrbitSeed make_seed(const groups::Group& g, std::vector<groups::Element> generators) {
  if (generators.size() != 2 && generators.size() != 3)
    throw std::invalid_argument("an orbit seed takes 2 or 3 generators, got " +
                                std::to_string(generators.size()));
  for (const auto& e : generators)
    if (!g.contains(e))
      throw std::invalid_argument("orbit seed element does not belong to " + g.name());
  return OrbitSeed{g, std::move(generators)};
}

OrbitSeed designated_seed(const groups::Group& g) {
  auto gens = g.generators();
  if (gens.size() != 2 && gens.size() != 3)
    throw std::invalid_argument(g.name() + " has " + std::to_string(gens.size()) +
                                " designated generators; pass an explicit 2- or 3-element seed");
  return OrbitSeed{g, std::move(gens)};
}

std::array<groups::Element, 3> initial_window(const OrbitSeed& seed) {
  const auto& gen = seed.generators;
  if (gen.size() == 2) return {gen[0], gen[1], seed.group.mul(gen[1], gen[1])};
  return {gen[0], gen[1], gen[2]};
}

OrbitIterator::OrbitIterator(const OrbitSeed& seed)
    : group_(seed.group), window_(initial_window(seed)) {}

void OrbitIterator::advance() {
  auto next = group_.mul(window_[0], group_.mul(window_[2], window_[2]));
  window_ = {window_[1], window_[2], std::move(next)};
  ++index_;
}

OrbitReport orbit_period(const OrbitSeed& seed, bool check_window_distinctness,
                         std::uint64_t trace_cap) {
  const groups::Group& g = seed.group;
  const auto w0 = initial_window(seed);
  auto w = w0;
  const u64 order = g.order();
  const u64 bound = order * order * order + 3;  // orders are capped at 10^6

  std::set<std::vector<u32>> elems;
  std::set<std::vector<u32>> windows;
  std::vector<groups::Element> prefix;
  bool windows_ok = true;
  u64 steps = 0;
  do {
    if (check_window_distinctness && !windows.insert(window_key(w)).second) windows_ok = false;
    elems.insert(w[0].coords());
    if (prefix.size() < trace_cap) prefix.push_back(w[0]);
    auto next = g.mul(w[0], g.mul(w[2], w[2]));
    w = {w[1], w[2], std::move(next)};
    if (++steps > bound)
      throw std::logic_error("orbit period search exceeded |G|^3 + 3 steps in " + g.name());
  } while (!(w[0] == w0[0] && w[1] == w0[1] && w[2] == w0[2]));

  OrbitReport rep;
  rep.period = steps;
  rep.distinct = elems.size();
  rep.sequenceable = rep.distinct == order;
  const u64 want = std::min<u64>(steps + 2, trace_cap);
  for (std::size_t i = 0; prefix.size() < want && i < 2; ++i) prefix.push_back(w0[i]);
  rep.trace.reserve(prefix.size());
  for (const auto& e : prefix) rep.trace.push_back(g.format(e));
  if (check_window_distinctness) rep.windows_distinct = windows_ok;
  return rep;
}

bool is_sequenceable(const OrbitSeed& seed) { return orbit_period(seed).sequenceable; }

bool generates(const groups::Group& g, const std::vector<groups::Element>& gens) {
  for (const auto& e : gens)
    if (!g.contains(e))
      throw std::invalid_argument("generator does not belong to " + g.name());
  std::set<std::vector<u32>> visited;
  std::vector<groups::Element> frontier{g.identity()};
  visited.insert(g.identity().coords());
  while (!frontier.empty()) {
    std::vector<groups::Element> next;
    for (const auto& a : frontier)
      for (const auto& s : gens) {
        auto b = g.mul(a, s);
        if (visited.insert(b.coords()).second) next.push_back(std::move(b));
      }
    frontier = std::move(next);
  }
  return visited.size() == g.order();
}

std::vector<std::vector<groups::Element>> generating_tuples(const groups::Group& g,
                                                            std::size_t arity,
                                                            std::size_t limit,
                                                            bool exhaustive) {
  if (arity != 2 && arity != 3)
    throw std::invalid_argument("generating tuples have arity 2 or 3");
  std::vector<std::vector<groups::Element>> out;
  if (limit == 0) return out;
  const auto all = g.elements();

  if (exhaustive) {
    if (g.order() > 64)
      throw std::invalid_argument("exhaustive tuple sweep is limited to orders <= 64");
    std::vector<std::size_t> idx(arity, 0);
    auto bump = [&]() -> bool {
      for (std::size_t slot = arity; slot-- > 0;) {
        if (++idx[slot] < all.size()) return true;
        idx[slot] = 0;
      }
      return false;
    };
    do {
      std::vector<groups::Element> tuple;
      tuple.reserve(arity);
      for (auto i : idx) tuple.push_back(all[i]);
      if (generates(g, tuple)) {
        out.push_back(std::move(tuple));
        if (out.size() == limit) break;
      }
    } while (bump());
    return out;
  }

  std::mt19937 rng(0x0ddba11u + static_cast<u32>(arity));
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  std::set<std::vector<u32>> seen;
  const std::size_t attempt_cap = 400 * limit;
  for (std::size_t attempt = 0; attempt < attempt_cap && out.size() < limit; ++attempt) {
    std::vector<groups::Element> tuple;
    std::vector<u32> key;
    tuple.reserve(arity);
    for (std::size_t i = 0; i < arity; ++i) {
      const auto& e = all[pick(rng)];
      tuple.push_back(e);
      key.insert(key.end(), e.coords().begin(), e.coords().end());
    }
    if (!seen.insert(std::move(key)).second) continue;
    if (generates(g, tuple)) out.push_back(std::move(tuple));
  }
  return out;
}

LengthPrediction predict_q8() { return {"q8", "Q8", 6, "constant 6"}; }

LengthPrediction predict_q8_product(std::uint64_t m) {
  if (m < 3) throw std::invalid_argument("q8-product prediction requires m >= 3");
  LengthPrediction p;
  p.family = "q8-product";
  p.params = "m=" + std::to_string(m);
  p.length = periods::lcm_u64(6, per(2 * m));
  p.law = "lcm(6, per(2m))";
  return p;
}

LengthPrediction predict_q8_semidirect(std::uint64_t m, groups::Q8Automorphism a) {
  if (m < 3) throw std::invalid_argument("q8-semidirect prediction requires m >= 3");
  LengthPrediction p;
  p.family = "q8-semidirect";
  p.params = "m=" + std::to_string(m) + " action=" + groups::to_string(a);
  p.length = periods::lcm_u64(6, per(2 * m));
  p.law = "lcm(6, per(2m)), independent of the action";
  return p;
}

LengthPrediction predict_cyclic_product(std::uint64_t n, std::uint64_t m) {
  LengthPrediction p;
  p.family = "cyclic-product";
  p.params = "n=" + std::to_string(n) + " m=" + std::to_string(m);
  p.length = periods::lcm_u64(per(n), per(m));
  p.law = "lcm(per(n), per(m))";
  return p;
}

namespace {

// The catalog realizes triples with at most one entry above 2; that entry
// (or 2 when all are 2) drives the parity formula.
unsigned parity_slot(unsigned l, unsigned m, unsigned n, const char* who) {
  if ((l > 2) + (m > 2) + (n > 2) > 1)
    throw std::invalid_argument(std::string(who) +
                                ": no prediction when several entries exceed 2");
  if (l < 2 || m < 2 || n < 2)
    throw std::invalid_argument(std::string(who) + ": entries must be >= 2");
  return std::max({l, m, n});
}

std::string triple_params(unsigned l, unsigned m, unsigned n) {
  std::ostringstream os;
  os << "(" << l << "," << m << "," << n << ")";
  return os.str();
}

}  // namespace

LengthPrediction predict_polyhedral(unsigned l, unsigned m, unsigned n) {
  const unsigned v = parity_slot(l, m, n, "polyhedral prediction");
  LengthPrediction p;
  p.family = "polyhedral";
  p.params = triple_params(l, m, n);
  p.length = v % 2 == 0 ? 3ull * v / 2 : 3ull * v;
  p.law = "3n/2 for even n, 3n for odd n (n the entry above 2, or 2)";
  return p;
}

LengthPrediction predict_binary_polyhedral(unsigned l, unsigned m, unsigned n) {
  const unsigned v = parity_slot(l, m, n, "binary-polyhedral prediction");
  LengthPrediction p;
  p.family = "binary-polyhedral";
  p.params = triple_params(l, m, n);
  p.length = v % 2 == 0 ? 3ull * v : 6ull * v;
  p.law = "3n for even n, 6n for odd n (n the entry above 2, or 2)";
  return p;
}

namespace {

constexpr const char* kSupportedFamilies =
    "supported families: Q8, Q8xZ:<2m> with m >= 3, Q8sd:<m>:<aut> with m >= 3, "
    "Z:<n>xZ:<m>, D:<n>, Dic:<n>, poly:<l>,<m>,<n>, bpoly:<l>,<m>,<n>";

}  // namespace

LengthPrediction predict_for_spec(const groups::GroupSpec& spec) {
  using Kind = groups::GroupSpec::Kind;
  switch (spec.kind) {
    case Kind::q8:
      return predict_q8();
    case Kind::semidirect:
      return predict_q8_semidirect(spec.m, spec.aut);
    case Kind::poly:
      return predict_polyhedral(spec.pl, spec.pm, spec.pn);
    case Kind::bpoly:
      return predict_binary_polyhedral(spec.pl, spec.pm, spec.pn);
    case Kind::dihedral: {
      if (spec.n < 2) break;
      auto p = predict_polyhedral(static_cast<unsigned>(spec.n), 2, 2);
      p.family = "dihedral";
      p.params = "n=" + std::to_string(spec.n);
      return p;
    }
    case Kind::dicyclic: {
      if (spec.n < 2) break;
      auto p = predict_binary_polyhedral(static_cast<unsigned>(spec.n), 2, 2);
      p.family = "dicyclic";
      p.params = "n=" + std::to_string(spec.n);
      return p;
    }
    case Kind::product: {
      const auto& f = spec.factors;
      if (f.size() == 2 && f[0].kind == Kind::cyclic && f[1].kind == Kind::cyclic)
        return predict_cyclic_product(f[0].n, f[1].n);
      if (f.size() == 2 && f[0].kind == Kind::q8 && f[1].kind == Kind::cyclic &&
          f[1].n % 2 == 0 && f[1].n >= 6)
        return predict_q8_product(f[1].n / 2);
      break;
    }
    case Kind::cyclic:
      break;
  }
  throw std::invalid_argument("no length prediction for '" + spec.text + "'; " +
                              kSupportedFamilies);
}

VerificationResult verify_prediction(const groups::GroupSpec& spec) {
  const groups::Group g = groups::realize(spec);
  return verify_prediction(spec, g, designated_seed(g));
}

VerificationResult verify_prediction(const groups::GroupSpec& spec, const groups::Group& g,
                                     const OrbitSeed& seed) {
  VerificationResult r;
  r.group_name = g.name();
  r.prediction = predict_for_spec(spec);
  const OrbitReport rep = orbit_period(seed);
  r.simulated = rep.period;
  r.agree = r.prediction.length == rep.period;
  r.sequenceable = rep.sequenceable;
  r.distinct = rep.distinct;
  r.order = g.order();
  if (!r.agree) {
    const std::size_t cap = std::min<std::size_t>(rep.trace.size(), 32);
    r.trace_excerpt.assign(rep.trace.begin(), rep.trace.begin() + cap);
  }
  if (r.prediction.family == "q8-product" || r.prediction.family == "q8-semidirect") {
    using Kind = groups::GroupSpec::Kind;
    const u64 two_m =
        spec.kind == Kind::semidirect ? 2 * spec.m : spec.factors.at(1).n;
    const u64 p = per(two_m);
    std::ostringstream os;
    os << "coverage condition [per(2m) <= 2m and 6 | per(2m)]: per(" << two_m << ")=" << p
       << ", " << ((p <= two_m && p % 6 == 0) ? "holds" : "fails");
    r.note = os.str();
  }
  return r;
}

}  // namespace pn::orbit
