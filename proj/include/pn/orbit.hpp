#pragma once

// Orbits of the recurrence s_n = s_{n-3} * (s_{n-1})^2 in a finite group.
//
// A seed is a pair (x, y), giving the initial window (x, y, y^2), or a triple
// (x, y, z). The window map (a, b, c) -> (b, c, a*c^2) is a bijection on G^3:
// a is recovered from the image as a = d*(c^2)^-1 with d the new last entry.
// Hence the window stream is purely periodic and the orbit period is the
// first return of the initial window, reached within |G|^3 steps.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pn/groups.hpp"

namespace pn::orbit {

inline constexpr std::uint64_t kTraceCap = 256;

struct OrbitSeed {
  groups::Group group;
  std::vector<groups::Element> generators;  // 2 or 3 elements of group
};

// Validates arity and membership.
OrbitSeed make_seed(const groups::Group& g, std::vector<groups::Element> generators);
// Seeds from the group's designated generators; requires 2 or 3 of them.
OrbitSeed designated_seed(const groups::Group& g);

// Initial window: (x, y, y^2) for a pair, (x, y, z) for a triple.
std::array<groups::Element, 3> initial_window(const OrbitSeed& seed);

// Lazily yields s_0, s_1, s_2, s_3, ... one element per advance().
class OrbitIterator {
 public:
  explicit OrbitIterator(const OrbitSeed& seed);
  const groups::Element& current() const { return window_[0]; }
  std::uint64_t index() const { return index_; }
  void advance();

 private:
  groups::Group group_;
  std::array<groups::Element, 3> window_;
  std::uint64_t index_ = 0;
};

struct OrbitReport {
  std::uint64_t period = 0;
  std::uint64_t distinct = 0;  // distinct elements within one period
  bool sequenceable = false;   // distinct == group order
  std::vector<std::string> trace;  // first min(period+2, trace_cap) elements, formatted
  // Present when requested: whether all windows within one period are
  // pairwise distinct, i.e. the first repeated window is the initial one.
  std::optional<bool> windows_distinct;
};

OrbitReport orbit_period(const OrbitSeed& seed, bool check_window_distinctness = false,
                         std::uint64_t trace_cap = kTraceCap);

bool is_sequenceable(const OrbitSeed& seed);

// True iff the given elements generate the whole group (closure reaches
// every element); refuses groups too large to enumerate.
bool generates(const groups::Group& g, const std::vector<groups::Element>& gens);

// Up to `limit` distinct generating tuples of the given arity, drawn with a
// fixed-seed RNG for reproducibility. `exhaustive` sweeps all tuples in
// enumeration order instead (meant for small orders).
std::vector<std::vector<groups::Element>> generating_tuples(const groups::Group& g,
                                                            std::size_t arity,
                                                            std::size_t limit,
                                                            bool exhaustive = false);

struct LengthPrediction {
  std::string family;       // e.g. "polyhedral"
  std::string params;       // e.g. "(2,5,2)"
  std::uint64_t length = 0;
  std::string law;          // the closed form used, e.g. "3n for odd n"
};

LengthPrediction predict_q8();
LengthPrediction predict_q8_product(std::uint64_t m);  // Q8 x Z_2m, m >= 3
LengthPrediction predict_q8_semidirect(std::uint64_t m, groups::Q8Automorphism a);
LengthPrediction predict_cyclic_product(std::uint64_t n, std::uint64_t m);
LengthPrediction predict_polyhedral(unsigned l, unsigned m, unsigned n);
LengthPrediction predict_binary_polyhedral(unsigned l, unsigned m, unsigned n);

// Dispatches to the prediction matching the spec's shape. Unsupported shapes
// raise std::invalid_argument listing the supported families.
LengthPrediction predict_for_spec(const groups::GroupSpec& spec);

struct VerificationResult {
  std::string group_name;
  LengthPrediction prediction;
  std::uint64_t simulated = 0;
  bool agree = false;
  bool sequenceable = false;
  std::uint64_t distinct = 0;
  std::uint64_t order = 0;
  std::vector<std::string> trace_excerpt;  // populated on disagreement
  std::string note;  // extra observations (e.g. coverage condition for Q8 products)
};

// Realizes the spec, seeds the orbit from the designated generators,
// simulates, and compares against predict_for_spec.
VerificationResult verify_prediction(const groups::GroupSpec& spec);
// Same comparison with a caller-supplied seed over the already-realized
// group (the predictions for Q8 products claim seed independence, so custom
// seeds are compared against the same closed form).
VerificationResult verify_prediction(const groups::GroupSpec& spec, const groups::Group& g,
                                     const OrbitSeed& seed);

}  // namespace pn::orbit
