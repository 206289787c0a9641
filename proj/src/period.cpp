#include "pn/period.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

#include "pn/sequence.hpp"

namespace pn::periods {

namespace {

using Clock = std::chrono::steady_clock;

// Elapsed milliseconds quantised through the textual form used by the table
// format, so that a record round-trips exactly.
double elapsed_millis(Clock::time_point start) {
  double raw = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", raw);
  return std::strtod(buf, nullptr);
}

void check_modulus(std::uint64_t m, const char* who) {
  if (m < 2) throw std::invalid_argument(std::string(who) + ": modulus must be >= 2");
  if (m > kModulusCap) throw std::invalid_argument(std::string(who) + ": modulus exceeds cap");
}

// 3x3 modular matrix over uint64, sized for moduli up to the cap.
struct Mod3 {
  std::array<std::uint64_t, 9> e{};

  static Mod3 identity(std::uint64_t m) {
    Mod3 r;
    r.e[0] = r.e[4] = r.e[8] = 1 % m;
    return r;
  }
  static Mod3 k(std::uint64_t m) {
    Mod3 r;
    r.e = {0, 1 % m, 0, 0, 0, 1 % m, 1 % m, 0, 2 % m};
    return r;
  }
  Mod3 mul(const Mod3& rhs, std::uint64_t m) const {
    // Entries stay below the cap, so three products sum without overflow.
    Mod3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        std::uint64_t acc = e[std::size_t(3 * i)] * rhs.e[std::size_t(j)] +
                            e[std::size_t(3 * i + 1)] * rhs.e[std::size_t(3 + j)] +
                            e[std::size_t(3 * i + 2)] * rhs.e[std::size_t(6 + j)];
        r.e[std::size_t(3 * i + j)] = acc % m;
      }
    return r;
  }
  bool operator==(const Mod3&) const = default;
};

}  // namespace

const char* to_string(Method m) {
  switch (m) {
    case Method::direct: return "direct";
    case Method::matrix_order: return "matrix-order";
    case Method::crt: return "crt";
    case Method::lifted: return "lifted";
  }
  return "?";
}

std::optional<Method> method_from_string(const std::string& s) {
  if (s == "direct") return Method::direct;
  if (s == "matrix-order") return Method::matrix_order;
  if (s == "crt") return Method::crt;
  if (s == "lifted") return Method::lifted;
  return std::nullopt;
}

std::vector<PrimeFactor> factorize(std::uint64_t n) {
  if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
  std::vector<PrimeFactor> out;
  auto strip = [&](std::uint64_t p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e) out.push_back({p, e});
  };
  strip(2);
  for (std::uint64_t p = 3; p * p <= n; p += 2) strip(p);
  if (n > 1) out.push_back({n, 1});
  return out;
}

PeriodRecord period_direct(std::uint64_t m) {
  check_modulus(m, "period_direct");
  auto start = Clock::now();
  const std::uint64_t bound = m * m * m;  // number of residue triples
  const seq::ResidueTriple seed = seq::ResidueTriple::seed(m);
  seq::ResidueTriple cur = seed.step();
  std::uint64_t n = 1;
  while (cur != seed) {
    cur = cur.step();
    if (++n > bound) throw std::runtime_error("period_direct: seed did not recur within m^3 steps");
  }
  return {m, n, Method::direct, elapsed_millis(start)};
}

std::uint64_t matrix_order(std::uint64_t m) {
  check_modulus(m, "matrix_order");
  // ord(K) mod m is at most m^3: per prime power it divides
  // p^(alpha-1) * ord(K) mod p, and ord mod p is below p^3.
  const std::uint64_t bound = m * m * m;
  const Mod3 k = Mod3::k(m);
  const Mod3 id = Mod3::identity(m);
  Mod3 cur = k;
  std::uint64_t e = 1;
  while (!(cur == id)) {
    cur = cur.mul(k, m);
    if (++e > bound) throw std::runtime_error("matrix_order: no identity power within m^3 steps");
  }
  return e;
}

PrimePowerPeriod period_prime_power(std::uint64_t p, unsigned alpha, std::uint64_t verify_cap) {
  if (alpha < 1) throw std::invalid_argument("period_prime_power: exponent must be >= 1");
  if (p < 2) throw std::invalid_argument("period_prime_power: p must be a prime >= 2");
  {
    auto f = factorize(p);
    if (f.size() != 1 || f[0].exponent != 1)
      throw std::invalid_argument("period_prime_power: p is not prime");
  }
  std::uint64_t pw = 1;
  for (unsigned i = 0; i < alpha; ++i) {
    if (pw > kModulusCap / p) throw std::invalid_argument("period_prime_power: p^alpha exceeds cap");
    pw *= p;
  }

  auto start = Clock::now();
  PrimePowerPeriod out;
  const std::uint64_t base = period_direct(p).period;

  // Scan levels while the period stays at the base value; each scanned level
  // is measured directly and the modulus stays within p^alpha <= cap.
  std::uint64_t level_mod = p;
  unsigned level = 1;
  std::uint64_t level_period = base;
  while (level < alpha) {
    std::uint64_t next_mod = level_mod * p;
    std::uint64_t next_period = period_direct(next_mod).period;
    if (next_period != base) {
      out.stabilization = level;
      // The law predicts growth by exactly p at the first growing level.
      if (next_period != base * p) out.consistent = false;
      level_period = next_period;
      level = level + 1;
      level_mod = next_mod;
      break;
    }
    level_period = next_period;
    level = level + 1;
    level_mod = next_mod;
  }

  if (level == alpha) {
    // Every level up to alpha was measured directly.
    out.record = {pw, level_period, Method::direct, elapsed_millis(start)};
    return out;
  }

  // Extrapolate: period(p^a) = p^(a-t) * period(p) for a >= t.
  const unsigned t = *out.stabilization;
  std::uint64_t lifted = base;
  for (unsigned i = t; i < alpha; ++i) lifted *= p;
  if (pw <= verify_cap) {
    std::uint64_t direct = period_direct(pw).period;
    out.direct_check = direct;
    if (direct != lifted) out.consistent = false;
  }
  out.record = {pw, lifted, Method::lifted, elapsed_millis(start)};
  return out;
}

PeriodRecord period_crt(std::uint64_t m) {
  check_modulus(m, "period_crt");
  auto start = Clock::now();
  std::uint64_t acc = 1;
  for (const auto& f : factorize(m)) {
    acc = lcm_u64(acc, period_prime_power(f.prime, f.exponent).record.period);
  }
  return {m, acc, Method::crt, elapsed_millis(start)};
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("lcm_u64: zero argument");
  std::uint64_t g = std::gcd(a, b);
  unsigned __int128 l = static_cast<unsigned __int128>(a / g) * b;
  if (l > ~std::uint64_t{0}) throw std::overflow_error("lcm_u64: overflow");
  return static_cast<std::uint64_t>(l);
}

}  // namespace pn::periods
