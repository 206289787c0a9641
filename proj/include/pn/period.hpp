#pragma once

// Period of the sequence modulo m: three engines that are expected to agree
// and are cross-checked against each other.
//
//   period_direct      brute-force scan until the seed triple (0,1,1) recurs;
//                      this is the authoritative oracle
//   matrix_order       least e >= 1 with K^e = I (mod m)
//   period_crt         factor m, lift each prime power, combine by lcm
//
// The prime-power lift finds the largest t with period(p^t) = period(p)
// empirically and then multiplies by p per extra level. Disagreements between
// engines are reported, never reconciled silently.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pn::periods {

// All period computations are capped at this modulus.
inline constexpr std::uint64_t kModulusCap = 1'000'000;

enum class Method { direct, matrix_order, crt, lifted };

const char* to_string(Method m);
std::optional<Method> method_from_string(const std::string& s);

struct PeriodRecord {
  std::uint64_t modulus = 0;
  std::uint64_t period = 0;
  Method method = Method::direct;
  double millis = 0.0;

  bool operator==(const PeriodRecord&) const = default;
};

struct PrimeFactor {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
  bool operator==(const PrimeFactor&) const = default;
};

// Ascending prime factorisation by trial division, n >= 2.
std::vector<PrimeFactor> factorize(std::uint64_t n);

// Least n >= 1 with (s(n), s(n+1), s(n+2)) = (0, 1, 1) mod m; m in [2, cap].
PeriodRecord period_direct(std::uint64_t m);

// Least e >= 1 with K^e = I (mod m), by iterated multiplication.
std::uint64_t matrix_order(std::uint64_t m);

struct PrimePowerPeriod {
  PeriodRecord record;  // method is `direct` when measured, `lifted` when extrapolated
  // Largest exponent with period(p^t) = period(p), when the scan found the
  // first level where the period grows; empty when all scanned levels agree.
  std::optional<unsigned> stabilization;
  // Brute-force value for p^alpha when it was computed as a cross-check.
  std::optional<std::uint64_t> direct_check;
  // False when a lifted value contradicts the brute-force value or the
  // period failed to grow by exactly a factor of p at the discovered level.
  bool consistent = true;
};

// Period of the sequence mod p^alpha (p prime, p^alpha <= cap). Lifted values
// are verified against period_direct whenever p^alpha <= verify_cap.
PrimePowerPeriod period_prime_power(std::uint64_t p, unsigned alpha,
                                    std::uint64_t verify_cap = kModulusCap);

// lcm of the prime-power periods of the factorisation of m.
PeriodRecord period_crt(std::uint64_t m);

// Overflow-checked lcm.
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

}  // namespace pn::periods
