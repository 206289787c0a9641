#pragma once

// Core arithmetic for the sequence defined by
//
//   s(0) = 0,  s(1) = 1,  s(2) = 1,  s(n) = 2*s(n-1) + s(n-3),
//
// giving 0, 1, 1, 2, 5, 11, 24, 53, 117, 258, ...
//
// The companion matrix
//
//       | 0 1 0 |
//   K = | 0 0 1 |      satisfies   K^n * (0,1,1)^T = (s(n), s(n+1), s(n+2))^T
//       | 1 0 2 |
//
// and det(K) = 1, so K is invertible modulo every m >= 1.

#include <array>
#include <cstdint>
#include <optional>

#include "pn/bigint.hpp"

namespace pn::seq {

// Exact term by iteration; grows without bound, hence the big integer.
BigInt pn_term(std::uint64_t n);

// Term modulo m (m >= 1). Iterates for small n and switches to a modular
// matrix power for large n; the full integer is never materialised.
std::uint64_t pn_term_mod(std::uint64_t n, std::uint64_t m);

// Three consecutive residues of the sequence, in order, modulo `modulus`.
// Immutable: step() returns the successor triple.
struct ResidueTriple {
  std::uint64_t a = 0;
  std::uint64_t b = 1;
  std::uint64_t c = 1;
  std::uint64_t modulus = 1;

  // (0, 1, 1) reduced mod m.
  static ResidueTriple seed(std::uint64_t m);

  // (a, b, c) -> (b, c, (2c + a) mod m)
  ResidueTriple step() const;

  bool operator==(const ResidueTriple&) const = default;
};

// 3x3 matrix with exact integer entries and an optional modulus. When the
// modulus is present every operation reduces entries into [0, m).
struct CompanionMatrix {
  std::array<BigInt, 9> e{};
  std::optional<std::uint64_t> modulus;

  static CompanionMatrix identity(std::optional<std::uint64_t> m = {});
  // The matrix K above.
  static CompanionMatrix k(std::optional<std::uint64_t> m = {});

  const BigInt& at(int r, int c) const { return e[static_cast<std::size_t>(3 * r + c)]; }
  BigInt& at(int r, int c) { return e[static_cast<std::size_t>(3 * r + c)]; }

  CompanionMatrix mul(const CompanionMatrix& rhs) const;
  BigInt det() const;
  bool is_identity() const;
  bool operator==(const CompanionMatrix&) const = default;
};

// Square-and-multiply power; a supplied modulus overrides the one carried by
// the matrix. Exact mode is meant for small exponents.
CompanionMatrix mat_pow(const CompanionMatrix& base, std::uint64_t exp,
                        std::optional<std::uint64_t> m = {});

// K^n applied to the seed column: (s(n), s(n+1), s(n+2)), exact or mod m.
std::array<BigInt, 3> pn_via_matrix(std::uint64_t n, std::optional<std::uint64_t> m = {});

}  // namespace pn::seq
