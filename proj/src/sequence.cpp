#include "pn/sequence.hpp"

#include <stdexcept>

namespace pn::seq {

namespace {

// Threshold below which a modular term is cheaper by plain iteration than by
// a logarithmic matrix power.
constexpr std::uint64_t kIterationCutoff = 1 << 14;

}  // namespace

BigInt pn_term(std::uint64_t n) {
  if (n == 0) return 0;
  if (n <= 2) return 1;
  BigInt a = 0, b = 1, c = 1;
  for (std::uint64_t i = 3; i <= n; ++i) {
    BigInt next = 2 * c + a;
    a = b;
    b = c;
    c = next;
  }
  return c;
}

std::uint64_t pn_term_mod(std::uint64_t n, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("pn_term_mod: modulus must be >= 1");
  if (m == 1) return 0;
  if (n <= kIterationCutoff) {
    ResidueTriple t = ResidueTriple::seed(m);
    for (std::uint64_t i = 0; i < n; ++i) t = t.step();
    return t.a;
  }
  return static_cast<std::uint64_t>(pn_via_matrix(n, m)[0]);
}

ResidueTriple ResidueTriple::seed(std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("ResidueTriple: modulus must be >= 1");
  return ResidueTriple{0, 1 % m, 1 % m, m};
}

ResidueTriple ResidueTriple::step() const {
  std::uint64_t next;
  if (modulus < (std::uint64_t{1} << 62)) {
    // 2c + a < 3m, so at most two subtractions bring it back into range.
    std::uint64_t s = 2 * c + a;
    if (s >= modulus) s -= modulus;
    if (s >= modulus) s -= modulus;
    next = s;
  } else {
    next = static_cast<std::uint64_t>(
        ((static_cast<unsigned __int128>(c) << 1) + a) % modulus);
  }
  return ResidueTriple{b, c, next, modulus};
}

CompanionMatrix CompanionMatrix::identity(std::optional<std::uint64_t> m) {
  CompanionMatrix r;
  r.modulus = m;
  for (int i = 0; i < 3; ++i) r.at(i, i) = (m && *m == 1) ? 0 : 1;
  return r;
}

CompanionMatrix CompanionMatrix::k(std::optional<std::uint64_t> m) {
  CompanionMatrix r;
  r.modulus = m;
  r.e = {0, 1, 0,
         0, 0, 1,
         1, 0, 2};
  if (m) {
    for (auto& v : r.e) v %= *m;
  }
  return r;
}

CompanionMatrix CompanionMatrix::mul(const CompanionMatrix& rhs) const {
  if (modulus != rhs.modulus)
    throw std::invalid_argument("CompanionMatrix::mul: mismatched moduli");
  CompanionMatrix r;
  r.modulus = modulus;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      BigInt acc = 0;
      for (int k = 0; k < 3; ++k) acc += at(i, k) * rhs.at(k, j);
      if (modulus) acc %= *modulus;
      r.at(i, j) = acc;
    }
  }
  return r;
}

BigInt CompanionMatrix::det() const {
  const auto& m = *this;
  BigInt d = m.at(0, 0) * (m.at(1, 1) * m.at(2, 2) - m.at(1, 2) * m.at(2, 1)) -
             m.at(0, 1) * (m.at(1, 0) * m.at(2, 2) - m.at(1, 2) * m.at(2, 0)) +
             m.at(0, 2) * (m.at(1, 0) * m.at(2, 1) - m.at(1, 1) * m.at(2, 0));
  if (modulus) {
    d %= *modulus;
    if (d < 0) d += *modulus;
  }
  return d;
}

bool CompanionMatrix::is_identity() const {
  return *this == identity(modulus);
}

CompanionMatrix mat_pow(const CompanionMatrix& base, std::uint64_t exp,
                        std::optional<std::uint64_t> m) {
  CompanionMatrix b = base;
  if (m) {
    b.modulus = m;
    for (auto& v : b.e) {
      v %= *m;
      if (v < 0) v += *m;
    }
  }
  CompanionMatrix result = CompanionMatrix::identity(b.modulus);
  while (exp > 0) {
    if (exp & 1) result = result.mul(b);
    b = b.mul(b);
    exp >>= 1;
  }
  return result;
}

std::array<BigInt, 3> pn_via_matrix(std::uint64_t n, std::optional<std::uint64_t> m) {
  CompanionMatrix p = mat_pow(CompanionMatrix::k(m), n, m);
  std::array<BigInt, 3> seed = {0, 1, 1};
  std::array<BigInt, 3> out = {0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    BigInt acc = 0;
    for (int j = 0; j < 3; ++j) acc += p.at(i, j) * seed[static_cast<std::size_t>(j)];
    if (m) acc %= *m;
    out[static_cast<std::size_t>(i)] = acc;
  }
  return out;
}

}  // namespace pn::seq
