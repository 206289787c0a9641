#include "pn/groups.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace pn::groups {

namespace {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

constexpr u64 kEnumerationCap = 1'000'000;
constexpr u64 kParameterCap = 1u << 30;

std::optional<u64> parse_u64(std::string_view s) {
  if (s.empty()) return std::nullopt;
  u64 value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::cyclic: return "cyclic";
    case Family::klein_four: return "klein-four";
    case Family::dihedral: return "dihedral";
    case Family::dicyclic: return "dicyclic";
    case Family::q8: return "q8";
    case Family::product: return "product";
    case Family::semidirect: return "semidirect";
  }
  return "?";
}

class GroupImpl {
 public:
  GroupImpl(Family family, u64 order, std::string name, std::vector<std::vector<u32>> designated)
      : family_(family), order_(order), name_(std::move(name)), designated_(std::move(designated)) {}
  virtual ~GroupImpl() = default;

  Family family() const { return family_; }
  u64 order() const { return order_; }
  const std::string& name() const { return name_; }
  const std::vector<std::vector<u32>>& designated() const { return designated_; }

  virtual std::size_t arity() const = 0;
  virtual void mul(const u32* a, const u32* b, u32* out) const = 0;
  virtual void inv(const u32* a, u32* out) const = 0;
  virtual bool valid_coords(const u32* c) const = 0;
  virtual void enumerate(std::vector<std::vector<u32>>& out) const = 0;
  virtual void random_coords(std::mt19937& rng, u32* out) const = 0;
  virtual std::string format(const u32* c) const = 0;
  virtual std::optional<std::vector<u32>> parse(std::string_view s) const = 0;
  virtual const char* syntax_hint() const = 0;

 private:
  Family family_;
  u64 order_;
  std::string name_;
  std::vector<std::vector<u32>> designated_;
};

namespace {

std::vector<u32> mul_vec(const GroupImpl& g, const std::vector<u32>& a, const std::vector<u32>& b) {
  std::vector<u32> out(g.arity());
  g.mul(a.data(), b.data(), out.data());
  return out;
}

std::vector<u32> inv_vec(const GroupImpl& g, const std::vector<u32>& a) {
  std::vector<u32> out(g.arity());
  g.inv(a.data(), out.data());
  return out;
}

// The identity has all-zero coordinates in every family.
std::vector<u32> identity_vec(const GroupImpl& g) { return std::vector<u32>(g.arity(), 0); }

[[noreturn]] void axiom_fail(const GroupImpl& g, const std::string& what) {
  throw std::logic_error("group construction self-check failed for " + g.name() + ": " + what);
}

// Full axiom check for small orders, deterministic spot checks beyond.
void validate_group(const GroupImpl& g) {
  std::mt19937 rng(0x5eed0123u);
  const std::vector<u32> id = identity_vec(g);
  if (!g.valid_coords(id.data())) axiom_fail(g, "identity coordinates rejected");

  std::vector<std::vector<u32>> sample;
  if (g.order() <= 256) {
    std::vector<std::vector<u32>> all;
    g.enumerate(all);
    if (all.size() != g.order()) axiom_fail(g, "enumeration size differs from the order");
    std::set<std::vector<u32>> distinct(all.begin(), all.end());
    if (distinct.size() != all.size()) axiom_fail(g, "enumeration repeats an element");
    for (const auto& v : all) {
      if (!g.valid_coords(v.data())) axiom_fail(g, "enumerated element out of normal form");
      if (mul_vec(g, id, v) != v || mul_vec(g, v, id) != v) axiom_fail(g, "identity not neutral");
      const auto w = inv_vec(g, v);
      if (mul_vec(g, v, w) != id || mul_vec(g, w, v) != id) axiom_fail(g, "inverse law violated");
    }
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 20; ++i) sample.push_back(all[pick(rng)]);
  } else {
    for (int i = 0; i < 20; ++i) {
      std::vector<u32> v(g.arity());
      g.random_coords(rng, v.data());
      if (!g.valid_coords(v.data())) axiom_fail(g, "random element out of normal form");
      if (mul_vec(g, id, v) != v || mul_vec(g, v, id) != v) axiom_fail(g, "identity not neutral");
      const auto w = inv_vec(g, v);
      if (mul_vec(g, v, w) != id || mul_vec(g, w, v) != id) axiom_fail(g, "inverse law violated");
      sample.push_back(std::move(v));
    }
  }
  for (const auto& a : sample)
    for (const auto& b : sample)
      for (const auto& c : sample)
        if (mul_vec(g, mul_vec(g, a, b), c) != mul_vec(g, a, mul_vec(g, b, c)))
          axiom_fail(g, "associativity violated on sampled triple");
}

class CyclicImpl : public GroupImpl {
 public:
  CyclicImpl(u64 n, std::string name, std::vector<std::vector<u32>> designated)
      : GroupImpl(Family::cyclic, n, std::move(name), std::move(designated)), n_(static_cast<u32>(n)) {}

  std::size_t arity() const override { return 1; }
  void mul(const u32* a, const u32* b, u32* out) const override {
    out[0] = static_cast<u32>((u64{a[0]} + b[0]) % n_);
  }
  void inv(const u32* a, u32* out) const override { out[0] = a[0] == 0 ? 0 : n_ - a[0]; }
  bool valid_coords(const u32* c) const override { return c[0] < n_; }
  void enumerate(std::vector<std::vector<u32>>& out) const override {
    for (u32 k = 0; k < n_; ++k) out.push_back({k});
  }
  void random_coords(std::mt19937& rng, u32* out) const override {
    out[0] = std::uniform_int_distribution<u32>(0, n_ - 1)(rng);
  }
  std::string format(const u32* c) const override { return "g" + std::to_string(c[0]); }
  std::optional<std::vector<u32>> parse(std::string_view s) const override {
    if (s.size() < 2 || s[0] != 'g') return std::nullopt;
    auto k = parse_u64(s.substr(1));
    if (!k) return std::nullopt;
    return std::vector<u32>{static_cast<u32>(*k % n_)};
  }
  const char* syntax_hint() const override { return "g<k>"; }

 private:
  u32 n_;
};

class KleinFourImpl : public GroupImpl {
 public:
  KleinFourImpl(std::string name, std::vector<std::vector<u32>> designated)
      : GroupImpl(Family::klein_four, 4, std::move(name), std::move(designated)) {}

  std::size_t arity() const override { return 2; }
  void mul(const u32* a, const u32* b, u32* out) const override {
    out[0] = a[0] ^ b[0];
    out[1] = a[1] ^ b[1];
  }
  void inv(const u32* a, u32* out) const override {
    out[0] = a[0];
    out[1] = a[1];
  }
  bool valid_coords(const u32* c) const override { return c[0] < 2 && c[1] < 2; }
  void enumerate(std::vector<std::vector<u32>>& out) const override {
    for (u32 a = 0; a < 2; ++a)
      for (u32 b = 0; b < 2; ++b) out.push_back({a, b});
  }
  void random_coords(std::mt19937& rng, u32* out) const override {
    out[0] = rng() & 1u;
    out[1] = rng() & 1u;
  }
  std::string format(const u32* c) const override {
    static const char* names[4] = {"e", "y", "x", "xy"};  // index a*2+b
    return names[c[0] * 2 + c[1]];
  }
  std::optional<std::vector<u32>> parse(std::string_view s) const override {
    if (s == "e") return std::vector<u32>{0, 0};
    if (s == "x") return std::vector<u32>{1, 0};
    if (s == "y") return std::vector<u32>{0, 1};
    if (s == "xy") return std::vector<u32>{1, 1};
    return std::nullopt;
  }
  const char* syntax_hint() const override { return "e, x, y or xy"; }
};

class DihedralImpl : public GroupImpl {
 public:
  DihedralImpl(u64 n, std::string name, std::vector<std::vector<u32>> designated)
      : GroupImpl(Family::dihedral, 2 * n, std::move(name), std::move(designated)),
        n_(static_cast<u32>(n)) {}

  std::size_t arity() const override { return 2; }
  void mul(const u32* a, const u32* b, u32* out) const override {
    // (r1,f1)(r2,f2) = (r1 + (-1)^f1 r2, f1 xor f2)
    const u64 r2 = a[1] ? (n_ - b[0]) % n_ : b[0];
    out[0] = static_cast<u32>((a[0] + r2) % n_);
    out[1] = a[1] ^ b[1];
  }
  void inv(const u32* a, u32* out) const override {
    out[0] = a[1] ? a[0] : (n_ - a[0]) % n_;
    out[1] = a[1];
  }
  bool valid_coords(const u32* c) const override { return c[0] < n_ && c[1] < 2; }
  void enumerate(std::vector<std::vector<u32>>& out) const override {
    for (u32 f = 0; f < 2; ++f)
      for (u32 r = 0; r < n_; ++r) out.push_back({r, f});
  }
  void random_coords(std::mt19937& rng, u32* out) const override {
    out[0] = std::uniform_int_distribution<u32>(0, n_ - 1)(rng);
    out[1] = rng() & 1u;
  }
  std::string format(const u32* c) const override {
    return "r" + std::to_string(c[0]) + ".f" + std::to_string(c[1]);
  }
  std::optional<std::vector<u32>> parse(std::string_view s) const override {
    auto dot = s.find('.');
    if (dot == std::string_view::npos || s.empty() || s[0] != 'r') return std::nullopt;
    if (dot + 1 >= s.size() || s[dot + 1] != 'f') return std::nullopt;
    auto r = parse_u64(s.substr(1, dot - 1));
    auto f = parse_u64(s.substr(dot + 2));
    if (!r || !f || *f > 1) return std::nullopt;
    return std::vector<u32>{static_cast<u32>(*r % n_), static_cast<u32>(*f)};
  }
  const char* syntax_hint() const override { return "r<k>.f<0|1>"; }

 private:
  u32 n_;
};

// a^(2n) = e, b^2 = a^n, b a b^-1 = a^-1; element a^k b^j as (k, j).
class DicyclicImpl : public GroupImpl {
 public:
  DicyclicImpl(Family family, u64 n, std::string name, std::vector<std::vector<u32>> designated)
      : GroupImpl(family, 4 * n, std::move(name), std::move(designated)),
        n_(static_cast<u32>(n)),
        kk_(static_cast<u32>(2 * n)) {}

  std::size_t arity() const override { return 2; }
  void mul(const u32* a, const u32* b, u32* out) const override {
    // (k1,j1)(k2,j2) = (k1 + (-1)^j1 k2 + n*[j1 & j2], j1 xor j2)  (mod 2n)
    u64 k = a[0] + (a[1] ? (kk_ - b[0]) % kk_ : b[0]);
    if (a[1] && b[1]) k += n_;
    out[0] = static_cast<u32>(k % kk_);
    out[1] = a[1] ^ b[1];
  }
  void inv(const u32* a, u32* out) const override {
    out[0] = a[1] ? static_cast<u32>((a[0] + n_) % kk_) : (kk_ - a[0]) % kk_;
    out[1] = a[1];
  }
  bool valid_coords(const u32* c) const override { return c[0] < kk_ && c[1] < 2; }
  void enumerate(std::vector<std::vector<u32>>& out) const override {
    for (u32 j = 0; j < 2; ++j)
      for (u32 k = 0; k < kk_; ++k) out.push_back({k, j});
  }
  void random_coords(std::mt19937& rng, u32* out) const override {
    out[0] = std::uniform_int_distribution<u32>(0, kk_ - 1)(rng);
    out[1] = rng() & 1u;
  }
  std::string format(const u32* c) const override {
    return "a" + std::to_string(c[0]) + ".b" + std::to_string(c[1]);
  }
  std::optional<std::vector<u32>> parse(std::string_view s) const override {
    auto dot = s.find('.');
    if (dot == std::string_view::npos || s.empty() || s[0] != 'a') return std::nullopt;
    if (dot + 1 >= s.size() || s[dot + 1] != 'b') return std::nullopt;
    auto k = parse_u64(s.substr(1, dot - 1));
    auto j = parse_u64(s.substr(dot + 2));
    if (!k || !j || *j > 1) return std::nullopt;
    return std::vector<u32>{static_cast<u32>(*k % kk_), static_cast<u32>(*j)};
  }
  const char* syntax_hint() const override { return "a<k>.b<0|1>"; }

 private:
  u32 n_;
  u32 kk_;
};

// Quaternion labels indexed by (j << 2) | k for the Dic_2 normal form (k, j).
const std::array<const char*, 8> kQ8Names = {"1", "i", "-1", "-i", "j", "k", "-j", "-k"};

class Q8Impl : public DicyclicImpl {
 public:
  Q8Impl(std::string name, std::vector<std::vector<u32>> designated)
      : DicyclicImpl(Family::q8, 2, std::move(name), std::move(designated)) {}

  std::string format(const u32* c) const override { return kQ8Names[(c[1] << 2) | c[0]]; }
  std::optional<std::vector<u32>> parse(std::string_view s) const override {
    for (u32 idx = 0; idx < 8; ++idx)
      if (s == kQ8Names[idx]) return std::vector<u32>{idx & 3u, idx >> 2};
    return std::nullopt;
  }
  const char* syntax_hint() const override { return "1, -1, i, -i, j, -j, k or -k"; }
};

class ProductImpl : public GroupImpl {
 public:
  ProductImpl(std::shared_ptr<const GroupImpl> left, std::shared_ptr<const GroupImpl> right,
              u64 order, std::string name, std::vector<std::vector<u32>> designated)
      : GroupImpl(Family::product, order, std::move(name), std::move(designated)),
        left_(std::move(left)),
        right_(std::move(right)),
        la_(left_->arity()),
        ra_(right_->arity()) {}

  std::size_t arity() const override { return la_ + ra_; }
  void mul(const u32* a, const u32* b, u32* out) const override {
    left_->mul(a, b, out);
    right_->mul(a + la_, b + la_, out + la_);
  }
  void inv(const u32* a, u32* out) const override {
    left_->inv(a, out);
    right_->inv(a + la_, out + la_);
  }
  bool valid_coords(const u32* c) const override {
    return left_->valid_coords(c) && right_->valid_coords(c + la_);
  }
  void enumerate(std::vector<std::vector<u32>>& out) const override {
    std::vector<std::vector<u32>> ls, rs;
    left_->enumerate(ls);
    right_->enumerate(rs);
    for (const auto& l : ls)
      for (const auto& r : rs) {
        std::vector<u32> v = l;
        v.insert(v.end(), r.begin(), r.end());
        out.push_back(std::move(v));
      }
  }
  void random_coords(std::mt19937& rng, u32* out) const override {
    left_->random_coords(rng, out);
    right_->random_coords(rng, out + la_);
  }
  std::string format(const u32* c) const override {
    return "(" + left_->format(c) + "," + right_->format(c + la_) + ")";
  }
  std::optional<std::vector<u32>> parse(std::string_view s) const override {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
    s = s.substr(1, s.size() - 2);
    int depth = 0;
    std::size_t split = std::string_view::npos;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      else if (s[i] == ')') --depth;
      else if (s[i] == ',' && depth == 0) {
        split = i;
        break;
      }
    }
    if (split == std::string_view::npos) return std::nullopt;
    auto l = left_->parse(s.substr(0, split));
    auto r = right_->parse(s.substr(split + 1));
    if (!l || !r) return std::nullopt;
    l->insert(l->end(), r->begin(), r->end());
    return l;
  }
  const char* syntax_hint() const override { return "(<left>,<right>)"; }

 private:
  std::shared_ptr<const GroupImpl> left_;
  std::shared_ptr<const GroupImpl> right_;
  std::size_t la_;
  std::size_t ra_;
};

// Multiplication of Q8 on the index (j << 2) | k, shared by the automorphism
// machinery and the semidirect product.
u32 q8_mul_idx(u32 a, u32 b) {
  const u32 k1 = a & 3u, j1 = a >> 2, k2 = b & 3u, j2 = b >> 2;
  u32 k = (k1 + (j1 ? 4 - k2 : k2)) % 4;
  if (j1 && j2) k = (k + 2) % 4;
  return ((j1 ^ j2) << 2) | k;
}

u32 q8_inv_idx(u32 a) {
  const u32 k = a & 3u, j = a >> 2;
  return j ? (j << 2) | ((k + 2) % 4) : (4 - k) % 4;
}

using Q8Perm = std::array<u32, 8>;

Q8Perm q8_perm_from_images(u32 image_a, u32 image_b) {
  Q8Perm perm{};
  for (u32 j = 0; j < 2; ++j) {
    for (u32 k = 0; k < 4; ++k) {
      u32 v = 0;  // identity index
      for (u32 i = 0; i < k; ++i) v = q8_mul_idx(v, image_a);
      if (j) v = q8_mul_idx(v, image_b);
      perm[(j << 2) | k] = v;
    }
  }
  // Must be a bijective homomorphism of Q8.
  std::array<bool, 8> seen{};
  for (u32 v : perm) seen[v] = true;
  for (bool s : seen)
    if (!s) throw std::logic_error("q8 automorphism images do not extend to a bijection");
  for (u32 a = 0; a < 8; ++a)
    for (u32 b = 0; b < 8; ++b)
      if (perm[q8_mul_idx(a, b)] != q8_mul_idx(perm[a], perm[b]))
        throw std::logic_error("q8 automorphism images do not extend to a homomorphism");
  return perm;
}

Q8Perm q8_conjugation(u32 g) {
  const u32 gi = q8_inv_idx(g);
  return q8_perm_from_images(q8_mul_idx(q8_mul_idx(g, 1), gi),  // image of a = i
                             q8_mul_idx(q8_mul_idx(g, 4), gi)); // image of b = j
}

Q8Perm q8_automorphism_perm(Q8Automorphism a) {
  switch (a) {
    case Q8Automorphism::triv: return q8_perm_from_images(1, 4);
    case Q8Automorphism::conj_i: return q8_conjugation(1);
    case Q8Automorphism::conj_j: return q8_conjugation(4);
    case Q8Automorphism::conj_k: return q8_conjugation(5);
    case Q8Automorphism::rot3: return q8_perm_from_images(4, 5);  // i -> j, j -> k
  }
  throw std::logic_error("unknown q8 automorphism");
}

class SemidirectImpl : public GroupImpl {
 public:
  SemidirectImpl(u64 m, Q8Automorphism aut, std::string name,
                 std::vector<std::vector<u32>> designated)
      : GroupImpl(Family::semidirect, 16 * m, std::move(name), std::move(designated)),
        tn_(static_cast<u32>(2 * m)),
        aut_(aut) {
    Q8Perm id{};
    for (u32 i = 0; i < 8; ++i) id[i] = i;
    Q8Perm cur = id;
    do {
      powers_.push_back(cur);
      Q8Perm next;
      const Q8Perm step = q8_automorphism_perm(aut);
      for (u32 i = 0; i < 8; ++i) next[i] = step[cur[i]];
      cur = next;
    } while (cur != id);
  }

  std::size_t aut_order() const { return powers_.size(); }

  std::size_t arity() const override { return 3; }
  void mul(const u32* a, const u32* b, u32* out) const override {
    // (q1, t1)(q2, t2) = (q1 * phi^t1(q2), t1 + t2)
    const Q8Perm& p = powers_[a[2] % powers_.size()];
    const u32 q = q8_mul_idx((a[1] << 2) | a[0], p[(b[1] << 2) | b[0]]);
    out[0] = q & 3u;
    out[1] = q >> 2;
    out[2] = static_cast<u32>((u64{a[2]} + b[2]) % tn_);
  }
  void inv(const u32* a, u32* out) const override {
    // (q, t)^-1 = (phi^-t(q^-1), -t)
    const std::size_t ord = powers_.size();
    const Q8Perm& p = powers_[(ord - a[2] % ord) % ord];
    const u32 q = p[q8_inv_idx((a[1] << 2) | a[0])];
    out[0] = q & 3u;
    out[1] = q >> 2;
    out[2] = (tn_ - a[2]) % tn_;
  }
  bool valid_coords(const u32* c) const override {
    return c[0] < 4 && c[1] < 2 && c[2] < tn_;
  }
  void enumerate(std::vector<std::vector<u32>>& out) const override {
    for (u32 j = 0; j < 2; ++j)
      for (u32 k = 0; k < 4; ++k)
        for (u32 t = 0; t < tn_; ++t) out.push_back({k, j, t});
  }
  void random_coords(std::mt19937& rng, u32* out) const override {
    out[0] = rng() & 3u;
    out[1] = rng() & 1u;
    out[2] = std::uniform_int_distribution<u32>(0, tn_ - 1)(rng);
  }
  std::string format(const u32* c) const override {
    return std::string("(") + kQ8Names[(c[1] << 2) | c[0]] + ",g" + std::to_string(c[2]) + ")";
  }
  std::optional<std::vector<u32>> parse(std::string_view s) const override {
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return std::nullopt;
    s = s.substr(1, s.size() - 2);
    auto comma = s.find(',');
    if (comma == std::string_view::npos) return std::nullopt;
    std::string_view qs = s.substr(0, comma);
    std::string_view ts = s.substr(comma + 1);
    std::optional<u32> q;
    for (u32 idx = 0; idx < 8; ++idx)
      if (qs == kQ8Names[idx]) q = idx;
    if (!q || ts.size() < 2 || ts[0] != 'g') return std::nullopt;
    auto t = parse_u64(ts.substr(1));
    if (!t) return std::nullopt;
    return std::vector<u32>{*q & 3u, *q >> 2, static_cast<u32>(*t % tn_)};
  }
  const char* syntax_hint() const override { return "(<q8 element>,g<t>)"; }

 private:
  u32 tn_;  // 2m
  Q8Automorphism aut_;
  std::vector<Q8Perm> powers_;
};

}  // namespace

Group wrap(std::shared_ptr<const GroupImpl> impl) {
  validate_group(*impl);
  Group g;
  g.impl_ = std::move(impl);
  return g;
}

const std::shared_ptr<const GroupImpl>& unwrap(const Group& g) { return g.impl_; }

Family Group::family() const { return impl_->family(); }
std::uint64_t Group::order() const { return impl_->order(); }
const std::string& Group::name() const { return impl_->name(); }

Element Group::identity() const { return Element(impl_, identity_vec(*impl_)); }

Element Group::mul(const Element& a, const Element& b) const {
  if (!contains(a) || !contains(b))
    throw std::invalid_argument("element does not belong to group " + impl_->name());
  std::vector<u32> out(impl_->arity());
  impl_->mul(a.coords().data(), b.coords().data(), out.data());
  return Element(impl_, std::move(out));
}

Element Group::inverse(const Element& a) const {
  if (!contains(a))
    throw std::invalid_argument("element does not belong to group " + impl_->name());
  std::vector<u32> out(impl_->arity());
  impl_->inv(a.coords().data(), out.data());
  return Element(impl_, std::move(out));
}

std::uint64_t Group::element_order(const Element& a) const {
  const Element id = identity();
  Element cur = a;
  std::uint64_t n = 1;
  while (cur != id) {
    cur = mul(cur, a);
    if (++n > order()) throw std::logic_error("element_order exceeded the group order");
  }
  return n;
}

std::vector<Element> Group::elements() const {
  if (order() > kEnumerationCap)
    throw std::length_error("enumeration refused: order exceeds " + std::to_string(kEnumerationCap));
  std::vector<std::vector<u32>> coords;
  coords.reserve(order());
  impl_->enumerate(coords);
  std::vector<Element> out;
  out.reserve(coords.size());
  for (auto& c : coords) out.push_back(Element(impl_, std::move(c)));
  return out;
}

std::vector<Element> Group::generators() const {
  std::vector<Element> out;
  for (const auto& c : impl_->designated()) out.push_back(Element(impl_, c));
  return out;
}

std::string Group::format(const Element& a) const {
  if (!contains(a))
    throw std::invalid_argument("element does not belong to group " + impl_->name());
  return impl_->format(a.coords().data());
}

Element Group::parse_element(const std::string& text) const {
  if (text == "e") return identity();
  const auto& designated = impl_->designated();
  static const std::array<const char*, 3> alias = {"x", "y", "z"};
  for (std::size_t i = 0; i < alias.size(); ++i)
    if (text == alias[i] && i < designated.size()) return Element(impl_, designated[i]);
  if (auto coords = impl_->parse(text)) return Element(impl_, std::move(*coords));
  throw std::invalid_argument("cannot parse '" + text + "' as an element of " + impl_->name() +
                              "; expected " + impl_->syntax_hint() +
                              " or one of e, x, y, z");
}

bool Group::contains(const Element& a) const { return a.impl_.get() == impl_.get(); }

namespace {

void check_parameter(u64 n, const char* who) {
  if (n == 0) throw std::invalid_argument(std::string(who) + ": parameter must be positive");
  if (n > kParameterCap) throw std::invalid_argument(std::string(who) + ": parameter too large");
}

}  // namespace

Group make_cyclic(std::uint64_t n) {
  check_parameter(n, "make_cyclic");
  std::vector<std::vector<u32>> gens;
  gens.push_back({static_cast<u32>(1 % n)});
  return wrap(std::make_shared<CyclicImpl>(n, "Z:" + std::to_string(n), std::move(gens)));
}

Group make_klein_four() {
  return wrap(std::make_shared<KleinFourImpl>(
      "K4", std::vector<std::vector<u32>>{{1, 0}, {0, 1}}));
}

Group make_dihedral(std::uint64_t n) {
  check_parameter(n, "make_dihedral");
  std::vector<std::vector<u32>> gens = {{static_cast<u32>(1 % n), 0}, {0, 1}};  // rotation, flip
  return wrap(std::make_shared<DihedralImpl>(n, "D:" + std::to_string(n), std::move(gens)));
}

Group make_dicyclic(std::uint64_t n) {
  check_parameter(n, "make_dicyclic");
  std::vector<std::vector<u32>> gens = {{1, 0}, {0, 1}};  // a, b
  return wrap(std::make_shared<DicyclicImpl>(Family::dicyclic, n, "Dic:" + std::to_string(n),
                                             std::move(gens)));
}

Group make_q8() {
  std::vector<std::vector<u32>> gens = {{1, 0}, {0, 1}};  // i, j
  return wrap(std::make_shared<Q8Impl>("Q8", std::move(gens)));
}

Group make_direct_product(const Group& left, const Group& right) {
  const auto& l = unwrap(left);
  const auto& r = unwrap(right);
  if (l->order() > kEnumerationCap / r->order())
    throw std::invalid_argument("make_direct_product: order too large");
  const u64 order = l->order() * r->order();
  // Designated generators: each factor's generators, embedded.
  std::vector<std::vector<u32>> gens;
  for (const auto& g : l->designated()) {
    std::vector<u32> v = g;
    v.resize(l->arity() + r->arity(), 0);
    gens.push_back(std::move(v));
  }
  for (const auto& g : r->designated()) {
    std::vector<u32> v(l->arity(), 0);
    v.insert(v.end(), g.begin(), g.end());
    gens.push_back(std::move(v));
  }
  return wrap(std::make_shared<ProductImpl>(l, r, order, l->name() + "x" + r->name(),
                                            std::move(gens)));
}

const char* to_string(Q8Automorphism a) {
  switch (a) {
    case Q8Automorphism::triv: return "triv";
    case Q8Automorphism::conj_i: return "conj-i";
    case Q8Automorphism::conj_j: return "conj-j";
    case Q8Automorphism::conj_k: return "conj-k";
    case Q8Automorphism::rot3: return "rot3";
  }
  return "?";
}

std::optional<Q8Automorphism> q8_automorphism_from_string(const std::string& s) {
  if (s == "triv") return Q8Automorphism::triv;
  if (s == "conj-i") return Q8Automorphism::conj_i;
  if (s == "conj-j") return Q8Automorphism::conj_j;
  if (s == "conj-k") return Q8Automorphism::conj_k;
  if (s == "rot3") return Q8Automorphism::rot3;
  return std::nullopt;
}

unsigned q8_automorphism_order(Q8Automorphism a) {
  const Q8Perm step = q8_automorphism_perm(a);
  Q8Perm cur = step;
  unsigned ord = 1;
  Q8Perm id{};
  for (u32 i = 0; i < 8; ++i) id[i] = i;
  while (cur != id) {
    Q8Perm next;
    for (u32 i = 0; i < 8; ++i) next[i] = step[cur[i]];
    cur = next;
    ++ord;
  }
  return ord;
}

Group make_semidirect_q8_z2m(std::uint64_t m, Q8Automorphism a) {
  check_parameter(m, "make_semidirect_q8_z2m");
  const unsigned ord = q8_automorphism_order(a);
  if ((2 * m) % ord != 0) {
    std::ostringstream os;
    os << "make_semidirect_q8_z2m: automorphism " << to_string(a) << " has order " << ord
       << ", which does not divide 2m = " << 2 * m;
    throw std::invalid_argument(os.str());
  }
  std::vector<std::vector<u32>> gens = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};  // i, j, (1, g)
  std::string name = "Q8sd:" + std::to_string(m) + ":" + to_string(a);
  return wrap(std::make_shared<SemidirectImpl>(m, a, std::move(name), std::move(gens)));
}

PresentationInfo presentation_info(PresentationFlavor flavor, unsigned l, unsigned m, unsigned n) {
  if (l < 2 || m < 2 || n < 2)
    throw std::invalid_argument("presentation parameters must be >= 2");
  if (l > 10000 || m > 10000 || n > 10000)
    throw std::invalid_argument("presentation parameters too large");
  PresentationInfo info;
  info.flavor = flavor;
  info.l = l;
  info.m = m;
  info.n = n;
  const long long ll = l, lm = m, ln = n;
  info.k = lm * ln + ln * ll + ll * lm - ll * lm * ln;
  if (info.k > 0) {
    const long long numerator = (flavor == PresentationFlavor::polyhedral ? 2 : 4) * ll * lm * ln;
    if (numerator % info.k != 0)
      throw std::logic_error("presentation order is not integral");
    info.order = static_cast<u64>(numerator / info.k);
  }
  return info;
}

namespace {

enum class TripleShape { all_two, slot1, slot2, slot3, unsupported };

TripleShape classify_triple(unsigned l, unsigned m, unsigned n) {
  const int big = (l > 2) + (m > 2) + (n > 2);
  if (big == 0) return TripleShape::all_two;
  if (big > 1) return TripleShape::unsupported;
  if (l > 2) return TripleShape::slot1;
  if (m > 2) return TripleShape::slot2;
  return TripleShape::slot3;
}

std::string triple_text(const char* prefix, unsigned l, unsigned m, unsigned n) {
  std::ostringstream os;
  os << prefix << ":" << l << "," << m << "," << n;
  return os.str();
}

[[noreturn]] void reject_presentation(const PresentationInfo& info, const std::string& text) {
  std::ostringstream os;
  if (!info.finite()) {
    os << text << " is infinite (k = " << info.k << ")";
  } else {
    os << text << " is finite of order " << *info.order
       << " but has no realization in the catalog (only one entry may exceed 2)";
  }
  throw std::invalid_argument(os.str());
}

}  // namespace

RealizedPresentation make_polyhedral(unsigned l, unsigned m, unsigned n) {
  const PresentationInfo info = presentation_info(PresentationFlavor::polyhedral, l, m, n);
  const std::string text = triple_text("poly", l, m, n);
  const TripleShape shape = classify_triple(l, m, n);
  if (!info.finite() || shape == TripleShape::unsupported) reject_presentation(info, text);

  Group g = [&] {
    switch (shape) {
      case TripleShape::all_two:
        return wrap(std::make_shared<KleinFourImpl>(
            text, std::vector<std::vector<u32>>{{1, 0}, {0, 1}}));
      case TripleShape::slot1:  // (n,2,2): x a rotation of order l, y a flip
        return wrap(std::make_shared<DihedralImpl>(
            l, text, std::vector<std::vector<u32>>{{1, 0}, {0, 1}}));
      case TripleShape::slot2:  // (2,n,2): x a flip, y a rotation of order m
        return wrap(std::make_shared<DihedralImpl>(
            m, text, std::vector<std::vector<u32>>{{0, 1}, {1, 0}}));
      case TripleShape::slot3:  // (2,2,n): two flips whose product rotates by 1
        return wrap(std::make_shared<DihedralImpl>(
            n, text, std::vector<std::vector<u32>>{{0, 1}, {n - 1, 1}}));
      default:
        throw std::logic_error("unreachable");
    }
  }();

  auto gens = g.generators();
  RealizedPresentation out{info, g, gens.at(0), gens.at(1)};
  if (g.order() != *info.order) throw std::logic_error(text + ": realization order mismatch");
  if (g.element_order(out.x) != l || g.element_order(out.y) != m ||
      g.element_order(g.mul(out.x, out.y)) != n)
    throw std::logic_error(text + ": generator image relations failed");
  return out;
}

RealizedPresentation make_binary_polyhedral(unsigned l, unsigned m, unsigned n) {
  const PresentationInfo info = presentation_info(PresentationFlavor::binary, l, m, n);
  const std::string text = triple_text("bpoly", l, m, n);
  const TripleShape shape = classify_triple(l, m, n);
  if (!info.finite() || shape == TripleShape::unsupported) reject_presentation(info, text);

  Group g = [&] {
    switch (shape) {
      case TripleShape::all_two:  // <2,2,2> is Q8 with x = i, y = j
        return wrap(std::make_shared<Q8Impl>(
            text, std::vector<std::vector<u32>>{{1, 0}, {0, 1}}));
      case TripleShape::slot1:  // <n,2,2>: x = a, y = b in Dic_n
        return wrap(std::make_shared<DicyclicImpl>(
            Family::dicyclic, l, text, std::vector<std::vector<u32>>{{1, 0}, {0, 1}}));
      case TripleShape::slot2:  // <2,n,2>: x = b, y = a
        return wrap(std::make_shared<DicyclicImpl>(
            Family::dicyclic, m, text, std::vector<std::vector<u32>>{{0, 1}, {1, 0}}));
      case TripleShape::slot3:  // <2,2,n>: x = b, y = a^(n-1) b, so xy = a
        return wrap(std::make_shared<DicyclicImpl>(
            Family::dicyclic, n, text,
            std::vector<std::vector<u32>>{{0, 1}, {n - 1, 1}}));
      default:
        throw std::logic_error("unreachable");
    }
  }();

  auto gens = g.generators();
  RealizedPresentation out{info, g, gens.at(0), gens.at(1)};
  if (g.order() != *info.order) throw std::logic_error(text + ": realization order mismatch");
  // x^l = y^m = (xy)^n = z with z central of order 2.
  auto pow = [&](const Element& a, unsigned exp) {
    Element acc = g.identity();
    for (unsigned i = 0; i < exp; ++i) acc = g.mul(acc, a);
    return acc;
  };
  const Element z = pow(out.x, l);
  if (z != pow(out.y, m) || z != pow(g.mul(out.x, out.y), n))
    throw std::logic_error(text + ": generator image relations failed");
  if (z == g.identity() || g.mul(z, z) != g.identity())
    throw std::logic_error(text + ": relator power is not of order 2");
  if (g.mul(z, out.x) != g.mul(out.x, z) || g.mul(z, out.y) != g.mul(out.y, z))
    throw std::logic_error(text + ": relator power is not central");
  return out;
}

}  // namespace pn::groups
