#pragma once

// A small catalog of finite groups with exact normal-form elements:
//
//   cyclic      Z_n            k (mod n)
//   klein-four  Z_2 x Z_2      (a, b) with a, b in {0, 1}
//   dihedral    D_n, order 2n  (r, f): (r1,f1)(r2,f2) = (r1 + (-1)^f1 r2, f1^f2)
//   dicyclic    Dic_n, order 4n described by a^(2n) = e, b^2 = a^n, ba = a^-1 b,
//               elements a^k b^j as (k, j)
//   q8          Dic_2 with the quaternion labels 1, -1, i, -i, j, -j, k, -k
//   product     G x H, componentwise
//   semidirect  Q8 x| Z_2m: (q1,t1)(q2,t2) = (q1 * phi^t1(q2), t1 + t2),
//               phi drawn from a named library of Q8 automorphisms
//
// Construction validates the group axioms: fully for orders <= 256, by a
// deterministic random sample beyond that. Elements are immutable value
// objects tied to their group; mixing elements across groups is an error.
//
// Presentations (l, m, n) = <x, y : x^l = y^m = (xy)^n = e> and their binary
// counterparts <l, m, n> (the same relations without "= e") are classified by
// k = mn + nl + lm - lmn: finite iff k > 0 with order 2lmn/k (4lmn/k for the
// binary flavor). The constructible shapes are the families above; any other
// finite triple is reported with its order but refused.

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pn::groups {

enum class Family { cyclic, klein_four, dihedral, dicyclic, q8, product, semidirect };
const char* to_string(Family f);

class GroupImpl;
class Group;

class Element {
 public:
  Element() = default;
  bool valid() const { return impl_ != nullptr; }
  const std::vector<std::uint32_t>& coords() const { return coords_; }
  bool operator==(const Element& o) const {
    return impl_.get() == o.impl_.get() && coords_ == o.coords_;
  }
  bool operator!=(const Element& o) const { return !(*this == o); }
  bool operator<(const Element& o) const {
    if (impl_.get() != o.impl_.get()) return impl_.get() < o.impl_.get();
    return coords_ < o.coords_;
  }

 private:
  friend class Group;
  Element(std::shared_ptr<const GroupImpl> impl, std::vector<std::uint32_t> coords)
      : impl_(std::move(impl)), coords_(std::move(coords)) {}
  std::shared_ptr<const GroupImpl> impl_;
  std::vector<std::uint32_t> coords_;
};

class Group {
 public:
  Family family() const;
  std::uint64_t order() const;
  const std::string& name() const;

  Element identity() const;
  Element mul(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  std::uint64_t element_order(const Element& a) const;

  // All elements in a fixed enumeration order; exactly order() of them.
  std::vector<Element> elements() const;

  // Generators used to seed orbits (presentation images where applicable).
  std::vector<Element> generators() const;

  std::string format(const Element& a) const;
  // Parses the format() notation plus the aliases e (identity) and x, y, z
  // (designated generators).
  Element parse_element(const std::string& text) const;

  bool contains(const Element& a) const;
  bool same_group(const Group& o) const { return impl_.get() == o.impl_.get(); }

 private:
  friend Group wrap(std::shared_ptr<const GroupImpl>);
  friend const std::shared_ptr<const GroupImpl>& unwrap(const Group&);
  std::shared_ptr<const GroupImpl> impl_;
};

Group make_cyclic(std::uint64_t n);
Group make_klein_four();
Group make_dihedral(std::uint64_t n);
Group make_dicyclic(std::uint64_t n);
Group make_q8();
Group make_direct_product(const Group& left, const Group& right);

// Named library of Q8 automorphisms: the identity, conjugation by i, j or k,
// and the order-3 rotation i -> j -> k -> i.
enum class Q8Automorphism { triv, conj_i, conj_j, conj_k, rot3 };
const char* to_string(Q8Automorphism a);
std::optional<Q8Automorphism> q8_automorphism_from_string(const std::string& s);
unsigned q8_automorphism_order(Q8Automorphism a);

// Q8 x| Z_2m under phi; requires phi^(2m) = id, i.e. ord(phi) divides 2m.
Group make_semidirect_q8_z2m(std::uint64_t m, Q8Automorphism a);

enum class PresentationFlavor { polyhedral, binary };

struct PresentationInfo {
  PresentationFlavor flavor = PresentationFlavor::polyhedral;
  unsigned l = 0, m = 0, n = 0;
  long long k = 0;  // mn + nl + lm - lmn
  std::optional<std::uint64_t> order;  // present iff k > 0

  bool finite() const { return k > 0; }
};

// Computes k and the order; never constructs anything. l, m, n >= 2.
PresentationInfo presentation_info(PresentationFlavor flavor, unsigned l, unsigned m, unsigned n);

struct RealizedPresentation {
  PresentationInfo info;
  Group group;
  Element x, y;  // generator images; relations are checked at construction
};

// Constructible shapes: (2,2,2) and the three one-slot families with the
// remaining entries equal to 2. Infinite triples and finite triples outside
// the catalog raise std::invalid_argument (the latter still naming the order).
RealizedPresentation make_polyhedral(unsigned l, unsigned m, unsigned n);
RealizedPresentation make_binary_polyhedral(unsigned l, unsigned m, unsigned n);

// Group-spec grammar:
//   atom    := Z:<n> | D:<n> | Dic:<n> | Q8 | Q8sd:<m>:<aut>
//            | poly:<l>,<m>,<n> | bpoly:<l>,<m>,<n>
//   spec    := atom ('x' atom)*          products associate to the left
//   aut     := triv | conj-i | conj-j | conj-k | rot3
struct GroupSpec {
  enum class Kind { cyclic, dihedral, dicyclic, q8, semidirect, poly, bpoly, product };
  Kind kind = Kind::q8;
  std::uint64_t n = 0;                      // cyclic/dihedral/dicyclic parameter
  std::uint64_t m = 0;                      // semidirect parameter
  Q8Automorphism aut = Q8Automorphism::triv;
  unsigned pl = 0, pm = 0, pn = 0;          // presentation triple
  std::vector<GroupSpec> factors;           // product children, size 2
  std::string text;                         // the spelling this node was parsed from
};

// Errors carry the offending position within the spec string.
GroupSpec parse_spec(const std::string& text);
Group realize(const GroupSpec& spec);
Group parse_group_spec(const std::string& text);

}  // namespace pn::groups
