#include "pn/groups.hpp"

#include <charconv>
#include <sstream>
#include <string_view>

namespace pn::groups {

namespace {

std::optional<std::uint64_t> parse_u64(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

[[noreturn]] void spec_fail(const std::string& text, std::size_t pos, const std::string& why) {
  std::ostringstream os;
  os << "bad group spec '" << text << "' at position " << pos << ": " << why;
  throw std::invalid_argument(os.str());
}

constexpr const char* kAtomHint =
    "expected Z:<n>, D:<n>, Dic:<n>, Q8, Q8sd:<m>:<aut>, poly:<l>,<m>,<n> or bpoly:<l>,<m>,<n>";

// Parses "<l>,<m>,<n>" into the presentation slots of node.
void parse_triple(const std::string& full, std::string_view body, std::size_t pos,
                  GroupSpec& node) {
  unsigned* slots[3] = {&node.pl, &node.pm, &node.pn};
  std::size_t start = 0;
  for (int slot = 0; slot < 3; ++slot) {
    std::size_t end = slot < 2 ? body.find(',', start) : body.size();
    if (end == std::string_view::npos)
      spec_fail(full, pos + start, "expected three comma-separated integers");
    auto v = parse_u64(body.substr(start, end - start));
    if (!v || *v < 2 || *v > 10000)
      spec_fail(full, pos + start, "presentation entries must be integers in [2, 10000]");
    *slots[slot] = static_cast<unsigned>(*v);
    start = end + 1;
  }
}

GroupSpec parse_atom(const std::string& full, std::string_view atom, std::size_t pos) {
  GroupSpec node;
  node.text = std::string(atom);
  if (atom.empty()) spec_fail(full, pos, "expected a group atom");

  auto tail_number = [&](std::size_t prefix_len) -> std::uint64_t {
    auto v = parse_u64(atom.substr(prefix_len));
    if (!v || *v == 0) spec_fail(full, pos + prefix_len, "expected a positive integer");
    return *v;
  };

  if (atom == "Q8") {
    node.kind = GroupSpec::Kind::q8;
    return node;
  }
  if (atom.substr(0, 5) == "Q8sd:") {
    std::string_view rest = atom.substr(5);
    auto colon = rest.find(':');
    if (colon == std::string_view::npos)
      spec_fail(full, pos + 5, "expected Q8sd:<m>:<aut>");
    auto m = parse_u64(rest.substr(0, colon));
    if (!m || *m == 0) spec_fail(full, pos + 5, "expected a positive integer m");
    auto aut = q8_automorphism_from_string(std::string(rest.substr(colon + 1)));
    if (!aut)
      spec_fail(full, pos + 5 + colon + 1,
                "unknown automorphism; expected triv, conj-i, conj-j, conj-k or rot3");
    node.kind = GroupSpec::Kind::semidirect;
    node.m = *m;
    node.aut = *aut;
    return node;
  }
  if (atom.substr(0, 2) == "Z:") {
    node.kind = GroupSpec::Kind::cyclic;
    node.n = tail_number(2);
    return node;
  }
  if (atom.substr(0, 4) == "Dic:") {
    node.kind = GroupSpec::Kind::dicyclic;
    node.n = tail_number(4);
    return node;
  }
  if (atom.substr(0, 2) == "D:") {
    node.kind = GroupSpec::Kind::dihedral;
    node.n = tail_number(2);
    return node;
  }
  if (atom.substr(0, 5) == "poly:") {
    node.kind = GroupSpec::Kind::poly;
    parse_triple(full, atom.substr(5), pos + 5, node);
    return node;
  }
  if (atom.substr(0, 6) == "bpoly:") {
    node.kind = GroupSpec::Kind::bpoly;
    parse_triple(full, atom.substr(6), pos + 6, node);
    return node;
  }
  spec_fail(full, pos, kAtomHint);
}

}  // namespace

GroupSpec parse_spec(const std::string& text) {
  // No atom spelling contains the letter 'x', so it cleanly separates factors.
  std::vector<std::pair<std::size_t, std::string_view>> pieces;
  const std::string_view sv = text;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= sv.size(); ++i) {
    if (i == sv.size() || sv[i] == 'x') {
      std::size_t lo = start, hi = i;
      while (lo < hi && sv[lo] == ' ') ++lo;
      while (hi > lo && sv[hi - 1] == ' ') --hi;
      pieces.emplace_back(lo, sv.substr(lo, hi - lo));
      start = i + 1;
    }
  }

  GroupSpec node = parse_atom(text, pieces[0].second, pieces[0].first);
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    GroupSpec rhs = parse_atom(text, pieces[i].second, pieces[i].first);
    GroupSpec prod;
    prod.kind = GroupSpec::Kind::product;
    prod.text = node.text + "x" + rhs.text;
    prod.factors.push_back(std::move(node));
    prod.factors.push_back(std::move(rhs));
    node = std::move(prod);
  }
  return node;
}

Group realize(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupSpec::Kind::cyclic: return make_cyclic(spec.n);
    case GroupSpec::Kind::dihedral: return make_dihedral(spec.n);
    case GroupSpec::Kind::dicyclic: return make_dicyclic(spec.n);
    case GroupSpec::Kind::q8: return make_q8();
    case GroupSpec::Kind::semidirect: return make_semidirect_q8_z2m(spec.m, spec.aut);
    case GroupSpec::Kind::poly: return make_polyhedral(spec.pl, spec.pm, spec.pn).group;
    case GroupSpec::Kind::bpoly: return make_binary_polyhedral(spec.pl, spec.pm, spec.pn).group;
    case GroupSpec::Kind::product:
      return make_direct_product(realize(spec.factors.at(0)), realize(spec.factors.at(1)));
  }
  throw std::logic_error("unhandled group spec kind");
}

Group parse_group_spec(const std::string& text) { return realize(parse_spec(text)); }

}  // namespace pn::groups
