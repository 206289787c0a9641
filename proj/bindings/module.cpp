// Python bindings over the core engines. Exact terms cross into Python as
// arbitrary-precision ints via their decimal form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "pn/groups.hpp"
#include "pn/orbit.hpp"
#include "pn/period.hpp"
#include "pn/sequence.hpp"
#include "pn/verify.hpp"

namespace py = pybind11;

namespace {

using u64 = std::uint64_t;

py::object exact_term(u64 n) {
  constexpr u64 kExactCap = 1'000'000;
  if (n > kExactCap) throw std::invalid_argument("exact terms are limited to n <= 1000000");
  return py::module_::import("builtins").attr("int")(pn::seq::pn_term(n).str());
}

u64 period_one(u64 m, const std::string& method) {
  if (method == "direct") return pn::periods::period_direct(m).period;
  if (method == "matrix-order") return pn::periods::matrix_order(m);
  if (method == "crt") return pn::periods::period_crt(m).period;
  throw std::invalid_argument("unknown method '" + method +
                              "'; expected direct, matrix-order or crt");
}

py::dict period_all(u64 m) {
  const u64 direct = pn::periods::period_direct(m).period;
  const u64 order = pn::periods::matrix_order(m);
  const u64 crt = pn::periods::period_crt(m).period;
  py::dict d;
  d["m"] = m;
  d["direct"] = direct;
  d["matrix_order"] = order;
  d["crt"] = crt;
  d["agree"] = (direct == order && direct == crt);
  return d;
}

py::dict prime_power_dict(u64 p, unsigned alpha) {
  const auto r = pn::periods::period_prime_power(p, alpha);
  py::dict d;
  d["p"] = p;
  d["alpha"] = alpha;
  d["period"] = r.record.period;
  d["method"] = std::string(pn::periods::to_string(r.record.method));
  d["consistent"] = r.consistent;
  if (r.stabilization) d["stabilization"] = *r.stabilization;
  else d["stabilization"] = py::none();
  return d;
}

pn::orbit::OrbitSeed build_seed(const pn::groups::Group& g,
                                const std::optional<std::vector<std::string>>& names) {
  if (!names) return pn::orbit::designated_seed(g);
  std::vector<pn::groups::Element> elems;
  elems.reserve(names->size());
  for (const auto& s : *names) elems.push_back(g.parse_element(s));
  return pn::orbit::make_seed(g, std::move(elems));
}

py::dict orbit_dict(const std::string& spec_text,
                    const std::optional<std::vector<std::string>>& seed, u64 limit) {
  const auto spec = pn::groups::parse_spec(spec_text);
  const auto g = pn::groups::realize(spec);
  const auto rep = pn::orbit::orbit_period(build_seed(g, seed), false,
                                           std::max<u64>(pn::orbit::kTraceCap, limit));
  py::dict d;
  d["group"] = g.name();
  d["order"] = g.order();
  d["period"] = rep.period;
  d["distinct"] = rep.distinct;
  d["sequenceable"] = rep.sequenceable;
  const auto shown = std::min<std::size_t>(rep.trace.size(), limit);
  d["trace"] = std::vector<std::string>(rep.trace.begin(), rep.trace.begin() + shown);
  return d;
}

py::dict length_dict(const std::string& spec_text,
                     const std::optional<std::vector<std::string>>& seed) {
  const auto spec = pn::groups::parse_spec(spec_text);
  const auto g = pn::groups::realize(spec);
  const auto r = pn::orbit::verify_prediction(spec, g, build_seed(g, seed));
  py::dict d;
  d["group"] = r.group_name;
  d["family"] = r.prediction.family;
  d["params"] = r.prediction.params;
  d["law"] = r.prediction.law;
  d["predicted"] = r.prediction.length;
  d["simulated"] = r.simulated;
  d["agree"] = r.agree;
  d["sequenceable"] = r.sequenceable;
  d["distinct"] = r.distinct;
  d["order"] = r.order;
  d["note"] = r.note;
  return d;
}

py::list verify_list(const std::string& suite, u64 max_mod, unsigned max_n, unsigned max_m) {
  pn::verify::SuiteLimits limits;
  limits.max_mod = max_mod;
  limits.max_n = max_n;
  limits.max_m = max_m;
  py::list out;
  for (const auto& l : pn::verify::run_suite(suite, limits)) {
    py::dict d;
    d["suite"] = l.suite;
    d["check"] = l.name;
    d["expected"] = l.expected;
    d["actual"] = l.actual;
    d["ok"] = l.ok;
    d["note"] = l.note;
    out.append(d);
  }
  return out;
}

py::list group_elements(const std::string& spec_text) {
  const auto g = pn::groups::realize(pn::groups::parse_spec(spec_text));
  py::list out;
  for (const auto& e : g.elements()) out.append(g.format(e));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Pell-Narayana sequence, periods and group orbits";

  m.def("term", &exact_term, py::arg("n"), "Exact term PN_n as a Python int (n <= 10^6).");
  m.def("term_mod", &pn::seq::pn_term_mod, py::arg("n"), py::arg("m"),
        "PN_n reduced modulo m, for any 64-bit n.");
  m.def("period", &period_one, py::arg("m"), py::arg("method") = "direct",
        "Period of the sequence mod m (method: direct, matrix-order, crt).");
  m.def("period_all", &period_all, py::arg("m"),
        "All three period engines for one modulus, with an agreement flag.");
  m.def("period_prime_power", &prime_power_dict, py::arg("p"), py::arg("alpha"),
        "Period mod p^alpha with the lifting consistency flag.");
  m.def("orbit", &orbit_dict, py::arg("group"), py::arg("seed") = py::none(),
        py::arg("limit") = 50,
        "Orbit period, distinct count, sequenceability and a trace prefix.");
  m.def("length", &length_dict, py::arg("group"), py::arg("seed") = py::none(),
        "Closed-form orbit length prediction compared against simulation.");
  m.def("verify", &verify_list, py::arg("suite"), py::arg("max_mod") = 100,
        py::arg("max_n") = 8, py::arg("max_m") = 6,
        "Run a named verification suite (periods, orbits, lengths, all).");
  m.def("group_elements", &group_elements, py::arg("group"),
        "All element names of a catalog group, in enumeration order.");
}
