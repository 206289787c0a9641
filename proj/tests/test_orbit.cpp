#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "pn/groups.hpp"
#include "pn/orbit.hpp"

using namespace pn::orbit;
using pn::groups::Group;
using pn::groups::make_cyclic;
using pn::groups::make_klein_four;
using pn::groups::make_q8;
using pn::groups::parse_group_spec;
using pn::groups::parse_spec;

namespace {

std::string joined(const std::vector<std::string>& v, std::size_t count) {
  std::string out;
  for (std::size_t i = 0; i < count && i < v.size(); ++i) {
    if (i) out += " ";
    out += v[i];
  }
  return out;
}

}  // namespace

TEST_CASE("seed validation") {
  const auto g = make_q8();
  const auto i = g.parse_element("i");
  const auto j = g.parse_element("j");
  CHECK_THROWS_AS((void)make_seed(g, {i}), std::invalid_argument);
  CHECK_THROWS_AS((void)make_seed(g, {i, j, i, j}), std::invalid_argument);
  const auto other = make_cyclic(3);
  CHECK_THROWS_AS((void)make_seed(g, {i, other.identity()}), std::invalid_argument);
}

TEST_CASE("initial window squares the second generator") {
  const auto g = make_q8();
  const auto seed = make_seed(g, {g.parse_element("i"), g.parse_element("j")});
  const auto w = initial_window(seed);
  CHECK(g.format(w[0]) == "i");
  CHECK(g.format(w[1]) == "j");
  CHECK(g.format(w[2]) == "-1");  // j^2
  const auto triple = make_seed(g, {g.parse_element("i"), g.parse_element("j"),
                                    g.parse_element("k")});
  CHECK(g.format(initial_window(triple)[2]) == "k");
}

TEST_CASE("orbit iterator walks the recurrence") {
  const auto g = make_q8();
  OrbitIterator it(designated_seed(g));
  const char* expect[] = {"i", "j", "-1", "i", "-j", "1", "i", "j", "-1"};
  for (std::size_t n = 0; n < 9; ++n) {
    CHECK(g.format(it.current()) == expect[n]);
    CHECK(it.index() == n);
    it.advance();
  }
}

TEST_CASE("quaternion orbit") {
  const auto rep = orbit_period(designated_seed(make_q8()), true);
  CHECK(rep.period == 6);
  CHECK(rep.distinct == 5);
  CHECK_FALSE(rep.sequenceable);
  REQUIRE(rep.trace.size() == 8);  // one period plus the wrapped first two terms
  CHECK(joined(rep.trace, 6) == "i j -1 i -j 1");
  REQUIRE(rep.windows_distinct.has_value());
  CHECK(*rep.windows_distinct);
}

TEST_CASE("klein four orbit is short") {
  const auto g = make_klein_four();
  const auto rep = orbit_period(designated_seed(g));
  CHECK(rep.period == 3);
  CHECK(rep.distinct == 3);
  CHECK_FALSE(rep.sequenceable);
}

TEST_CASE("trivial seed on the trivial group") {
  const auto g = make_cyclic(1);
  const auto rep = orbit_period(make_seed(g, {g.identity(), g.identity()}));
  CHECK(rep.period == 1);
  CHECK(rep.distinct == 1);
  CHECK(rep.sequenceable);
}

TEST_CASE("product orbits hit the period lcm") {
  CHECK(orbit_period(designated_seed(parse_group_spec("Q8xZ:6"))).period == 78);
  CHECK(orbit_period(designated_seed(parse_group_spec("Q8xZ:8"))).period == 12);
  CHECK(orbit_period(designated_seed(parse_group_spec("Q8xZ:10"))).period == 186);
  CHECK(orbit_period(designated_seed(parse_group_spec("Q8xZ:12"))).period == 78);
  CHECK(orbit_period(designated_seed(parse_group_spec("Z:3xZ:4"))).period == 78);
}

TEST_CASE("predictions for the quaternion family") {
  CHECK(predict_q8().length == 6);
  CHECK(predict_q8_product(3).length == 78);
  CHECK(predict_q8_product(4).length == 12);
  CHECK(predict_q8_product(5).length == 186);
  CHECK(predict_q8_product(6).length == 78);
  CHECK_THROWS_AS((void)predict_q8_product(2), std::invalid_argument);
  CHECK(predict_cyclic_product(3, 4).length == 78);
  CHECK(predict_cyclic_product(2, 2).length == 3);
}

TEST_CASE("polyhedral length predictions follow the parity law") {
  CHECK(predict_polyhedral(2, 2, 2).length == 3);
  CHECK(predict_polyhedral(5, 2, 2).length == 15);
  CHECK(predict_polyhedral(6, 2, 2).length == 9);
  CHECK(predict_polyhedral(2, 7, 2).length == 21);
  CHECK(predict_binary_polyhedral(2, 2, 2).length == 6);
  CHECK(predict_binary_polyhedral(4, 2, 2).length == 12);
  CHECK(predict_binary_polyhedral(2, 5, 2).length == 30);
}

TEST_CASE("dihedral and dicyclic simulations match the closed form") {
  for (unsigned n = 3; n <= 12; ++n) {
    const auto d = orbit_period(designated_seed(parse_group_spec("D:" + std::to_string(n))));
    CHECK(d.period == (n % 2 == 0 ? 3ull * n / 2 : 3ull * n));
    const auto dic = orbit_period(designated_seed(parse_group_spec("Dic:" + std::to_string(n))));
    CHECK(dic.period == (n % 2 == 0 ? 3ull * n : 6ull * n));
  }
}

TEST_CASE("two flips collapse the orbit") {
  // Seeding with the slot-3 generator images (two reflections) degenerates:
  // the simulated period is 3 for every n in the polyhedral case and 6 in the
  // binary case, regardless of the rotation order their product reaches.
  for (unsigned n = 3; n <= 12; ++n) {
    const auto p = pn::groups::make_polyhedral(2, 2, n);
    const auto ps = make_seed(p.group, {p.x, p.y});
    CHECK(orbit_period(ps).period == 3);
    const auto b = pn::groups::make_binary_polyhedral(2, 2, n);
    const auto bs = make_seed(b.group, {b.x, b.y});
    CHECK(orbit_period(bs).period == 6);
  }
}

TEST_CASE("verification agrees where the closed forms hold") {
  const auto q8 = verify_prediction(parse_spec("Q8"));
  CHECK(q8.agree);
  CHECK(q8.simulated == 6);
  CHECK(q8.order == 8);
  CHECK(q8.distinct == 5);
  CHECK_FALSE(q8.sequenceable);

  const auto prod = verify_prediction(parse_spec("Q8xZ:6"));
  CHECK(prod.agree);
  CHECK(prod.simulated == 78);
  CHECK(prod.note.find("coverage") != std::string::npos);

  const auto cyc = verify_prediction(parse_spec("Z:3xZ:4"));
  CHECK(cyc.agree);
  CHECK(cyc.prediction.length == 78);

  const auto tri = verify_prediction(parse_spec("Q8sd:3:triv"));
  CHECK(tri.agree);
  CHECK(tri.simulated == 78);
  const auto cj = verify_prediction(parse_spec("Q8sd:3:conj-i"));
  CHECK(cj.agree);
}

TEST_CASE("rotation twist breaks the semidirect closed form") {
  const auto r3 = verify_prediction(parse_spec("Q8sd:3:rot3"));
  CHECK_FALSE(r3.agree);
  CHECK(r3.prediction.length == 78);
  CHECK(r3.simulated == 195);
  CHECK_FALSE(r3.trace_excerpt.empty());

  const auto r6 = verify_prediction(parse_spec("Q8sd:6:rot3"));
  CHECK_FALSE(r6.agree);
  CHECK(r6.prediction.length == 78);
  CHECK(r6.simulated == 390);
}

TEST_CASE("slot three columns disagree with the parity law") {
  const auto p = verify_prediction(parse_spec("poly:2,2,6"));
  CHECK_FALSE(p.agree);
  CHECK(p.prediction.length == 9);
  CHECK(p.simulated == 3);

  const auto b = verify_prediction(parse_spec("bpoly:2,2,5"));
  CHECK_FALSE(b.agree);
  CHECK(b.prediction.length == 30);
  CHECK(b.simulated == 6);
}

TEST_CASE("prediction coverage is explicit about unsupported shapes") {
  for (const char* spec : {"Z:7", "Q8xZ:5", "Q8xZ:4", "Z:3xQ8"}) {
    try {
      (void)predict_for_spec(parse_spec(spec));
      FAIL("expected no prediction for: ", spec);
    } catch (const std::invalid_argument& e) {
      CHECK(std::string(e.what()).find("supported families") != std::string::npos);
    }
  }
}

TEST_CASE("custom seeds are compared against the same closed form") {
  const auto spec = parse_spec("Q8");
  const auto g = pn::groups::realize(spec);
  const auto alt = make_seed(g, {g.parse_element("j"), g.parse_element("k")});
  const auto r = verify_prediction(spec, g, alt);
  CHECK(r.prediction.length == 6);
  CHECK(r.simulated == 6);
  CHECK(r.agree);
}

TEST_CASE("window distinctness holds on sampled generating tuples") {
  for (const char* spec : {"Z:8", "D:5", "Dic:3", "Q8", "Z:3xZ:4"}) {
    const auto g = parse_group_spec(spec);
    for (std::size_t arity : {2u, 3u}) {
      const auto tuples = generating_tuples(g, arity, 5);
      for (const auto& t : tuples) {
        const auto rep = orbit_period(make_seed(g, t), true);
        REQUIRE(rep.windows_distinct.has_value());
        CHECK(*rep.windows_distinct);
        CHECK(rep.period >= 1);
      }
    }
  }
}

TEST_CASE("generated closure detection") {
  const auto g = make_q8();
  CHECK(generates(g, {g.parse_element("i"), g.parse_element("j")}));
  CHECK_FALSE(generates(g, {g.parse_element("i"), g.parse_element("-i")}));
  CHECK_FALSE(generates(g, {g.parse_element("-1")}));
}

TEST_CASE("exhaustive tuple sweep counts the generating pairs of Q8") {
  const auto g = make_q8();
  const auto tuples = generating_tuples(g, 2, 1000, true);
  CHECK(tuples.size() == 24);
  for (const auto& t : tuples) CHECK(generates(g, t));
}

TEST_CASE("exhaustive sweeps refuse large groups") {
  CHECK_THROWS_AS((void)generating_tuples(parse_group_spec("Q8xZ:12"), 2, 10, true),
                  std::invalid_argument);
}

TEST_CASE("a rank three group has no generating pairs") {
  const auto g = parse_group_spec("Q8xZ:12");
  CHECK(generating_tuples(g, 2, 10).empty());
  CHECK_FALSE(generating_tuples(g, 3, 5).empty());
}
