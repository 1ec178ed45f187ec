#include "doctest.h"

#include "symx/codes.hpp"
#include "symx/sexpr.hpp"

using namespace symx;

TEST_CASE("the multiplicative pairing of based functions, worked instance") {
  BasedFn f2{1, 2, {{OrderPoint::rat(Rational(1)), 0}}};
  BasedFn f3{2, 3, {{OrderPoint::rat(Rational(0)), 1},
                    {OrderPoint::rat(Rational(5)), 0}}};
  BasedFn f6 = product_based(f2, f3, 2, 3);
  CHECK(f6.bound == 6);
  CHECK(f6.top == 5);
  REQUIRE(f6.steps.size() == 3);
  CHECK(f6.steps[0] == std::pair{OrderPoint::rat(Rational(0)), std::uint64_t(4)});
  CHECK(f6.steps[1] == std::pair{OrderPoint::rat(Rational(1)), std::uint64_t(1)});
  CHECK(f6.steps[2] == std::pair{OrderPoint::rat(Rational(5)), std::uint64_t(0)});
  auto [g2, g3] = unproduct_based(f6, 2, 3);
  CHECK(g2.top == f2.top);
  CHECK(g2.steps == f2.steps);
  CHECK(g3.top == f3.top);
  CHECK(g3.steps == f3.steps);
}

TEST_CASE("product rejects mismatched bounds") {
  BasedFn f{1, 2, {}};
  BasedFn g{1, 3, {}};
  CHECK_THROWS_AS((void)product_based(f, g, 1, 3), NotInRange);
  CHECK_THROWS_AS((void)product_based(f, g, 0, 3), ZeroBound);
}

TEST_CASE("the intensional family enumerates its desk-scale members") {
  ANFamily a2{2};
  std::vector<OrderPoint> pts = {OrderPoint::rat(Rational(0)),
                                 OrderPoint::rat(Rational(1))};
  auto members = a2.enumerate(pts, 2);
  CHECK(!members.empty());
  for (const auto& f : members) {
    CHECK(a2.contains(f));
    CHECK(f.bound == 2);
  }
  BasedFn f3{2, 3, {}};
  CHECK(!a2.contains(f3));
}

TEST_CASE("interleaving is a bijection on equal-length prefixes") {
  SeqCode f{{1, 0, 1}, 0};
  SeqCode g{{0, 0, 1}, 0};
  auto h = interleave(f, g);
  CHECK(h.prefix == std::vector<std::uint64_t>{1, 0, 0, 0, 1, 1});
  auto [f2, g2] = deinterleave(h);
  CHECK(f2 == f);
  CHECK(g2 == g);
  SeqCode odd{{1, 0, 1}, 0};
  CHECK_THROWS_AS((void)deinterleave(odd), OddLength);
  SeqCode shorter{{1}, 0};
  CHECK_THROWS_AS((void)interleave(f, shorter), LengthMismatch);
}

TEST_CASE("product codes pass disjoint rows through and interleave shared ones") {
  ASCode a = make_ascode({0, 2}, {{0, SeqCode{{1, 1}, 0}}, {2, SeqCode{{0, 1}, 2}}});
  ASCode b = make_ascode({1, 2}, {{1, SeqCode{{1, 0}, 1}}, {2, SeqCode{{1, 0}, 2}}});
  ASCode c = product_code(a, b);
  CHECK(c.s == std::set<std::uint64_t>{0, 1, 2});
  CHECK(c.components.at(0).prefix == std::vector<std::uint64_t>{1, 1});
  CHECK(c.components.at(2).prefix == std::vector<std::uint64_t>{0, 1, 1, 0});
  auto [a2, b2] = unproduct_code(c, {0, 2}, {1, 2});
  CHECK(a2 == a);
  CHECK(b2 == b);
}

TEST_CASE("family membership depends only on the support") {
  ASCode c = make_ascode({0, 1}, {{0, SeqCode{{0, 0}, 0}}, {1, SeqCode{{1, 0}, 1}}});
  CHECK(code_support(c) == std::set<std::uint64_t>{1});
  CHECK(in_family(c, {1}));
  CHECK(in_family(c, {0, 1}));
  CHECK(!in_family(c, {0}));
}

TEST_CASE("the intersection law holds on exhaustive small grids") {
  CHECK(intersect_code_law({0}, {0, 1}, 2, 3));
  CHECK(intersect_code_law({0, 1}, {1}, 2, 3));
  CHECK(intersect_code_law({}, {0, 1}, 2, 3));
}

TEST_CASE("a code pins the atom of its principal generic") {
  TruncatedPoset t;
  t.domain = {OrderPoint::prod(0, 0), OrderPoint::prod(0, 1),
              OrderPoint::prod(1, 0), OrderPoint::prod(1, 1)};
  t.slots = 1;
  auto g = generic_from_code(t, SeqCode{{1, 0}, 0});
  CHECK(g.atom.entries.at({OrderPoint::prod(0, 0), 0}) == true);
  CHECK(g.atom.entries.at({OrderPoint::prod(0, 1), 0}) == false);
  CHECK(g.atom.entries.at({OrderPoint::prod(1, 0), 0}) == false);
}
