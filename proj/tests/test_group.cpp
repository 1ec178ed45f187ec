#include "doctest.h"

#include <algorithm>

#include "symx/group.hpp"
#include "symx/sexpr.hpp"

using namespace symx;

TEST_CASE("plain permutations compose pointwise, right factor first") {
  auto a = Automorphism::transposition(OrderPoint::nat(0), OrderPoint::nat(1));
  auto b = Automorphism::transposition(OrderPoint::nat(1), OrderPoint::nat(2));
  auto c = compose(a, b);  // a after b
  CHECK(apply_point(c, OrderPoint::nat(2)) == OrderPoint::nat(0));
  CHECK(apply_point(c, OrderPoint::nat(1)) == OrderPoint::nat(2));
  CHECK(compose(c, invert(c)).is_identity());
}

TEST_CASE("piecewise-linear maps interpolate between breakpoints") {
  auto pi = Automorphism::pl({{Rational(0), Rational(0)},
                              {Rational(1), Rational(2)},
                              {Rational(3), Rational(3)}},
                             std::nullopt);
  CHECK(apply_point(pi, OrderPoint::rat(Rational(1, 2))) ==
        OrderPoint::rat(Rational(1)));
  CHECK(apply_point(pi, OrderPoint::rat(Rational(2))) ==
        OrderPoint::rat(Rational(5, 2)));
  // identity outside the support
  CHECK(apply_point(pi, OrderPoint::rat(Rational(-4))) ==
        OrderPoint::rat(Rational(-4)));
  CHECK(apply_point(pi, OrderPoint::rat(Rational(10))) ==
        OrderPoint::rat(Rational(10)));
  CHECK(pi.order_preserving());
  auto round = compose(invert(pi), pi);
  CHECK(round.is_identity());
}

TEST_CASE("collinear breakpoints collapse to the identity datum") {
  auto pi = Automorphism::pl({{Rational(0), Rational(0)},
                              {Rational(1), Rational(1)},
                              {Rational(2), Rational(2)}},
                             std::nullopt);
  CHECK(pi.is_identity());
}

TEST_CASE("conditions transform by relabelling coordinates") {
  Condition p;
  p.entries[{OrderPoint::nat(0), 0}] = true;
  p.entries[{OrderPoint::nat(1), 1}] = false;
  auto pi = Automorphism::transposition(OrderPoint::nat(0), OrderPoint::nat(1));
  auto q = apply_condition(pi, p);
  CHECK(q.entries.at({OrderPoint::nat(1), 0}) == true);
  CHECK(q.entries.at({OrderPoint::nat(0), 1}) == false);
  CHECK(apply_condition(pi, q) == p);
}

TEST_CASE("fix(E) conjugates to fix of the pointwise image") {
  // an order map fixing everything at or below 0 keeps the segment fixed
  auto pi = Automorphism::pl({{Rational(0), Rational(0)},
                              {Rational(1), Rational(2)},
                              {Rational(3), Rational(3)}},
                             std::nullopt);
  Cut seg = Cut::initial(OrderPoint::rat(Rational(0)), true);
  CHECK(fixes_cut(pi, seg));
  Cut img = conjugate_fix(pi, seg);
  CHECK(cut_equal(img, seg));

  Cut fin = Cut::finite({OrderPoint::rat(Rational(1))});
  Cut fimg = conjugate_fix(pi, fin);
  CHECK(cut_contains(fimg, OrderPoint::rat(Rational(2))));
  CHECK(!cut_contains(fimg, OrderPoint::rat(Rational(1))));

  auto ideal = SupportIdeal::of({fin});
  CHECK_THROWS_AS((void)conjugate_fix(pi, fin, &ideal), ImageNotInIdeal);
}

TEST_CASE("tenacity witnesses cover the condition's coordinates") {
  Condition p;
  p.entries[{OrderPoint::nat(0), 0}] = true;
  FilterDesc f{GroupDesc::full(IndexDomain::plain(3)), SupportIdeal::finite_sets()};
  auto w = is_tenacious(p, f);
  REQUIRE(w.has_value());
  for (const auto& pi :
       enumerate_group(GroupDesc::fix(w.value()), {OrderPoint::nat(0),
                                                   OrderPoint::nat(1),
                                                   OrderPoint::nat(2)}))
    CHECK(apply_condition(pi, p) == p);
}

TEST_CASE("orbit partition under the full finite group is a single orbit") {
  std::vector<OrderPoint> pts = {OrderPoint::nat(0), OrderPoint::nat(1),
                                 OrderPoint::nat(2)};
  auto part = orbits(GroupDesc::full(IndexDomain::plain(3)), pts);
  REQUIRE(part.orbits.size() == 1);
  CHECK(part.orbits[0].size() == 3);
  CHECK(part.orbits[0][0] == OrderPoint::nat(0));  // representative first

  auto split = orbits(GroupDesc::fix(Cut::finite({OrderPoint::nat(1)})), pts);
  CHECK(split.orbits.size() == 2);
}

TEST_CASE("generated closure respects the element cap") {
  std::vector<Automorphism> gens = {
      Automorphism::transposition(OrderPoint::nat(0), OrderPoint::nat(1)),
      Automorphism::transposition(OrderPoint::nat(1), OrderPoint::nat(2))};
  auto elems = closure(gens);
  CHECK(elems.size() == 6);  // S_3
  CHECK_THROWS_AS((void)closure(gens, 4), EnumerationBudgetExceeded);
}

TEST_CASE("constraint solver finds verified automorphisms") {
  AutoSpec spec;
  spec.move_from = OrderPoint::rat(Rational(1));
  spec.move_to = OrderPoint::rat(Rational(2));
  auto out = find_automorphism(spec);
  REQUIRE(out.has_value());
  CHECK(!verify_automorphism(out.value(), spec));
  CHECK(aut_to_string(out.value()) == "(pl (0 0) (1 2) (3 3))");

  spec.fix_cut = Cut::initial(OrderPoint::rat(Rational(3, 2)), false);
  auto blocked = find_automorphism(spec);
  CHECK(!blocked.has_value());  // a fixed segment separates source and target

  AutoSpec perm;
  perm.move_from = OrderPoint::nat(0);
  perm.keep_compatible = Condition{};
  auto moved = find_automorphism(perm);
  REQUIRE(moved.has_value());
  CHECK(apply_point(moved.value(), OrderPoint::nat(0)) != OrderPoint::nat(0));
}
