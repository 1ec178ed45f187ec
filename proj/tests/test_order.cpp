#include "doctest.h"

#include "symx/basedfn.hpp"
#include "symx/hf.hpp"
#include "symx/order.hpp"

using namespace symx;

TEST_CASE("point comparison stays inside one variant") {
  CHECK(cmp(OrderPoint::nat(1), OrderPoint::nat(4)) < 0);
  CHECK(cmp(OrderPoint::rat(Rational(1, 2)), OrderPoint::rat(Rational(1, 3))) > 0);
  CHECK(cmp(OrderPoint::lex(0, Rational(7)), OrderPoint::lex(1, Rational(-9))) < 0);
  CHECK(cmp(OrderPoint::prod(2, 1), OrderPoint::prod(2, 3)) < 0);
  CHECK_THROWS_AS((void)cmp(OrderPoint::nat(0), OrderPoint::rat(Rational(0))),
                  VariantMismatch);
}

TEST_CASE("between finds midpoints in the dense orders only") {
  auto m = between(OrderPoint::rat(Rational(0)), OrderPoint::rat(Rational(1)));
  CHECK(cmp(OrderPoint::rat(Rational(0)), m) < 0);
  CHECK(cmp(m, OrderPoint::rat(Rational(1))) < 0);
  CHECK_THROWS_AS((void)between(OrderPoint::nat(0), OrderPoint::nat(1)),
                  NoPointBetween);
  // across lex blocks the lower block still has room above
  auto l = between(OrderPoint::lex(0, Rational(0)), OrderPoint::lex(1, Rational(0)));
  CHECK(cmp(OrderPoint::lex(0, Rational(0)), l) < 0);
  CHECK(cmp(l, OrderPoint::lex(1, Rational(0))) < 0);
}

TEST_CASE("cut membership and inclusion") {
  Cut fin = Cut::finite({OrderPoint::nat(0), OrderPoint::nat(2)});
  CHECK(cut_contains(fin, OrderPoint::nat(2)));
  CHECK(!cut_contains(fin, OrderPoint::nat(1)));
  Cut seg = Cut::initial(OrderPoint::rat(Rational(1)), true);
  CHECK(cut_contains(seg, OrderPoint::rat(Rational(1))));
  CHECK(cut_contains(seg, OrderPoint::rat(Rational(-100))));
  CHECK(!cut_contains(seg, OrderPoint::rat(Rational(3, 2))));
  CHECK(cut_subset(Cut::finite({OrderPoint::nat(0)}), fin));
  CHECK(!cut_subset(fin, Cut::finite({OrderPoint::nat(0)})));
}

TEST_CASE("point rendering") {
  CHECK(point_to_string(OrderPoint::nat(3)) == "n:3");
  CHECK(point_to_string(OrderPoint::rat(Rational(5, 2))) == "q:5/2");
}

TEST_CASE("hereditarily finite sets are canonical and extensional") {
  HF two = HF::nat(2);
  HF alt;
  alt.insert(HF::nat(1));
  alt.insert(HF::nat(0));
  alt.insert(HF::nat(0));
  CHECK(two == alt);
  CHECK(HF::nat(3).contains(HF::nat(1)));
  auto p = HF::pair(HF::nat(0), HF::nat(1));
  auto kv = p.as_pair();
  REQUIRE(kv.has_value());
  CHECK(kv->first == HF::nat(0));
  CHECK(kv->second == HF::nat(1));
}

TEST_CASE("based functions evaluate as step data") {
  BasedFn f{2, 3, {{OrderPoint::rat(Rational(0)), 1},
                   {OrderPoint::rat(Rational(5)), 0}}};
  CHECK(is_based(f));
  CHECK(eval_based(f, OrderPoint::rat(Rational(-1))) == 2);
  CHECK(eval_based(f, OrderPoint::rat(Rational(0))) == 1);
  CHECK(eval_based(f, OrderPoint::rat(Rational(3))) == 1);
  CHECK(eval_based(f, OrderPoint::rat(Rational(7))) == 0);

  BasedFn bad{1, 2, {{OrderPoint::rat(Rational(0)), 1}}};  // step not below top
  CHECK(!is_based(bad));
}
