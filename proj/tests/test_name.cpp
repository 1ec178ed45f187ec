#include "doctest.h"

#include "symx/name.hpp"
#include "symx/sexpr.hpp"

using namespace symx;

namespace {
Condition cell(std::uint64_t coord, std::uint32_t slot, bool v) {
  Condition p;
  p.entries[{OrderPoint::nat(coord), slot}] = v;
  return p;
}
}  // namespace

TEST_CASE("bullet names deduplicate and sort their elements") {
  Name a = gen_name(OrderPoint::nat(0));
  Name b = gen_name(OrderPoint::nat(1));
  Name n = bullet_name({b, a, a});
  Name m = bullet_name({a, b});
  CHECK(names_equal_structural(n, m));
  CHECK(name_to_string(n) == "(bullet (gen n:0) (gen n:1))");
}

TEST_CASE("mix rejects branches that are not an antichain") {
  Condition p = cell(0, 0, true);
  Condition q = cell(1, 0, false);  // compatible with p
  CHECK_THROWS_AS(
      (void)mix_name({{p, check_nat(0)}, {q, check_nat(1)}}), NotAnAntichain);
  Condition pbar = cell(0, 0, false);
  CHECK_NOTHROW((void)mix_name({{p, check_nat(0)}, {pbar, check_nat(1)}}));
}

TEST_CASE("automorphisms act pointwise on generator indices") {
  auto pi = Automorphism::transposition(OrderPoint::nat(0), OrderPoint::nat(1));
  CHECK(names_equal_structural(apply_name(pi, gen_name(OrderPoint::nat(0))),
                               gen_name(OrderPoint::nat(1))));
  // check names are fixed: pi(x-check) = x-check
  Name c = check_nat(3);
  CHECK(apply_name(pi, c) == c);
  // the action pushes into pairs and entry conditions
  Name r = raw_name({{cell(0, 0, true), gen_name(OrderPoint::nat(0))}});
  Name img = apply_name(pi, r);
  CHECK(name_to_string(img) ==
        "(raw ((cond ((n:1 0) 1)) (gen n:1)))");
}

TEST_CASE("based names transform by precomposition with the inverse") {
  BasedFn f{1, 2, {{OrderPoint::rat(Rational(1)), 0}}};
  Name n = based_name(f);
  auto pi = Automorphism::pl({{Rational(0), Rational(0)},
                              {Rational(1), Rational(2)},
                              {Rational(3), Rational(3)}},
                             std::nullopt);
  Name m = apply_name(pi, n);
  // the step moves with its base point
  CHECK(name_to_string(m) == "(based (bound 2) (top 1) (pt q:2 0))");
  auto sigma = Automorphism::transposition(OrderPoint::rat(Rational(0)),
                                           OrderPoint::rat(Rational(1)));
  CHECK_THROWS_AS((void)apply_name(sigma, n), VariantMismatch);
}

TEST_CASE("support collects generator indices and condition coordinates") {
  Name n = opair_name(gen_name(OrderPoint::nat(2)),
                      raw_name({{cell(0, 0, true), check_nat(1)}}));
  auto pts = support_points(n);
  CHECK(pts.count(OrderPoint::nat(2)) == 1);
  CHECK(pts.count(OrderPoint::nat(0)) == 1);
  CHECK(pts.size() == 2);
  CHECK(support_points(check_nat(7)).empty());

  auto cov = support(n, SupportIdeal::finite_sets());
  REQUIRE(cov.has_value());
  CHECK(cut_contains(cov.value(), OrderPoint::nat(2)));
}

TEST_CASE("prec names are fixed by order automorphisms") {
  Name p = prec_name(IndexDomain::dlo());
  auto pi = Automorphism::pl({{Rational(0), Rational(0)},
                              {Rational(1), Rational(2)},
                              {Rational(3), Rational(3)}},
                             std::nullopt);
  CHECK(names_equal_structural(apply_name(pi, p), p));
}
