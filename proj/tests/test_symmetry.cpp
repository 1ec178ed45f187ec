#include "doctest.h"

#include "symx/sexpr.hpp"
#include "symx/symmetry.hpp"

using namespace symx;

namespace {

TruncatedPoset grid(std::uint64_t coords, std::uint32_t slots) {
  TruncatedPoset t;
  for (std::uint64_t i = 0; i < coords; ++i)
    t.domain.push_back(OrderPoint::nat(i));
  t.slots = slots;
  return t;
}

SymmetricSystem full_system(std::uint64_t coords, std::uint32_t slots) {
  return SymmetricSystem{grid(coords, slots),
                         GroupDesc::full(IndexDomain::plain(coords)),
                         FilterDesc{GroupDesc::full(IndexDomain::plain(coords)),
                                    SupportIdeal::finite_sets()}};
}

Condition cell(std::uint64_t coord, std::uint32_t slot, bool v) {
  Condition p;
  p.entries[{OrderPoint::nat(coord), slot}] = v;
  return p;
}

}  // namespace

TEST_CASE("generator names certify as hereditarily symmetric") {
  auto s = full_system(3, 1);
  Name n = bullet_name({gen_name(OrderPoint::nat(0)), gen_name(OrderPoint::nat(1))});
  auto cert = is_hereditarily_symmetric(n, s);
  REQUIRE(cert.has_value());
  CHECK(cert.value().children.size() == 2);
  CHECK(is_in_sym(Automorphism::transposition(OrderPoint::nat(0),
                                              OrderPoint::nat(1)),
                  n));
  CHECK(!is_in_sym(Automorphism::transposition(OrderPoint::nat(0),
                                               OrderPoint::nat(2)),
                   n));
}

TEST_CASE("a threadbare listed ideal blocks certification") {
  auto s = full_system(3, 1);
  s.filter.ideal = SupportIdeal::of({Cut::finite({})});
  auto cert = is_hereditarily_symmetric(gen_name(OrderPoint::nat(0)), s);
  CHECK(!cert.has_value());
}

TEST_CASE("mixing produces a certified name forced to match each branch") {
  auto s = full_system(2, 2);
  Name g0 = gen_name(OrderPoint::nat(0));
  Name g1 = gen_name(OrderPoint::nat(1));
  auto rep = check_mixable(s, {{cell(0, 0, true), g0}, {cell(0, 0, false), g1}});
  REQUIRE(rep.ok);
  ForcingEngine eng(s.poset);
  CHECK(eng.forces(cell(0, 0, true), f_eq(rep.mixed, g0)));
  CHECK(eng.forces(cell(0, 0, false), f_eq(rep.mixed, g1)));
}

TEST_CASE("measuring: containment or joint generation") {
  auto s = full_system(4, 1);
  FamilyName x;
  for (std::uint64_t i = 0; i < 2; ++i)
    x.elems.emplace_back(OrderPoint::nat(i),
                         opair_name(gen_name(OrderPoint::nat(i)), check_nat(i)));
  ForcingEngine eng(s.poset);
  CHECK(is_injective_name(x, eng));
  CHECK(measures(GroupDesc::fix(Cut::finite({OrderPoint::nat(0),
                                             OrderPoint::nat(1)})),
                 x, s));
  CHECK(is_densely_measurable(x, s));
}

TEST_CASE("a starved filter is not densely measurable") {
  auto t = grid(4, 1);
  auto gens = GroupDesc::generated(
      {Automorphism::transposition(OrderPoint::nat(0), OrderPoint::nat(1)),
       Automorphism::transposition(OrderPoint::nat(2), OrderPoint::nat(3))});
  SymmetricSystem s{t, gens,
                    FilterDesc{gens, SupportIdeal::of(
                                         {Cut::finite({}),
                                          Cut::finite({OrderPoint::nat(0)})})}};
  FamilyName y;
  y.elems.emplace_back(OrderPoint::nat(0),
                       opair_name(gen_name(OrderPoint::nat(0)),
                                  gen_name(OrderPoint::nat(2))));
  CHECK(!is_densely_measurable(y, s));
}

TEST_CASE("absolute representatives exist over the finite-set ideal") {
  FilterDesc f{GroupDesc::full(IndexDomain::plain(3)),
               SupportIdeal::of({Cut::finite({}),
                                 Cut::finite({OrderPoint::nat(0)})})};
  auto w = has_absolute_representative(
      f, {OrderPoint::nat(0), OrderPoint::nat(1), OrderPoint::nat(2)});
  CHECK(w.has_value());
}

TEST_CASE("raw depth counts expansion layers") {
  ForcingEngine eng(grid(2, 1));
  CHECK(raw_depth(eng.compile(check_nat(0))) == 1);
  CHECK(raw_depth(eng.compile(gen_name(OrderPoint::nat(0)))) == 2);
}

TEST_CASE("semicanonical names are forced equal to the applied value") {
  auto s = full_system(2, 1);
  ForcingEngine eng(s.poset);
  Name x0 = check_nat(0);
  // F maps 0-check to {1}-bullet: a ground function graph
  Name fn = bullet_name({opair_name(x0, bullet_name({check_nat(1)}))});
  Name a = build_semicanonical(eng, fn, x0, s, 4);
  Condition one;
  CHECK(eng.forces(one, f_elem(check_nat(1), a)));
  CHECK(eng.forces(one, f_not(f_elem(check_nat(0), a))));
  auto cert = is_hereditarily_symmetric(a, s);
  CHECK(cert.has_value());
}

TEST_CASE("choice names close off under the measuring subgroup's orbit") {
  auto s = full_system(4, 1);
  ChoiceInput in;
  Name x0 = bullet_name({gen_name(OrderPoint::nat(0))});
  Name x1 = bullet_name({gen_name(OrderPoint::nat(1))});
  in.family.elems = {{OrderPoint::nat(0), x0}, {OrderPoint::nat(1), x1}};
  in.a_names[OrderPoint::nat(0)] = check_nat(0);
  in.a_names[OrderPoint::nat(1)] = check_nat(1);
  in.h = GroupDesc::generated(
      {Automorphism::transposition(OrderPoint::nat(0), OrderPoint::nat(1))});
  in.k = GroupDesc::generated({});
  Name f = build_choice_name(in, s);
  ForcingEngine eng(s.poset);
  Condition one;
  // one orbit: the representative's value is transported to both indices
  bool from0 = eng.forces(one, f_elem(opair_name(x0, check_nat(0)), f)) &&
               eng.forces(one, f_elem(opair_name(x1, check_nat(0)), f));
  bool from1 = eng.forces(one, f_elem(opair_name(x0, check_nat(1)), f)) &&
               eng.forces(one, f_elem(opair_name(x1, check_nat(1)), f));
  CHECK((from0 || from1));
}

TEST_CASE("normalize_to_one lifts a below-p equality to the root") {
  auto s = full_system(2, 1);
  ForcingEngine eng(s.poset);
  Condition p = cell(0, 0, true);
  Name g = gen_name(OrderPoint::nat(0));
  Name lifted = normalize_to_one(p, restrict_name(g, p), check_name(HF{}));
  CHECK(eng.forces(p, f_eq(lifted, g)));
  CHECK(eng.forces(Condition{}, f_or(f_eq(lifted, g),
                                     f_eq(lifted, check_name(HF{})))));
}
