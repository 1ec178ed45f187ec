#include "doctest.h"

#include "symx/forcing.hpp"
#include "symx/sexpr.hpp"

using namespace symx;

namespace {

TruncatedPoset grid(std::uint64_t coords, std::uint32_t slots) {
  TruncatedPoset t;
  for (std::uint64_t i = 0; i < coords; ++i)
    t.domain.push_back(OrderPoint::nat(i));
  t.slots = slots;
  return t;
}

Condition cell(std::uint64_t coord, std::uint32_t slot, bool v) {
  Condition p;
  p.entries[{OrderPoint::nat(coord), slot}] = v;
  return p;
}

}  // namespace

TEST_CASE("generator names compile to their canonical raw form") {
  ForcingEngine eng(grid(2, 2));
  Name g = eng.compile(gen_name(OrderPoint::nat(0)));
  CHECK(name_to_string(g) ==
        "(raw ((cond ((n:0 0) 1)) (raw)) ((cond ((n:0 1) 1)) (raw ((cond) (raw)))))");
  // compilation is idempotent
  CHECK(eng.compile(g) == g);
}

TEST_CASE("forcing agrees with von Neumann arithmetic on ground names") {
  ForcingEngine eng(grid(2, 2));
  Condition one;
  CHECK(eng.forces(one, f_eq(check_nat(2),
                             bullet_name({check_nat(0), check_nat(1)}))));
  CHECK(eng.forces(one, f_elem(check_nat(1), check_nat(2))));
  CHECK(eng.forces(one, f_not(f_elem(check_nat(2), check_nat(2)))));
}

TEST_CASE("generic membership is decided by the committed cell") {
  ForcingEngine eng(grid(2, 2));
  Name g = gen_name(OrderPoint::nat(0));
  CHECK(eng.forces(cell(0, 0, true), f_elem(check_nat(0), g)));
  CHECK(eng.forces(cell(0, 0, false), f_not(f_elem(check_nat(0), g))));
  CHECK(!eng.forces(Condition{}, f_elem(check_nat(0), g)));
  CHECK(!eng.forces(Condition{}, f_not(f_elem(check_nat(0), g))));
}

TEST_CASE("restriction laws") {
  ForcingEngine eng(grid(2, 2));
  Name g = gen_name(OrderPoint::nat(0));
  Condition p = cell(0, 0, true);
  Name rest = restrict_name(g, p);
  CHECK(eng.forces(p, f_eq(rest, g)));
  CHECK(eng.forces(cell(0, 0, false), f_eq(rest, check_name(HF{}))));
  // mixing two restrictions along a maximal antichain recovers the name
  Name mixed = mix_name({{p, g}, {cell(0, 0, false), g}});
  CHECK(eng.forces(Condition{}, f_eq(mixed, g)));
}

TEST_CASE("forcing matches the total-extension oracle exhaustively") {
  ForcingEngine eng(grid(2, 2));
  auto names = enumerate_names(eng.poset(), 2, 24);
  auto formulas = enumerate_formulas(names, 2, 120);
  std::size_t checked = 0;
  for (const auto& p : eng.all_conditions())
    for (const auto& phi : formulas) {
      CHECK(eng.forces(p, phi) == eng.forces_oracle(p, phi));
      ++checked;
    }
  CHECK(checked >= 5000);
}

TEST_CASE("evaluation along an atom is a total assignment") {
  ForcingEngine eng(grid(1, 2));
  const auto& atoms = eng.atoms();
  REQUIRE(atoms.size() == 4);
  Name g = gen_name(OrderPoint::nat(0));
  for (const auto& a : atoms) {
    HF v = eng.val(g, a);
    for (std::uint32_t s = 0; s < 2; ++s)
      CHECK(v.contains(HF::nat(s)) ==
            a.atom.entries.at({OrderPoint::nat(0), s}));
  }
}

TEST_CASE("the symmetry lemma holds for the coordinate action") {
  auto t = grid(2, 2);
  auto group = enumerate_group(GroupDesc::full(IndexDomain::plain(2)), t.domain);
  auto rep = check_symmetry_lemma(t, group, 1, 1, 200000);
  CHECK(rep.counterexamples.empty());
  CHECK(rep.checked > 0);
}

TEST_CASE("a broken action is caught by the lemma checker") {
  auto t = grid(2, 2);
  auto group = enumerate_group(GroupDesc::full(IndexDomain::plain(2)), t.domain);
  // mutation: leave names untouched while conditions still move
  NameAction frozen = [](const Automorphism&, const Name& n) { return n; };
  auto rep = check_symmetry_lemma(t, group, 1, 1, 200000, frozen);
  CHECK(!rep.counterexamples.empty());
}

TEST_CASE("is_function_on holds for a literal graph name") {
  ForcingEngine eng(grid(2, 1));
  std::vector<Name> fam = {check_nat(0), check_nat(1)};
  Name fn = bullet_name({opair_name(check_nat(0), check_nat(1)),
                         opair_name(check_nat(1), check_nat(0))});
  CHECK(eng.forces(Condition{}, is_function_on(fn, fam)));
  Name notfn = bullet_name({opair_name(check_nat(0), check_nat(1)),
                            opair_name(check_nat(0), check_nat(0))});
  CHECK(!eng.forces(Condition{}, is_function_on(notfn, fam)));
}

TEST_CASE("oversized grids are rejected up front") {
  CHECK_THROWS_AS(ForcingEngine(grid(9, 2)), EnumerationBudgetExceeded);
}
