#include "symx/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"

#include "symx/codes.hpp"
#include "symx/sexpr.hpp"

namespace symx {

const std::vector<std::string> kSuiteNames = {
    "symmetry-lemma", "oracle-equiv",   "restriction", "mixing",
    "normality",      "tenacity",       "model1-product",
    "model2-codes",   "choice-build",   "measurability", "find-auto"};

namespace {

using Rng = std::mt19937_64;

std::vector<OrderPoint> nat_points(std::uint64_t k) {
  std::vector<OrderPoint> out;
  for (std::uint64_t i = 0; i < k; ++i) out.push_back(OrderPoint::nat(i));
  return out;
}

TruncatedPoset make_poset(std::uint64_t coords, std::uint32_t slots) {
  return TruncatedPoset{nat_points(coords), slots};
}

std::uint64_t pick(Rng& rng, std::uint64_t n) {  // uniform in [0, n)
  return std::uniform_int_distribution<std::uint64_t>(0, n - 1)(rng);
}


template <class T>
const T& pick_of(Rng& rng, const std::vector<T>& v) {
  return v[pick(rng, v.size())];
}

struct Clock {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

void note(SuiteReport& r, std::string cex) {
  if (r.counterexamples.size() < 20) r.counterexamples.push_back(std::move(cex));
  r.pass = false;
}

// --- symmetry-lemma -------------------------------------------------------

SuiteReport suite_symmetry_lemma(const RunConfig& cfg) {
  SuiteReport r{.suite = cfg.suite, .pass = true, .seed = cfg.seed};
  auto t = make_poset(std::min<std::uint64_t>(cfg.index_size, 3),
                      std::min<std::uint32_t>(cfg.slots, 3));
  auto g = GroupDesc::full(IndexDomain::plain(t.domain.size()));
  auto elems = enumerate_group(g, t.domain);
  auto rep = check_symmetry_lemma(t, elems, cfg.depth, 1, cfg.budget);
  r.checked = rep.checked;
  for (const auto& c : rep.counterexamples)
    note(r, "p=" + condition_to_string(c.p) + " pi=" + aut_to_string(c.pi) +
                " phi=" + formula_to_string(c.phi));
  return r;
}

// --- oracle-equiv ---------------------------------------------------------

struct SizedEngine {
  std::unique_ptr<ForcingEngine> eng;
  std::vector<Name> names;
  std::vector<FormulaP> formulas;
};

SizedEngine& engine_for(std::map<std::pair<std::uint64_t, std::uint32_t>,
                                 SizedEngine>& cache,
                        std::uint64_t coords, std::uint32_t slots,
                        std::size_t fdepth) {
  auto key = std::make_pair(coords, slots);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  SizedEngine se;
  auto t = make_poset(coords, slots);
  se.eng = std::make_unique<ForcingEngine>(t);
  se.names = enumerate_names(t, 2, 40);
  se.formulas = enumerate_formulas(se.names, fdepth, 400);
  return cache.emplace(key, std::move(se)).first->second;
}

SuiteReport suite_oracle_equiv(const RunConfig& cfg) {
  SuiteReport r{.suite = cfg.suite, .pass = true, .seed = cfg.seed};
  Rng rng(cfg.seed);
  std::map<std::pair<std::uint64_t, std::uint32_t>, SizedEngine> cache;
  std::uint64_t max_c = std::min<std::uint64_t>(cfg.index_size, 3);
  std::uint32_t max_s = std::min<std::uint32_t>(cfg.slots, 3);
  for (std::uint64_t k = 0; k < cfg.cases; ++k) {
    std::uint64_t c = 1 + pick(rng, max_c);
    std::uint32_t s = 1 + static_cast<std::uint32_t>(pick(rng, max_s));
    if (c * s > 9) s = 1;  // keep atom grids small
    auto& se = engine_for(cache, c, s, 2);
    const auto& conds = se.eng->all_conditions();
    const auto& p = conds[pick(rng, conds.size())];
    const auto& phi = pick_of(rng, se.formulas);
    bool a = se.eng->forces(p, phi);
    bool b = se.eng->forces_oracle(p, phi);
    ++r.checked;
    if (a != b)
      note(r, "p=" + condition_to_string(p) + " phi=" + formula_to_string(phi) +
                  " forces=" + (a ? "1" : "0") + " oracle=" + (b ? "1" : "0"));
  }
  return r;
}

// --- restriction ----------------------------------------------------------

SuiteReport suite_restriction(const RunConfig& cfg) {
  SuiteReport r{.suite = cfg.suite, .pass = true, .seed = cfg.seed};
  Rng rng(cfg.seed);
  auto t = make_poset(2, 2);
  ForcingEngine eng(t);
  auto names = enumerate_names(t, 2, 40);
  const auto& conds = eng.all_conditions();
  Name empty = check_name(HF{});
  for (std::uint64_t k = 0; k < cfg.cases; ++k) {
    const auto& n = pick_of(rng, names);
    Condition p;
    while (p.empty()) p = pick_of(rng, conds);
    Name rest = restrict_name(n, p);
    ++r.checked;
    if (!eng.forces(p, f_eq(rest, n)))
      note(r, "below " + condition_to_string(p) + ": " + name_to_string(rest) +
                  " != " + name_to_string(n));
    // flip one committed cell: an incompatible condition, under which the
    // restriction collapses to the empty set
    auto cell = *p.entries.begin();
    Condition q;
    q.entries[cell.first] = !cell.second;
    if (!eng.forces(q, f_eq(rest, empty)))
      note(r, "off " + condition_to_string(p) + ": " + name_to_string(rest) +
                  " not empty under " + condition_to_string(q));
  }
  return r;
}

// --- mixing ---------------------------------------------------------------

SuiteReport suite_mixing(const RunConfig& cfg) {
  SuiteReport r{.suite = cfg.suite, .pass = true, .seed = cfg.seed};
  Rng rng(cfg.seed);
  auto t = make_poset(2, 2);
  SymmetricSystem s{t, GroupDesc::full(IndexDomain::plain(2)),
                    FilterDesc{GroupDesc::full(IndexDomain::plain(2)),
                               SupportIdeal::finite_sets()}};
  auto names = enumerate_names(t, 2, 40);
  for (std::uint64_t k = 0; k < cfg.cases; ++k) {
    // antichain of 2..4 branches splitting on one or two cells
    std::uint64_t c1 = pick(rng, 2), s1 = pick(rng, 2);
    std::uint64_t c2 = pick(rng, 2), s2 = pick(rng, 2);
    bool wide = (pick(rng, 2) == 0) && (c1 != c2 || s1 != s2);
    CondKey k1{OrderPoint::nat(c1), static_cast<std::uint32_t>(s1)};
    CondKey k2{OrderPoint::nat(c2), static_cast<std::uint32_t>(s2)};
    std::vector<std::pair<Condition, Name>> branches;
    Condition p0, p1;
    p0.entries[k1] = false;
    p1.entries[k1] = true;
    if (!wide) {
      branches = {{p0, pick_of(rng, names)}, {p1, pick_of(rng, names)}};
    } else {
      Condition p10 = p1, p11 = p1;
      p10.entries[k2] = false;
      p11.entries[k2] = true;
      branches = {{p0, pick_of(rng, names)},
                  {p10, pick_of(rng, names)},
                  {p11, pick_of(rng, names)}};
    }
    auto rep = check_mixable(s, branches);
    ++r.checked;
    if (!rep.ok) note(r, "mix failed: " + rep.reason);
  }
  return r;
}

// --- normality ------------------------------------------------------------

bool same_group(std::vector<Automorphism> a, std::vector<Automorphism> b) {
  std::sort(a.begin(), a.end(), AutLess{});
  std::sort(b.begin(), b.end(), AutLess{});
  return a == b;
}

SuiteReport suite_normality(const RunConfig& cfg) {
  SuiteReport r{.suite = cfg.suite, .pass = true, .seed = cfg.seed};
  Rng rng(cfg.seed);
  std::uint64_t k = std::max<std::uint64_t>(3, std::min<std::uint64_t>(cfg.index_size, 4));
  auto universe = nat_points(k);
  auto ideal = SupportIdeal::finite_sets();
  auto full = enumerate_group(GroupDesc::full(IndexDomain::plain(k)), universe);
  for (std::uint64_t c = 0; c < cfg.cases; ++c) {
    const auto& pi = pick_of(rng, full);
    PointSet e;
    for (std::uint64_t i = 0; i < k; ++i)
      if (pick(rng, 2) == 0) e.insert(OrderPoint::nat(i));
    Cut cut = Cut::finite(e);
    Cut image = conjugate_fix(pi, cut, &ideal);
    // fix(pi[E]) must be the pointwise conjugate of fix(E)
    auto fixe = enumerate_group(GroupDesc::fix(cut), universe);
    std::vector<Automorphism> conj;
    auto inv = invert(pi);
    for (const auto& sg : fixe) conj.push_back(compose(compose(pi, sg), inv));
    auto fiximg = enumerate_group(GroupDesc::fix(image), universe);
    ++r.checked;
    if (!same_group(conj, fiximg))
      note(r, "pi=" + aut_to_string(pi) + " E=" + cut_to_string(cut) +
                  " image=" + cut_to_string(image));
  }
  return r;
}

// --- tenacity ---------------------------------------------------------------

SuiteReport suite_tenacity(const RunConfig& cfg) {
  SuiteReport r{.suite = cfg.suite, .pass = true, .seed = cfg.seed};
  std::uint64_t k = std::min<std::uint64_t>(cfg.index_size, 2);
  std::uint32_t sl = std::min<std::uint32_t>(cfg.slots, 2);
  auto t = make_poset(k, sl);
  ForcingEngine eng(t);
  auto universe = nat_points(k);
  FilterDesc f{GroupDesc::full(IndexDomain::plain(k)), SupportIdeal::finite_sets()};
  for (const auto& p : eng.all_conditions()) {
    auto w = is_tenacious(p, f);
    ++r.checked;
    if (!w.has_value()) {
      note(r, "no witness for " + condition_to_string(p) + ": " + w.reason());
      continue;
    }
    for (const auto& pi : enumerate_group(GroupDesc::fix(w.value()), universe))
      if (!(apply_condition(pi, p) == p)) {
        note(r, "fix(" + cut_to_string(w.value()) + ") moves " +
                    condition_to_string(p) + " via " + aut_to_string(pi));
        break;
      }
  }
  return r;
}

// --- model1-product ---------------------------------------------------------

BasedFn random_based(Rng& rng, std::uint64_t bound,
                     const std::vector<OrderPoint>& grid) {
  BasedFn f;
  f.bound = bound;
  f.top = pick(rng, bound);
  std::uint64_t v = f.top;
  for (const auto& x : grid) {
    if (v == 0) break;
    if (pick(rng, 2) == 0) {
      v = pick(rng, v);  // strictly below the previous value
      f.steps.emplace_back(x, v);
    }
  }
  return f;
}

SuiteReport suite_model1(const RunConfig& cfg) {
  SuiteReport r{.suite = cfg.suite, .pass = true, .seed = cfg.seed};
  Rng rng(cfg.seed);
  // frozen worked example: f2 x f3 -> f6
  {
    BasedFn f2{1, 2, {{OrderPoint::rat(1), 0}}};
    BasedFn f3{2, 3, {{OrderPoint::rat(0), 1}, {OrderPoint::rat(5), 0}}};
    BasedFn f6 = product_based(f2, f3, 2, 3);
    BasedFn want{5, 6, {{OrderPoint::rat(0), 4}, {OrderPoint::rat(1), 1},
                        {OrderPoint::rat(5), 0}}};
    ++r.checked;
    if (!(f6.top == want.top && f6.bound == want.bound && f6.steps == want.steps))
      note(r, "frozen product mismatch: " + basedfn_to_string(f6));
    auto [g2, g3] = unproduct_based(f6, 2, 3);
    ++r.checked;
    if (!(g2.steps == f2.steps && g2.top == f2.top) ||
        !(g3.steps == f3.steps && g3.top == f3.top))
      note(r, "frozen round trip mismatch");
  }
  std::vector<OrderPoint> grid;
  for (int i = 0; i <= 7; ++i) grid.push_back(OrderPoint::rat(i));
  for (std::uint64_t c = 0; c < cfg.cases; ++c) {
    std::uint64_t n = 1 + pick(rng, 5), m = 1 + pick(rng, 5);
    BasedFn fn = random_based(rng, n, grid);
    BasedFn fm = random_based(rng, m, grid);
    BasedFn fnm = product_based(fn, fm, n, m);
    ++r.checked;
    if (!is_based(fnm) || fnm.bound != n * m) {
      note(r, "product not based: " + basedfn_to_string(fnm));
      continue;
    }
    // pointwise law and round trip
    bool bad = false;
    for (const auto& x : grid)
      if (eval_based(fnm, x) != m * eval_based(fn, x) + eval_based(fm, x))
        bad = true;
    auto [gn, gm] = unproduct_based(fnm, n, m);
    for (const auto& x : grid) {
      if (eval_based(gn, x) != eval_based(fn, x)) bad = true;
      if (eval_based(gm, x) != eval_based(fm, x)) bad = true;
    }
    if (bad)
      note(r, "law/round-trip fails at n=" + std::to_string(n) +
                  " m=" + std::to_string(m) + " f=" + basedfn_to_string(fn) +
                  " g=" + basedfn_to_string(fm));
  }
  return r;
}

// --- model2-codes -----------------------------------------------------------

SeqCode random_seq(Rng& rng, std::size_t len, std::uint64_t tag) {
  SeqCode c;
  c.tag = tag;
  for (std::size_t i = 0; i < len; ++i) c.prefix.push_back(pick(rng, 2));
  return c;
}

SuiteReport suite_model2(const RunConfig& cfg) {
  SuiteReport r{.suite = cfg.suite, .pass = true, .seed = cfg.seed};
  Rng rng(cfg.seed);
  for (std::uint64_t c = 0; c < cfg.cases; ++c) {
    // interleave round trip
    std::size_t len = 1 + pick(rng, 32);
    SeqCode f = random_seq(rng, len, 0), g = random_seq(rng, len, 0);
    auto h = interleave(f, g);
    auto [f2, g2] = deinterleave(h);
    ++r.checked;
    if (!(f2 == f && g2 == g)) note(r, "interleave round trip fails");
    // product round trip on random S, T
    std::set<std::uint64_t> s, t;
    for (std::uint64_t i = 0; i < 5; ++i) {
      if (pick(rng, 2)) s.insert(i);
      if (pick(rng, 2)) t.insert(i);
    }
    std::size_t plen = 1 + pick(rng, 8);
    std::map<std::uint64_t, SeqCode> cs, ct;
    for (auto i : s) cs[i] = random_seq(rng, plen, i);
    for (auto i : t) ct[i] = random_seq(rng, plen, i);
    ASCode a = make_ascode(s, cs), b = make_ascode(t, ct);
    auto ab = product_code(a, b);
    auto [a2, b2] = unproduct_code(ab, s, t);
    ++r.checked;
    if (!(a2 == a && b2 == b)) note(r, "product_code round trip fails");
  }
  // intersection law, exhaustively over supports: membership in a family
  // depends only on the support, so one representative code per support mask
  // and a precomputed membership table cover the full grid
  std::vector<std::set<std::uint64_t>> fam(256);
  std::vector<ASCode> reps;
  for (std::uint64_t m = 0; m < 256; ++m)
    for (std::uint64_t i = 0; i < 8; ++i)
      if (m >> i & 1) fam[m].insert(i);
  std::set<std::uint64_t> all = fam[255];
  for (std::uint64_t um = 0; um < 256; ++um) {
    std::map<std::uint64_t, SeqCode> comp;
    for (auto i : all)
      comp[i] = SeqCode{{(um >> i & 1) ? std::uint64_t(1) : 0, 0, 0, 0}, i};
    reps.push_back(make_ascode(all, comp));
  }
  std::vector<std::vector<bool>> member(256, std::vector<bool>(256));
  for (std::uint64_t um = 0; um < 256; ++um)
    for (std::uint64_t m = 0; m < 256; ++m)
      member[um][m] = in_family(reps[um], fam[m]);
  for (std::uint64_t sm = 0; sm < 256 && r.pass; ++sm)
    for (std::uint64_t tm = 0; tm < 256; ++tm) {
      bool ok = true;
      for (std::uint64_t um = 0; um < 256; ++um)
        if ((member[um][sm] && member[um][tm]) != member[um][sm & tm]) ok = false;
      ++r.checked;
      if (!ok) {
        note(r, "intersection law fails for S mask " + std::to_string(sm) +
                    ", T mask " + std::to_string(tm));
        break;
      }
    }
  // and the small-grid exhaustive checker over genuine code grids
  ++r.checked;
  if (!intersect_code_law({0}, {0, 1}, 2, 3) ||
      !intersect_code_law({0, 1}, {1}, 2, 3) || !intersect_code_law({}, {0}, 2, 3))
    note(r, "small-grid intersect_code_law fails");
  return r;
}

// --- choice-build -----------------------------------------------------------

SuiteReport suite_choice(const RunConfig& cfg) {
  SuiteReport r{.suite = cfg.suite, .pass = true, .seed = cfg.seed};
  Rng rng(cfg.seed);
  std::uint64_t cases = std::max<std::uint64_t>(cfg.cases, 20);
  std::uint64_t dom = 6;
  auto t = make_poset(dom, 1);
  SymmetricSystem s{t, GroupDesc::full(IndexDomain::plain(dom)),
                    FilterDesc{GroupDesc::full(IndexDomain::plain(dom)),
                               SupportIdeal::finite_sets()}};
  ForcingEngine eng(t);
  Condition one;
  for (std::uint64_t c = 0; c < std::min<std::uint64_t>(cases, 200); ++c) {
    std::uint64_t k = 1 + pick(rng, 4);  // family size
    ChoiceInput in;
    for (std::uint64_t i = 0; i < k; ++i) {
      Name xi = bullet_name({gen_name(OrderPoint::nat(i))});
      in.family.elems.emplace_back(OrderPoint::nat(i), xi);
      in.a_names[OrderPoint::nat(i)] = check_nat(pick(rng, 3));
    }
    bool swap = k >= 2 && pick(rng, 2) == 0;
    in.h = swap ? GroupDesc::generated({Automorphism::transposition(
                      OrderPoint::nat(0), OrderPoint::nat(1))})
                : GroupDesc::generated({});
    in.k = GroupDesc::generated({});
    Name f = build_choice_name(in, s);
    ++r.checked;
    auto cert = is_hereditarily_symmetric(f, s);
    if (!cert.has_value()) {
      note(r, "choice name not HS: " + cert.reason());
      continue;
    }
    // every index must receive a value transported from some orbit
    // representative: exists j, pi in H with pi x_j = x_i and <x_i, pi a_j>
    // forced into f
    auto helems = enumerate_group(in.h, t.domain);
    bool bad = false;
    for (const auto& [i, xi] : in.family.elems) {
      bool found = false;
      for (const auto& [j, xj] : in.family.elems)
        for (const auto& pi : helems) {
          if (!names_equal_structural(apply_name(pi, xj), xi)) continue;
          Name pa = apply_name(pi, in.a_names.at(j));
          if (eng.forces(one, f_elem(opair_name(xi, pa), f))) found = true;
        }
      if (!found) bad = true;
    }
    if (bad) note(r, "per-index choice value missing from " + name_to_string(f));
  }
  // ill-posed fixture: the stabilizer of x_0 moves a_0 and no repair exists
  {
    ChoiceInput in;
    in.family.elems.emplace_back(OrderPoint::nat(0),
                                 bullet_name({gen_name(OrderPoint::nat(0))}));
    in.a_names[OrderPoint::nat(0)] = bullet_name({gen_name(OrderPoint::nat(2))});
    in.h = GroupDesc::generated(
        {Automorphism::transposition(OrderPoint::nat(2), OrderPoint::nat(3))});
    in.k = GroupDesc::generated({});
    ++r.checked;
    try {
      build_choice_name(in, s);
      note(r, "ill-posed fixture was accepted");
    } catch (const Error& e) {
      if (std::string(e.kind()) != "WellDefinednessFailure")
        note(r, std::string("wrong rejection kind: ") + e.kind());
    }
  }
  return r;
}

// --- measurability ----------------------------------------------------------

SuiteReport suite_measurability(const RunConfig& cfg) {
  SuiteReport r{.suite = cfg.suite, .pass = true, .seed = cfg.seed};
  std::uint64_t dom = 4;
  auto t = make_poset(dom, 1);
  ForcingEngine eng(t);
  SymmetricSystem s{t, GroupDesc::full(IndexDomain::plain(dom)),
                    FilterDesc{GroupDesc::full(IndexDomain::plain(dom)),
                               SupportIdeal::finite_sets()}};
  FamilyName x;
  for (std::uint64_t i = 0; i < 2; ++i)
    x.elems.emplace_back(OrderPoint::nat(i),
                         opair_name(gen_name(OrderPoint::nat(i)), check_nat(i)));
  ++r.checked;
  if (!is_injective_name(x, eng)) note(r, "tagged family not injective");
  ++r.checked;
  if (!measures(GroupDesc::fix(Cut::finite({OrderPoint::nat(0), OrderPoint::nat(1)})),
                x, s))
    note(r, "fix({0,1}) fails to measure the family");
  ++r.checked;
  if (!is_densely_measurable(x, s)) note(r, "family not densely measurable");
  // full ambient group also measures: sym(x_i) together with anything
  // generates, or already contains
  ++r.checked;
  if (!measures(GroupDesc::full(IndexDomain::plain(dom)), x, s))
    note(r, "full group fails to measure");
  // non-measurable fixture: too-small generated group, threadbare ideal
  {
    SymmetricSystem bad{
        t,
        GroupDesc::generated(
            {Automorphism::transposition(OrderPoint::nat(0), OrderPoint::nat(1)),
             Automorphism::transposition(OrderPoint::nat(2), OrderPoint::nat(3))}),
        FilterDesc{GroupDesc::generated({Automorphism::transposition(
                       OrderPoint::nat(0), OrderPoint::nat(1)),
                   Automorphism::transposition(OrderPoint::nat(2),
                                               OrderPoint::nat(3))}),
                   SupportIdeal::of({Cut::finite({}),
                                     Cut::finite({OrderPoint::nat(0)})})}};
    FamilyName y;
    y.elems.emplace_back(
        OrderPoint::nat(0),
        opair_name(gen_name(OrderPoint::nat(0)), gen_name(OrderPoint::nat(2))));
    ++r.checked;
    if (is_densely_measurable(y, bad))
      note(r, "non-measurable fixture reported measurable");
  }
  return r;
}

// --- find-auto --------------------------------------------------------------

SuiteReport suite_find_auto(const RunConfig& cfg) {
  SuiteReport r{.suite = cfg.suite, .pass = true, .seed = cfg.seed};
  Rng rng(cfg.seed);
  for (std::uint64_t c = 0; c < cfg.cases; ++c) {
    AutoSpec spec;
    bool plain = pick(rng, 2) == 0;
    auto pt = [&](std::uint64_t i) {
      return plain ? OrderPoint::nat(i) : OrderPoint::rat(static_cast<long long>(i));
    };
    std::uint64_t from = pick(rng, 8), to = pick(rng, 8);
    if (to == from) to = (to + 1) % 8;
    spec.move_from = pt(from);
    if (pick(rng, 2)) spec.move_to = pt(to);
    if (pick(rng, 2)) {
      PointSet fixed;
      for (std::uint64_t i = 8; i < 10; ++i) fixed.insert(pt(i));
      spec.fix_cut = Cut::finite(fixed);
    }
    if (!plain && pick(rng, 3) == 0) {
      // confining interval around everything in play
      spec.confine = std::make_pair(OrderPoint::rat(-1), OrderPoint::rat(12));
    }
    auto out = find_automorphism(spec);
    ++r.checked;
    if (out.has_value()) {
      if (auto bad = verify_automorphism(out.value(), spec))
        note(r, "returned automorphism fails its spec: " + *bad);
    } else {
      note(r, "satisfiable spec rejected: " + out.reason());
    }
  }
  // impossible fixtures must come back unsatisfiable, not throw
  std::vector<AutoSpec> impossible;
  {
    AutoSpec a;  // move a fixed point
    a.move_from = OrderPoint::nat(1);
    a.move_to = OrderPoint::nat(2);
    a.fix_cut = Cut::finite({OrderPoint::nat(1)});
    impossible.push_back(a);
    AutoSpec b;  // order automorphism cannot cross a fixed initial segment
    b.move_from = OrderPoint::rat(1);
    b.move_to = OrderPoint::rat(5);
    b.fix_cut = Cut::initial(OrderPoint::rat(3), true);
    impossible.push_back(b);
    AutoSpec d;  // target outside the confining interval
    d.move_from = OrderPoint::rat(1);
    d.move_to = OrderPoint::rat(9);
    d.confine = std::make_pair(OrderPoint::rat(0), OrderPoint::rat(4));
    impossible.push_back(d);
  }
  for (const auto& spec : impossible) {
    auto out = find_automorphism(spec);
    ++r.checked;
    if (out.has_value())
      note(r, "impossible spec got an automorphism: " +
                  aut_to_string(out.value()));
  }
  return r;
}

}  // namespace

SuiteReport run_suite(const RunConfig& cfg) {
  Clock clk;
  SuiteReport r;
  if (cfg.suite == "symmetry-lemma") r = suite_symmetry_lemma(cfg);
  else if (cfg.suite == "oracle-equiv") r = suite_oracle_equiv(cfg);
  else if (cfg.suite == "restriction") r = suite_restriction(cfg);
  else if (cfg.suite == "mixing") r = suite_mixing(cfg);
  else if (cfg.suite == "normality") r = suite_normality(cfg);
  else if (cfg.suite == "tenacity") r = suite_tenacity(cfg);
  else if (cfg.suite == "model1-product") r = suite_model1(cfg);
  else if (cfg.suite == "model2-codes") r = suite_model2(cfg);
  else if (cfg.suite == "choice-build") r = suite_choice(cfg);
  else if (cfg.suite == "measurability") r = suite_measurability(cfg);
  else if (cfg.suite == "find-auto") r = suite_find_auto(cfg);
  else throw UnknownSuite("no suite named '" + cfg.suite + "'");
  r.suite = cfg.suite;
  r.seed = cfg.seed;
  r.millis = clk.ms();
  return r;
}

std::string report_to_json(const SuiteReport& r) {
  nlohmann::json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass;
  j["checked"] = r.checked;
  j["seed"] = r.seed;
  j["millis"] = r.millis;
  j["counterexamples"] = r.counterexamples;
  return j.dump();
}

std::string report_to_text(const SuiteReport& r) {
  std::ostringstream os;
  os << r.suite << ": " << (r.pass ? "pass" : "FAIL") << " (" << r.checked
     << " checks, " << static_cast<long long>(r.millis) << " ms, seed "
     << r.seed << ")";
  for (const auto& c : r.counterexamples) os << "\n  " << c;
  return os.str();
}

}  // namespace symx
