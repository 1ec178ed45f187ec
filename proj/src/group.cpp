#include "symx/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace symx {

bool operator<(const CondKey& a, const CondKey& b) {
  if (point_key_less(a.coord, b.coord)) return true;
  if (point_key_less(b.coord, a.coord)) return false;
  return a.slot < b.slot;
}

bool operator==(const CondKey& a, const CondKey& b) {
  return a.coord == b.coord && a.slot == b.slot;
}

PointSet Condition::support() const {
  PointSet s;
  for (const auto& [k, v] : entries) s.insert(k.coord);
  return s;
}

bool Condition::extends(const Condition& p) const {
  for (const auto& [k, v] : p.entries) {
    auto it = entries.find(k);
    if (it == entries.end() || it->second != v) return false;
  }
  return true;
}

bool Condition::compatible(const Condition& o) const {
  const Condition& small = entries.size() <= o.entries.size() ? *this : o;
  const Condition& big = entries.size() <= o.entries.size() ? o : *this;
  for (const auto& [k, v] : small.entries) {
    auto it = big.entries.find(k);
    if (it != big.entries.end() && it->second != v) return false;
  }
  return true;
}

Condition Condition::merged_with(const Condition& o) const {
  Condition out = *this;
  for (const auto& [k, v] : o.entries) {
    auto [it, inserted] = out.entries.emplace(k, v);
    if (!inserted && it->second != v)
      throw NotInRange("merging incompatible conditions");
  }
  return out;
}

bool operator==(const Condition& a, const Condition& b) {
  return a.entries == b.entries;
}

bool operator<(const Condition& a, const Condition& b) {
  return a.entries < b.entries;
}

// ---------------------------------------------------------------------------
// Automorphisms

Automorphism Automorphism::plain(std::map<OrderPoint, OrderPoint, PointLess> map) {
  PointSet dom, rng;
  for (auto it = map.begin(); it != map.end();) {
    if (it->first == it->second) {
      it = map.erase(it);
      continue;
    }
    dom.insert(it->first);
    rng.insert(it->second);
    ++it;
  }
  if (dom != rng || rng.size() != map.size())
    throw VariantMismatch("plain permutation must be a bijection of its domain onto itself");
  Automorphism a;
  a.v_ = PlainPerm{std::move(map)};
  return a;
}

Automorphism Automorphism::transposition(const OrderPoint& x, const OrderPoint& y) {
  std::map<OrderPoint, OrderPoint, PointLess> m;
  m[x] = y;
  m[y] = x;
  return plain(std::move(m));
}

namespace {

// Removes interior breakpoints that are linear interpolations of their
// neighbours; an all-diagonal map collapses to the identity datum.
std::vector<std::pair<Rational, Rational>> canonical_pl(
    std::vector<std::pair<Rational, Rational>> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<std::pair<Rational, Rational>> out;
  for (const auto& p : pts) {
    while (out.size() >= 2) {
      const auto& a = out[out.size() - 2];
      const auto& b = out.back();
      // b on segment a--p?
      if ((p.first - a.first) != Rational(0) &&
          (b.second - a.second) * (p.first - a.first) ==
              (p.second - a.second) * (b.first - a.first)) {
        out.pop_back();
      } else {
        break;
      }
    }
    out.push_back(p);
  }
  bool diagonal = true;
  for (const auto& p : out)
    if (p.first != p.second) diagonal = false;
  if (diagonal) out.clear();
  return out;
}

}  // namespace

Automorphism Automorphism::pl(std::vector<std::pair<Rational, Rational>> pts,
                              std::optional<std::uint64_t> block) {
  pts = canonical_pl(std::move(pts));
  if (!pts.empty()) {
    if (pts.size() < 2)
      throw VariantMismatch("piecewise-linear map needs at least two breakpoints");
    for (std::size_t i = 1; i < pts.size(); ++i)
      if (pts[i - 1].first >= pts[i].first || pts[i - 1].second >= pts[i].second)
        throw VariantMismatch("piecewise-linear map must be strictly increasing");
    if (pts.front().first != pts.front().second ||
        pts.back().first != pts.back().second)
      throw VariantMismatch(
          "piecewise-linear map must equal the identity outside its support "
          "interval (anchor breakpoints off the diagonal)");
  }
  Automorphism a;
  a.v_ = PlMap{std::move(pts), block};
  return a;
}

Automorphism Automorphism::prod(ProdPerm p) {
  for (auto rit = p.rows.begin(); rit != p.rows.end();) {
    auto& cols = rit->second;
    std::set<std::uint64_t> dom, rng;
    for (auto it = cols.begin(); it != cols.end();) {
      if (it->first == it->second) {
        it = cols.erase(it);
        continue;
      }
      dom.insert(it->first);
      rng.insert(it->second);
      ++it;
    }
    if (dom != rng)
      throw VariantMismatch("row permutation must be a bijection of its domain");
    if (cols.empty())
      rit = p.rows.erase(rit);
    else
      ++rit;
  }
  Automorphism a;
  a.v_ = ProdPerm{std::move(p)};
  return a;
}

bool Automorphism::is_identity() const {
  if (const auto* p = as_plain()) return p->map.empty();
  if (const auto* p = as_pl()) return p->pts.empty();
  return as_prod()->rows.empty();
}

bool Automorphism::order_preserving() const {
  if (as_pl()) return true;
  return is_identity();
}

int aut_cmp(const Automorphism& a, const Automorphism& b) {
  // Identities of any representation are equal.
  if (a.is_identity() || b.is_identity())
    return a.is_identity() == b.is_identity() ? 0 : (a.is_identity() ? -1 : 1);
  if (a.v_.index() != b.v_.index())
    return a.v_.index() < b.v_.index() ? -1 : 1;
  if (const auto* pa = a.as_plain()) {
    const auto* pb = b.as_plain();
    auto ai = pa->map.begin(), bi = pb->map.begin();
    for (; ai != pa->map.end() && bi != pb->map.end(); ++ai, ++bi) {
      if (point_key_less(ai->first, bi->first)) return -1;
      if (point_key_less(bi->first, ai->first)) return 1;
      if (point_key_less(ai->second, bi->second)) return -1;
      if (point_key_less(bi->second, ai->second)) return 1;
    }
    if (ai != pa->map.end()) return 1;
    if (bi != pb->map.end()) return -1;
    return 0;
  }
  if (const auto* pa = a.as_pl()) {
    const auto* pb = b.as_pl();
    if (pa->block != pb->block) return pa->block < pb->block ? -1 : 1;
    if (pa->pts != pb->pts) return pa->pts < pb->pts ? -1 : 1;
    return 0;
  }
  const auto* pa = a.as_prod();
  const auto* pb = b.as_prod();
  if (pa->rows != pb->rows) return pa->rows < pb->rows ? -1 : 1;
  return 0;
}

Rational pl_eval(const PlMap& f, const Rational& q) {
  if (f.pts.empty()) return q;
  if (q <= f.pts.front().first || q >= f.pts.back().first) return q;
  for (std::size_t i = 1; i < f.pts.size(); ++i) {
    if (q <= f.pts[i].first) {
      const auto& [x0, y0] = f.pts[i - 1];
      const auto& [x1, y1] = f.pts[i];
      return y0 + (q - x0) * (y1 - y0) / (x1 - x0);
    }
  }
  return q;
}

OrderPoint apply_point(const Automorphism& pi, const OrderPoint& x) {
  if (const auto* p = pi.as_plain()) {
    auto it = p->map.find(x);
    return it == p->map.end() ? x : it->second;
  }
  if (const auto* p = pi.as_pl()) {
    if (x.kind == PointKind::Rat) {
      if (p->block)
        throw VariantMismatch("block-restricted map applied to a plain rational");
      return OrderPoint::rat(pl_eval(*p, x.q));
    }
    if (x.kind == PointKind::Lex) {
      if (p->block && *p->block != x.a) return x;
      return OrderPoint::lex(x.a, pl_eval(*p, x.q));
    }
    throw VariantMismatch("piecewise-linear map applied to " + point_to_string(x));
  }
  const auto* p = pi.as_prod();
  if (x.kind != PointKind::Prod)
    throw VariantMismatch("product permutation applied to " + point_to_string(x));
  auto rit = p->rows.find(x.a);
  if (rit == p->rows.end()) return x;
  auto cit = rit->second.find(x.b);
  return cit == rit->second.end() ? x : OrderPoint::prod(x.a, cit->second);
}

Automorphism compose(const Automorphism& pi, const Automorphism& sigma) {
  if (sigma.is_identity()) return pi;
  if (pi.is_identity()) return sigma;
  if (pi.as_plain() && sigma.as_plain()) {
    PointSet keys;
    for (const auto& [k, v] : pi.as_plain()->map) keys.insert(k);
    for (const auto& [k, v] : sigma.as_plain()->map) keys.insert(k);
    std::map<OrderPoint, OrderPoint, PointLess> out;
    for (const auto& k : keys) out[k] = apply_point(pi, apply_point(sigma, k));
    return Automorphism::plain(std::move(out));
  }
  if (pi.as_pl() && sigma.as_pl()) {
    const PlMap& f = *pi.as_pl();
    const PlMap& g = *sigma.as_pl();
    if (f.block != g.block)
      throw VariantMismatch("composing maps of different blocks");
    PlMap ginv{g.pts, g.block};
    for (auto& p : ginv.pts) std::swap(p.first, p.second);
    std::set<Rational> xs;
    for (const auto& p : g.pts) xs.insert(p.first);
    for (const auto& p : f.pts) xs.insert(pl_eval(ginv, p.first));
    std::vector<std::pair<Rational, Rational>> pts;
    for (const Rational& x : xs) pts.emplace_back(x, pl_eval(f, pl_eval(g, x)));
    return Automorphism::pl(std::move(pts), f.block);
  }
  if (pi.as_prod() && sigma.as_prod()) {
    std::set<std::uint64_t> rows;
    for (const auto& [r, m] : pi.as_prod()->rows) rows.insert(r);
    for (const auto& [r, m] : sigma.as_prod()->rows) rows.insert(r);
    ProdPerm out;
    for (std::uint64_t r : rows) {
      std::set<std::uint64_t> cols;
      auto add = [&](const ProdPerm& p) {
        auto it = p.rows.find(r);
        if (it != p.rows.end())
          for (const auto& [c, v] : it->second) cols.insert(c);
      };
      add(*pi.as_prod());
      add(*sigma.as_prod());
      for (std::uint64_t c : cols) {
        OrderPoint im = apply_point(pi, apply_point(sigma, OrderPoint::prod(r, c)));
        out.rows[r][c] = im.b;
      }
    }
    return Automorphism::prod(std::move(out));
  }
  throw VariantMismatch("composing automorphisms of different variants");
}

Automorphism invert(const Automorphism& pi) {
  if (const auto* p = pi.as_plain()) {
    std::map<OrderPoint, OrderPoint, PointLess> out;
    for (const auto& [k, v] : p->map) out[v] = k;
    return Automorphism::plain(std::move(out));
  }
  if (const auto* p = pi.as_pl()) {
    auto pts = p->pts;
    for (auto& q : pts) std::swap(q.first, q.second);
    return Automorphism::pl(std::move(pts), p->block);
  }
  ProdPerm out;
  for (const auto& [r, cols] : pi.as_prod()->rows)
    for (const auto& [c, v] : cols) out.rows[r][v] = c;
  return Automorphism::prod(std::move(out));
}

Condition apply_condition(const Automorphism& pi, const Condition& p) {
  Condition out;
  for (const auto& [k, v] : p.entries) {
    CondKey nk{apply_point(pi, k.coord), k.slot};
    auto [it, inserted] = out.entries.emplace(nk, v);
    if (!inserted)
      throw VariantMismatch("automorphism is not injective on the condition support");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Groups, filters, ideals

GroupDesc GroupDesc::full(IndexDomain d) {
  GroupDesc g;
  g.kind = Kind::Full;
  g.domain = d;
  return g;
}

GroupDesc GroupDesc::fix(Cut e) {
  GroupDesc g;
  g.kind = Kind::Fix;
  g.cuts = {std::move(e)};
  return g;
}

GroupDesc GroupDesc::fix_meet(std::vector<Cut> es) {
  GroupDesc g;
  g.kind = Kind::FixMeet;
  g.cuts = std::move(es);
  return g;
}

GroupDesc GroupDesc::generated(std::vector<Automorphism> gens) {
  GroupDesc g;
  g.kind = Kind::Generated;
  g.gens = std::move(gens);
  return g;
}

GroupDesc GroupDesc::full_order_aut(IndexDomain d) {
  GroupDesc g;
  g.kind = Kind::FullOrderAut;
  g.domain = d;
  return g;
}

bool fixes_cut(const Automorphism& pi, const Cut& e) {
  if (e.kind == CutKind::FiniteSet) {
    for (const auto& x : e.points)
      if (apply_point(pi, x) != x) return false;
    return true;
  }
  // Initial segment: decided from the element's finite datum.
  if (pi.is_identity()) return true;
  if (const auto* p = pi.as_pl()) {
    if (e.bound.kind == PointKind::Rat) {
      if (p->block) return true;  // acts on a Lex block, not on plain rationals
      return p->pts.front().first >= e.bound.q;
    }
    // Lex bound (beta, qb): blocks below beta lie inside the segment.
    std::uint64_t beta = e.bound.a;
    if (p->block) {
      if (*p->block > beta) return true;
      if (*p->block < beta) return false;
      return p->pts.front().first >= e.bound.q;
    }
    // A blockless map acts in every block, including those below the bound.
    return false;
  }
  if (const auto* p = pi.as_plain()) {
    for (const auto& [k, v] : p->map)
      if (cut_contains(e, k)) return false;
    return true;
  }
  return pi.as_prod()->rows.empty();
}

Outcome<Cut> ideal_cover(const SupportIdeal& ideal, const PointSet& pts) {
  switch (ideal.kind) {
    case IdealKind::FiniteSets:
      return Outcome<Cut>::ok(Cut::finite(pts));
    case IdealKind::BoundedCuts: {
      if (pts.empty()) return Outcome<Cut>::ok(Cut::finite({}));
      const OrderPoint* mx = nullptr;
      for (const auto& p : pts)
        if (!mx || cmp(*mx, p) < 0) mx = &p;
      return Outcome<Cut>::ok(Cut::initial(*mx, /*inclusive=*/true));
    }
    case IdealKind::Listed: {
      const Cut* best = nullptr;
      for (const Cut& m : ideal.listed) {
        bool covers = true;
        for (const auto& p : pts)
          if (!cut_contains(m, p)) covers = false;
        if (covers && (!best || cut_subset(m, *best))) best = &m;
      }
      if (best) return Outcome<Cut>::ok(*best);
      return Outcome<Cut>::fail("no listed ideal member covers the support");
    }
  }
  return Outcome<Cut>::fail("unreachable");
}

bool ideal_contains(const SupportIdeal& ideal, const Cut& e) {
  switch (ideal.kind) {
    case IdealKind::FiniteSets:
      return e.kind == CutKind::FiniteSet;
    case IdealKind::BoundedCuts:
      return true;  // every finite datum is bounded
    case IdealKind::Listed:
      for (const Cut& m : ideal.listed)
        if (cut_subset(e, m)) return true;
      return false;
  }
  return false;
}

Cut conjugate_fix(const Automorphism& pi, const Cut& e, const SupportIdeal* ideal) {
  Cut image;
  if (e.kind == CutKind::FiniteSet) {
    PointSet pts;
    for (const auto& x : e.points) pts.insert(apply_point(pi, x));
    image = Cut::finite(std::move(pts));
  } else {
    if (!pi.order_preserving())
      throw VariantMismatch(
          "conjugating an initial-segment stabilizer needs an order-preserving "
          "automorphism");
    image = Cut::initial(apply_point(pi, e.bound), e.inclusive);
  }
  if (ideal && !ideal_contains(*ideal, image))
    throw ImageNotInIdeal("image " + cut_to_string(image) +
                          " leaves the support ideal (non-normal configuration)");
  return image;
}

bool filter_contains(const FilterDesc& f, const GroupDesc& h) {
  switch (h.kind) {
    case GroupDesc::Kind::Full:
    case GroupDesc::Kind::FullOrderAut:
      return true;  // the whole group is a supergroup of every fix(E)
    case GroupDesc::Kind::Fix:
    case GroupDesc::Kind::FixMeet:
      break;
    default:
      throw UnsupportedGroupShape(
          "filter membership is decided only for fix-shaped groups");
  }
  switch (f.ideal.kind) {
    case IdealKind::FiniteSets:
      for (const Cut& e : h.cuts)
        if (e.kind != CutKind::FiniteSet) return false;
      return true;
    case IdealKind::BoundedCuts:
      return true;
    case IdealKind::Listed:
      for (const Cut& m : f.ideal.listed) {
        bool covers = true;
        for (const Cut& e : h.cuts)
          if (!cut_subset(e, m)) covers = false;
        if (covers) return true;
      }
      return false;
  }
  return false;
}

Outcome<Cut> is_tenacious(const Condition& p, const FilterDesc& f) {
  auto cover = ideal_cover(f.ideal, p.support());
  if (!cover)
    return Outcome<Cut>::fail("NoWitness: " + cover.reason());
  return cover;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::vector<Automorphism> all_perms(const std::vector<OrderPoint>& pts,
                                    std::size_t cap) {
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<Automorphism> out;
  do {
    std::map<OrderPoint, OrderPoint, PointLess> m;
    for (std::size_t i = 0; i < pts.size(); ++i) m[pts[i]] = pts[idx[i]];
    out.push_back(Automorphism::plain(std::move(m)));
    if (out.size() > cap)
      throw EnumerationBudgetExceeded("group enumeration exceeded cap " +
                                      std::to_string(cap));
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

std::vector<Automorphism> row_product_perms(const std::vector<OrderPoint>& pts,
                                            const PointSet& fixed,
                                            std::size_t cap) {
  std::map<std::uint64_t, std::vector<std::uint64_t>> by_row;
  for (const auto& p : pts)
    if (!fixed.count(p)) by_row[p.a].push_back(p.b);
  std::vector<Automorphism> out{Automorphism::identity()};
  for (auto& [row, cols] : by_row) {
    std::sort(cols.begin(), cols.end());
    std::vector<std::vector<std::uint64_t>> perms;
    std::vector<std::uint64_t> idx = cols;
    do {
      perms.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    std::vector<Automorphism> next;
    for (const auto& base : out) {
      for (const auto& perm : perms) {
        ProdPerm rp;
        if (const auto* bp = base.as_prod()) rp = *bp;
        for (std::size_t i = 0; i < cols.size(); ++i) rp.rows[row][cols[i]] = perm[i];
        next.push_back(Automorphism::prod(std::move(rp)));
        if (next.size() > cap)
          throw EnumerationBudgetExceeded("group enumeration exceeded cap " +
                                          std::to_string(cap));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace

std::vector<Automorphism> closure(std::vector<Automorphism> elems, std::size_t cap) {
  std::set<Automorphism, AutLess> seen(elems.begin(), elems.end());
  seen.insert(Automorphism::identity());
  std::deque<Automorphism> work(seen.begin(), seen.end());
  while (!work.empty()) {
    Automorphism a = work.front();
    work.pop_front();
    std::vector<Automorphism> snapshot(seen.begin(), seen.end());
    for (const auto& b : snapshot) {
      for (const Automorphism& c : {compose(a, b), compose(b, a), invert(a)}) {
        if (seen.insert(c).second) {
          work.push_back(c);
          if (seen.size() > cap)
            throw EnumerationBudgetExceeded("subgroup closure exceeded cap " +
                                            std::to_string(cap));
        }
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Automorphism> enumerate_group(const GroupDesc& g,
                                          const std::vector<OrderPoint>& universe,
                                          std::size_t cap) {
  switch (g.kind) {
    case GroupDesc::Kind::Full: {
      if (g.domain.kind == DomainKind::ProdOmega)
        return row_product_perms(universe, {}, cap);
      return all_perms(universe, cap);
    }
    case GroupDesc::Kind::Fix:
    case GroupDesc::Kind::FixMeet: {
      PointSet fixed;
      for (const auto& p : universe)
        for (const Cut& e : g.cuts)
          if (cut_contains(e, p)) fixed.insert(p);
      if (!universe.empty() && universe.front().kind == PointKind::Prod)
        return row_product_perms(universe, fixed, cap);
      std::vector<OrderPoint> movable;
      for (const auto& p : universe)
        if (!fixed.count(p)) movable.push_back(p);
      return all_perms(movable, cap);
    }
    case GroupDesc::Kind::Generated:
      return closure(g.gens, cap);
    case GroupDesc::Kind::FullOrderAut:
      throw UnsupportedGroupShape("the full order-automorphism group is not enumerable");
  }
  return {};
}

OrbitPartition orbits(const GroupDesc& h, const std::vector<OrderPoint>& points,
                      std::size_t cap) {
  std::vector<Automorphism> gens;
  switch (h.kind) {
    case GroupDesc::Kind::Full:
      for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
          if (points[i].kind == points[j].kind &&
              (points[i].kind != PointKind::Prod || points[i].a == points[j].a) &&
              !(h.domain.kind == DomainKind::ProdOmega &&
                points[i].a != points[j].a))
            gens.push_back(Automorphism::transposition(points[i], points[j]));
      break;
    case GroupDesc::Kind::Fix:
    case GroupDesc::Kind::FixMeet: {
      auto in_cut = [&](const OrderPoint& p) {
        for (const Cut& e : h.cuts)
          if (cut_contains(e, p)) return true;
        return false;
      };
      for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
          if (points[i].kind == points[j].kind && !in_cut(points[i]) &&
              !in_cut(points[j]))
            gens.push_back(Automorphism::transposition(points[i], points[j]));
      break;
    }
    case GroupDesc::Kind::Generated:
      gens = h.gens;
      break;
    case GroupDesc::Kind::FullOrderAut: {
      // Extensional: one orbit per Lex block, one orbit for all rationals.
      std::map<std::uint64_t, std::vector<OrderPoint>> parts;
      OrbitPartition out;
      for (const auto& p : points) {
        std::uint64_t key = p.kind == PointKind::Lex ? p.a + 1 : 0;
        parts[key].push_back(p);
      }
      for (auto& [k, part] : parts) {
        std::sort(part.begin(), part.end(), PointLess{});
        out.orbits.push_back(part);
      }
      return out;
    }
  }

  // Orbit closure through possibly-unlisted intermediate points.
  std::vector<PointSet> blocks;
  PointSet assigned;
  for (const auto& start : points) {
    if (assigned.count(start)) continue;
    PointSet orbit{start};
    std::deque<OrderPoint> work{start};
    while (!work.empty()) {
      OrderPoint x = work.front();
      work.pop_front();
      for (const auto& gset : {false, true}) {
        for (const auto& gen : gens) {
          OrderPoint y = apply_point(gset ? invert(gen) : gen, x);
          if (orbit.insert(y).second) {
            work.push_back(y);
            if (orbit.size() > cap)
              throw EnumerationBudgetExceeded("orbit closure exceeded cap " +
                                              std::to_string(cap));
          }
        }
      }
    }
    for (const auto& y : orbit) assigned.insert(y);
    blocks.push_back(std::move(orbit));
  }

  OrbitPartition out;
  for (const auto& block : blocks) {
    std::vector<OrderPoint> part;
    for (const auto& p : points)
      if (block.count(p)) part.push_back(p);
    if (part.empty()) continue;
    std::sort(part.begin(), part.end(), PointLess{});
    out.orbits.push_back(std::move(part));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constraint solving (the proof-subroutine automorphisms)

namespace {

struct RatBounds {
  std::optional<Rational> lo, hi;  // open interval
};

bool rat_in(const RatBounds& b, const Rational& q) {
  if (b.lo && q <= *b.lo) return false;
  if (b.hi && q >= *b.hi) return false;
  return true;
}

// Iterated midpoints until the value avoids a finite forbidden set.
Rational fresh_between(Rational lo, Rational hi, const std::set<Rational>& avoid) {
  Rational m = (lo + hi) / 2;
  while (avoid.count(m)) m = (lo + m) / 2;
  return m;
}

Outcome<Automorphism> solve_pl(const AutoSpec& spec) {
  const OrderPoint& from = *spec.move_from;
  bool lex = from.kind == PointKind::Lex;
  std::optional<std::uint64_t> block = lex ? std::optional(from.a) : std::nullopt;
  Rational fq = from.q;

  if (spec.move_to) {
    if (spec.move_to->kind != from.kind)
      throw VariantMismatch("move source and target have different variants");
    if (lex && spec.move_to->a != from.a)
      return Outcome<Automorphism>::fail(
          "Unsatisfiable: cross-block moves have no finite description");
    if (*spec.move_to == from)
      return Outcome<Automorphism>::fail("Unsatisfiable: target equals source");
  }

  if (spec.fix_cut) {
    if (cut_contains(*spec.fix_cut, from))
      return Outcome<Automorphism>::fail(
          "Unsatisfiable: the point to move lies inside the fixed cut");
    if (spec.move_to && cut_contains(*spec.fix_cut, *spec.move_to))
      return Outcome<Automorphism>::fail(
          "Unsatisfiable: an increasing map fixing the cut cannot send a point "
          "above it below it");
  }

  RatBounds bounds;
  if (spec.confine) {
    const auto& [clo, chi] = *spec.confine;
    if (clo.kind != from.kind || chi.kind != from.kind)
      throw VariantMismatch("confine interval variant differs from the move");
    if (cmp(clo, from) >= 0 || cmp(from, chi) >= 0)
      return Outcome<Automorphism>::fail(
          "Unsatisfiable: move source lies outside the confine interval");
    if (!lex || clo.a == from.a) bounds.lo = clo.q;
    if (!lex || chi.a == from.a) bounds.hi = chi.q;
  }

  std::set<Rational> pinned;  // points that must stay fixed
  if (spec.fix_cut) {
    const Cut& e = *spec.fix_cut;
    if (e.kind == CutKind::InitialSegment) {
      if (e.bound.kind != from.kind)
        throw VariantMismatch("fixed cut variant differs from the move");
      if (!lex) {
        if (!bounds.lo || *bounds.lo < e.bound.q) bounds.lo = e.bound.q;
      } else if (e.bound.a == from.a) {
        if (!bounds.lo || *bounds.lo < e.bound.q) bounds.lo = e.bound.q;
      }
      // blocks strictly above the bound's block are unconstrained
    } else {
      for (const auto& p : e.points)
        if (p.kind == from.kind && (!lex || p.a == from.a)) pinned.insert(p.q);
    }
  }

  std::set<Rational> supp_coords;
  if (spec.keep_compatible) {
    for (const auto& p : spec.keep_compatible->support())
      if (p.kind == from.kind && (!lex || p.a == from.a)) supp_coords.insert(p.q);
  }

  std::optional<Rational> tq;
  if (spec.move_to) tq = spec.move_to->q;

  if (tq) {
    if (!rat_in(bounds, *tq))
      return Outcome<Automorphism>::fail(
          "Unsatisfiable: target lies outside the admissible interval");
    Rational a = std::min(fq, *tq), b = std::max(fq, *tq);
    for (const Rational& p : pinned)
      if (a < p && p < b)
        return Outcome<Automorphism>::fail(
            "Unsatisfiable: a pointwise-fixed point separates source and target");
  }
  if (!rat_in(bounds, fq))
    return Outcome<Automorphism>::fail(
        "Unsatisfiable: no room to move inside the fixed cut and confine");

  // Diagonal anchors: nearest hard limit / pinned point on each side.
  Rational lo_anchor, hi_anchor;
  {
    Rational a = tq ? std::min(fq, *tq) : fq;
    Rational b = tq ? std::max(fq, *tq) : fq;
    std::optional<Rational> l = bounds.lo, r = bounds.hi;
    for (const Rational& p : pinned) {
      if (p <= a && (!l || p > *l)) l = p;
      if (p >= b && (!r || p < *r)) r = p;
    }
    if (l && *l >= a)
      return Outcome<Automorphism>::fail("Unsatisfiable: no room below the source");
    if (r && *r <= b)
      return Outcome<Automorphism>::fail("Unsatisfiable: no room above the target");
    lo_anchor = l ? *l : a - 1;
    hi_anchor = r ? *r : b + 1;
  }

  if (!tq) {
    // Free target: first fresh point above the source inside the room.
    tq = fresh_between(fq, hi_anchor, supp_coords);
  }

  std::vector<std::pair<Rational, Rational>> pts;
  pts.emplace_back(lo_anchor, lo_anchor);
  pts.emplace_back(hi_anchor, hi_anchor);
  pts.emplace_back(fq, *tq);
  // Condition coordinates caught inside the moving interval are re-homed onto
  // fresh rationals so the image condition stays compatible.
  std::set<Rational> avoid = supp_coords;
  avoid.insert(fq);
  avoid.insert(*tq);
  Rational prev_x = lo_anchor, prev_y = lo_anchor;
  std::vector<Rational> moved;
  for (const Rational& s : supp_coords)
    if (s > lo_anchor && s < hi_anchor && s != fq) moved.push_back(s);
  std::sort(moved.begin(), moved.end());
  for (const Rational& s : moved) {
    // keep images ordered: interleave below/above the main move
    Rational lower = std::max(prev_y, s < fq ? lo_anchor : *tq);
    Rational upper = s < fq ? std::min(*tq, hi_anchor) : hi_anchor;
    if (lower >= upper) continue;  // let interpolation place it; verified below
    Rational img = fresh_between(lower, upper, avoid);
    avoid.insert(img);
    pts.emplace_back(s, img);
    prev_x = s;
    prev_y = img;
    if (s < fq && img >= *tq) return Outcome<Automorphism>::fail(
        "Unsatisfiable: cannot keep the image condition compatible");
  }

  Automorphism pi = Automorphism::pl(std::move(pts), block);
  if (auto bad = verify_automorphism(pi, spec))
    return Outcome<Automorphism>::fail("Unsatisfiable: " + *bad);
  return Outcome<Automorphism>::ok(std::move(pi));
}

Outcome<Automorphism> solve_perm(const AutoSpec& spec) {
  const OrderPoint& from = *spec.move_from;
  auto admissible = [&](const OrderPoint& to) {
    if (to == from) return false;
    if (from.kind == PointKind::Prod && to.a != from.a) return false;
    if (spec.fix_cut && cut_contains(*spec.fix_cut, to)) return false;
    if (spec.confine &&
        (cmp(spec.confine->first, to) >= 0 || cmp(to, spec.confine->second) >= 0))
      return false;
    return true;
  };
  if (spec.fix_cut && cut_contains(*spec.fix_cut, from))
    return Outcome<Automorphism>::fail(
        "Unsatisfiable: the point to move lies inside the fixed cut");

  std::vector<OrderPoint> candidates;
  if (spec.move_to) {
    if (spec.move_to->kind != from.kind)
      throw VariantMismatch("move source and target have different variants");
    candidates.push_back(*spec.move_to);
  } else {
    PointSet supp;
    if (spec.keep_compatible) supp = spec.keep_compatible->support();
    for (std::uint64_t delta = 1; delta <= 64 && candidates.size() < 8; ++delta) {
      for (long long sign : {1LL, -1LL}) {
        OrderPoint cand = from;
        long long base = static_cast<long long>(
            from.kind == PointKind::Prod ? from.b : from.a);
        long long moved = base + sign * static_cast<long long>(delta);
        if (moved < 0) continue;
        if (from.kind == PointKind::Prod)
          cand.b = static_cast<std::uint64_t>(moved);
        else
          cand.a = static_cast<std::uint64_t>(moved);
        if (admissible(cand) && !supp.count(cand)) candidates.push_back(cand);
      }
    }
  }

  for (const OrderPoint& to : candidates) {
    if (!admissible(to)) continue;
    Automorphism pi = from.kind == PointKind::Prod
                          ? Automorphism::prod(ProdPerm{{{from.a,
                                                          {{from.b, to.b},
                                                           {to.b, from.b}}}}})
                          : Automorphism::transposition(from, to);
    if (!verify_automorphism(pi, spec)) return Outcome<Automorphism>::ok(std::move(pi));
  }
  return Outcome<Automorphism>::fail(
      "Unsatisfiable: no admissible transposition target");
}

}  // namespace

std::optional<std::string> verify_automorphism(const Automorphism& pi,
                                               const AutoSpec& spec) {
  if (spec.fix_cut && !fixes_cut(pi, *spec.fix_cut))
    return "the automorphism moves a point of the cut it must fix";
  if (spec.move_from) {
    OrderPoint image = apply_point(pi, *spec.move_from);
    if (spec.move_to) {
      if (image != *spec.move_to) return "the required move is not realized";
    } else if (image == *spec.move_from) {
      return "the point that must move is fixed";
    }
  }
  if (spec.confine) {
    const auto& [lo, hi] = *spec.confine;
    auto inside = [&](const OrderPoint& x) {
      return cmp(lo, x) < 0 && cmp(x, hi) < 0;
    };
    if (const auto* p = pi.as_plain()) {
      for (const auto& [k, v] : p->map)
        if (!inside(k)) return "a moved point escapes the confine interval";
    } else if (const auto* p = pi.as_pl()) {
      if (!p->pts.empty()) {
        OrderPoint x0 = lo.kind == PointKind::Lex
                            ? OrderPoint::lex(p->block.value_or(lo.a), p->pts.front().first)
                            : OrderPoint::rat(p->pts.front().first);
        OrderPoint x1 = lo.kind == PointKind::Lex
                            ? OrderPoint::lex(p->block.value_or(lo.a), p->pts.back().first)
                            : OrderPoint::rat(p->pts.back().first);
        if (cmp(lo, x0) > 0 || cmp(x1, hi) > 0)
          return "the support interval escapes the confine interval";
      }
    } else if (const auto* p = pi.as_prod()) {
      for (const auto& [r, cols] : p->rows)
        for (const auto& [c, v] : cols)
          if (!inside(OrderPoint::prod(r, c)))
            return "a moved point escapes the confine interval";
    }
  }
  if (spec.keep_compatible) {
    Condition image = apply_condition(pi, *spec.keep_compatible);
    if (!image.compatible(*spec.keep_compatible))
      return "the image condition is incompatible with the original";
  }
  return std::nullopt;
}

Outcome<Automorphism> find_automorphism(const AutoSpec& spec) {
  if (!spec.move_from) {
    Automorphism id = Automorphism::identity();
    if (auto bad = verify_automorphism(id, spec))
      return Outcome<Automorphism>::fail("Unsatisfiable: " + *bad);
    return Outcome<Automorphism>::ok(std::move(id));
  }
  switch (spec.move_from->kind) {
    case PointKind::Rat:
    case PointKind::Lex:
      return solve_pl(spec);
    case PointKind::Nat:
    case PointKind::Prod:
      return solve_perm(spec);
  }
  return Outcome<Automorphism>::fail("Unsatisfiable: unknown variant");
}

}  // namespace symx
