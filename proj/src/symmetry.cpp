#include "symx/symmetry.hpp"

#include <algorithm>
#include <set>

namespace symx {

namespace {

using AutSet = std::set<Automorphism, AutLess>;

AutSet to_set(const std::vector<Automorphism>& v) { return {v.begin(), v.end()}; }

bool subset_of(const AutSet& a, const AutSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end(), AutLess{});
}

/// The finite generator list of the ideal over the given universe.
std::vector<Cut> ideal_members(const SupportIdeal& ideal,
                               const std::vector<OrderPoint>& universe) {
  std::vector<Cut> out;
  switch (ideal.kind) {
    case IdealKind::Listed:
      return ideal.listed;
    case IdealKind::FiniteSets: {
      if (universe.size() > 12)
        throw EnumerationBudgetExceeded("too many coordinates to enumerate subsets");
      for (std::size_t mask = 0; mask < (1u << universe.size()); ++mask) {
        PointSet pts;
        for (std::size_t i = 0; i < universe.size(); ++i)
          if (mask & (1u << i)) pts.insert(universe[i]);
        out.push_back(Cut::finite(std::move(pts)));
      }
      return out;
    }
    case IdealKind::BoundedCuts: {
      out.push_back(Cut::finite({}));
      for (const auto& p : universe) out.push_back(Cut::initial(p, true));
      return out;
    }
  }
  return out;
}

}  // namespace

std::vector<Name> FamilyName::names() const {
  std::vector<Name> out;
  out.reserve(elems.size());
  for (const auto& [i, n] : elems) out.push_back(n);
  return out;
}

Name FamilyName::as_bullet() const { return bullet_name(names()); }

bool is_in_sym(const Automorphism& pi, const Name& n) {
  return names_equal_structural(apply_name(pi, n), n);
}

namespace {

std::vector<Name> subnames(const Name& n) {
  switch (n->kind) {
    case NameKind::Bullet:
      return n->elems;
    case NameKind::OPair:
      return {n->fst, n->snd};
    case NameKind::Raw:
    case NameKind::Mix: {
      std::vector<Name> out;
      for (const auto& [p, y] : n->entries) out.push_back(y);
      return out;
    }
    case NameKind::Restrict:
      return {n->inner};
    default:
      return {};
  }
}

Outcome<HSNode> certify(const Name& n, const SymmetricSystem& s,
                        const std::string& path) {
  auto cover = ideal_cover(s.filter.ideal, support_points(n));
  if (!cover)
    return Outcome<HSNode>::fail("at " + (path.empty() ? "/" : path) + ": " +
                                 cover.reason());
  HSNode node{n, cover.value(), {}};
  std::size_t k = 0;
  for (const Name& c : subnames(n)) {
    auto child = certify(c, s, path + "/" + std::to_string(k++));
    if (!child) return child;
    node.children.push_back(std::move(child.value()));
  }
  return Outcome<HSNode>::ok(std::move(node));
}

}  // namespace

Outcome<HSNode> is_hereditarily_symmetric(const Name& n, const SymmetricSystem& s) {
  return certify(n, s, "");
}

bool is_injective_name(const FamilyName& x, ForcingEngine& eng) {
  for (std::size_t i = 0; i < x.elems.size(); ++i)
    for (std::size_t j = i + 1; j < x.elems.size(); ++j)
      if (!eng.forces(Condition{},
                      f_not(f_eq(x.elems[i].second, x.elems[j].second))))
        return false;
  return true;
}

bool measures(const GroupDesc& h, const FamilyName& x, const SymmetricSystem& s) {
  std::vector<Automorphism> helems =
      enumerate_group(h, s.poset.domain, s.cap);
  std::vector<Automorphism> gelems;
  bool g_enumerable = true;
  try {
    gelems = enumerate_group(s.group, s.poset.domain, s.cap);
  } catch (const UnsupportedGroupShape&) {
    g_enumerable = false;
  }
  AutSet gset = to_set(gelems);
  for (const auto& [i, xn] : x.elems) {
    bool fixed = true;
    for (const Automorphism& pi : helems)
      if (!is_in_sym(pi, xn)) {
        fixed = false;
        break;
      }
    if (fixed) continue;
    if (!g_enumerable)
      throw UnsupportedGroupShape(
          "generation check needs an enumerable ambient group");
    std::vector<Automorphism> gens = helems;
    for (const Automorphism& g : gelems)
      if (is_in_sym(g, xn)) gens.push_back(g);
    AutSet generated = to_set(closure(std::move(gens), s.cap));
    if (generated != gset) return false;
  }
  return true;
}

bool is_densely_measurable(const FamilyName& x, const SymmetricSystem& s) {
  std::vector<Cut> members = ideal_members(s.filter.ideal, s.poset.domain);
  for (const Cut& e : members) {
    bool found = false;
    for (const Cut& e2 : members) {
      if (!cut_subset(e, e2)) continue;
      if (measures(GroupDesc::fix(e2), x, s)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

MixReport check_mixable(const SymmetricSystem& s,
                        const std::vector<std::pair<Condition, Name>>& branches) {
  MixReport r;
  r.mixed = mix_name(branches);  // validates the antichain
  auto cert = is_hereditarily_symmetric(r.mixed, s);
  if (!cert) throw HSCertificationFailed(cert.reason());
  r.support = cert.value().support;
  ForcingEngine eng(s.poset);
  r.ok = true;
  for (const auto& [p, xn] : branches) {
    if (!eng.forces(p, f_eq(r.mixed, xn))) {
      r.ok = false;
      r.reason = "branch at " + name_to_string(xn) +
                 " is not forced equal to the mix";
      return r;
    }
  }
  return r;
}

Outcome<Cut> has_absolute_representative(const FilterDesc& f,
                                         const std::vector<OrderPoint>& universe,
                                         std::size_t cap) {
  std::vector<Cut> members = ideal_members(f.ideal, universe);
  bool has_empty = false;
  for (const Cut& e : members)
    if (e.kind == CutKind::FiniteSet && e.points.empty()) has_empty = true;
  if (!has_empty) members.insert(members.begin(), Cut::finite({}));

  std::vector<AutSet> family;
  family.reserve(members.size());
  for (const Cut& e : members)
    family.push_back(to_set(enumerate_group(GroupDesc::fix(e), universe, cap)));

  // Candidates from largest (fix of least cut) down.
  std::vector<std::size_t> order(members.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return family[a].size() > family[b].size();
  });

  for (std::size_t ci : order) {
    const AutSet& h = family[ci];
    bool good = true;
    for (const AutSet& h0 : family) {
      AutSet meet;
      std::set_intersection(h.begin(), h.end(), h0.begin(), h0.end(),
                            std::inserter(meet, meet.begin()), AutLess{});
      for (const AutSet& h1 : family) {
        bool witnessed = false;
        for (const Automorphism& pi : h0) {
          AutSet conj;
          Automorphism inv = invert(pi);
          for (const Automorphism& a : h1) conj.insert(compose(compose(pi, a), inv));
          if (subset_of(meet, conj)) {
            witnessed = true;
            break;
          }
        }
        if (!witnessed) {
          good = false;
          break;
        }
      }
      if (!good) break;
    }
    if (good) return Outcome<Cut>::ok(members[ci]);
  }
  return Outcome<Cut>::fail(
      "no listed subgroup is an absolute representative of the filter");
}

std::size_t raw_depth(const Name& n) {
  if (n->kind != NameKind::Raw) return 0;
  std::size_t d = 0;
  for (const auto& [p, y] : n->entries) d = std::max(d, raw_depth(y));
  return d + 1;
}

namespace {

void collect_pairs(const Name& fn, std::vector<std::pair<Name, Name>>& out) {
  switch (fn->kind) {
    case NameKind::Check:
      for (const HF& m : fn->hf.elems())
        if (auto p = m.as_pair())
          out.emplace_back(check_name(p->first), check_name(p->second));
      break;
    case NameKind::Bullet:
      for (const Name& e : fn->elems)
        if (e->kind == NameKind::OPair) out.emplace_back(e->fst, e->snd);
      break;
    case NameKind::Raw:
    case NameKind::Mix:
      for (const auto& [p, y] : fn->entries) collect_pairs(y, out);
      break;
    case NameKind::Restrict:
      collect_pairs(fn->inner, out);
      break;
    default:
      break;
  }
}

}  // namespace

FormulaP applied_elem(const Name& a, const Name& fn, const Name& x) {
  std::vector<std::pair<Name, Name>> pairs;
  collect_pairs(fn, pairs);
  FormulaP out;
  for (const auto& [u, v] : pairs) {
    FormulaP clause = f_and(f_elem(opair_name(x, v), fn), f_elem(a, v));
    out = out ? f_or(out, std::move(clause)) : std::move(clause);
  }
  return out ? out : f_not(f_eq(a, a));
}

Name build_semicanonical(ForcingEngine& eng, const Name& fn, const Name& x_i,
                         const SymmetricSystem& s, std::size_t rank_bound) {
  // Candidate element names: whatever appears inside the function's values,
  // plus the ground/generic basics.
  std::vector<std::pair<Name, Name>> pairs;
  collect_pairs(fn, pairs);
  std::set<Name, NameLess> candidates;
  for (const auto& [u, v] : pairs) {
    candidates.insert(v);
    Name raw = eng.compile(v);
    for (const auto& [q, z] : raw->entries) candidates.insert(z);
  }
  for (const Name& n : enumerate_names(s.poset, 1, 32)) candidates.insert(n);

  std::vector<std::pair<Condition, Name>> entries;
  for (const Name& a : candidates) {
    if (raw_depth(eng.compile(a)) >= rank_bound) continue;
    if (!is_hereditarily_symmetric(a, s)) continue;
    FormulaP phi = applied_elem(a, fn, x_i);
    for (const Condition& p : eng.all_conditions())
      if (eng.forces(p, phi)) entries.emplace_back(p, eng.compile(a));
  }
  return raw_name(std::move(entries));
}

Name build_choice_name(const ChoiceInput& in, const SymmetricSystem& s) {
  std::vector<Automorphism> helems = enumerate_group(in.h, s.poset.domain, s.cap);
  std::vector<Automorphism> kelems = enumerate_group(in.k, s.poset.domain, s.cap);

  std::map<OrderPoint, Name, PointLess> values;
  for (const auto& [i, xn] : in.family.elems) {
    auto vit = in.a_names.find(i);
    if (vit == in.a_names.end())
      throw WellDefinednessFailure("no value name for index " + point_to_string(i));
    Name a = vit->second;

    std::vector<Automorphism> stab;
    for (const Automorphism& pi : helems)
      if (is_in_sym(pi, xn)) stab.push_back(pi);
    auto respected = [&](const Name& b) {
      for (const Automorphism& pi : stab)
        if (!is_in_sym(pi, b)) return false;
      return true;
    };
    if (!respected(a)) {
      // Conjugation repair: replace a by rho a for some rho in K_i.
      bool repaired = false;
      for (const Automorphism& rho : kelems) {
        if (!is_in_sym(rho, xn)) continue;
        Name b = apply_name(rho, a);
        if (respected(b)) {
          a = std::move(b);
          repaired = true;
          break;
        }
      }
      if (!repaired)
        throw WellDefinednessFailure(
            "the stabilizer of " + point_to_string(i) +
            " moves its value and no conjugate of the value is stable");
    }
    values[i] = a;
  }

  // Orbit representatives of the family under H.
  std::vector<std::size_t> reps;
  std::vector<bool> seen(in.family.elems.size(), false);
  for (std::size_t i = 0; i < in.family.elems.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(i);
    for (const Automorphism& pi : helems) {
      Name img = apply_name(pi, in.family.elems[i].second);
      for (std::size_t j = 0; j < in.family.elems.size(); ++j)
        if (!seen[j] && names_equal_structural(img, in.family.elems[j].second))
          seen[j] = true;
    }
  }

  std::vector<Name> pairs;
  for (std::size_t j : reps) {
    const Name& xj = in.family.elems[j].second;
    const Name& aj = values[in.family.elems[j].first];
    for (const Automorphism& pi : helems)
      pairs.push_back(opair_name(apply_name(pi, xj), apply_name(pi, aj)));
  }
  return bullet_name(std::move(pairs));
}

Name normalize_to_one(const Condition& p, const Name& n, const Name& fallback) {
  std::vector<std::pair<Condition, Name>> branches{{p, n}};
  Condition prefix;
  for (const auto& [k, v] : p.entries) {
    Condition q = prefix;
    q.entries[k] = !v;
    branches.emplace_back(std::move(q), fallback);
    prefix.entries[k] = v;
  }
  return mix_name(std::move(branches));
}

}  // namespace symx
