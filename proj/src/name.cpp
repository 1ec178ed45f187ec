#include "symx/name.hpp"

#include <algorithm>
#include <sstream>

namespace symx {

namespace {

Name make(NameNode n) { return std::make_shared<const NameNode>(std::move(n)); }

int entries_cmp(const std::vector<std::pair<Condition, Name>>& a,
                const std::vector<std::pair<Condition, Name>>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].first < b[i].first) return -1;
    if (b[i].first < a[i].first) return 1;
    if (int c = name_cmp(a[i].second, b[i].second)) return c;
  }
  return 0;
}

void sort_entries(std::vector<std::pair<Condition, Name>>& entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& x, const auto& y) {
    if (x.first < y.first) return true;
    if (y.first < x.first) return false;
    return name_cmp(x.second, y.second) < 0;
  });
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const auto& x, const auto& y) {
                              return x.first == y.first &&
                                     name_cmp(x.second, y.second) == 0;
                            }),
                entries.end());
}

int based_cmp(const BasedFn& f, const BasedFn& g) {
  if (f.top != g.top) return f.top < g.top ? -1 : 1;
  if (f.bound != g.bound) return f.bound < g.bound ? -1 : 1;
  if (f.steps.size() != g.steps.size())
    return f.steps.size() < g.steps.size() ? -1 : 1;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    if (point_key_less(f.steps[i].first, g.steps[i].first)) return -1;
    if (point_key_less(g.steps[i].first, f.steps[i].first)) return 1;
    if (f.steps[i].second != g.steps[i].second)
      return f.steps[i].second < g.steps[i].second ? -1 : 1;
  }
  return 0;
}

}  // namespace

Name check_name(HF x) {
  NameNode n;
  n.kind = NameKind::Check;
  n.hf = std::move(x);
  return make(std::move(n));
}

Name check_nat(std::uint64_t v) { return check_name(HF::nat(v)); }

Name gen_name(OrderPoint i) {
  NameNode n;
  n.kind = NameKind::Gen;
  n.idx = i;
  return make(std::move(n));
}

Name bullet_name(std::vector<Name> elems) {
  std::sort(elems.begin(), elems.end(), NameLess{});
  elems.erase(std::unique(elems.begin(), elems.end(),
                          [](const Name& a, const Name& b) {
                            return name_cmp(a, b) == 0;
                          }),
              elems.end());
  NameNode n;
  n.kind = NameKind::Bullet;
  n.elems = std::move(elems);
  return make(std::move(n));
}

Name opair_name(Name fst, Name snd) {
  NameNode n;
  n.kind = NameKind::OPair;
  n.fst = std::move(fst);
  n.snd = std::move(snd);
  return make(std::move(n));
}

Name raw_name(std::vector<std::pair<Condition, Name>> entries) {
  sort_entries(entries);
  NameNode n;
  n.kind = NameKind::Raw;
  n.entries = std::move(entries);
  return make(std::move(n));
}

Name restrict_name(Name inner, Condition p) {
  NameNode n;
  n.kind = NameKind::Restrict;
  n.inner = std::move(inner);
  n.cond = std::move(p);
  return make(std::move(n));
}

Name mix_name(std::vector<std::pair<Condition, Name>> branches) {
  for (std::size_t i = 0; i < branches.size(); ++i)
    for (std::size_t j = i + 1; j < branches.size(); ++j)
      if (branches[i].first.compatible(branches[j].first))
        throw NotAnAntichain("mix branches " + std::to_string(i) + " and " +
                             std::to_string(j) + " are compatible");
  sort_entries(branches);
  NameNode n;
  n.kind = NameKind::Mix;
  n.entries = std::move(branches);
  return make(std::move(n));
}

Name based_name(BasedFn f) {
  validate_based(f);
  NameNode n;
  n.kind = NameKind::Based;
  n.fn = std::move(f);
  return make(std::move(n));
}

Name prec_name(IndexDomain d) {
  NameNode n;
  n.kind = NameKind::Prec;
  n.dom = d;
  return make(std::move(n));
}

int name_cmp(const Name& a, const Name& b) {
  if (a == b) return 0;
  if (a->kind != b->kind) return a->kind < b->kind ? -1 : 1;
  switch (a->kind) {
    case NameKind::Check:
      return hf_cmp(a->hf, b->hf);
    case NameKind::Gen:
      if (point_key_less(a->idx, b->idx)) return -1;
      if (point_key_less(b->idx, a->idx)) return 1;
      return 0;
    case NameKind::Bullet: {
      if (a->elems.size() != b->elems.size())
        return a->elems.size() < b->elems.size() ? -1 : 1;
      for (std::size_t i = 0; i < a->elems.size(); ++i)
        if (int c = name_cmp(a->elems[i], b->elems[i])) return c;
      return 0;
    }
    case NameKind::OPair:
      if (int c = name_cmp(a->fst, b->fst)) return c;
      return name_cmp(a->snd, b->snd);
    case NameKind::Raw:
    case NameKind::Mix:
      return entries_cmp(a->entries, b->entries);
    case NameKind::Restrict:
      if (a->cond < b->cond) return -1;
      if (b->cond < a->cond) return 1;
      return name_cmp(a->inner, b->inner);
    case NameKind::Based:
      return based_cmp(a->fn, b->fn);
    case NameKind::Prec:
      if (a->dom.kind != b->dom.kind) return a->dom.kind < b->dom.kind ? -1 : 1;
      return 0;
  }
  return 0;
}

bool names_equal_structural(const Name& a, const Name& b) {
  return name_cmp(a, b) == 0;
}

Name apply_name(const Automorphism& pi, const Name& n) {
  if (pi.is_identity()) return n;
  switch (n->kind) {
    case NameKind::Check:
      return n;
    case NameKind::Gen:
      return gen_name(apply_point(pi, n->idx));
    case NameKind::Bullet: {
      std::vector<Name> elems;
      elems.reserve(n->elems.size());
      for (const Name& e : n->elems) elems.push_back(apply_name(pi, e));
      return bullet_name(std::move(elems));
    }
    case NameKind::OPair:
      return opair_name(apply_name(pi, n->fst), apply_name(pi, n->snd));
    case NameKind::Raw:
    case NameKind::Mix: {
      std::vector<std::pair<Condition, Name>> entries;
      entries.reserve(n->entries.size());
      for (const auto& [p, y] : n->entries)
        entries.emplace_back(apply_condition(pi, p), apply_name(pi, y));
      return n->kind == NameKind::Raw ? raw_name(std::move(entries))
                                      : mix_name(std::move(entries));
    }
    case NameKind::Restrict:
      return restrict_name(apply_name(pi, n->inner),
                           apply_condition(pi, n->cond));
    case NameKind::Based: {
      // F o pi^-1 under the convention pi Gen(s) = Gen(pi s): each base point
      // moves forward, the values ride along.
      if (!pi.order_preserving())
        throw VariantMismatch(
            "based names are acted on by order-preserving automorphisms only");
      BasedFn f = n->fn;
      for (auto& [pt, v] : f.steps) pt = apply_point(pi, pt);
      return based_name(std::move(f));
    }
    case NameKind::Prec:
      if (!pi.order_preserving())
        throw VariantMismatch(
            "the order name is acted on by order-preserving automorphisms only");
      return n;
  }
  return n;
}

PointSet support_points(const Name& n) {
  PointSet out;
  switch (n->kind) {
    case NameKind::Check:
    case NameKind::Prec:
      break;
    case NameKind::Gen:
      out.insert(n->idx);
      break;
    case NameKind::Bullet:
      for (const Name& e : n->elems) out.merge(support_points(e));
      break;
    case NameKind::OPair:
      out = support_points(n->fst);
      out.merge(support_points(n->snd));
      break;
    case NameKind::Raw:
    case NameKind::Mix:
      for (const auto& [p, y] : n->entries) {
        for (const auto& pt : p.support()) out.insert(pt);
        out.merge(support_points(y));
      }
      break;
    case NameKind::Restrict:
      out = support_points(n->inner);
      for (const auto& pt : n->cond.support()) out.insert(pt);
      break;
    case NameKind::Based:
      for (const auto& [pt, v] : n->fn.steps) out.insert(pt);
      break;
  }
  return out;
}

Outcome<Cut> support(const Name& n, const SupportIdeal& ideal) {
  return ideal_cover(ideal, support_points(n));
}

std::string name_to_string(const Name& n) {
  std::ostringstream os;
  auto cond_str = [](const Condition& p) {
    std::ostringstream cs;
    cs << "(cond";
    for (const auto& [k, v] : p.entries)
      cs << " ((" << point_to_string(k.coord) << " " << k.slot << ") "
         << (v ? 1 : 0) << ")";
    cs << ")";
    return cs.str();
  };
  switch (n->kind) {
    case NameKind::Check:
      os << "(check " << n->hf.to_string() << ")";
      break;
    case NameKind::Gen:
      os << "(gen " << point_to_string(n->idx) << ")";
      break;
    case NameKind::Bullet:
      os << "(bullet";
      for (const Name& e : n->elems) os << " " << name_to_string(e);
      os << ")";
      break;
    case NameKind::OPair:
      os << "(opair " << name_to_string(n->fst) << " " << name_to_string(n->snd)
         << ")";
      break;
    case NameKind::Raw:
    case NameKind::Mix:
      os << (n->kind == NameKind::Raw ? "(raw" : "(mix");
      for (const auto& [p, y] : n->entries)
        os << " (" << cond_str(p) << " " << name_to_string(y) << ")";
      os << ")";
      break;
    case NameKind::Restrict:
      os << "(restrict " << name_to_string(n->inner) << " " << cond_str(n->cond)
         << ")";
      break;
    case NameKind::Based: {
      os << "(based (bound " << n->fn.bound << ") (top " << n->fn.top << ")";
      for (const auto& [pt, v] : n->fn.steps)
        os << " (pt " << point_to_string(pt) << " " << v << ")";
      os << ")";
      break;
    }
    case NameKind::Prec: {
      const char* d = n->dom.kind == DomainKind::Dlo      ? "dlo"
                      : n->dom.kind == DomainKind::LexDlo ? "lexdlo"
                      : n->dom.kind == DomainKind::Plain  ? "plain"
                                                          : "prodomega";
      os << "(prec " << d << ")";
      break;
    }
  }
  return os.str();
}

}  // namespace symx
