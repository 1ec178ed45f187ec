#include "symx/forcing.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace symx {

FormulaP f_elem(Name a, Name b) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Elem;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

FormulaP f_eq(Name a, Name b) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Eq;
  f->a = std::move(a);
  f->b = std::move(b);
  return f;
}

FormulaP f_not(FormulaP g) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Not;
  f->f = std::move(g);
  return f;
}

FormulaP f_and(FormulaP g, FormulaP h) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::And;
  f->f = std::move(g);
  f->g = std::move(h);
  return f;
}

FormulaP f_or(FormulaP g, FormulaP h) {
  auto f = std::make_shared<Formula>();
  f->kind = Formula::Kind::Or;
  f->f = std::move(g);
  f->g = std::move(h);
  return f;
}

FormulaP is_function_on(const Name& fn, const std::vector<Name>& family) {
  if (fn->kind != NameKind::Bullet)
    throw VariantMismatch("functionhood is asserted of bullet names of pairs");
  std::vector<std::pair<Name, Name>> pairs;
  for (const Name& e : fn->elems) {
    if (e->kind != NameKind::OPair)
      throw VariantMismatch("functionhood is asserted of bullet names of pairs");
    pairs.emplace_back(e->fst, e->snd);
  }
  FormulaP out;
  auto conj = [&out](FormulaP f) { out = out ? f_and(out, std::move(f)) : std::move(f); };
  // totality over the family
  for (const Name& x : family) {
    FormulaP any;
    for (const auto& [u, v] : pairs) {
      FormulaP hit = f_eq(u, x);
      any = any ? f_or(any, std::move(hit)) : std::move(hit);
    }
    conj(any ? any : f_not(f_eq(x, x)));
  }
  // the domain is inside the family
  for (const auto& [u, v] : pairs) {
    FormulaP any;
    for (const Name& x : family) {
      FormulaP hit = f_eq(u, x);
      any = any ? f_or(any, std::move(hit)) : std::move(hit);
    }
    conj(any ? any : f_not(f_eq(u, u)));
  }
  // single-valuedness
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      conj(f_or(f_not(f_eq(pairs[i].first, pairs[j].first)),
                f_eq(pairs[i].second, pairs[j].second)));
  return out ? out : f_eq(check_name(HF::empty()), check_name(HF::empty()));
}

std::string formula_to_string(const FormulaP& f) {
  switch (f->kind) {
    case Formula::Kind::Elem:
      return "(elem " + name_to_string(f->a) + " " + name_to_string(f->b) + ")";
    case Formula::Kind::Eq:
      return "(eq " + name_to_string(f->a) + " " + name_to_string(f->b) + ")";
    case Formula::Kind::Not:
      return "(not " + formula_to_string(f->f) + ")";
    case Formula::Kind::And:
      return "(and " + formula_to_string(f->f) + " " + formula_to_string(f->g) + ")";
    case Formula::Kind::Or:
      return "(or " + formula_to_string(f->f) + " " + formula_to_string(f->g) + ")";
  }
  return "?";
}

namespace {

FormulaP map_formula(const FormulaP& f, const std::function<Name(const Name&)>& nf) {
  switch (f->kind) {
    case Formula::Kind::Elem:
      return f_elem(nf(f->a), nf(f->b));
    case Formula::Kind::Eq:
      return f_eq(nf(f->a), nf(f->b));
    case Formula::Kind::Not:
      return f_not(map_formula(f->f, nf));
    case Formula::Kind::And:
      return f_and(map_formula(f->f, nf), map_formula(f->g, nf));
    case Formula::Kind::Or:
      return f_or(map_formula(f->f, nf), map_formula(f->g, nf));
  }
  return f;
}

}  // namespace

FormulaP apply_formula(const Automorphism& pi, const FormulaP& f) {
  return map_formula(f, [&pi](const Name& n) { return apply_name(pi, n); });
}

// ---------------------------------------------------------------------------

ForcingEngine::ForcingEngine(TruncatedPoset t) : t_(std::move(t)) {
  if (t_.cells() > 16)
    throw EnumerationBudgetExceeded("truncation too large: " +
                                    std::to_string(t_.cells()) + " cells");
  for (const auto& coord : t_.domain)
    for (std::uint32_t j = 0; j < t_.slots; ++j) {
      CondKey k{coord, j};
      cell_of_[k] = cells_.size();
      cells_.push_back(k);
    }
  if (cell_of_.size() != cells_.size())
    throw CoordinateOutOfDomain("duplicate coordinate in the truncation domain");
}

std::size_t ForcingEngine::cell_index(const CondKey& k) const {
  auto it = cell_of_.find(k);
  if (it == cell_of_.end())
    throw CoordinateOutOfDomain("coordinate " + point_to_string(k.coord) +
                                " slot " + std::to_string(k.slot) +
                                " is outside the truncation");
  return it->second;
}

std::pair<std::uint32_t, std::uint32_t> ForcingEngine::encode(
    const Condition& p) const {
  std::uint32_t mask = 0, vals = 0;
  for (const auto& [k, v] : p.entries) {
    std::size_t c = cell_index(k);
    mask |= 1u << c;
    if (v) vals |= 1u << c;
  }
  return {mask, vals};
}

bool ForcingEngine::atom_leq(
    std::size_t atom, const std::pair<std::uint32_t, std::uint32_t>& p) const {
  return (atom_vals_[atom] & p.first) == p.second;
}

const std::vector<Condition>& ForcingEngine::all_conditions() {
  if (conds_.empty()) {
    std::size_t n = cells_.size();
    std::vector<std::size_t> digit(n, 0);
    while (true) {
      Condition c;
      for (std::size_t i = 0; i < n; ++i)
        if (digit[i] != 2) c.entries[cells_[i]] = digit[i] == 1;
      conds_.push_back(std::move(c));
      std::size_t i = 0;
      for (; i < n; ++i) {
        if (++digit[i] <= 2) break;
        digit[i] = 0;
      }
      if (i == n) break;
    }
  }
  return conds_;
}

const std::vector<GenericSample>& ForcingEngine::atoms() {
  if (atoms_.empty()) {
    std::size_t n = cells_.size();
    for (std::uint32_t v = 0; v < (1u << n); ++v) {
      Condition c;
      for (std::size_t i = 0; i < n; ++i) c.entries[cells_[i]] = (v >> i) & 1;
      atoms_.push_back(GenericSample{std::move(c)});
      atom_vals_.push_back(v);
    }
  }
  return atoms_;
}

Name ForcingEngine::compile(const Name& n) {
  auto pit = compile_ptr_cache_.find(n.get());
  if (pit != compile_ptr_cache_.end()) return pit->second;
  auto it = compile_cache_.find(n);
  if (it != compile_cache_.end()) {
    if (compile_ptr_cache_.emplace(n.get(), it->second).second)
      retained_.push_back(n);
    return it->second;
  }
  Name out;
  std::vector<std::pair<Condition, Name>> entries;
  switch (n->kind) {
    case NameKind::Check:
      for (const HF& m : n->hf.elems())
        entries.emplace_back(Condition{}, compile(check_name(m)));
      out = raw_name(std::move(entries));
      break;
    case NameKind::Gen: {
      bool found = false;
      for (const auto& coord : t_.domain)
        if (coord == n->idx) found = true;
      if (!found)
        throw CoordinateOutOfDomain("generic coordinate " +
                                    point_to_string(n->idx) +
                                    " is outside the truncation");
      for (std::uint32_t j = 0; j < t_.slots; ++j) {
        Condition c;
        c.entries[CondKey{n->idx, j}] = true;
        entries.emplace_back(std::move(c), compile(check_nat(j)));
      }
      out = raw_name(std::move(entries));
      break;
    }
    case NameKind::Bullet:
      for (const Name& e : n->elems)
        entries.emplace_back(Condition{}, compile(e));
      out = raw_name(std::move(entries));
      break;
    case NameKind::OPair:
      entries.emplace_back(Condition{}, compile(bullet_name({n->fst})));
      entries.emplace_back(Condition{}, compile(bullet_name({n->fst, n->snd})));
      out = raw_name(std::move(entries));
      break;
    case NameKind::Raw:
      for (const auto& [p, y] : n->entries) {
        encode(p);  // validates coordinates
        entries.emplace_back(p, compile(y));
      }
      out = raw_name(std::move(entries));
      break;
    case NameKind::Restrict: {
      encode(n->cond);
      out = compile_restrict(compile(n->inner), n->cond);
      break;
    }
    case NameKind::Mix: {
      for (const auto& [p, y] : n->entries) {
        encode(p);
        Name branch = compile_restrict(compile(y), p);
        for (const auto& e : branch->entries) entries.push_back(e);
      }
      out = raw_name(std::move(entries));
      break;
    }
    case NameKind::Based: {
      for (const auto& pt : t_.domain) {
        if (!n->fn.steps.empty() && pt.kind != n->fn.steps.front().first.kind)
          continue;
        std::uint64_t v = eval_based(n->fn, pt);
        entries.emplace_back(Condition{},
                             compile(opair_name(gen_name(pt), check_nat(v))));
      }
      out = raw_name(std::move(entries));
      break;
    }
    case NameKind::Prec: {
      for (const auto& i : t_.domain)
        for (const auto& j : t_.domain) {
          if (i.kind != j.kind) continue;
          if (cmp(i, j) < 0)
            entries.emplace_back(Condition{},
                                 compile(opair_name(gen_name(i), gen_name(j))));
        }
      out = raw_name(std::move(entries));
      break;
    }
  }
  // Cache the expansion under the input and under its own raw form, and keep
  // the cached raw idempotent under compile.
  auto [cit, fresh] = compile_cache_.emplace(out, out);
  out = cit->second;
  compile_cache_.emplace(n, out);
  if (compile_ptr_cache_.emplace(n.get(), out).second) retained_.push_back(n);
  if (compile_ptr_cache_.emplace(out.get(), out).second) retained_.push_back(out);
  return out;
}

// {(q, y|p) : q <= p, q forces y in x, y an entry name of x}
Name ForcingEngine::compile_restrict(const Name& raw_inner, const Condition& p) {
  std::vector<std::pair<Condition, Name>> entries;
  for (const Condition& q : all_conditions()) {
    if (!q.extends(p)) continue;
    for (const auto& [s, z] : raw_inner->entries) {
      if (forces(q, f_elem(z, raw_inner)))
        entries.emplace_back(q, compile_restrict(z, p));
    }
  }
  return raw_name(std::move(entries));
}

std::size_t ForcingEngine::intern_name(const Name& n) {
  auto pit = name_ptr_ids_.find(n.get());
  if (pit != name_ptr_ids_.end()) return pit->second;
  Name raw = compile(n);
  auto [it, inserted] = name_ids_.emplace(raw, name_ids_.size());
  if (name_ptr_ids_.emplace(n.get(), it->second).second) retained_.push_back(n);
  if (name_ptr_ids_.emplace(raw.get(), it->second).second)
    retained_.push_back(raw);
  return it->second;
}

bool ForcingEngine::forces(const Condition& p, const FormulaP& phi) {
  atoms();
  auto enc = encode(p);
  for (std::size_t a = 0; a < atom_vals_.size(); ++a) {
    if (!atom_leq(a, enc)) continue;
    if (!forces_atom(a, phi)) return false;
  }
  return true;
}

bool ForcingEngine::forces_atom(std::size_t atom, const FormulaP& phi) {
  switch (phi->kind) {
    case Formula::Kind::Elem:
      return atom_elem(atom, compile(phi->a), compile(phi->b));
    case Formula::Kind::Eq:
      return atom_eq(atom, compile(phi->a), compile(phi->b));
    case Formula::Kind::Not:
      return !forces_atom(atom, phi->f);
    case Formula::Kind::And:
      return forces_atom(atom, phi->f) && forces_atom(atom, phi->g);
    case Formula::Kind::Or:
      return forces_atom(atom, phi->f) || forces_atom(atom, phi->g);
  }
  return false;
}

namespace {
// (tag, atom, xid, yid) packed; cells <= 16 and desk-scale name counts keep
// the fields disjoint.
std::uint64_t leaf_key(bool eq, std::size_t atom, std::size_t x, std::size_t y) {
  return (static_cast<std::uint64_t>(x) << 41) |
         (static_cast<std::uint64_t>(y) << 18) |
         (static_cast<std::uint64_t>(atom) << 1) | (eq ? 1 : 0);
}
}  // namespace

bool ForcingEngine::atom_elem(std::size_t atom, const Name& x, const Name& y) {
  std::uint64_t key = leaf_key(false, atom, intern_name(x), intern_name(y));
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  bool result = false;
  for (const auto& [s, z] : y->entries) {
    if (!atom_leq(atom, encode(s))) continue;
    if (atom_eq(atom, x, z)) {
      result = true;
      break;
    }
  }
  memo_.emplace(key, result);
  return result;
}

bool ForcingEngine::atom_eq(std::size_t atom, const Name& x, const Name& y) {
  std::size_t xid = intern_name(x), yid = intern_name(y);
  std::uint64_t key = leaf_key(true, atom, std::min(xid, yid), std::max(xid, yid));
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  bool result = true;
  for (const auto& [s, z] : x->entries) {
    if (!atom_leq(atom, encode(s))) continue;
    if (!atom_elem(atom, z, y)) {
      result = false;
      break;
    }
  }
  if (result)
    for (const auto& [s, z] : y->entries) {
      if (!atom_leq(atom, encode(s))) continue;
      if (!atom_elem(atom, z, x)) {
        result = false;
        break;
      }
    }
  memo_.emplace(key, result);
  return result;
}

HF ForcingEngine::val(const Name& n, const GenericSample& g) {
  atoms();
  auto enc = encode(g.atom);
  if (enc.first != (1u << cells_.size()) - 1)
    throw CoordinateOutOfDomain("generic sample is not a total assignment");
  std::size_t atom = enc.second;
  Name raw = compile(n);
  std::size_t nid = intern_name(raw);
  auto it = val_memo_.find({atom, nid});
  if (it != val_memo_.end()) return it->second;
  HF out;
  for (const auto& [s, z] : raw->entries)
    if (atom_leq(atom, encode(s))) out.insert(val(z, g));
  val_memo_.emplace(std::make_pair(atom, nid), out);
  return out;
}

bool ForcingEngine::forces_oracle(const Condition& p, const FormulaP& phi) {
  atoms();
  auto enc = encode(p);
  std::function<bool(const GenericSample&, const FormulaP&)> sat =
      [&](const GenericSample& g, const FormulaP& f) -> bool {
    switch (f->kind) {
      case Formula::Kind::Elem:
        return val(f->b, g).contains(val(f->a, g));
      case Formula::Kind::Eq:
        return val(f->a, g) == val(f->b, g);
      case Formula::Kind::Not:
        return !sat(g, f->f);
      case Formula::Kind::And:
        return sat(g, f->f) && sat(g, f->g);
      case Formula::Kind::Or:
        return sat(g, f->f) || sat(g, f->g);
    }
    return false;
  };
  for (std::size_t a = 0; a < atom_vals_.size(); ++a) {
    if (!atom_leq(a, enc)) continue;
    if (!sat(atoms_[a], phi)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::vector<Name> enumerate_names(const TruncatedPoset& t, std::size_t depth,
                                  std::size_t cap) {
  std::vector<Name> pool;
  pool.push_back(check_name(HF::empty()));
  pool.push_back(check_nat(1));
  for (const auto& coord : t.domain) pool.push_back(gen_name(coord));

  std::vector<Condition> base_conds{Condition{}};
  for (const auto& coord : t.domain)
    for (std::uint32_t j = 0; j < t.slots; ++j)
      for (bool b : {false, true}) {
        Condition c;
        c.entries[CondKey{coord, j}] = b;
        base_conds.push_back(std::move(c));
      }

  for (std::size_t d = 1; d < depth && pool.size() < cap; ++d) {
    std::vector<Name> prev = pool;
    for (const Condition& c : base_conds)
      for (const Name& y : prev) {
        if (pool.size() >= cap) return pool;
        pool.push_back(raw_name({{c, y}}));
      }
    for (std::size_t i = 0; i < prev.size(); ++i)
      for (std::size_t j = 0; j < base_conds.size() && j + 1 < base_conds.size();
           ++j) {
        if (pool.size() >= cap) return pool;
        pool.push_back(raw_name(
            {{base_conds[j], prev[i]},
             {base_conds[j + 1], prev[(i + 1) % prev.size()]}}));
      }
  }
  return pool;
}

std::vector<FormulaP> enumerate_formulas(const std::vector<Name>& pool,
                                         std::size_t depth, std::size_t cap) {
  std::vector<FormulaP> out;
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = 0; j < pool.size(); ++j) {
      if (out.size() + 2 > cap) return out;
      out.push_back(f_elem(pool[i], pool[j]));
      out.push_back(f_eq(pool[i], pool[j]));
    }
  std::vector<FormulaP> level = out;
  for (std::size_t d = 0; d < depth; ++d) {
    std::vector<FormulaP> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      if (out.size() + 3 > cap) return out;
      next.push_back(f_not(level[i]));
      next.push_back(f_and(level[i], level[(i + 1) % level.size()]));
      next.push_back(f_or(level[i], level[(i * 7 + 3) % level.size()]));
      out.insert(out.end(), next.end() - 3, next.end());
    }
    level = std::move(next);
  }
  return out;
}

LemmaReport check_symmetry_lemma(const TruncatedPoset& t,
                                 const std::vector<Automorphism>& group,
                                 std::size_t name_depth,
                                 std::size_t formula_depth, std::size_t budget,
                                 NameAction action) {
  auto start = std::chrono::steady_clock::now();
  if (!action)
    action = [](const Automorphism& pi, const Name& n) {
      return apply_name(pi, n);
    };
  ForcingEngine eng(t);
  std::size_t nconds = eng.all_conditions().size();
  if (nconds * std::max<std::size_t>(group.size(), 1) > budget)
    throw EnumerationBudgetExceeded(
        "condition/group enumeration alone exceeds the tuple budget");
  std::size_t fcap =
      std::max<std::size_t>(1, budget / (nconds * std::max<std::size_t>(
                                                      group.size(), 1)));
  std::vector<Name> names = enumerate_names(t, name_depth, 64);
  std::vector<FormulaP> formulas = enumerate_formulas(names, formula_depth, fcap);

  LemmaReport rep;
  rep.conditions = nconds;
  rep.elements = group.size();
  rep.formulas = formulas.size();
  for (const Automorphism& pi : group) {
    for (const FormulaP& phi : formulas) {
      FormulaP pphi =
          map_formula(phi, [&](const Name& n) { return action(pi, n); });
      for (const Condition& p : eng.all_conditions()) {
        bool lhs = eng.forces(p, phi);
        bool rhs = eng.forces(apply_condition(pi, p), pphi);
        ++rep.checked;
        if (lhs != rhs && rep.counterexamples.size() < 100)
          rep.counterexamples.push_back({p, pi, phi, lhs, rhs});
      }
    }
  }
  rep.millis = std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return rep;
}

}  // namespace symx
