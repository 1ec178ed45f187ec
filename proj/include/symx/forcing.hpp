#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "symx/name.hpp"

namespace symx {

/// Finite surrogate of a Cohen poset: conditions are partial functions
/// domain x {0..slots-1} -> {0,1}, atoms the total ones.
struct TruncatedPoset {
  std::vector<OrderPoint> domain;
  std::uint32_t slots = 1;

  std::size_t cells() const { return domain.size() * slots; }
};

struct Formula;
using FormulaP = std::shared_ptr<const Formula>;

struct Formula {
  enum class Kind { Elem, Eq, Not, And, Or };
  Kind kind = Kind::Elem;
  Name a, b;        // Elem / Eq
  FormulaP f, g;    // Not (f), And / Or
};

FormulaP f_elem(Name a, Name b);
FormulaP f_eq(Name a, Name b);
FormulaP f_not(FormulaP f);
FormulaP f_and(FormulaP f, FormulaP g);
FormulaP f_or(FormulaP f, FormulaP g);
/// Macro: fn is a Bullet of OPairs; asserts totality over the family,
/// single-valuedness, and that every pair's first component is listed.
FormulaP is_function_on(const Name& fn, const std::vector<Name>& family);

std::string formula_to_string(const FormulaP& f);
/// Applies the automorphism to every name in the formula.
FormulaP apply_formula(const Automorphism& pi, const FormulaP& f);

/// An atom, i.e. a principal generic: the induced filter is the set of its
/// restrictions.
struct GenericSample {
  Condition atom;
};

class ForcingEngine {
 public:
  explicit ForcingEngine(TruncatedPoset t);

  const TruncatedPoset& poset() const { return t_; }
  const std::vector<Condition>& all_conditions();
  const std::vector<GenericSample>& atoms();

  /// Expands a symbolic name to a Raw name over this truncation.
  Name compile(const Name& n);

  /// The recursive forcing relation (no evaluation involved).
  bool forces(const Condition& p, const FormulaP& phi);
  /// Ground truth: phi holds of the evaluated names at every atom above p.
  bool forces_oracle(const Condition& p, const FormulaP& phi);

  HF val(const Name& n, const GenericSample& g);

 private:
  std::size_t cell_index(const CondKey& k) const;
  std::pair<std::uint32_t, std::uint32_t> encode(const Condition& p) const;
  bool atom_leq(std::size_t atom, const std::pair<std::uint32_t, std::uint32_t>& p) const;

  bool forces_atom(std::size_t atom, const FormulaP& phi);
  bool atom_elem(std::size_t atom, const Name& x, const Name& y);
  bool atom_eq(std::size_t atom, const Name& x, const Name& y);
  std::size_t intern_name(const Name& n);

  Name compile_restrict(const Name& raw_inner, const Condition& p);

  TruncatedPoset t_;
  std::vector<CondKey> cells_;
  std::map<CondKey, std::size_t> cell_of_;
  std::vector<Condition> conds_;
  std::vector<GenericSample> atoms_;
  std::vector<std::uint32_t> atom_vals_;

  std::map<Name, Name, NameLess> compile_cache_;
  std::unordered_map<const NameNode*, Name> compile_ptr_cache_;
  // Pointer-keyed caches must keep their key objects alive, or the allocator
  // could hand a dead key's address to a different name.
  std::vector<Name> retained_;
  std::map<Name, std::size_t, NameLess> name_ids_;
  std::unordered_map<const NameNode*, std::size_t> name_ptr_ids_;
  std::unordered_map<std::uint64_t, bool> memo_;
  std::map<std::pair<std::size_t, std::size_t>, HF> val_memo_;
};

/// Bounded pools for the exhaustive checks.
std::vector<Name> enumerate_names(const TruncatedPoset& t, std::size_t depth,
                                  std::size_t cap);
std::vector<FormulaP> enumerate_formulas(const std::vector<Name>& pool,
                                         std::size_t depth, std::size_t cap);

struct LemmaCounterexample {
  Condition p;
  Automorphism pi;
  FormulaP phi;
  bool lhs = false, rhs = false;
};

struct LemmaReport {
  std::size_t checked = 0;
  std::size_t conditions = 0, elements = 0, formulas = 0;
  std::vector<LemmaCounterexample> counterexamples;
  double millis = 0;
};

using NameAction = std::function<Name(const Automorphism&, const Name&)>;

/// Exhaustive check of p forces phi  <=>  pi p forces pi phi over the
/// enumerable group. A non-standard action can be injected (mutation tests).
LemmaReport check_symmetry_lemma(const TruncatedPoset& t,
                                 const std::vector<Automorphism>& group,
                                 std::size_t name_depth,
                                 std::size_t formula_depth,
                                 std::size_t budget = 1000000,
                                 NameAction action = {});

}  // namespace symx
