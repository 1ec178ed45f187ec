#pragma once

#include <map>
#include <string>
#include <vector>

#include "symx/forcing.hpp"

namespace symx {

struct SymmetricSystem {
  TruncatedPoset poset;
  GroupDesc group;
  FilterDesc filter;
  std::size_t cap = 10000;
};

/// One node of an HS certificate: the subname with an ideal member whose
/// pointwise stabilizer fixes it.
struct HSNode {
  Name name;
  Cut support;
  std::vector<HSNode> children;
};

/// The indexed family X = {x_i : i in I} (bullet-style, distinct indices).
struct FamilyName {
  std::vector<std::pair<OrderPoint, Name>> elems;

  std::vector<Name> names() const;
  Name as_bullet() const;
};

bool is_in_sym(const Automorphism& pi, const Name& n);

/// Certificate or the path to the first subname whose structural support has
/// no covering ideal member.
Outcome<HSNode> is_hereditarily_symmetric(const Name& n, const SymmetricSystem& s);

/// 1 forces x_i != x_j for all i != j.
bool is_injective_name(const FamilyName& x, ForcingEngine& eng);

/// For each member: H <= sym(x_i), or H together with sym(x_i) generates the
/// whole group.
bool measures(const GroupDesc& h, const FamilyName& x, const SymmetricSystem& s);

/// Every filter generator fix(E) has a fix-shaped K = fix(E'), E <= E' in the
/// ideal, which measures the family.
bool is_densely_measurable(const FamilyName& x, const SymmetricSystem& s);

struct MixReport {
  bool ok = false;
  Name mixed;
  Cut support;
  std::string reason;
};

/// Mixes the branches, certifies the result HS over the intersected
/// (union-of-supports) ideal member, and verifies each branch forcing.
MixReport check_mixable(const SymmetricSystem& s,
                        const std::vector<std::pair<Condition, Name>>& branches);

/// Searches the fix-shaped filter members for an H with: for all H0, H1 in
/// the generated family there is pi in H0 with H cap H0 <= pi H1 pi^-1.
/// The witness is the cut E with H = fix(E).
Outcome<Cut> has_absolute_representative(const FilterDesc& f,
                                         const std::vector<OrderPoint>& universe,
                                         std::size_t cap = 10000);

/// Raw-expansion depth, the workbench's rank of a name.
std::size_t raw_depth(const Name& raw);

/// Membership formula "a in F(x)" with F a name of a function given by pairs
/// (ground, bullet-of-pairs, or a mix/raw of such).
FormulaP applied_elem(const Name& a, const Name& fn, const Name& x);

/// The semi-canonical A_i = {(p,a) : p forces a in F(x_i), rank(a) < bound,
/// a hereditarily symmetric}.
Name build_semicanonical(ForcingEngine& eng, const Name& fn, const Name& x_i,
                         const SymmetricSystem& s, std::size_t rank_bound);

struct ChoiceInput {
  FamilyName family;
  std::map<OrderPoint, Name, PointLess> a_names;  // a_i in F(x_i), per index
  GroupDesc h;                                    // the measuring subgroup
  GroupDesc k;                                    // sym(X) cap sym(F)
};

/// The orbit/representative name f = {<pi x_j, pi a_j>* : j in J, pi in H}*,
/// with the conjugation repair applied per index first. Throws
/// WellDefinednessFailure when a stabilized index moves its value and no
/// repair exists.
Name build_choice_name(const ChoiceInput& in, const SymmetricSystem& s);

/// Mixes a name forced to behave below p into a 1-forced one, using the
/// maximal antichain {p} + single-flip complements of p.
Name normalize_to_one(const Condition& p, const Name& n, const Name& fallback);

}  // namespace symx
