#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "symx/basedfn.hpp"
#include "symx/group.hpp"
#include "symx/hf.hpp"

namespace symx {

enum class NameKind { Check, Gen, Bullet, OPair, Raw, Restrict, Mix, Based, Prec };

struct NameNode;
/// Names are immutable shared trees; every constructor canonicalizes
/// (Bullet sorted and deduplicated, Raw/Mix entries sorted), so structural
/// comparison is well defined.
using Name = std::shared_ptr<const NameNode>;

struct NameNode {
  NameKind kind = NameKind::Check;
  HF hf;                                             // Check
  OrderPoint idx;                                    // Gen
  std::vector<Name> elems;                           // Bullet
  Name fst, snd;                                     // OPair
  std::vector<std::pair<Condition, Name>> entries;   // Raw, Mix
  Name inner;                                        // Restrict
  Condition cond;                                    // Restrict
  BasedFn fn;                                        // Based
  IndexDomain dom;                                   // Prec
};

Name check_name(HF x);
Name check_nat(std::uint64_t n);
Name gen_name(OrderPoint i);
Name bullet_name(std::vector<Name> elems);
Name opair_name(Name fst, Name snd);
Name raw_name(std::vector<std::pair<Condition, Name>> entries);
Name restrict_name(Name inner, Condition p);
/// Throws NotAnAntichain when two branch conditions are compatible.
Name mix_name(std::vector<std::pair<Condition, Name>> branches);
Name based_name(BasedFn f);
Name prec_name(IndexDomain d);

int name_cmp(const Name& a, const Name& b);
struct NameLess {
  bool operator()(const Name& a, const Name& b) const { return name_cmp(a, b) < 0; }
};
bool names_equal_structural(const Name& a, const Name& b);

/// The recursive action: Check fixed, Gen(i) -> Gen(pi i), Raw entries mapped
/// pairwise, BasedName(F) -> BasedName(F o pi^-1), PrecName fixed for
/// order-preserving pi.
Name apply_name(const Automorphism& pi, const Name& n);

/// Coordinates through which the name depends on the generic object.
PointSet support_points(const Name& n);

/// Smallest ideal member E with fix(E) <= sym(n) under the structural rules.
Outcome<Cut> support(const Name& n, const SupportIdeal& ideal);

std::string name_to_string(const Name& n);

}  // namespace symx
