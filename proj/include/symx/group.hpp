#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "symx/order.hpp"

namespace symx {

/// A Cohen condition: a finite partial function (coordinate, slot) -> bit.
struct CondKey {
  OrderPoint coord;
  std::uint32_t slot = 0;
};

bool operator<(const CondKey& a, const CondKey& b);
bool operator==(const CondKey& a, const CondKey& b);

struct Condition {
  std::map<CondKey, bool> entries;

  bool empty() const { return entries.empty(); }
  PointSet support() const;
  /// Reverse inclusion: *this extends p iff entries contain p's.
  bool extends(const Condition& p) const;
  bool compatible(const Condition& o) const;
  /// Union of two compatible conditions.
  Condition merged_with(const Condition& o) const;
};

bool operator==(const Condition& a, const Condition& b);
bool operator<(const Condition& a, const Condition& b);

/// Finite partial injection, identity elsewhere. Fixed points are dropped so
/// equal permutations have equal data.
struct PlainPerm {
  std::map<OrderPoint, OrderPoint, PointLess> map;
};

/// Increasing piecewise-linear map of the rationals, identity outside the
/// interval spanned by its breakpoints (first and last lie on the diagonal).
/// With a block, it acts on that Lex block only; without one it acts on the
/// rational coordinate of any Dlo/Lex point.
struct PlMap {
  std::vector<std::pair<Rational, Rational>> pts;
  std::optional<std::uint64_t> block;
};

/// Finitely many rows, each permuting finitely many columns.
struct ProdPerm {
  std::map<std::uint64_t, std::map<std::uint64_t, std::uint64_t>> rows;
};

class Automorphism {
 public:
  Automorphism() : v_(PlainPerm{}) {}

  static Automorphism identity() { return Automorphism(); }
  static Automorphism plain(std::map<OrderPoint, OrderPoint, PointLess> map);
  static Automorphism transposition(const OrderPoint& x, const OrderPoint& y);
  static Automorphism pl(std::vector<std::pair<Rational, Rational>> pts,
                         std::optional<std::uint64_t> block = std::nullopt);
  static Automorphism prod(ProdPerm p);

  bool is_identity() const;
  /// True when the map preserves the domain order everywhere. PL maps always
  /// do; a finite permutation of a linear order does only when trivial.
  bool order_preserving() const;

  const PlainPerm* as_plain() const { return std::get_if<PlainPerm>(&v_); }
  const PlMap* as_pl() const { return std::get_if<PlMap>(&v_); }
  const ProdPerm* as_prod() const { return std::get_if<ProdPerm>(&v_); }

  friend int aut_cmp(const Automorphism& a, const Automorphism& b);

 private:
  std::variant<PlainPerm, PlMap, ProdPerm> v_;
};

inline bool operator==(const Automorphism& a, const Automorphism& b) {
  return aut_cmp(a, b) == 0;
}
struct AutLess {
  bool operator()(const Automorphism& a, const Automorphism& b) const {
    return aut_cmp(a, b) < 0;
  }
};

OrderPoint apply_point(const Automorphism& pi, const OrderPoint& x);
Automorphism compose(const Automorphism& pi, const Automorphism& sigma);
Automorphism invert(const Automorphism& pi);
/// pi p (pi x, n) = p(x, n).
Condition apply_condition(const Automorphism& pi, const Condition& p);

Rational pl_eval(const PlMap& f, const Rational& q);

/// Group descriptions. Generated groups are enumerated by bounded closure;
/// FullOrderAut is a membership-only description.
struct GroupDesc {
  enum class Kind { Full, Fix, FixMeet, Generated, FullOrderAut };
  Kind kind = Kind::Full;
  IndexDomain domain;
  std::vector<Cut> cuts;               // Fix (one), FixMeet (several)
  std::vector<Automorphism> gens;      // Generated

  static GroupDesc full(IndexDomain d);
  static GroupDesc fix(Cut e);
  static GroupDesc fix_meet(std::vector<Cut> es);
  static GroupDesc generated(std::vector<Automorphism> gens);
  static GroupDesc full_order_aut(IndexDomain d);
};

/// pi restricted to E is the identity.
bool fixes_cut(const Automorphism& pi, const Cut& e);

enum class IdealKind { FiniteSets, BoundedCuts, Listed };

struct SupportIdeal {
  IdealKind kind = IdealKind::FiniteSets;
  std::vector<Cut> listed;

  static SupportIdeal finite_sets() { return {IdealKind::FiniteSets, {}}; }
  static SupportIdeal bounded_cuts() { return {IdealKind::BoundedCuts, {}}; }
  static SupportIdeal of(std::vector<Cut> members) {
    return {IdealKind::Listed, std::move(members)};
  }
};

/// Smallest ideal member covering the given points.
Outcome<Cut> ideal_cover(const SupportIdeal& ideal, const PointSet& pts);
bool ideal_contains(const SupportIdeal& ideal, const Cut& e);

struct FilterDesc {
  GroupDesc base;
  SupportIdeal ideal;
};

/// E' with fix(E') = pi fix(E) pi^-1, i.e. the pointwise image pi[E]. With an
/// ideal, throws ImageNotInIdeal when the image escapes it.
Cut conjugate_fix(const Automorphism& pi, const Cut& e,
                  const SupportIdeal* ideal = nullptr);

/// Syntactic filter membership for fix-shaped groups.
bool filter_contains(const FilterDesc& f, const GroupDesc& h);

/// Tenacity witness: an ideal member covering supp(p).
Outcome<Cut> is_tenacious(const Condition& p, const FilterDesc& f);

/// Constraint record for the proof-subroutine automorphisms.
struct AutoSpec {
  std::optional<Cut> fix_cut;
  std::optional<OrderPoint> move_from;
  std::optional<OrderPoint> move_to;     // empty with move_from set: any image != from
  std::optional<std::pair<OrderPoint, OrderPoint>> confine;  // open interval
  std::optional<Condition> keep_compatible;  // image condition stays compatible
};

Outcome<Automorphism> find_automorphism(const AutoSpec& spec);
/// Empty on success, otherwise the first violated clause.
std::optional<std::string> verify_automorphism(const Automorphism& pi,
                                               const AutoSpec& spec);

/// All elements of an enumerable group over the given finite universe.
std::vector<Automorphism> enumerate_group(const GroupDesc& g,
                                          const std::vector<OrderPoint>& universe,
                                          std::size_t cap = 10000);

/// Subgroup closure of the given elements, inside an ambient element list.
std::vector<Automorphism> closure(std::vector<Automorphism> elems,
                                  std::size_t cap = 10000);

struct OrbitPartition {
  /// Each orbit sorted with its representative (least point) first.
  std::vector<std::vector<OrderPoint>> orbits;
};

OrbitPartition orbits(const GroupDesc& h, const std::vector<OrderPoint>& points,
                      std::size_t cap = 10000);

}  // namespace symx
