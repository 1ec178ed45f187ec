#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "symx/error.hpp"

namespace symx {

using Rational = boost::rational<long long>;

/// Index points of the forcing coordinates. Lex is the desk surrogate of
/// omega_1 x Q (finite block count), Prod of the omega x omega_1 grid.
enum class PointKind { Nat, Rat, Lex, Prod };

struct OrderPoint {
  PointKind kind = PointKind::Nat;
  std::uint64_t a = 0;  // Nat: n; Lex: block; Prod: row
  std::uint64_t b = 0;  // Prod: col
  Rational q;           // Rat / Lex

  static OrderPoint nat(std::uint64_t n);
  static OrderPoint rat(Rational q);
  static OrderPoint lex(std::uint64_t block, Rational q);
  static OrderPoint prod(std::uint64_t row, std::uint64_t col);
};

/// Total order within one variant; throws VariantMismatch across variants.
/// Returns -1, 0, or 1.
int cmp(const OrderPoint& x, const OrderPoint& y);

/// Structural total order across all variants, for use as a container key.
/// Not the domain order; never throws.
bool point_key_less(const OrderPoint& x, const OrderPoint& y);

struct PointLess {
  bool operator()(const OrderPoint& x, const OrderPoint& y) const {
    return point_key_less(x, y);
  }
};

bool operator==(const OrderPoint& x, const OrderPoint& y);
inline bool operator!=(const OrderPoint& x, const OrderPoint& y) { return !(x == y); }

using PointSet = std::set<OrderPoint, PointLess>;

/// Strictly-between witness for the dense variants.
OrderPoint between(const OrderPoint& x, const OrderPoint& y);

std::string point_to_string(const OrderPoint& x);

enum class DomainKind { Plain, Dlo, LexDlo, ProdOmega };

struct IndexDomain {
  DomainKind kind = DomainKind::Plain;
  std::optional<std::uint64_t> size;   // Plain; empty = unbounded
  std::uint64_t blocks = 0;            // LexDlo
  std::optional<std::uint64_t> rows;   // ProdOmega; empty = unbounded

  static IndexDomain plain(std::optional<std::uint64_t> size = std::nullopt);
  static IndexDomain dlo();
  static IndexDomain lex_dlo(std::uint64_t blocks);
  static IndexDomain prod_omega(std::optional<std::uint64_t> rows = std::nullopt);
};

bool domain_admits(const IndexDomain& d, const OrderPoint& x);

/// Supports are either finite point sets or bounded initial segments.
enum class CutKind { FiniteSet, InitialSegment };

struct Cut {
  CutKind kind = CutKind::FiniteSet;
  PointSet points;                       // FiniteSet
  OrderPoint bound;                      // InitialSegment
  bool inclusive = true;

  static Cut finite(PointSet pts);
  static Cut initial(OrderPoint bound, bool inclusive = true);
};

bool cut_contains(const Cut& e, const OrderPoint& x);

/// e1 subseteq e2, extensionally. Initial segments are treated as infinite,
/// so a segment is never contained in a finite set.
bool cut_subset(const Cut& e1, const Cut& e2);

bool cut_equal(const Cut& e1, const Cut& e2);

std::string cut_to_string(const Cut& e);

}  // namespace symx
