#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symx/order.hpp"

namespace symx {

/// Finite representation of a weakly decreasing function into {0,...,bound-1}:
/// the value is `top` below the first base point, and the value of the last
/// step at or below x otherwise. Step values strictly decrease.
struct BasedFn {
  std::uint64_t top = 0;
  std::uint64_t bound = 1;
  std::vector<std::pair<OrderPoint, std::uint64_t>> steps;

  static BasedFn constant(std::uint64_t value, std::uint64_t bound);
};

bool is_based(const BasedFn& f);

/// Throws if f violates a based-function invariant, with the reason.
void validate_based(const BasedFn& f);

std::uint64_t eval_based(const BasedFn& f, const OrderPoint& x);

/// x -> m*f_n(x) + f_m(x), the multiplicative pairing of Model I. Both inputs
/// must be based with the stated bounds and n*m > 0.
BasedFn product_based(const BasedFn& fn, const BasedFn& fm, std::uint64_t n,
                      std::uint64_t m);

/// Inverse of product_based: pointwise (div m, mod m).
std::pair<BasedFn, BasedFn> unproduct_based(const BasedFn& f, std::uint64_t n,
                                            std::uint64_t m);

/// The intensional family A_n = {based f with bound n} over one order.
struct ANFamily {
  std::uint64_t n = 0;

  bool contains(const BasedFn& f) const;
  /// All members whose base points lie in the given grid and which use at
  /// most max_steps steps.
  std::vector<BasedFn> enumerate(const std::vector<OrderPoint>& grid,
                                 std::size_t max_steps) const;
};

}  // namespace symx
