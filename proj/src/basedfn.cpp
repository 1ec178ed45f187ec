#include "symx/basedfn.hpp"

#include <algorithm>

#include "symx/error.hpp"

namespace symx {

BasedFn BasedFn::constant(std::uint64_t value, std::uint64_t bound) {
  BasedFn f;
  f.top = value;
  f.bound = bound;
  return f;
}

void validate_based(const BasedFn& f) {
  if (f.top >= f.bound)
    throw NotInRange("based function top " + std::to_string(f.top) +
                     " must be < bound " + std::to_string(f.bound));
  std::uint64_t prev = f.top;
  for (std::size_t i = 0; i < f.steps.size(); ++i) {
    const auto& [pt, val] = f.steps[i];
    if (val >= prev)
      throw NotInRange("step values must strictly decrease, got " +
                       std::to_string(val) + " after " + std::to_string(prev));
    if (i > 0 && cmp(f.steps[i - 1].first, pt) >= 0)
      throw NotInRange("base points must strictly increase at " +
                       point_to_string(pt));
    prev = val;
  }
}

bool is_based(const BasedFn& f) {
  try {
    validate_based(f);
  } catch (const Error&) {
    return false;
  }
  return true;
}

std::uint64_t eval_based(const BasedFn& f, const OrderPoint& x) {
  std::uint64_t value = f.top;
  for (const auto& [pt, val] : f.steps) {
    if (cmp(pt, x) <= 0)
      value = val;
    else
      break;
  }
  return value;
}

BasedFn product_based(const BasedFn& fn, const BasedFn& fm, std::uint64_t n,
                      std::uint64_t m) {
  if (n == 0 || m == 0)
    throw ZeroBound("product_based requires n*m > 0 (A_0 is empty)");
  if (fn.top >= n || fm.top >= m)
    throw NotInRange("factors exceed their declared bounds");
  validate_based(fn);
  validate_based(fm);

  // Candidate breakpoints: the merged base points of both factors.
  std::vector<OrderPoint> pts;
  for (const auto& s : fn.steps) pts.push_back(s.first);
  for (const auto& s : fm.steps) pts.push_back(s.first);
  std::sort(pts.begin(), pts.end(),
            [](const OrderPoint& a, const OrderPoint& b) { return cmp(a, b) < 0; });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  BasedFn out;
  out.bound = n * m;
  out.top = m * fn.top + fm.top;
  std::uint64_t prev = out.top;
  for (const OrderPoint& p : pts) {
    std::uint64_t v = m * eval_based(fn, p) + eval_based(fm, p);
    if (v < prev) {
      out.steps.emplace_back(p, v);
      prev = v;
    }
  }
  validate_based(out);
  return out;
}

std::pair<BasedFn, BasedFn> unproduct_based(const BasedFn& f, std::uint64_t n,
                                            std::uint64_t m) {
  if (n == 0 || m == 0)
    throw ZeroBound("unproduct_based requires n*m > 0 (A_0 is empty)");
  if (f.top >= n * m)
    throw NotInRange("value " + std::to_string(f.top) + " >= n*m");
  validate_based(f);

  BasedFn fn, fm;
  fn.bound = n;
  fm.bound = m;
  fn.top = f.top / m;
  fm.top = f.top % m;
  std::uint64_t prev_n = fn.top, prev_m = fm.top;
  for (const auto& [pt, val] : f.steps) {
    if (val >= n * m)
      throw NotInRange("value " + std::to_string(val) + " >= n*m");
    std::uint64_t vn = val / m, vm = val % m;
    if (vn < prev_n) {
      fn.steps.emplace_back(pt, vn);
      prev_n = vn;
    }
    if (vm < prev_m) {
      fm.steps.emplace_back(pt, vm);
      prev_m = vm;
    }
  }
  validate_based(fn);
  validate_based(fm);
  return {fn, fm};
}

bool ANFamily::contains(const BasedFn& f) const {
  BasedFn g = f;
  g.bound = n;
  return n > 0 && is_based(g);
}

namespace {
void enumerate_tail(const std::vector<OrderPoint>& grid, std::size_t from,
                    std::uint64_t below, std::size_t steps_left,
                    BasedFn& partial, std::vector<BasedFn>& out) {
  out.push_back(partial);
  if (steps_left == 0 || below == 0) return;
  for (std::size_t i = from; i < grid.size(); ++i) {
    for (std::uint64_t v = 0; v < below; ++v) {
      partial.steps.emplace_back(grid[i], v);
      enumerate_tail(grid, i + 1, v, steps_left - 1, partial, out);
      partial.steps.pop_back();
    }
  }
}
}  // namespace

std::vector<BasedFn> ANFamily::enumerate(const std::vector<OrderPoint>& grid,
                                         std::size_t max_steps) const {
  std::vector<BasedFn> out;
  std::vector<OrderPoint> sorted = grid;
  std::sort(sorted.begin(), sorted.end(),
            [](const OrderPoint& a, const OrderPoint& b) { return cmp(a, b) < 0; });
  for (std::uint64_t top = 0; top < n; ++top) {
    BasedFn f;
    f.top = top;
    f.bound = n;
    enumerate_tail(sorted, 0, top, max_steps, f, out);
  }
  return out;
}

}  // namespace symx
