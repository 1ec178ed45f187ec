#include "symx/hf.hpp"

#include <algorithm>
#include <sstream>

namespace symx {

HF::HF(std::vector<HF> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

HF HF::nat(std::uint64_t n) {
  HF x;
  for (std::uint64_t i = 0; i < n; ++i) {
    HF next = x;
    next.insert(x);
    x = std::move(next);
  }
  return x;
}

HF HF::singleton(HF x) {
  HF s;
  s.insert(std::move(x));
  return s;
}

HF HF::pair(HF a, HF b) {
  HF inner = singleton(a);
  HF outer;
  HF both = inner;
  both.insert(std::move(b));
  outer.insert(std::move(inner));
  outer.insert(std::move(both));
  return outer;
}

bool HF::contains(const HF& x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

void HF::insert(HF x) {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it != elems_.end() && *it == x) return;
  elems_.insert(it, std::move(x));
}

std::optional<std::pair<HF, HF>> HF::as_pair() const {
  if (elems_.size() == 1 && elems_[0].size() == 1) {
    const HF& a = elems_[0].elems()[0];
    return std::make_pair(a, a);
  }
  if (elems_.size() == 2) {
    const HF* single = nullptr;
    const HF* both = nullptr;
    for (const HF& e : elems_) {
      if (e.size() == 1 && !single)
        single = &e;
      else if (e.size() == 2)
        both = &e;
    }
    if (!single || !both) return std::nullopt;
    const HF& a = single->elems()[0];
    if (!both->contains(a)) return std::nullopt;
    const HF& b = both->elems()[0] == a ? both->elems()[1] : both->elems()[0];
    return std::make_pair(a, b);
  }
  return std::nullopt;
}

std::optional<std::uint64_t> HF::as_nat() const {
  std::uint64_t n = elems_.size();
  HF expect = nat(n);
  if (*this == expect) return n;
  return std::nullopt;
}

std::string HF::to_string() const {
  if (auto n = as_nat()) return std::to_string(*n);
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const HF& e : elems_) {
    if (!first) os << ",";
    first = false;
    os << e.to_string();
  }
  os << "}";
  return os.str();
}

int hf_cmp(const HF& x, const HF& y) {
  const auto& a = x.elems();
  const auto& b = y.elems();
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (int c = hf_cmp(a[i], b[i])) return c;
  return 0;
}

std::optional<HF> hf_apply(const HF& f, const HF& x) {
  std::optional<HF> found;
  for (const HF& e : f.elems()) {
    auto p = e.as_pair();
    if (!p) continue;
    if (p->first == x) {
      if (found && *found != p->second) return std::nullopt;
      found = p->second;
    }
  }
  return found;
}

bool hf_is_function(const HF& f) {
  std::vector<std::pair<HF, HF>> pairs;
  for (const HF& e : f.elems()) {
    auto p = e.as_pair();
    if (!p) return false;
    pairs.push_back(*p);
  }
  for (std::size_t i = 0; i < pairs.size(); ++i)
    for (std::size_t j = i + 1; j < pairs.size(); ++j)
      if (pairs[i].first == pairs[j].first && pairs[i].second != pairs[j].second)
        return false;
  return true;
}

}  // namespace symx
