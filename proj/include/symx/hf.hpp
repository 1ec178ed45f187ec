#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symx {

/// Hereditarily finite sets as canonical extensional trees: members are kept
/// sorted and deduplicated, so structural equality is set equality.
class HF {
 public:
  HF() = default;
  explicit HF(std::vector<HF> elems);

  static HF empty() { return HF(); }
  /// von Neumann numeral.
  static HF nat(std::uint64_t n);
  static HF singleton(HF x);
  /// Kuratowski pair {{a},{a,b}}.
  static HF pair(HF a, HF b);

  const std::vector<HF>& elems() const { return elems_; }
  bool is_empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }

  bool contains(const HF& x) const;
  void insert(HF x);

  /// Decodes a Kuratowski pair, if this set is one.
  std::optional<std::pair<HF, HF>> as_pair() const;
  /// If this is a von Neumann numeral, its value.
  std::optional<std::uint64_t> as_nat() const;

  std::string to_string() const;

 private:
  std::vector<HF> elems_;
};

int hf_cmp(const HF& x, const HF& y);
inline bool operator==(const HF& x, const HF& y) { return hf_cmp(x, y) == 0; }
inline bool operator!=(const HF& x, const HF& y) { return hf_cmp(x, y) != 0; }
inline bool operator<(const HF& x, const HF& y) { return hf_cmp(x, y) < 0; }

/// Treats f as a set of Kuratowski pairs and looks up x. Empty result when f
/// is not single-valued at x or x is not in its domain.
std::optional<HF> hf_apply(const HF& f, const HF& x);
/// True when f is a set of pairs with no two pairs sharing a first component.
bool hf_is_function(const HF& f);

}  // namespace symx
