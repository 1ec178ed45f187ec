#include "symx/codes.hpp"

#include <algorithm>

namespace symx {

bool operator==(const SeqCode& a, const SeqCode& b) {
  return a.tag == b.tag && a.prefix == b.prefix;
}

SeqCode interleave(const SeqCode& f, const SeqCode& g) {
  if (f.prefix.size() != g.prefix.size())
    throw LengthMismatch("interleaving prefixes of lengths " +
                         std::to_string(f.prefix.size()) + " and " +
                         std::to_string(g.prefix.size()));
  SeqCode h;
  h.tag = f.tag;
  h.prefix.resize(2 * f.prefix.size());
  for (std::size_t n = 0; n < f.prefix.size(); ++n) {
    h.prefix[2 * n] = f.prefix[n];
    h.prefix[2 * n + 1] = g.prefix[n];
  }
  return h;
}

std::pair<SeqCode, SeqCode> deinterleave(const SeqCode& h) {
  if (h.prefix.size() % 2 != 0)
    throw OddLength("deinterleaving a prefix of odd length " +
                    std::to_string(h.prefix.size()));
  SeqCode f, g;
  f.tag = g.tag = h.tag;
  f.prefix.resize(h.prefix.size() / 2);
  g.prefix.resize(h.prefix.size() / 2);
  for (std::size_t n = 0; n < f.prefix.size(); ++n) {
    f.prefix[n] = h.prefix[2 * n];
    g.prefix[n] = h.prefix[2 * n + 1];
  }
  return {std::move(f), std::move(g)};
}

ASCode make_ascode(std::set<std::uint64_t> s,
                   std::map<std::uint64_t, SeqCode> components) {
  for (const auto& [row, code] : components) {
    if (!s.count(row))
      throw NotInRange("component row " + std::to_string(row) +
                       " is not in the index set");
    if (code.tag != row)
      throw NotInRange("component tag does not match its row");
  }
  for (std::uint64_t row : s)
    if (!components.count(row)) {
      SeqCode zero;
      zero.tag = row;
      components.emplace(row, std::move(zero));
    }
  return ASCode{std::move(s), std::move(components)};
}

bool operator==(const ASCode& a, const ASCode& b) {
  return a.s == b.s && a.components == b.components;
}

ASCode product_code(const ASCode& a, const ASCode& b) {
  std::set<std::uint64_t> su;
  std::set_union(a.s.begin(), a.s.end(), b.s.begin(), b.s.end(),
                 std::inserter(su, su.begin()));
  std::map<std::uint64_t, SeqCode> components;
  for (std::uint64_t row : su) {
    bool ina = a.s.count(row), inb = b.s.count(row);
    if (ina && inb)
      components[row] = interleave(a.components.at(row), b.components.at(row));
    else if (ina)
      components[row] = a.components.at(row);
    else
      components[row] = b.components.at(row);
  }
  return make_ascode(std::move(su), std::move(components));
}

std::pair<ASCode, ASCode> unproduct_code(const ASCode& c,
                                         const std::set<std::uint64_t>& s,
                                         const std::set<std::uint64_t>& t) {
  std::map<std::uint64_t, SeqCode> ca, cb;
  for (std::uint64_t row : s) {
    const SeqCode& code = c.components.at(row);
    if (t.count(row)) {
      auto [f, g] = deinterleave(code);
      ca[row] = std::move(f);
      cb[row] = std::move(g);
    } else {
      ca[row] = code;
    }
  }
  for (std::uint64_t row : t)
    if (!s.count(row)) cb[row] = c.components.at(row);
  return {make_ascode(s, std::move(ca)), make_ascode(t, std::move(cb))};
}

std::set<std::uint64_t> code_support(const ASCode& c) {
  std::set<std::uint64_t> out;
  for (const auto& [row, code] : c.components)
    for (std::uint64_t v : code.prefix)
      if (v != 0) {
        out.insert(row);
        break;
      }
  return out;
}

bool in_family(const ASCode& c, const std::set<std::uint64_t>& s) {
  auto supp = code_support(c);
  return std::includes(s.begin(), s.end(), supp.begin(), supp.end());
}

bool intersect_code_law(const std::set<std::uint64_t>& s,
                        const std::set<std::uint64_t>& t,
                        std::uint64_t max_row, std::size_t prefix_len) {
  std::set<std::uint64_t> meet;
  std::set_intersection(s.begin(), s.end(), t.begin(), t.end(),
                        std::inserter(meet, meet.begin()));
  std::vector<std::uint64_t> rows;
  for (std::uint64_t r = 0; r < max_row; ++r) rows.push_back(r);
  std::size_t bits = rows.size() * prefix_len;
  if (bits > 20)
    throw EnumerationBudgetExceeded("code grid too large: " +
                                    std::to_string(bits) + " bits");
  for (std::size_t v = 0; v < (std::size_t{1} << bits); ++v) {
    std::set<std::uint64_t> all(rows.begin(), rows.end());
    std::map<std::uint64_t, SeqCode> comps;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      SeqCode code;
      code.tag = rows[i];
      for (std::size_t j = 0; j < prefix_len; ++j)
        code.prefix.push_back((v >> (i * prefix_len + j)) & 1);
      comps[rows[i]] = std::move(code);
    }
    ASCode c = make_ascode(std::move(all), std::move(comps));
    bool both = in_family(c, s) && in_family(c, t);
    if (both != in_family(c, meet)) return false;
  }
  return true;
}

GenericSample generic_from_code(const TruncatedPoset& t, const SeqCode& code) {
  GenericSample g;
  for (const auto& pt : t.domain)
    for (std::uint32_t j = 0; j < t.slots; ++j) {
      bool bit = false;
      if (pt.kind == PointKind::Prod && pt.a == code.tag && pt.b < code.prefix.size())
        bit = (code.prefix[pt.b] & 1) != 0;
      g.atom.entries[CondKey{pt, j}] = bit;
    }
  return g;
}

}  // namespace symx
