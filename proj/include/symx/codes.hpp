#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "symx/forcing.hpp"

namespace symx {

/// Desk-scale prefix of one omega-sequence, tagged by its row.
struct SeqCode {
  std::vector<std::uint64_t> prefix;
  std::uint64_t tag = 0;
};

bool operator==(const SeqCode& a, const SeqCode& b);

/// h(2n) = f(n), h(2n+1) = g(n). Throws LengthMismatch.
SeqCode interleave(const SeqCode& f, const SeqCode& g);
/// Inverse of interleave. Throws OddLength.
std::pair<SeqCode, SeqCode> deinterleave(const SeqCode& h);

/// A member of the product family A_S: one sequence code per row of S.
struct ASCode {
  std::set<std::uint64_t> s;
  std::map<std::uint64_t, SeqCode> components;
};

/// Validates that components sit exactly on S and carry their row as tag.
ASCode make_ascode(std::set<std::uint64_t> s,
                   std::map<std::uint64_t, SeqCode> components);

bool operator==(const ASCode& a, const ASCode& b);

/// The natural isomorphism A_S x A_T -> A_{S u T}: disjoint rows pass
/// through, shared rows interleave.
ASCode product_code(const ASCode& a, const ASCode& b);
std::pair<ASCode, ASCode> unproduct_code(const ASCode& c,
                                         const std::set<std::uint64_t>& s,
                                         const std::set<std::uint64_t>& t);

/// Rows on which the code is not identically zero.
std::set<std::uint64_t> code_support(const ASCode& c);
/// Membership in the family A_S at the code level.
bool in_family(const ASCode& c, const std::set<std::uint64_t>& s);

/// Checks A_S cap A_T = A_{S cap T} over the exhaustive grid of codes with
/// rows below max_row and 0/1 prefixes of the given length.
bool intersect_code_law(const std::set<std::uint64_t>& s,
                        const std::set<std::uint64_t>& t,
                        std::uint64_t max_row, std::size_t prefix_len);

/// Truncated nice-name demo: the principal generic whose row `tag` follows
/// the code's prefix bits and whose other cells are zero.
GenericSample generic_from_code(const TruncatedPoset& t, const SeqCode& code);

}  // namespace symx
