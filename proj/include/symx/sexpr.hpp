#pragma once

#include <string>
#include <vector>

#include "symx/codes.hpp"
#include "symx/name.hpp"

namespace symx {

struct SExpr {
  bool is_atom = true;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t pos = 0;  // byte offset, for errors
};

/// Throws ParseError with the byte position of the defect.
SExpr parse_sexpr(const std::string& text);

/// Point tokens: `n:3`, `q:5/2`, `lex:0,1/2`, `prod:0,1`; a bare integer is a
/// Nat point.
OrderPoint parse_point(const std::string& token);
Rational parse_rational(const std::string& token);

Condition parse_condition(const SExpr& e);        // (cond ((n:0 0) 1) ...)
Automorphism parse_automorphism(const SExpr& e);  // (id) | (perm (a b) ...) |
                                                  // (pl [(block k)] (x y) ...) |
                                                  // (prod (row r (c c') ...) ...)
Name parse_name(const SExpr& e);
// (elem N N) | (eq N N) | (not F) | (and F F) | (or F F)
FormulaP parse_formula(const SExpr& e);
BasedFn parse_basedfn(const SExpr& e);  // (based (bound 6) (top 5) (pt q:0 4) ...)
ASCode parse_ascode(const SExpr& e);    // (ascode (s 0 2) (row 0 (1 0 1)) ...)

Condition parse_condition_str(const std::string& s);
Automorphism parse_automorphism_str(const std::string& s);
Name parse_name_str(const std::string& s);
FormulaP parse_formula_str(const std::string& s);
BasedFn parse_basedfn_str(const std::string& s);
ASCode parse_ascode_str(const std::string& s);

std::string condition_to_string(const Condition& p);
std::string aut_to_string(const Automorphism& pi);
std::string basedfn_to_string(const BasedFn& f);
std::string ascode_to_string(const ASCode& c);
std::string rational_to_string(const Rational& q);

}  // namespace symx
