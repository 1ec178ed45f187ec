#include "symx/sexpr.hpp"

#include <cctype>
#include <sstream>

namespace symx {

namespace {

[[noreturn]] void bad(std::size_t pos, const std::string& what) {
  throw ParseError(what + " at offset " + std::to_string(pos));
}

struct Tokenizer {
  const std::string& text;
  std::size_t i = 0;

  void skip_ws() {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  }

  SExpr next() {
    skip_ws();
    if (i >= text.size()) bad(i, "unexpected end of input");
    SExpr e;
    e.pos = i;
    if (text[i] == '(') {
      ++i;
      e.is_atom = false;
      while (true) {
        skip_ws();
        if (i >= text.size()) bad(e.pos, "unclosed '('");
        if (text[i] == ')') {
          ++i;
          return e;
        }
        e.items.push_back(next());
      }
    }
    if (text[i] == ')') bad(i, "unmatched ')'");
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '(' && text[i] != ')')
      ++i;
    e.atom = text.substr(start, i - start);
    return e;
  }
};

long long parse_int(const SExpr& e) {
  if (!e.is_atom) bad(e.pos, "expected an integer");
  try {
    std::size_t used = 0;
    long long v = std::stoll(e.atom, &used);
    if (used != e.atom.size()) bad(e.pos, "trailing junk after integer");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    bad(e.pos, "expected an integer, got '" + e.atom + "'");
  }
}

std::uint64_t parse_nat(const SExpr& e) {
  long long v = parse_int(e);
  if (v < 0) bad(e.pos, "expected a natural number");
  return static_cast<std::uint64_t>(v);
}

const SExpr& head_list(const SExpr& e, const std::string& tag) {
  if (e.is_atom || e.items.empty() || !e.items[0].is_atom ||
      e.items[0].atom != tag)
    bad(e.pos, "expected (" + tag + " ...)");
  return e;
}

std::string list_head(const SExpr& e) {
  if (e.is_atom || e.items.empty() || !e.items[0].is_atom)
    bad(e.pos, "expected a tagged list");
  return e.items[0].atom;
}

}  // namespace

SExpr parse_sexpr(const std::string& text) {
  Tokenizer tk{text};
  SExpr e = tk.next();
  tk.skip_ws();
  if (tk.i != text.size()) bad(tk.i, "trailing input after expression");
  return e;
}

Rational parse_rational(const std::string& token) {
  auto slash = token.find('/');
  try {
    if (slash == std::string::npos) return Rational(std::stoll(token));
    long long num = std::stoll(token.substr(0, slash));
    long long den = std::stoll(token.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + token + "'");
  }
}

OrderPoint parse_point(const std::string& token) {
  auto colon = token.find(':');
  if (colon == std::string::npos) {
    try {
      return OrderPoint::nat(std::stoull(token));
    } catch (const std::exception&) {
      throw ParseError("malformed point '" + token + "'");
    }
  }
  std::string kind = token.substr(0, colon);
  std::string rest = token.substr(colon + 1);
  try {
    if (kind == "n") return OrderPoint::nat(std::stoull(rest));
    if (kind == "q") return OrderPoint::rat(parse_rational(rest));
    if (kind == "lex" || kind == "prod") {
      auto comma = rest.find(',');
      if (comma == std::string::npos)
        throw ParseError("point '" + token + "' needs two components");
      std::uint64_t a = std::stoull(rest.substr(0, comma));
      std::string b = rest.substr(comma + 1);
      if (kind == "lex") return OrderPoint::lex(a, parse_rational(b));
      return OrderPoint::prod(a, std::stoull(b));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed point '" + token + "'");
  }
  throw ParseError("unknown point variant '" + kind + "'");
}

Condition parse_condition(const SExpr& e) {
  head_list(e, "cond");
  Condition p;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& entry = e.items[i];
    if (entry.is_atom || entry.items.size() != 2 || entry.items[0].is_atom ||
        entry.items[0].items.size() != 2)
      bad(entry.pos, "condition entry must be ((point slot) bit)");
    const SExpr& key = entry.items[0];
    if (!key.items[0].is_atom) bad(key.pos, "expected a point token");
    OrderPoint coord = parse_point(key.items[0].atom);
    std::uint32_t slot = static_cast<std::uint32_t>(parse_nat(key.items[1]));
    std::uint64_t bit = parse_nat(entry.items[1]);
    if (bit > 1) bad(entry.items[1].pos, "bit must be 0 or 1");
    auto [it, inserted] = p.entries.emplace(CondKey{coord, slot}, bit == 1);
    if (!inserted) bad(entry.pos, "duplicate condition cell");
  }
  return p;
}

Automorphism parse_automorphism(const SExpr& e) {
  std::string tag = list_head(e);
  if (tag == "id") return Automorphism::identity();
  if (tag == "perm") {
    std::map<OrderPoint, OrderPoint, PointLess> m;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const SExpr& pair = e.items[i];
      if (pair.is_atom || pair.items.size() != 2 || !pair.items[0].is_atom ||
          !pair.items[1].is_atom)
        bad(pair.pos, "perm entry must be (point point)");
      m[parse_point(pair.items[0].atom)] = parse_point(pair.items[1].atom);
    }
    return Automorphism::plain(std::move(m));
  }
  if (tag == "pl") {
    std::vector<std::pair<Rational, Rational>> pts;
    std::optional<std::uint64_t> block;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const SExpr& item = e.items[i];
      if (!item.is_atom && item.items.size() == 2 && item.items[0].is_atom &&
          item.items[0].atom == "block") {
        block = parse_nat(item.items[1]);
        continue;
      }
      if (item.is_atom || item.items.size() != 2 || !item.items[0].is_atom ||
          !item.items[1].is_atom)
        bad(item.pos, "pl breakpoint must be (x y)");
      pts.emplace_back(parse_rational(item.items[0].atom),
                       parse_rational(item.items[1].atom));
    }
    return Automorphism::pl(std::move(pts), block);
  }
  if (tag == "prod") {
    ProdPerm p;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const SExpr& row = head_list(e.items[i], "row");
      if (row.items.size() < 2) bad(row.pos, "row needs an index");
      std::uint64_t r = parse_nat(row.items[1]);
      for (std::size_t j = 2; j < row.items.size(); ++j) {
        const SExpr& pair = row.items[j];
        if (pair.is_atom || pair.items.size() != 2)
          bad(pair.pos, "row entry must be (col col')");
        p.rows[r][parse_nat(pair.items[0])] = parse_nat(pair.items[1]);
      }
    }
    return Automorphism::prod(std::move(p));
  }
  bad(e.pos, "unknown automorphism form '" + tag + "'");
}

BasedFn parse_basedfn(const SExpr& e) {
  head_list(e, "based");
  BasedFn f;
  bool have_top = false;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& item = e.items[i];
    std::string tag = list_head(item);
    if (tag == "bound" && item.items.size() == 2) {
      f.bound = parse_nat(item.items[1]);
    } else if (tag == "top" && item.items.size() == 2) {
      f.top = parse_nat(item.items[1]);
      have_top = true;
    } else if (tag == "pt" && item.items.size() == 3 && item.items[1].is_atom) {
      f.steps.emplace_back(parse_point(item.items[1].atom),
                           parse_nat(item.items[2]));
    } else {
      bad(item.pos, "based function items are (bound n), (top v), (pt point v)");
    }
  }
  if (!have_top) bad(e.pos, "based function needs a (top v) item");
  validate_based(f);
  return f;
}

Name parse_name(const SExpr& e) {
  std::string tag = list_head(e);
  if (tag == "check") {
    if (e.items.size() != 2) bad(e.pos, "(check n) takes one natural");
    return check_nat(parse_nat(e.items[1]));
  }
  if (tag == "gen") {
    if (e.items.size() != 2 || !e.items[1].is_atom)
      bad(e.pos, "(gen point) takes one point");
    return gen_name(parse_point(e.items[1].atom));
  }
  if (tag == "bullet") {
    std::vector<Name> elems;
    for (std::size_t i = 1; i < e.items.size(); ++i)
      elems.push_back(parse_name(e.items[i]));
    return bullet_name(std::move(elems));
  }
  if (tag == "opair") {
    if (e.items.size() != 3) bad(e.pos, "(opair N N) takes two names");
    return opair_name(parse_name(e.items[1]), parse_name(e.items[2]));
  }
  if (tag == "raw" || tag == "mix") {
    std::vector<std::pair<Condition, Name>> entries;
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      const SExpr& entry = e.items[i];
      if (entry.is_atom || entry.items.size() != 2)
        bad(entry.pos, "entry must be (condition name)");
      entries.emplace_back(parse_condition(entry.items[0]),
                           parse_name(entry.items[1]));
    }
    return tag == "raw" ? raw_name(std::move(entries))
                        : mix_name(std::move(entries));
  }
  if (tag == "restrict") {
    if (e.items.size() != 3) bad(e.pos, "(restrict N C) takes a name and a condition");
    return restrict_name(parse_name(e.items[1]), parse_condition(e.items[2]));
  }
  if (tag == "based") return based_name(parse_basedfn(e));
  if (tag == "prec") {
    if (e.items.size() != 2 || !e.items[1].is_atom)
      bad(e.pos, "(prec domain) takes dlo|lexdlo|plain|prodomega");
    const std::string& d = e.items[1].atom;
    if (d == "dlo") return prec_name(IndexDomain::dlo());
    if (d == "lexdlo") return prec_name(IndexDomain::lex_dlo(2));
    if (d == "plain") return prec_name(IndexDomain::plain());
    if (d == "prodomega") return prec_name(IndexDomain::prod_omega());
    bad(e.items[1].pos, "unknown domain '" + d + "'");
  }
  bad(e.pos, "unknown name form '" + tag + "'");
}

ASCode parse_ascode(const SExpr& e) {
  head_list(e, "ascode");
  std::set<std::uint64_t> s;
  std::map<std::uint64_t, SeqCode> components;
  for (std::size_t i = 1; i < e.items.size(); ++i) {
    const SExpr& item = e.items[i];
    std::string tag = list_head(item);
    if (tag == "s") {
      for (std::size_t j = 1; j < item.items.size(); ++j)
        s.insert(parse_nat(item.items[j]));
    } else if (tag == "row") {
      if (item.items.size() != 3 || item.items[2].is_atom)
        bad(item.pos, "(row r (v ...)) takes an index and a value list");
      SeqCode code;
      code.tag = parse_nat(item.items[1]);
      for (const SExpr& v : item.items[2].items) code.prefix.push_back(parse_nat(v));
      components[code.tag] = std::move(code);
    } else {
      bad(item.pos, "ascode items are (s n ...) and (row n (v ...))");
    }
  }
  return make_ascode(std::move(s), std::move(components));
}

FormulaP parse_formula(const SExpr& e) {
  if (e.is_atom || e.items.empty() || !e.items[0].is_atom)
    throw ParseError("formula expected at offset " + std::to_string(e.pos));
  const std::string& head = e.items[0].atom;
  auto arity = [&](std::size_t n) {
    if (e.items.size() != n + 1)
      throw ParseError("(" + head + " ...) takes " + std::to_string(n) +
                       " arguments, offset " + std::to_string(e.pos));
  };
  if (head == "elem") { arity(2); return f_elem(parse_name(e.items[1]), parse_name(e.items[2])); }
  if (head == "eq")   { arity(2); return f_eq(parse_name(e.items[1]), parse_name(e.items[2])); }
  if (head == "not")  { arity(1); return f_not(parse_formula(e.items[1])); }
  if (head == "and")  { arity(2); return f_and(parse_formula(e.items[1]), parse_formula(e.items[2])); }
  if (head == "or")   { arity(2); return f_or(parse_formula(e.items[1]), parse_formula(e.items[2])); }
  throw ParseError("unknown formula head '" + head + "' at offset " +
                   std::to_string(e.pos));
}

Condition parse_condition_str(const std::string& s) {
  return parse_condition(parse_sexpr(s));
}
Automorphism parse_automorphism_str(const std::string& s) {
  return parse_automorphism(parse_sexpr(s));
}
Name parse_name_str(const std::string& s) { return parse_name(parse_sexpr(s)); }
FormulaP parse_formula_str(const std::string& s) {
  return parse_formula(parse_sexpr(s));
}
BasedFn parse_basedfn_str(const std::string& s) {
  return parse_basedfn(parse_sexpr(s));
}
ASCode parse_ascode_str(const std::string& s) {
  return parse_ascode(parse_sexpr(s));
}

std::string rational_to_string(const Rational& q) {
  std::ostringstream os;
  os << q.numerator();
  if (q.denominator() != 1) os << "/" << q.denominator();
  return os.str();
}

std::string condition_to_string(const Condition& p) {
  std::ostringstream os;
  os << "(cond";
  for (const auto& [k, v] : p.entries)
    os << " ((" << point_to_string(k.coord) << " " << k.slot << ") "
       << (v ? 1 : 0) << ")";
  os << ")";
  return os.str();
}

std::string aut_to_string(const Automorphism& pi) {
  if (pi.is_identity()) return "(id)";
  std::ostringstream os;
  if (const auto* p = pi.as_plain()) {
    os << "(perm";
    for (const auto& [k, v] : p->map)
      os << " (" << point_to_string(k) << " " << point_to_string(v) << ")";
    os << ")";
  } else if (const auto* p = pi.as_pl()) {
    os << "(pl";
    if (p->block) os << " (block " << *p->block << ")";
    for (const auto& [x, y] : p->pts)
      os << " (" << rational_to_string(x) << " " << rational_to_string(y) << ")";
    os << ")";
  } else if (const auto* p = pi.as_prod()) {
    os << "(prod";
    for (const auto& [r, cols] : p->rows) {
      os << " (row " << r;
      for (const auto& [c, v] : cols) os << " (" << c << " " << v << ")";
      os << ")";
    }
    os << ")";
  }
  return os.str();
}

std::string basedfn_to_string(const BasedFn& f) {
  std::ostringstream os;
  os << "(based (bound " << f.bound << ") (top " << f.top << ")";
  for (const auto& [pt, v] : f.steps)
    os << " (pt " << point_to_string(pt) << " " << v << ")";
  os << ")";
  return os.str();
}

std::string ascode_to_string(const ASCode& c) {
  std::ostringstream os;
  os << "(ascode (s";
  for (std::uint64_t r : c.s) os << " " << r;
  os << ")";
  for (const auto& [r, code] : c.components) {
    os << " (row " << r << " (";
    for (std::size_t i = 0; i < code.prefix.size(); ++i)
      os << (i ? " " : "") << code.prefix[i];
    os << "))";
  }
  os << ")";
  return os.str();
}

}  // namespace symx
