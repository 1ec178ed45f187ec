#include "symx/order.hpp"

#include <sstream>

namespace symx {

OrderPoint OrderPoint::nat(std::uint64_t n) {
  OrderPoint p;
  p.kind = PointKind::Nat;
  p.a = n;
  return p;
}

OrderPoint OrderPoint::rat(Rational q) {
  OrderPoint p;
  p.kind = PointKind::Rat;
  p.q = q;
  return p;
}

OrderPoint OrderPoint::lex(std::uint64_t block, Rational q) {
  OrderPoint p;
  p.kind = PointKind::Lex;
  p.a = block;
  p.q = q;
  return p;
}

OrderPoint OrderPoint::prod(std::uint64_t row, std::uint64_t col) {
  OrderPoint p;
  p.kind = PointKind::Prod;
  p.a = row;
  p.b = col;
  return p;
}

namespace {
int cmp3(std::uint64_t x, std::uint64_t y) { return x < y ? -1 : (x > y ? 1 : 0); }
int cmp3(const Rational& x, const Rational& y) { return x < y ? -1 : (x > y ? 1 : 0); }
}  // namespace

int cmp(const OrderPoint& x, const OrderPoint& y) {
  if (x.kind != y.kind)
    throw VariantMismatch("cannot compare " + point_to_string(x) + " with " +
                          point_to_string(y));
  switch (x.kind) {
    case PointKind::Nat:
      return cmp3(x.a, y.a);
    case PointKind::Rat:
      return cmp3(x.q, y.q);
    case PointKind::Lex:
      if (int c = cmp3(x.a, y.a)) return c;
      return cmp3(x.q, y.q);
    case PointKind::Prod:
      if (int c = cmp3(x.a, y.a)) return c;
      return cmp3(x.b, y.b);
  }
  return 0;
}

bool point_key_less(const OrderPoint& x, const OrderPoint& y) {
  if (x.kind != y.kind) return static_cast<int>(x.kind) < static_cast<int>(y.kind);
  return cmp(x, y) < 0;
}

bool operator==(const OrderPoint& x, const OrderPoint& y) {
  return x.kind == y.kind && cmp(x, y) == 0;
}

OrderPoint between(const OrderPoint& x, const OrderPoint& y) {
  if (x.kind != y.kind)
    throw VariantMismatch("between: " + point_to_string(x) + " vs " +
                          point_to_string(y));
  if (cmp(x, y) >= 0)
    throw NoPointBetween("between requires a strictly increasing pair, got " +
                         point_to_string(x) + " and " + point_to_string(y));
  switch (x.kind) {
    case PointKind::Rat:
      return OrderPoint::rat((x.q + y.q) / 2);
    case PointKind::Lex:
      if (x.a == y.a) return OrderPoint::lex(x.a, (x.q + y.q) / 2);
      // Different blocks: anything above x inside the lower block works.
      return OrderPoint::lex(x.a, x.q + 1);
    case PointKind::Nat:
    case PointKind::Prod:
      throw NoPointBetween("discrete variant admits no midpoint: " +
                           point_to_string(x));
  }
  throw NoPointBetween("unreachable");
}

std::string point_to_string(const OrderPoint& x) {
  std::ostringstream os;
  switch (x.kind) {
    case PointKind::Nat:
      os << "n:" << x.a;
      break;
    case PointKind::Rat:
      os << "q:" << x.q.numerator();
      if (x.q.denominator() != 1) os << "/" << x.q.denominator();
      break;
    case PointKind::Lex:
      os << "lex:" << x.a << "," << x.q.numerator();
      if (x.q.denominator() != 1) os << "/" << x.q.denominator();
      break;
    case PointKind::Prod:
      os << "prod:" << x.a << "," << x.b;
      break;
  }
  return os.str();
}

IndexDomain IndexDomain::plain(std::optional<std::uint64_t> size) {
  IndexDomain d;
  d.kind = DomainKind::Plain;
  d.size = size;
  return d;
}

IndexDomain IndexDomain::dlo() {
  IndexDomain d;
  d.kind = DomainKind::Dlo;
  return d;
}

IndexDomain IndexDomain::lex_dlo(std::uint64_t blocks) {
  IndexDomain d;
  d.kind = DomainKind::LexDlo;
  d.blocks = blocks;
  return d;
}

IndexDomain IndexDomain::prod_omega(std::optional<std::uint64_t> rows) {
  IndexDomain d;
  d.kind = DomainKind::ProdOmega;
  d.rows = rows;
  return d;
}

bool domain_admits(const IndexDomain& d, const OrderPoint& x) {
  switch (d.kind) {
    case DomainKind::Plain:
      return x.kind == PointKind::Nat && (!d.size || x.a < *d.size);
    case DomainKind::Dlo:
      return x.kind == PointKind::Rat;
    case DomainKind::LexDlo:
      return x.kind == PointKind::Lex && x.a < d.blocks;
    case DomainKind::ProdOmega:
      return x.kind == PointKind::Prod && (!d.rows || x.a < *d.rows);
  }
  return false;
}

Cut Cut::finite(PointSet pts) {
  Cut e;
  e.kind = CutKind::FiniteSet;
  e.points = std::move(pts);
  return e;
}

Cut Cut::initial(OrderPoint bound, bool inclusive) {
  if (bound.kind != PointKind::Rat && bound.kind != PointKind::Lex)
    throw VariantMismatch("initial segments exist only for ordered variants, got " +
                          point_to_string(bound));
  Cut e;
  e.kind = CutKind::InitialSegment;
  e.bound = bound;
  e.inclusive = inclusive;
  return e;
}

bool cut_contains(const Cut& e, const OrderPoint& x) {
  if (e.kind == CutKind::FiniteSet) return e.points.count(x) > 0;
  int c = cmp(x, e.bound);
  return c < 0 || (c == 0 && e.inclusive);
}

bool cut_subset(const Cut& e1, const Cut& e2) {
  if (e1.kind == CutKind::FiniteSet) {
    for (const auto& p : e1.points)
      if (!cut_contains(e2, p)) return false;
    return true;
  }
  if (e2.kind == CutKind::FiniteSet) return false;
  int c = cmp(e1.bound, e2.bound);
  if (c != 0) return c < 0;
  return e2.inclusive || !e1.inclusive;
}

bool cut_equal(const Cut& e1, const Cut& e2) {
  return cut_subset(e1, e2) && cut_subset(e2, e1);
}

std::string cut_to_string(const Cut& e) {
  std::ostringstream os;
  if (e.kind == CutKind::FiniteSet) {
    os << "{";
    bool first = true;
    for (const auto& p : e.points) {
      if (!first) os << ", ";
      first = false;
      os << point_to_string(p);
    }
    os << "}";
  } else {
    os << "(-inf, " << point_to_string(e.bound) << (e.inclusive ? "]" : ")");
  }
  return os.str();
}

}  // namespace symx
