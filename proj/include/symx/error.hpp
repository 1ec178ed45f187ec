#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace symx {

// Every domain error carries a stable kind tag so the CLI and bindings can
// surface it without string matching on the message.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& msg)
      : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define SYMX_ERROR_KIND(Name)                                        \
  struct Name : Error {                                              \
    explicit Name(const std::string& msg) : Error(#Name, msg) {}     \
  }

SYMX_ERROR_KIND(VariantMismatch);
SYMX_ERROR_KIND(NoPointBetween);
SYMX_ERROR_KIND(NotAnAntichain);
SYMX_ERROR_KIND(CoordinateOutOfDomain);
SYMX_ERROR_KIND(EnumerationBudgetExceeded);
SYMX_ERROR_KIND(ImageNotInIdeal);
SYMX_ERROR_KIND(UnsupportedGroupShape);
SYMX_ERROR_KIND(ZeroBound);
SYMX_ERROR_KIND(NotInRange);
SYMX_ERROR_KIND(LengthMismatch);
SYMX_ERROR_KIND(OddLength);
SYMX_ERROR_KIND(HSCertificationFailed);
SYMX_ERROR_KIND(WellDefinednessFailure);
SYMX_ERROR_KIND(ParseError);
SYMX_ERROR_KIND(UnknownSuite);

#undef SYMX_ERROR_KIND

// Failure-as-value for operations whose "no" answer is expected output
// (tenacity witnesses, HS certification, constraint solving, ...).
template <class T>
class Outcome {
 public:
  static Outcome ok(T value) {
    Outcome o;
    o.value_ = std::move(value);
    return o;
  }
  static Outcome fail(std::string reason) {
    Outcome o;
    o.reason_ = std::move(reason);
    return o;
  }

  explicit operator bool() const { return value_.has_value(); }
  bool has_value() const { return value_.has_value(); }
  const T& value() const { return *value_; }
  T& value() { return *value_; }
  const std::string& reason() const { return reason_; }

 private:
  std::optional<T> value_;
  std::string reason_;
};

}  // namespace symx
