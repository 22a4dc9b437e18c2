#pragma once

#include <compare>
#include <string>

namespace dgcm {

/// An integer or minus infinity.  Depth and lc.dim of the zero object are
/// minus infinity.
class ExtendedInt {
 public:
  constexpr ExtendedInt() : value_(0), neg_inf_(true) {}
  constexpr ExtendedInt(int v) : value_(v), neg_inf_(false) {}  // NOLINT(implicit)

  static constexpr ExtendedInt minus_infinity() { return ExtendedInt(); }

  constexpr bool is_finite() const { return !neg_inf_; }
  constexpr bool is_minus_infinity() const { return neg_inf_; }
  /// Undefined for minus infinity; callers check is_finite() first.
  constexpr int value() const { return value_; }

  constexpr bool operator==(const ExtendedInt& o) const {
    return neg_inf_ == o.neg_inf_ && (neg_inf_ || value_ == o.value_);
  }
  constexpr std::strong_ordering operator<=>(const ExtendedInt& o) const {
    if (neg_inf_ || o.neg_inf_) return (!neg_inf_) <=> (!o.neg_inf_);
    return value_ <=> o.value_;
  }

  std::string to_string() const { return neg_inf_ ? "-inf" : std::to_string(value_); }

 private:
  int value_;
  bool neg_inf_;
};

}  // namespace dgcm
