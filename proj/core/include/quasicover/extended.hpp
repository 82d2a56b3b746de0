#pragma once

#include "quasicover/errors.hpp"
#include "quasicover/rational.hpp"

namespace quasicover {

// A cost that is either an exact rational or a distinguished infinity.
// Infinity absorbs addition and compares greater than every finite value.
class ExtCost {
public:
  ExtCost() = default;
  ExtCost(Rational v) : v_(v) {}  // implicit: finite cost
  ExtCost(std::int64_t v) : v_(Rational(v)) {}

  static ExtCost infinity() {
    ExtCost c;
    c.inf_ = true;
    return c;
  }

  bool finite() const { return !inf_; }
  const Rational& value() const {
    if (inf_) throw InternalError("value() on an infinite cost");
    return v_;
  }

  std::string str() const { return inf_ ? "inf" : v_.str(); }

  friend ExtCost operator+(const ExtCost& a, const ExtCost& b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtCost(a.v_ + b.v_);
  }
  ExtCost& operator+=(const ExtCost& o) { return *this = *this + o; }

  friend bool operator==(const ExtCost& a, const ExtCost& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.v_ == b.v_;
  }
  friend bool operator<(const ExtCost& a, const ExtCost& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtCost& a, const ExtCost& b) { return a == b || a < b; }
  friend bool operator>(const ExtCost& a, const ExtCost& b) { return b < a; }
  friend bool operator>=(const ExtCost& a, const ExtCost& b) { return b <= a; }

private:
  bool inf_ = false;
  Rational v_;
};

}  // namespace quasicover
