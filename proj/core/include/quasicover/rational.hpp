#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quasicover {

class OverflowError : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

// Exact rational arithmetic on 64-bit components. The denominator is always
// positive and gcd(num, den) == 1, so equality is plain member comparison.
// Intermediates go through 128 bits; results that do not fit back into 64
// bits throw OverflowError rather than wrap.
class Rational {
public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // implicit on purpose
  Rational(std::int64_t num, std::int64_t den) { *this = make(num, den); }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }

  // "3", "-3" or "7/11".
  std::string str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

  // Accepts the formats produced by str(). Anything else yields nullopt.
  static std::optional<Rational> parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      auto n = parse_int(text);
      if (!n) return std::nullopt;
      return Rational(*n);
    }
    auto n = parse_int(text.substr(0, slash));
    auto d = parse_int(text.substr(slash + 1));
    if (!n || !d || *d <= 0) return std::nullopt;
    return Rational(*n, *d);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return make_128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return make_128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return make_128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw OverflowError("rational division by zero");
    return make_128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Cross multiplication stays well inside 128 bits.
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

private:
  using i128 = __int128;

  static i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      i128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw OverflowError("rational with zero denominator");
    return make_128(num, den);
  }

  static Rational make_128(i128 num, i128 den) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    if (num == 0) return Rational();
    i128 g = gcd128(num, den);
    num /= g;
    den /= g;
    Rational r;
    r.num_ = narrow(num);
    r.den_ = narrow(den);
    return r;
  }

  static std::int64_t narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw OverflowError("rational component exceeds 64 bits");
    return static_cast<std::int64_t>(v);
  }

  static std::optional<std::int64_t> parse_int(std::string_view t) {
    if (t.empty()) return std::nullopt;
    std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return std::nullopt;
    i128 v = 0;
    bool neg = t[0] == '-';
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') return std::nullopt;
      v = v * 10 + (t[i] - '0');
      if (v > i128(INT64_MAX) + 1) return std::nullopt;
    }
    if (neg) v = -v;
    if (v > INT64_MAX || v < INT64_MIN) return std::nullopt;
    return static_cast<std::int64_t>(v);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace quasicover
