#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace qcycle {

// Exact rational arithmetic on int64 with 128-bit intermediates. Values are
// always stored reduced with a positive denominator; anything that does not
// fit in int64 after reduction throws std::overflow_error.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long value) : num_(value) {}  // NOLINT: implicit
  Rational(long long num, long long den) { *this = normalize(num, den); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  // "11/12", "-1/4", or plain "3" when the denominator is 1.
  std::string str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
  }

  static Rational parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(text));
    return Rational(std::stoll(text.substr(0, slash)),
                    std::stoll(text.substr(slash + 1)));
  }

  Rational operator-() const { return normalize(-i128(num_), den_); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return normalize(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return normalize(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                     i128(a.den_) * b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return normalize(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return normalize(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return i128(a.num_) * b.den_ <=> i128(b.num_) * a.den_;
  }

  Rational pow(unsigned exponent) const {
    Rational result(1);
    Rational base = *this;
    for (unsigned e = exponent; e != 0; e >>= 1) {
      if (e & 1) result *= base;
      if (e > 1) base *= base;
    }
    return result;
  }

 private:
  using i128 = __int128;

  long long num_ = 0;
  long long den_ = 1;

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

  static Rational normalize(i128 num, i128 den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const i128 g = gcd128(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    constexpr i128 kMax = INT64_MAX;
    constexpr i128 kMin = INT64_MIN;
    if (num > kMax || num < kMin || den > kMax) {
      throw std::overflow_error("Rational: value exceeds 64-bit range");
    }
    Rational r;
    r.num_ = static_cast<long long>(num);
    r.den_ = static_cast<long long>(den);
    return r;
  }
};

}  // namespace qcycle
