#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gdm {

// Exact rationals on checked 64-bit words, kept in lowest terms with a
// positive denominator. Arithmetic goes through 128-bit intermediates and
// throws std::overflow_error instead of wrapping.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : num_(n) {}  // NOLINT: implicit integers are handy
  static Rational fraction(long long num, long long den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rational(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  long long num() const { return num_; }
  long long den() const { return den_; }
  bool is_negative() const { return num_ < 0; }
  bool is_zero() const { return num_ == 0; }

  Rational operator-() const { return Rational(-static_cast<__int128>(num_), den_); }
  Rational abs() const { return num_ < 0 ? -*this : *this; }

  friend Rational operator+(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    __int128 n = static_cast<__int128>(a.num_) * b.num_;
    __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return Rational(n, d);
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string to_string() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
  }

 private:
  Rational(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    num_ = narrow(n);
    den_ = narrow(d);
  }

  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a == 0 ? 1 : a;
  }

  static long long narrow(__int128 x) {
    if (x > INT64_MAX || x < INT64_MIN) throw std::overflow_error("rational arithmetic overflowed");
    return static_cast<long long>(x);
  }

  long long num_ = 0;
  long long den_ = 1;
};

// Compares |a| and |b| exactly.
inline bool abs_less(const Rational& a, const Rational& b) { return a.abs() < b.abs(); }

}  // namespace gdm
