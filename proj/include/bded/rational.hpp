#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "bded/errors.hpp"

namespace bded {

/// Exact fraction stored in lowest terms with a positive denominator.
/// All solver arithmetic runs through this type; there is no floating
/// point anywhere in the decision logic.
class Rational {
 public:
  using Int = __int128;

  constexpr Rational() : num_(0), den_(1) {}
  Rational(long long value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Rational(Int num, Int den) : num_(num), den_(den) { normalize(); }

  Int num() const { return num_; }
  Int den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  /// Largest integer <= value (floors toward negative infinity).
  Int floor() const;
  /// Smallest integer >= value.
  Int ceil() const;

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  /// Serializes as "num/den", or just "num" when den == 1.
  std::string to_string() const;
  /// Accepts "p", "-p" or "p/q"; rejects decimals and empty input.
  static Rational parse(std::string_view text);

  static std::string int_to_string(Int v);
  static Int checked_mul(Int a, Int b);
  static Int checked_add(Int a, Int b);

 private:
  void normalize();

  Int num_;
  Int den_;
};

inline Rational::Int gcd128(Rational::Int a, Rational::Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Rational::Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline void Rational::normalize() {
  if (den_ == 0) throw InvalidArgument("rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  Int g = gcd128(num_, den_);
  num_ /= g;
  den_ /= g;
}

inline Rational::Int Rational::checked_mul(Int a, Int b) {
  Int out;
  if (__builtin_mul_overflow(a, b, &out)) throw Error("rational: multiplication overflow");
  return out;
}

inline Rational::Int Rational::checked_add(Int a, Int b) {
  Int out;
  if (__builtin_add_overflow(a, b, &out)) throw Error("rational: addition overflow");
  return out;
}

inline bool Rational::operator<(const Rational& o) const {
  return checked_mul(num_, o.den_) < checked_mul(o.num_, den_);
}

inline Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

inline Rational Rational::operator+(const Rational& o) const {
  return Rational(checked_add(checked_mul(num_, o.den_), checked_mul(o.num_, den_)),
                  checked_mul(den_, o.den_));
}

inline Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

inline Rational Rational::operator*(const Rational& o) const {
  return Rational(checked_mul(num_, o.num_), checked_mul(den_, o.den_));
}

inline Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw InvalidArgument("rational: division by zero");
  return Rational(checked_mul(num_, o.den_), checked_mul(den_, o.num_));
}

inline Rational::Int Rational::floor() const {
  Int q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

inline Rational::Int Rational::ceil() const {
  Int q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

inline std::string Rational::int_to_string(Int v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  // -2^127 cannot occur for reduced fractions built from desk-scale input.
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string digits;
  while (u != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) digits.push_back('-');
  return std::string(digits.rbegin(), digits.rend());
}

inline std::string Rational::to_string() const {
  if (den_ == 1) return int_to_string(num_);
  return int_to_string(num_) + "/" + int_to_string(den_);
}

inline Rational Rational::parse(std::string_view text) {
  auto parse_int = [](std::string_view s) -> Int {
    if (s.empty()) throw ParseError("rational: empty integer");
    bool neg = false;
    size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      i = 1;
    }
    if (i == s.size()) throw ParseError("rational: sign without digits");
    Int v = 0;
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (c < '0' || c > '9') throw ParseError("rational: invalid character in '" + std::string(s) + "'");
      v = checked_add(checked_mul(v, 10), c - '0');
    }
    return neg ? -v : v;
  };
  size_t slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text), 1);
  Int p = parse_int(text.substr(0, slash));
  std::string_view den_part = text.substr(slash + 1);
  if (den_part.find('/') != std::string_view::npos) throw ParseError("rational: multiple '/'");
  Int q = parse_int(den_part);
  if (q <= 0) throw ParseError("rational: denominator must be positive");
  return Rational(p, q);
}

}  // namespace bded
