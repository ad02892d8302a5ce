#pragma once

#include <cstdint>
#include <string>

#include "psm/errors.hpp"

namespace psm {

using i64 = long long;

// Overflow-checked integer arithmetic. All exact computation in this
// library goes through these; silent wraparound is never acceptable.
i64 checked_add(i64 a, i64 b);
i64 checked_sub(i64 a, i64 b);
i64 checked_mul(i64 a, i64 b);

// gcd of two nonnegative integers; gcd(0,0) is a domain error.
i64 gcd_nonneg(i64 a, i64 b);

// The unique u in {1,...,n-1} with d*u = 1 (mod n). Requires n >= 2 and
// gcd(d, n) = 1; d may exceed n and is reduced first.
i64 mod_inverse(i64 d, i64 n);

// Exact reduced fraction with positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(i64 value) : num_(value), den_(1) {}  // NOLINT: implicit by design
  Rational(i64 num, i64 den);

  i64 num() const { return num_; }
  i64 den() const { return den_; }

  bool is_integer() const { return den_ == 1; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator<=(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator>=(const Rational& o) const { return o <= *this; }

  // Serializes as "num/den", e.g. "23/14", "-7/2", "9/1".
  std::string str() const;

  // Accepts "p/q" or a bare integer string.
  static Rational parse(const std::string& text);

private:
  i64 num_;
  i64 den_;
};

// floor(x / r) and ceil(x / r) for integer x and positive rational r.
i64 floor_div(i64 x, const Rational& r);
i64 ceil_div(i64 x, const Rational& r);

// A rational extended with +infinity (convention 1/0 = inf).
// Infinity compares strictly greater than every finite value.
class ExtRational {
public:
  ExtRational() : finite_(true), value_() {}
  ExtRational(const Rational& r) : finite_(true), value_(r) {}  // NOLINT
  ExtRational(i64 v) : finite_(true), value_(v) {}              // NOLINT

  static ExtRational infinity() {
    ExtRational e;
    e.finite_ = false;
    return e;
  }

  bool is_infinite() const { return !finite_; }
  const Rational& value() const;

  bool operator==(const ExtRational& o) const;
  bool operator!=(const ExtRational& o) const { return !(*this == o); }
  bool operator<(const ExtRational& o) const;
  bool operator<=(const ExtRational& o) const;
  bool operator>(const ExtRational& o) const { return o < *this; }
  bool operator>=(const ExtRational& o) const { return o <= *this; }

  std::string str() const;  // "num/den" or "inf"

  static ExtRational parse(const std::string& text);

private:
  bool finite_;
  Rational value_;
};

// num/den with the 1/0 = inf convention. Requires num > 0 when den = 0.
ExtRational ratio_or_inf(i64 num, i64 den);

}  // namespace psm
