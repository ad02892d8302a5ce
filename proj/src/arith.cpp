#include "psm/arith.hpp"

#include <charconv>
#include <cstdlib>
#include <limits>

namespace psm {

namespace {

using i128 = __int128;

i64 narrow(i128 v, const char* what) {
  if (v > std::numeric_limits<i64>::max() || v < std::numeric_limits<i64>::min())
    throw overflow_error(std::string("integer overflow in ") + what);
  return static_cast<i64>(v);
}

int sign(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

i64 gcd_unchecked(i64 a, i64 b) {
  while (b != 0) {
    i64 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw overflow_error("integer overflow in add");
  return r;
}

i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw overflow_error("integer overflow in sub");
  return r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw overflow_error("integer overflow in mul");
  return r;
}

i64 gcd_nonneg(i64 a, i64 b) {
  if (a < 0 || b < 0) throw domain_error("gcd: arguments must be nonnegative");
  if (a == 0 && b == 0) throw domain_error("gcd: gcd(0,0) is undefined");
  return gcd_unchecked(a, b);
}

i64 mod_inverse(i64 d, i64 n) {
  if (n < 2) throw domain_error("mod_inverse: modulus must be >= 2");
  if (d <= 0) throw domain_error("mod_inverse: argument must be positive");
  // Extended Euclid on (d mod n, n).
  i64 r0 = n, r1 = d % n;
  i64 t0 = 0, t1 = 1;
  while (r1 != 0) {
    i64 q = r0 / r1;
    i64 r2 = r0 - q * r1;
    i64 t2 = checked_sub(t0, checked_mul(q, t1));
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw domain_error("mod_inverse: arguments are not coprime");
  i64 u = t0 % n;
  if (u < 0) u += n;
  return u;
}

Rational::Rational(i64 num, i64 den) {
  if (den == 0) throw domain_error("Rational: zero denominator");
  if (den < 0) {
    if (num == std::numeric_limits<i64>::min() || den == std::numeric_limits<i64>::min())
      throw overflow_error("Rational: negation overflow");
    num = -num;
    den = -den;
  }
  i64 g = num == 0 ? den : gcd_unchecked(num < 0 ? -num : num, den);
  num_ = num / g;
  den_ = den / g;
}

Rational Rational::operator+(const Rational& o) const {
  i128 n = i128(num_) * o.den_ + i128(o.num_) * den_;
  i128 d = i128(den_) * o.den_;
  i128 g = 1;
  {
    i128 a = n < 0 ? -n : n, b = d;
    while (b != 0) { i128 t = a % b; a = b; b = t; }
    g = a == 0 ? d : a;
  }
  return Rational(narrow(n / g, "rational add"), narrow(d / g, "rational add"));
}

Rational Rational::operator-(const Rational& o) const {
  Rational neg(checked_sub(0, o.num_), o.den_);
  return *this + neg;
}

Rational Rational::operator*(const Rational& o) const {
  // Cross-reduce before multiplying to keep intermediates small.
  i64 g1 = num_ == 0 ? 1 : gcd_unchecked(num_ < 0 ? -num_ : num_, o.den_);
  i64 g2 = o.num_ == 0 ? 1 : gcd_unchecked(o.num_ < 0 ? -o.num_ : o.num_, den_);
  return Rational(checked_mul(num_ / g1, o.num_ / g2),
                  checked_mul(den_ / g2, o.den_ / g1));
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw domain_error("Rational: division by zero");
  return *this * Rational(o.den_, o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return i128(num_) * o.den_ < i128(o.num_) * den_;
}

bool Rational::operator<=(const Rational& o) const {
  return i128(num_) * o.den_ <= i128(o.num_) * den_;
}

std::string Rational::str() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  auto parse_int = [](const std::string& s) -> i64 {
    if (s.empty()) throw parse_error("empty integer");
    i64 v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
      throw parse_error("bad integer '" + s + "'");
    return v;
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text), 1);
  i64 num = parse_int(text.substr(0, slash));
  i64 den = parse_int(text.substr(slash + 1));
  if (den == 0) throw parse_error("zero denominator in '" + text + "'");
  return Rational(num, den);
}

i64 floor_div(i64 x, const Rational& r) {
  if (r.num() <= 0) throw domain_error("floor_div: divisor must be positive");
  i128 n = i128(x) * r.den();
  i128 d = r.num();
  i128 q = n / d;
  if (n % d != 0 && sign(n) * sign(d) < 0) --q;
  return narrow(q, "floor_div");
}

i64 ceil_div(i64 x, const Rational& r) {
  if (r.num() <= 0) throw domain_error("ceil_div: divisor must be positive");
  i128 n = i128(x) * r.den();
  i128 d = r.num();
  i128 q = n / d;
  if (n % d != 0 && sign(n) * sign(d) > 0) ++q;
  return narrow(q, "ceil_div");
}

const Rational& ExtRational::value() const {
  if (!finite_) throw domain_error("ExtRational: infinite value has no finite part");
  return value_;
}

bool ExtRational::operator==(const ExtRational& o) const {
  if (!finite_ || !o.finite_) return finite_ == o.finite_;
  return value_ == o.value_;
}

bool ExtRational::operator<(const ExtRational& o) const {
  if (!finite_) return false;
  if (!o.finite_) return true;
  return value_ < o.value_;
}

bool ExtRational::operator<=(const ExtRational& o) const {
  if (!o.finite_) return true;
  if (!finite_) return false;
  return value_ <= o.value_;
}

std::string ExtRational::str() const {
  return finite_ ? value_.str() : std::string("inf");
}

ExtRational ExtRational::parse(const std::string& text) {
  if (text == "inf") return infinity();
  return ExtRational(Rational::parse(text));
}

ExtRational ratio_or_inf(i64 num, i64 den) {
  if (den == 0) {
    if (num <= 0) throw domain_error("ratio_or_inf: 0/0 or negative/0");
    return ExtRational::infinity();
  }
  return ExtRational(Rational(num, den));
}

}  // namespace psm
