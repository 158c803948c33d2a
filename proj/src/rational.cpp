#include "ehi/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>

namespace ehi {

namespace {

__int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long fit64(__int128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw OverflowError("rational arithmetic exceeded 64-bit range");
  }
  return static_cast<long long>(v);
}

}  // namespace

Rational Rational::make_reduced(__int128 n, __int128 d) {
  if (d == 0) throw EhiError("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Rational r;
  r.num_ = fit64(n);
  r.den_ = fit64(d);
  return r;
}

Rational::Rational(long long n, long long d) {
  *this = make_reduced(n, d);
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(s));
    }
    long long n = std::stoll(s.substr(0, slash));
    long long d = std::stoll(s.substr(slash + 1));
    return Rational(n, d);
  } catch (const std::logic_error&) {
    throw ParseError("bad rational literal: '" + s + "'");
  }
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = fit64(-static_cast<__int128>(num_));
  r.den_ = den_;
  return r;
}

Rational Rational::operator+(const Rational& o) const {
  return make_reduced(static_cast<__int128>(num_) * o.den_ +
                          static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator-(const Rational& o) const {
  return make_reduced(static_cast<__int128>(num_) * o.den_ -
                          static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator*(const Rational& o) const {
  return make_reduced(static_cast<__int128>(num_) * o.num_,
                      static_cast<__int128>(den_) * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw EhiError("rational division by zero");
  return make_reduced(static_cast<__int128>(num_) * o.den_,
                      static_cast<__int128>(den_) * o.num_);
}

bool Rational::operator<(const Rational& o) const {
  return static_cast<__int128>(num_) * o.den_ <
         static_cast<__int128>(o.num_) * den_;
}

long long Rational::floor() const {
  long long q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

Rational Rational::frac() const {
  return *this - Rational(floor());
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace ehi
