#ifndef EHI_RATIONAL_HPP
#define EHI_RATIONAL_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "ehi/errors.hpp"

namespace ehi {

// Exact rational over int64 with __int128 intermediates. Always stored in
// lowest terms with positive denominator. Throws OverflowError if a reduced
// result leaves the int64 range (does not happen at the magnitudes the
// minimizer and anomaly checks produce, but silent wraparound is never ok).
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(long long n, long long d);

  static Rational parse(const std::string& s);  // "p/q" or "p"

  long long num() const { return num_; }
  long long den() const { return den_; }

  Rational operator-() const;
  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  bool operator==(const Rational& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }
  bool operator!=(const Rational& o) const { return !(*this == o); }
  bool operator<(const Rational& o) const;
  bool operator>(const Rational& o) const { return o < *this; }
  bool operator<=(const Rational& o) const { return !(o < *this); }
  bool operator>=(const Rational& o) const { return !(*this < o); }

  long long floor() const;               // largest integer <= value
  Rational frac() const;                 // x - floor(x), in [0,1)
  Rational abs() const { return num_ < 0 ? -*this : *this; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string str() const;  // "p/q", or "p" when integral

 private:
  static Rational make_reduced(__int128 n, __int128 d);
  long long num_;
  long long den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

inline Rational operator*(long long k, const Rational& r) {
  return Rational(k) * r;
}

}  // namespace ehi

#endif
