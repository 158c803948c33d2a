#ifndef EHI_NUMERICS_HPP
#define EHI_NUMERICS_HPP

#include <cmath>
#include <cstdio>
#include <complex>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

#include "ehi/errors.hpp"

namespace ehi {

using cd = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

// z^n for integer n by binary powering; exact-ish and much faster than pow.
inline cd ipow(cd z, long long n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  cd r = 1.0;
  while (n > 0) {
    if (n & 1) r *= z;
    z *= z;
    n >>= 1;
  }
  return r;
}

// Neumaier-compensated sum in a fixed traversal order. Used wherever the
// spec pins a canonical summation order for cross-platform determinism.
template <typename T>
class CompensatedSum {
 public:
  void add(T v) {
    T t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  T value() const { return sum_ + comp_; }

 private:
  T sum_{};
  T comp_{};
};

template <>
class CompensatedSum<cd> {
 public:
  void add(cd v) {
    re_.add(v.real());
    im_.add(v.imag());
  }
  cd value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum<double> re_;
  CompensatedSum<double> im_;
};

// 16-point Gauss-Legendre nodes/weights on [-1,1] (positive half; mirror).
struct Gauss16 {
  static constexpr int half = 8;
  static constexpr double x[8] = {
      0.0950125098376374, 0.2816035507792589, 0.4580167776572274,
      0.6178762444026438, 0.7554044083550030, 0.8656312023878318,
      0.9445750230732326, 0.9894009349916499};
  static constexpr double w[8] = {
      0.1894506104550685, 0.1826034150449236, 0.1691565193950025,
      0.1495959888165767, 0.1246289712555339, 0.0951585116824928,
      0.0622535239386479, 0.0271524594117541};
};

template <typename F>
auto gauss16(F&& f, double a, double b) -> decltype(f(0.0)) {
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  decltype(f(0.0)) s{};
  for (int i = 0; i < Gauss16::half; ++i) {
    s += Gauss16::w[i] * (f(c - h * Gauss16::x[i]) + f(c + h * Gauss16::x[i]));
  }
  return h * s;
}

// Adaptive bisection on top of gauss16. A panel is accepted when one
// refinement changes it by less than its share of abs_tol or by less than
// machine precision relative to the panel magnitude (cancellation floor).
// Smooth integrands only.
template <typename F>
cd integrate_adaptive(F&& f, double a, double b, double abs_tol,
                      int max_depth = 40) {
  struct Seg {
    double a, b;
    cd whole;
    int depth;
  };
  std::vector<Seg> stack;
  stack.push_back({a, b, gauss16(f, a, b), 0});
  CompensatedSum<cd> total;
  const double tol_per_len = abs_tol / (b - a);
  std::size_t panels = 0;
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    if (++panels > 4000000) {
#ifdef EHI_DEBUG_ADAPTIVE
      std::fprintf(stderr, "budget: seg=[%.17g,%.17g] depth=%d whole=(%g,%g)\n",
                   s.a, s.b, s.depth, s.whole.real(), s.whole.imag());
#endif
      throw QuadratureFailure("adaptive quadrature exceeded panel budget");
    }
    const double m = 0.5 * (s.a + s.b);
    const cd left = gauss16(f, s.a, m);
    const cd right = gauss16(f, m, s.b);
    const cd refined = left + right;
    const double err = std::abs(refined - s.whole);
    const double floor_ = 2e-16 * (std::abs(left) + std::abs(right));
    if (err < tol_per_len * (s.b - s.a) + floor_ || s.depth >= max_depth) {
      total.add(refined);
    } else {
      stack.push_back({s.a, m, left, s.depth + 1});
      stack.push_back({m, s.b, right, s.depth + 1});
    }
  }
  return total.value();
}

// Deterministic data-parallel map: results land in index order regardless of
// scheduling, so downstream reductions stay bit-stable.
inline void parallel_for(std::size_t n, int threads,
                         const std::function<void(std::size_t)>& body) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  const int nt = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(nt);
  for (int t = 0; t < nt; ++t) {
    pool.emplace_back([&, t]() {
      for (std::size_t i = t; i < n; i += nt) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace ehi

#endif
