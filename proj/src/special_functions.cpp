#include "ehi/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ehi {

namespace {

constexpr double kPoleTol = 1e-12;

// Multiplicative accumulator with power-of-two renormalization so that long
// gamma products never overflow before the final log.
struct ScaledProduct {
  cd mant{1.0, 0.0};
  long long exp2 = 0;

  void mul(cd f) {
    mant *= f;
    double m = std::abs(mant.real()) + std::abs(mant.imag());
    if (m > 1e150 || (m < 1e-150 && m > 0.0)) {
      int e = 0;
      std::frexp(std::abs(mant), &e);
      mant = cd(std::ldexp(mant.real(), -e), std::ldexp(mant.imag(), -e));
      exp2 += e;
    }
  }
  cd log() const {
    if (mant == cd(0.0, 0.0)) {
      return {-std::numeric_limits<double>::infinity(), 0.0};
    }
    return std::log(mant) + cd(exp2 * std::log(2.0), 0.0);
  }
};

}  // namespace

EllipticParams::EllipticParams(double b_, double beta_) : b(b_), beta(beta_) {
  if (!(b > 0.0) || !(beta > 0.0)) {
    throw DivergentParameter("EllipticParams requires b > 0 and beta > 0");
  }
  p = std::exp(-beta * b);
  q = std::exp(-beta / b);
  pq = std::exp(-beta * (b + 1.0 / b));
  om_hat = 0.5 * (b + 1.0 / b);
  if (!(p > 0.0) || !(q > 0.0) || p >= 1.0 || q >= 1.0) {
    throw DivergentParameter("nomes left ]0,1[");
  }
}

cd log_pochhammer(cd a, cd q, const TruncationPolicy& policy) {
  if (std::abs(q) >= 1.0) {
    throw DivergentParameter("pochhammer requires |q| < 1");
  }
  CompensatedSum<cd> s;
  cd aq = a;
  long long k = 0;
  while (std::abs(aq) >= policy.eps) {
    cd f = 1.0 - aq;
    if (std::abs(f) < kPoleTol) {
      throw PoleHit("pochhammer factor vanished");
    }
    s.add(std::log(f));
    aq *= q;
    if (++k > policy.max_terms) {
      throw DivergentParameter("pochhammer did not converge in max_terms");
    }
  }
  // First-order tail: log prod (1 - a q^k) ~ -sum a q^k = -aq/(1-q).
  s.add(-aq / (1.0 - q));
  return s.value();
}

cd pochhammer(cd a, cd q, const TruncationPolicy& policy) {
  if (a == cd(0.0, 0.0)) return 1.0;
  return std::exp(log_pochhammer(a, q, policy));
}

cd dedekind_eta(cd tau, const TruncationPolicy& policy) {
  if (!(tau.imag() > 0.0)) {
    throw DivergentParameter("dedekind_eta requires Im(tau) > 0");
  }
  const cd q = std::exp(2.0 * kPi * cd(0.0, 1.0) * tau);
  return std::exp(2.0 * kPi * cd(0.0, 1.0) * tau / 24.0 +
                  log_pochhammer(q, q, policy));
}

// ---------------------------------------------------------------------------
// Elliptic gamma
// ---------------------------------------------------------------------------

namespace {

// q-series: log Gamma(z;p,q) = sum_{m>=1} (z^m - (pq/z)^m) / (m (1-p^m)(1-q^m)),
// geometric for pq < |z| < 1.
cd elliptic_log_gamma_series(cd z, const EllipticParams& par,
                             const TruncationPolicy& policy) {
  CompensatedSum<cd> s;
  cd zm = z;
  cd wm = par.pq / z;
  double pm = par.p, qm = par.q;
  for (long long m = 1; m <= policy.max_terms; ++m) {
    const double denom = static_cast<double>(m) * (1.0 - pm) * (1.0 - qm);
    s.add((zm - wm) / denom);
    if (std::abs(zm) + std::abs(wm) <
        policy.eps * std::max(1.0, std::abs(s.value())) * denom) {
      return s.value();
    }
    zm *= z;
    wm *= par.pq / z;
    pm *= par.p;
    qm *= par.q;
  }
  throw DivergentParameter("elliptic gamma series did not converge");
}

int elliptic_lattice_depth(const EllipticParams& par,
                           const TruncationPolicy& policy) {
  const double mx = std::max(par.p, par.q);
  return static_cast<int>(std::ceil(std::log(policy.eps) / std::log(mx))) + 1;
}

// Double product over the triangle j+k <= N. Throws PoleHit at denominator
// zeros unless allow_pole, in which case the log comes back with -inf real
// part (caller is inverting the gamma, so a pole is just a zero).
cd elliptic_log_gamma_product(cd z, const EllipticParams& par,
                              const TruncationPolicy& policy, bool allow_pole) {
  const int N = elliptic_lattice_depth(par, policy);
  ScaledProduct prod;
  bool pole = false;
  double pj = 1.0;
  for (int j = 0; j <= N; ++j) {
    double pjqk = pj;
    for (int k = 0; j + k <= N; ++k) {
      const cd den = 1.0 - z * pjqk;
      const cd num = 1.0 - (par.pq / z) * pjqk;
      if (std::abs(den) < kPoleTol) {
        if (!allow_pole) throw PoleHit("elliptic gamma pole");
        pole = true;
      } else {
        prod.mul(num / den);
      }
      pjqk *= par.q;
    }
    pj *= par.p;
  }
  if (pole) return {std::numeric_limits<double>::infinity(), 0.0};
  return prod.log();
}

}  // namespace

cd elliptic_log_gamma(cd z, const EllipticParams& par,
                      const TruncationPolicy& policy) {
  const double az = std::abs(z);
  if (az < kPoleTol) throw DivergentParameter("elliptic gamma at z = 0");
  if (std::max(az, par.pq / az) < 0.97) {
    return elliptic_log_gamma_series(z, par, policy);
  }
  return elliptic_log_gamma_product(z, par, policy, /*allow_pole=*/false);
}

cd elliptic_gamma(cd z, const EllipticParams& par,
                  const TruncationPolicy& policy) {
  return std::exp(elliptic_log_gamma(z, par, policy));
}

cd elliptic_log_gamma_inv_pair(cd z, const EllipticParams& par,
                               const TruncationPolicy& policy) {
  const cd a = elliptic_log_gamma_product(z, par, policy, /*allow_pole=*/true);
  const cd b = elliptic_log_gamma_product(1.0 / z, par, policy, true);
  if (std::isinf(a.real()) || std::isinf(b.real())) {
    return {-std::numeric_limits<double>::infinity(), 0.0};
  }
  return -a - b;
}

// ---------------------------------------------------------------------------
// Complex dilogarithm
// ---------------------------------------------------------------------------

namespace {

// Li2 via the expansion in u = -log(1-z): Li2(z) = sum_k B_k u^{k+1}/(k+1)!.
// Coefficients B_{2k}/(2k+1)! for 2k = 0..30 plus the lone odd term -u^2/4.
cd dilog_u_series(cd u) {
  static const double even_coef[] = {
      1.0,                       // u^1
      1.0 / 36.0,                // u^3   B2/3!
      -1.0 / 3600.0,             // u^5   B4/5!
      1.0 / 211680.0,            // u^7
      -1.0 / 10886400.0,         // u^9
      1.0 / 526901760.0,         // u^11
      -4.0647616451442255e-11,   // u^13
      8.9216910204564526e-13,    // u^15
      -1.9939295860721076e-14,   // u^17
      4.5189800296199182e-16,    // u^19
      -1.0356517612181247e-17,   // u^21
      2.3952186210261867e-19,    // u^23
      -5.5817858743250093e-21,   // u^25
      1.3091507554183213e-22,    // u^27
      -3.0874198024267403e-24,   // u^29
      7.3159756527022034e-26};   // u^31
  const cd u2 = u * u;
  cd term = u;
  CompensatedSum<cd> s;
  s.add(-0.25 * u2);
  for (double c : even_coef) {
    s.add(c * term);
    term *= u2;
  }
  return s.value();
}

cd dilog_z_series(cd z) {
  CompensatedSum<cd> s;
  cd zk = z;
  for (int k = 1; k < 400; ++k) {
    s.add(zk / static_cast<double>(k * k));
    if (std::abs(zk) < 1e-18 * (k * k)) break;
    zk *= z;
  }
  return s.value();
}

}  // namespace

cd dilog(cd z) {
  const double pi2_6 = kPi * kPi / 6.0;
  if (z == cd(0.0, 0.0)) return 0.0;
  if (z == cd(1.0, 0.0)) return pi2_6;
  if (std::abs(z) > 1.0) {
    const cd lz = std::log(-z);
    return -dilog(1.0 / z) - pi2_6 - 0.5 * lz * lz;
  }
  if (z.real() > 0.5) {
    return pi2_6 - std::log(z) * std::log(1.0 - z) - dilog(1.0 - z);
  }
  if (std::abs(z) <= 0.5) return dilog_z_series(z);
  return dilog_u_series(-std::log(1.0 - z));
}

// ---------------------------------------------------------------------------
// Hyperbolic gamma
// ---------------------------------------------------------------------------

namespace {

// Even Taylor data of h(w) = g(w) - c/(pi w^2) at w = 0, where
//   g(w) = sinh(2 pi c w) / (2 sinh(pi b w) sinh(pi w/b) w).
// g = (1/(2 pi^2 w^2)) * R(w^2) with R = N/S as power series; R[0]/(2 pi^2)
// is exactly c/pi, so the subtraction drops the leading coefficient.
struct PvSeries {
  cd r[7];
  void init(cd c, double b) {
    cd n[7];
    double s[7];
    const cd tc = 2.0 * kPi * c;
    const double ab = kPi * b, ib = kPi / b;
    cd tck = tc;
    double fact = 1.0;
    for (int k = 0; k < 7; ++k) {
      n[k] = tck / fact;            // (2 pi c)^{2k+1} / (2k+1)!
      tck *= tc * tc;
      fact *= (2 * k + 2) * (2 * k + 3);
    }
    for (int k = 0; k < 7; ++k) {
      double acc = 0.0;
      for (int j = 0; j <= k; ++j) {
        double t1 = 1.0, t2 = 1.0;
        for (int m = 1; m <= 2 * j; ++m) t1 *= ab / m;
        for (int m = 1; m <= 2 * (k - j); ++m) t2 *= ib / m;
        // t1 = (pi b)^{2j}/(2j)!, need /(2j+1): same for t2.
        acc += t1 / (2 * j + 1) * t2 / (2 * (k - j) + 1);
      }
      s[k] = acc;
    }
    for (int k = 0; k < 7; ++k) {
      cd acc = n[k];
      for (int j = 1; j <= k; ++j) acc -= s[j] * r[k - j];
      r[k] = acc;
    }
  }
  // integral of h over [0, w1]
  cd integral(double w1) const {
    cd acc = 0.0;
    double wp = w1;
    for (int k = 1; k < 7; ++k) {
      acc += r[k] * wp / static_cast<double>(2 * k - 1);
      wp *= w1 * w1;
    }
    return acc / (2.0 * kPi * kPi);
  }
};

cd pv_integrand_g(double w, cd c, double b) {
  return std::sinh(2.0 * kPi * c * w) /
         (2.0 * std::sinh(kPi * b * w) * std::sinh(kPi * w / b) * w);
}

// Number of continuation shifts by omega2 = i/b that centers Im(x) in the
// strip ]0, b + 1/b[.
int strip_shift_count(cd x, double b) {
  const double om_hat = 0.5 * (b + 1.0 / b);
  return static_cast<int>(std::lround((om_hat - x.imag()) * b));
}

}  // namespace

cd hyperbolic_log_gamma_pv(cd x, double b, const TruncationPolicy& policy) {
  const double om2 = b + 1.0 / b;
  if (!(x.imag() > 0.0) || !(x.imag() < om2)) {
    throw DomainViolation("PV integral requires 0 < Im x < b + 1/b");
  }
  const cd c = cd(0.5 * om2, 0.0) + cd(0.0, 1.0) * x;
  PvSeries series;
  series.init(c, b);
  const double w1 =
      std::min(0.1, 0.35 / std::max(1.0, 2.0 * kPi * std::abs(c)));
  const double mu = 2.0 * kPi * std::min(x.imag(), om2 - x.imag());
  const double W = std::max(6.0, 42.0 / mu);
  const auto h = [&](double w) {
    return pv_integrand_g(w, c, b) - c / (kPi * w * w);
  };
  const cd mid = integrate_adaptive(h, w1, W, policy.eps * 10.0);
  return series.integral(w1) + mid - c / (kPi * W);
}

// Large-|Re| expansion along the strip: for x = t + r*omega with t real,
//   log Gamma_h ~ -i pi [ t|t|/2 + (r-1) omega |t| + sgn(t)((r-1)^2 omega^2/2
//                          + (b^2 + b^-2)/24) ],
// omega = i (b+1/b)/2. The constant terms flip sign with sgn(t), which the
// reflection Gamma_h(x) Gamma_h(2 omega - x) = 1 forces; verified against the
// b = 1 closed form on both ends.
cd hyperbolic_log_gamma_asymptotic(cd x, double b) {
  const double om_hat = 0.5 * (b + 1.0 / b);
  const double t = x.real();
  const double r = x.imag() / om_hat;
  const double at = std::abs(t);
  const double sgn = t >= 0.0 ? 1.0 : -1.0;
  const cd mi_pi(0.0, -kPi);
  const cd omega(0.0, om_hat);
  const double c24 = (b * b + 1.0 / (b * b)) / 24.0;
  return mi_pi * (0.5 * t * at + (r - 1.0) * omega * at +
                  sgn * (0.5 * (r - 1.0) * (r - 1.0) * omega * omega +
                         cd(c24, 0.0)));
}

cd hyperbolic_log_gamma_b1(cd s) {
  if (!(s.real() > 0.0) || !(s.real() < 2.0)) {
    throw DomainViolation("closed form requires 0 < Re s < 2");
  }
  const cd i(0.0, 1.0);
  const cd e = std::exp(-2.0 * kPi * i * s);
  const cd one_m_e = 1.0 - e;
  // 1 - e vanishes in-strip only at s = 1, where the (s-1) factor makes the
  // log term removable (Gamma_h(omega) = 1).
  cd term1 = 0.0;
  if (std::abs(one_m_e) > 1e-250) {
    term1 = (s - 1.0) * std::log(one_m_e);
  }
  return term1 - dilog(e) / (2.0 * kPi * i) +
         0.5 * i * kPi * (s - 1.0) * (s - 1.0) - i * kPi / 12.0;
}

cd hyperbolic_gamma_b1(double s) {
  if (!(s > 0.0) || !(s < 2.0)) {
    throw PoleHit("hyperbolic_gamma_b1 requires 0 < s < 2");
  }
  return std::exp(hyperbolic_log_gamma_b1(cd(s, 0.0)));
}

cd hyperbolic_log_gamma(cd x, double b, const TruncationPolicy& policy) {
  if (!(b > 0.0)) throw DivergentParameter("hyperbolic gamma requires b > 0");
  const cd om1(0.0, b), om2(0.0, 1.0 / b);
  // Continue into the strip: Gamma_h(x) = Gamma_h(x + om2) / (2 sin(pi x/om1)).
  int k = strip_shift_count(x, b);
  cd logcorr = 0.0;
  cd y = x;
  for (; k > 0; --k) {
    const cd s = 2.0 * std::sin(kPi * y / om1);
    if (std::abs(s) < kPoleTol) throw PoleHit("hyperbolic gamma pole");
    logcorr -= std::log(s);
    y += om2;
  }
  for (; k < 0; ++k) {
    y -= om2;
    const cd s = 2.0 * std::sin(kPi * y / om1);
    if (std::abs(s) < kPoleTol) throw PoleHit("hyperbolic gamma zero/pole");
    logcorr += std::log(s);
  }
  const double big_re = std::max(12.0, 8.0 / std::min(b, 1.0 / b));
  cd core;
  if (std::abs(y.real()) > big_re) {
    core = hyperbolic_log_gamma_asymptotic(y, b);
  } else if (b == 1.0) {
    core = hyperbolic_log_gamma_b1(-cd(0.0, 1.0) * y);
  } else {
    core = hyperbolic_log_gamma_pv(y, b, policy);
  }
  return core + logcorr;
}

cd hyperbolic_gamma(cd x, double b, const TruncationPolicy& policy) {
  return std::exp(hyperbolic_log_gamma(x, b, policy));
}

// ---------------------------------------------------------------------------
// psi_b and the elliptic-gamma factorization
// ---------------------------------------------------------------------------

cd log_psi_b(cd x, double b, const TruncationPolicy& policy) {
  const cd i(0.0, 1.0);
  const double om_hat = 0.5 * (b + 1.0 / b);
  const double c24 = (b * b + 1.0 / (b * b)) / 24.0;
  return -0.5 * i * kPi * x * x + i * kPi * c24 +
         hyperbolic_log_gamma(i * x + cd(0.0, om_hat), b, policy);
}

cd psi_b(cd x, double b, const TruncationPolicy& policy) {
  return std::exp(log_psi_b(x, b, policy));
}

std::pair<cd, cd> q_polynomials(cd x, const EllipticParams& par) {
  const cd sg = par.sigma(), tu = par.tau();
  const cd ts = tu * sg;
  if (std::abs(ts) < 1e-300) {
    throw DivergentParameter("q_polynomials requires sigma*tau != 0");
  }
  const cd qm = -x * x * x / (6.0 * ts) + (tu + sg - 1.0) * x * x / (4.0 * ts) -
                (tu * tu + sg * sg + 3.0 * ts - 3.0 * tu - 3.0 * sg + 1.0) * x /
                    (12.0 * ts) -
                (tu + sg - 1.0) * (1.0 / tu + 1.0 / sg - 1.0) / 24.0;
  const cd half = x - (tu + sg) / 2.0;
  const cd qp = qm + half * half / (2.0 * ts) - (tu * tu + sg * sg) / (24.0 * ts);
  return {qm, qp};
}

NarukawaResult narukawa_check(double x, const EllipticParams& par, int n_max,
                              const TruncationPolicy& policy) {
  if (n_max < 1) throw DomainViolation("narukawa_check requires n_max >= 1");
  const cd i(0.0, 1.0);
  const double bb = par.b + 1.0 / par.b;
  const cd z = std::exp(2.0 * kPi * i * x);
  const cd lhs = elliptic_gamma(z, par, policy);

  const auto [qm, qp] = q_polynomials(cd(x, 0.0), par);
  (void)qm;
  cd log_rhs = 2.0 * i * kPi * qp +
               log_psi_b(-2.0 * kPi * i * x / par.beta - 0.5 * bb, par.b, policy);
  for (int n = 1; n <= n_max; ++n) {
    const cd a_num = -2.0 * kPi * i * static_cast<double>(n) / par.beta -
                     2.0 * kPi * i * x / par.beta - 0.5 * bb;
    const cd a_den = -2.0 * kPi * i * static_cast<double>(n) / par.beta +
                     2.0 * kPi * i * x / par.beta + 0.5 * bb;
    log_rhs += log_psi_b(a_num, par.b, policy) - log_psi_b(a_den, par.b, policy);
  }
  const cd rhs = std::exp(log_rhs);
  NarukawaResult res;
  res.lhs = lhs;
  res.rhs = rhs;
  res.rel_residual = std::abs(lhs / rhs - 1.0);
  return res;
}

}  // namespace ehi
