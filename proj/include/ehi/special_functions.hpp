#ifndef EHI_SPECIAL_FUNCTIONS_HPP
#define EHI_SPECIAL_FUNCTIONS_HPP

#include <complex>
#include <utility>

#include "ehi/errors.hpp"
#include "ehi/numerics.hpp"

namespace ehi {

// Product/series truncation control shared by all special-function routines.
struct TruncationPolicy {
  double eps = 1e-15;
  long long max_terms = 2000000;
};

// Squashing b and inverse temperature beta, with the derived nomes
//   p = exp(-beta*b), q = exp(-beta/b),
// and the modular parameters sigma = i*beta*b/(2*pi), tau = i*beta/(2*pi*b).
struct EllipticParams {
  double b = 1.0;
  double beta = 1.0;
  double p = 0.0;
  double q = 0.0;
  double pq = 0.0;
  double om_hat = 1.0;  // (b + 1/b)/2, so omega = i*om_hat

  EllipticParams(double b_, double beta_);
  cd sigma() const { return {0.0, beta * b / (2.0 * kPi)}; }
  cd tau() const { return {0.0, beta / (2.0 * kPi * b)}; }
};

// (a;q) = prod_{k>=0} (1 - a q^k), truncated when |a q^k| < eps with a
// first-order tail correction exp(-sum_tail a q^k).
cd pochhammer(cd a, cd q, const TruncationPolicy& policy = {});
cd log_pochhammer(cd a, cd q, const TruncationPolicy& policy = {});

// eta(tau) = q^{1/24} (q;q) with q = exp(2 pi i tau), Im tau > 0.
cd dedekind_eta(cd tau, const TruncationPolicy& policy = {});

// Elliptic gamma Gamma(z;p,q) = prod_{j,k>=0} (1 - p^{j+1}q^{k+1}/z)/(1 - z p^j q^k).
// log variant returns a branch suitable for exponentiation (imaginary part is
// not tracked across Riemann sheets). Strategy: q-series when z is strictly
// inside the annulus pq < |z| < 1, double product over j+k <= N otherwise,
// with N = ceil(log eps / log max(p,q)).
cd elliptic_log_gamma(cd z, const EllipticParams& par,
                      const TruncationPolicy& policy = {});
cd elliptic_gamma(cd z, const EllipticParams& par,
                  const TruncationPolicy& policy = {});
// log of 1/(Gamma(z^{+1})Gamma(z^{-1})) for z on the unit torus; returns
// -inf real part at the gamma poles (integrand zeros) instead of throwing.
cd elliptic_log_gamma_inv_pair(cd z, const EllipticParams& par,
                               const TruncationPolicy& policy = {});

// Hyperbolic gamma Gamma_h(x; i b, i/b). Inside the strip
// 0 < Im x < b + 1/b the log is the subtracted symmetrized integral
//   int_0^inf [ sinh(2 pi c w) / (2 sinh(pi b w) sinh(pi w / b) w) - c/(pi w^2) ] dw,
// c = (b+1/b)/2 + i x; outside, continuation by
// Gamma_h(x + i/b) = 2 sin(pi x / (i b)) Gamma_h(x). Arguments far out along
// the strip switch to the exponentially accurate large-|Re| expansion.
cd hyperbolic_log_gamma(cd x, double b, const TruncationPolicy& policy = {});
cd hyperbolic_gamma(cd x, double b, const TruncationPolicy& policy = {});

// Internal evaluation paths, exposed so tests can cross-validate them on
// overlapping domains.
cd hyperbolic_log_gamma_pv(cd x, double b, const TruncationPolicy& policy = {});
cd hyperbolic_log_gamma_asymptotic(cd x, double b);

// Closed form at b = 1:
//   log Gamma_h(i s; i, i) = (s-1) log(1-e^{-2 pi i s}) - Li2(e^{-2 pi i s})/(2 pi i)
//                            + i pi (s-1)^2 / 2 - i pi / 12,
// analytic in the strip 0 < Re s < 2. The public op takes real s per the
// principal-strip contract; the complex version backs the line integrals.
cd hyperbolic_log_gamma_b1(cd s);
cd hyperbolic_gamma_b1(double s);

// Non-compact quantum dilogarithm psi_b(x) = e^{-i pi x^2/2 + i pi (b^2+b^-2)/24}
// Gamma_h(i x + omega).
cd log_psi_b(cd x, double b, const TruncationPolicy& policy = {});
cd psi_b(cd x, double b, const TruncationPolicy& policy = {});

// The two cubic polynomials Q_-(x;sigma,tau), Q_+(x;sigma,tau) entering the
// psi_b factorization of the elliptic gamma.
std::pair<cd, cd> q_polynomials(cd x, const EllipticParams& par);

// Both sides of the psi_b factorization identity, truncating the n-product
// at n_max; the caller compares.
struct NarukawaResult {
  cd lhs;
  cd rhs;
  double rel_residual;  // |lhs/rhs - 1|
};
NarukawaResult narukawa_check(double x, const EllipticParams& par, int n_max,
                              const TruncationPolicy& policy = {});

// Complex dilogarithm, principal branch (cut along [1,inf)).
cd dilog(cd z);

}  // namespace ehi

#endif
