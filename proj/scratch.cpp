// temporary dev harness - deleted before commit
#include <cstdio>
#include "ehi/special_functions.hpp"

using namespace ehi;

int main() {
  setvbuf(stdout, nullptr, _IONBF, 0);
  // dilog sanity
  printf("Li2(1)=%.15f vs %.15f\n", dilog(cd(1, 0)).real(), kPi * kPi / 6);
  printf("Li2(-1)=%.15f vs %.15f\n", dilog(cd(-1, 0)).real(), -kPi * kPi / 12);
  printf("Li2(0.5)=%.15f vs %.15f\n", dilog(cd(0.5, 0)).real(),
         kPi * kPi / 12 - 0.5 * std::log(2.0) * std::log(2.0));
  cd li2i = dilog(cd(0, 1));
  printf("Li2(i)=(%.15f,%.15f) vs (-0.205616758356028, 0.915965594177219)\n",
         li2i.real(), li2i.imag());

  // closed form b=1: Gamma_h(i/2;i,i) = 1/sqrt(2)
  cd g = hyperbolic_gamma_b1(0.5);
  printf("Gh_b1(0.5)=(%.15f,%.3e) vs %.15f\n", g.real(), g.imag(),
         1.0 / std::sqrt(2.0));
  // Gamma_h(i;i,i) = 1
  cd g1 = hyperbolic_gamma_b1(1.0);
  printf("Gh_b1(1.0)=(%.15f,%.3e)\n", g1.real(), g1.imag());

  // PV vs closed form at b=1, x = 0.4i and 0.3i
  TruncationPolicy pol;
  for (double s : {0.3, 0.4, 0.5, 1.0, 1.3}) {
    cd pv = hyperbolic_log_gamma_pv(cd(0, s), 1.0, pol);
    cd cf = hyperbolic_log_gamma_b1(cd(s, 0));
    printf("s=%.2f pv=(%.12f,%.12f) cf=(%.12f,%.12f) diff=%.2e\n", s,
           pv.real(), pv.imag(), cf.real(), cf.imag(), std::abs(pv - cf));
  }

  // reflection via PV at b=1.3: log Gh(x) + log Gh(2w-x) = 0
  double b = 1.3, omh = 0.5 * (b + 1 / b);
  cd x(0.2, 0.9);
  cd lg = hyperbolic_log_gamma_pv(x, b, pol);
  cd lr = hyperbolic_log_gamma_pv(cd(0, 2 * omh) - x, b, pol);
  printf("reflection: %.3e\n", std::abs(lg + lr));

  // conjugation
  cd lc = hyperbolic_log_gamma_pv(cd(-0.2, 0.9), b, pol);
  printf("conjugation: %.3e\n", std::abs(lc - std::conj(lg)));

  // shift relation inside strip: Gh(x+om2) = 2 sin(pi x/om1) Gh(x)
  cd om1(0, b), om2(0, 1 / b);
  cd lhs = hyperbolic_log_gamma(x + om2, b, pol);
  cd rhs = std::log(2.0 * std::sin(kPi * x / om1)) + hyperbolic_log_gamma(x, b, pol);
  printf("shift: %.3e\n", std::abs(std::exp(lhs) - std::exp(rhs)));

  // asymptotic vs PV at t = 8, 10, r = 0.7, b = 1.1
  for (double t : {5.0, 8.0, 10.0, 11.5}) {
    double bb = 1.1;
    double oh = 0.5 * (bb + 1 / bb);
    cd arg(t, 0.7 * oh);
    cd pv = hyperbolic_log_gamma_pv(arg, bb, pol);
    cd as = hyperbolic_log_gamma_asymptotic(arg, bb);
    printf("t=%.1f pv vs asy diff=%.3e\n", t, std::abs(pv - as));
  }
  // negative side
  for (double t : {-5.0, -8.0, -10.0}) {
    double bb = 1.1;
    double oh = 0.5 * (bb + 1 / bb);
    cd arg(t, 0.7 * oh);
    cd pv = hyperbolic_log_gamma_pv(arg, bb, pol);
    cd as = hyperbolic_log_gamma_asymptotic(arg, bb);
    printf("t=%.1f pv vs asy diff=%.3e\n", t, std::abs(pv - as));
  }

  // elliptic gamma: reflection Gamma(z)Gamma(pq/z)=1 at z=0.3, b=1, beta=1
  EllipticParams par(1.0, 1.0);
  cd e1 = elliptic_log_gamma(cd(0.3, 0), par);
  cd e2 = elliptic_log_gamma(par.pq / cd(0.3, 0), par);
  printf("elliptic reflection: %.3e\n", std::abs(e1 + e2));
  // Gamma(sqrt(pq)) = 1
  cd es = elliptic_log_gamma(cd(std::sqrt(par.pq), 0), par);
  printf("Gamma(sqrt(pq)): %.3e\n", std::abs(es));
  // series vs product cross-check at a point both paths accept
  {
    EllipticParams p2(1.0, 0.8);
    cd z = std::exp(cd(0, 2 * kPi * 0.2)) * 0.9;  // |z|=0.9: series path
    cd via_series = elliptic_log_gamma(z, p2);
    // force product by evaluating Gamma(z)Gamma(pq/z)=1 instead: pq/z has
    // modulus pq/0.9 (small) -> series; so compare exp sums directly:
    printf("series value check: (%.12f, %.12f)\n", via_series.real(),
           via_series.imag());
  }
  // narukawa at x=0.2, b=1, beta=1
  {
    EllipticParams p2(1.0, 1.0);
    auto nr = narukawa_check(0.2, p2, 5);
    printf("narukawa n=5: residual %.3e\n", nr.rel_residual);
    auto nr2 = narukawa_check(0.2, p2, 40);
    printf("narukawa n=40: residual %.3e\n", nr2.rel_residual);
  }
  // pochhammer asymptotic at beta=0.05
  {
    double beta = 0.05;
    cd lp = log_pochhammer(cd(std::exp(-beta), 0), cd(std::exp(-beta), 0));
    double pred = -kPi * kPi / (6 * beta) + 0.5 * std::log(2 * kPi / beta) +
                  beta / 24.0;
    printf("PochAsy residual: %.3e\n", std::abs(lp.real() - pred));
  }
  // eta modularity at tau = 0.7i
  {
    cd tau(0, 0.7);
    cd lhs2 = dedekind_eta(-1.0 / tau) / dedekind_eta(tau);
    cd rhs2 = std::sqrt(-cd(0, 1) * tau);
    printf("eta modularity: %.3e\n", std::abs(lhs2 - rhs2));
  }
  return 0;
}
