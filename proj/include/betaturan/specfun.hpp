#pragma once

#include "betaturan/common.hpp"

namespace betaturan::specfun {

// log Gamma(z) for z > 0.
double log_gamma(double z);

// log B(a, b) = log_gamma(a) + log_gamma(b) - log_gamma(a + b).
double log_beta(double a, double b);

// psi(z) = Gamma'(z)/Gamma(z), z > 0.  Asymptotic expansion for z >= 10,
// upward recurrence shift below.
double digamma(double z);

// psi'(z) = sum 1/(n+z)^2, z > 0.  Strictly positive and decreasing.
double trigamma(double z);

// Normalized incomplete beta I_x(a,b), the beta(a,b) CDF at x, computed from
// the series x^a (1-x)^b * sum_n Gamma(a+b+n)/(Gamma(b) Gamma(a+1+n)) x^n.
// Evaluates I_{1-x}(b,a) via the reflection formula when x > 0.75.
double inc_beta(double a, double b, double x);
double inc_beta(const ParameterPoint& point);

// 2F1(1, p; q; x) = sum_n (p)_n/(q)_n x^n for p, q > 0 and 0 < x < 1.
// Terminates when a geometric tail estimate drops below 1e-15 of the sum.
double gauss_2f1_unit(double p, double q, double x);

namespace detail {
// Normalized Eq.-style series value sum_n Gamma(a+b+n)/(Gamma(b) Gamma(a+1+n)) x^n
// multiplied by x^a (1-x)^b, valid for a > -1 (analytic continuation used by
// the Turan bound checker when a - nu falls in (-1, 0]).  a == 0 returns 1.
double inc_beta_continued(double a, double b, double x);
}  // namespace detail

}  // namespace betaturan::specfun
