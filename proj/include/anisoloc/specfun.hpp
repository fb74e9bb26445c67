#pragma once

namespace anisoloc::specfun {

// ln Gamma(x), x > 0. Stirling series after upward recurrence to x >= 10.
double log_gamma(double x);

// Generalized Laguerre L_n^{(c)}(x), c > -1, by three-term recurrence.
double laguerre(int n, double c, double x);

// Regularized incomplete beta I_x(p, q); Lentz continued fraction.
double reg_inc_beta(double x, double p, double q);

// ln B(p, q)
double log_beta(double p, double q);

}  // namespace anisoloc::specfun
