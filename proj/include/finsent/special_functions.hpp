#pragma once

namespace finsent {

// Regularized incomplete beta I_x(a, b), evaluated by the Lentz continued
// fraction with the usual symmetry split at x = (a+1)/(a+b+2).
double incomplete_beta(double a, double b, double x);

// Student t CDF with df degrees of freedom.
double t_cdf(double x, double df);

// F distribution CDF with (d1, d2) degrees of freedom; x < 0 maps to 0.
double f_cdf(double x, double d1, double d2);

// Two-sided p-values from the statistics above.
double t_two_sided_p(double t, double df);
double f_upper_p(double f, double d1, double d2);

// Inverse standard-normal CDF via the Abramowitz & Stegun 26.2.23 rational
// approximation (absolute error < 4.5e-4). Used only for reproducible noise
// generation, never for inference.
double inverse_normal_cdf(double p);

} // namespace finsent
