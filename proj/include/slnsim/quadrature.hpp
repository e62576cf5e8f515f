#pragma once

#include <functional>
#include <stdexcept>

namespace slnsim {

using Integrand = std::function<double(double)>;

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Adaptive Gauss-Kronrod on [a, b]; b may be +inf for decaying integrands.
double integrate(const Integrand& f, double a, double b, double rel_tol = 1e-10);

enum class Trig { Cos, Sin };

// int_0^inf c(w) * trig(w t) dw for a smooth, eventually-monotone envelope c.
// Panels between consecutive zeros of the oscillation; once the panel series
// alternates, the first omitted panel bounds the truncation error.
double oscillatory_integral(const Integrand& envelope, double t, Trig trig,
                            double rel_tol = 1e-9, int max_half_periods = 100);

// int_0^inf c(w) * (1 - cos(w t)) dw. The kernel regularizes envelopes with an
// integrable 1/w^2-type growth at the origin, so the combination is never split.
double one_minus_cos_integral(const Integrand& envelope, double t,
                              double rel_tol = 1e-9, int max_half_periods = 100);

// int_0^inf c(w) * (w t - sin(w t)) dw, same panel strategy.
double t_minus_sin_integral(const Integrand& envelope, double t,
                            double rel_tol = 1e-9, int max_half_periods = 100);

}  // namespace slnsim
