#include "slnsim/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <limits>

#include "slnsim/constants.hpp"

namespace slnsim {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 15>;

constexpr int kMaxDepth = 15;

// 1 - cos(x) without cancellation.
double one_minus_cos(double x) {
  const double s = std::sin(0.5 * x);
  return 2.0 * s * s;
}

// x - sin(x); series below the cancellation threshold.
double x_minus_sin(double x) {
  if (std::abs(x) < 1e-2) {
    const double x2 = x * x;
    return x * x2 / 6.0 * (1.0 - x2 / 20.0 * (1.0 - x2 / 42.0));
  }
  return x - std::sin(x);
}

struct PanelSum {
  double total = 0.0;
  double scale = 0.0;  // sum of |panel|, cancellation-safe magnitude
  int quiet = 0;       // consecutive negligible panels

  bool add(double panel, double rel_tol) {
    total += panel;
    scale += std::abs(panel);
    if (std::abs(panel) <= rel_tol * scale) {
      ++quiet;
    } else {
      quiet = 0;
    }
    return quiet >= 2;
  }
};

}  // namespace

double integrate(const Integrand& f, double a, double b, double rel_tol) {
  double err = 0.0;
  const double value = GK::integrate(f, a, b, kMaxDepth, rel_tol, &err);
  const double floor = std::abs(value) + 1e-300;
  if (err > 1e3 * rel_tol * floor && err > 1e-14) {
    throw QuadratureError("adaptive Gauss-Kronrod did not reach tolerance");
  }
  return value;
}

double oscillatory_integral(const Integrand& envelope, double t, Trig trig,
                            double rel_tol, int max_half_periods) {
  const double inf = std::numeric_limits<double>::infinity();
  if (t == 0.0) {
    return trig == Trig::Cos ? integrate(envelope, 0.0, inf, rel_tol) : 0.0;
  }
  const double half = pi / t;
  const auto f = [&](double w) {
    return envelope(w) * (trig == Trig::Cos ? std::cos(w * t) : std::sin(w * t));
  };
  // Zeros of cos sit at (k+1/2)*pi/t, zeros of sin at k*pi/t.
  const double first = trig == Trig::Cos ? 0.5 * half : half;

  PanelSum sum;
  double a = 0.0;
  double b = first;
  double last_panel = 0.0;
  for (int k = 0; k < max_half_periods; ++k) {
    last_panel = integrate(f, a, b, rel_tol);
    const bool settled = sum.add(last_panel, 0.1 * rel_tol);
    a = b;
    b += half;
    if (settled && k >= 3) {
      return sum.total;
    }
  }
  // Alternating-series remainder: the first omitted panel bounds the tail,
  // valid once the envelope decreases.
  if (envelope(a + half) > envelope(a) || std::abs(last_panel) > rel_tol * sum.scale) {
    throw QuadratureError("oscillatory integral: panel series did not settle");
  }
  return sum.total;
}

double one_minus_cos_integral(const Integrand& envelope, double t,
                              double rel_tol, int max_half_periods) {
  const double inf = std::numeric_limits<double>::infinity();
  if (t == 0.0) {
    return 0.0;
  }
  const double half = pi / t;
  const auto f = [&](double w) { return envelope(w) * one_minus_cos(w * t); };

  PanelSum sum;
  double a = 0.0;
  int k = 0;
  for (; k < max_half_periods; ++k) {
    const double panel = integrate(f, a, a + half, rel_tol);
    const bool settled = sum.add(panel, 0.1 * rel_tol);
    a += half;
    if (settled && k >= 2) {
      break;
    }
  }
  // Tail: the constant part integrates directly; the cosine part alternates
  // and is bounded by the constant part of the first omitted half period.
  const double rest = integrate(envelope, a, inf, rel_tol);
  const double bound = std::abs(integrate(envelope, a, a + half, rel_tol));
  const double result = sum.total + rest;
  if (k == max_half_periods && bound > rel_tol * (std::abs(result) + sum.scale)) {
    throw QuadratureError("1-cos integral: oscillation not resolved within panel budget");
  }
  return result;
}

double t_minus_sin_integral(const Integrand& envelope, double t,
                            double rel_tol, int max_half_periods) {
  const double inf = std::numeric_limits<double>::infinity();
  if (t == 0.0) {
    return 0.0;
  }
  const double half = pi / t;
  const auto f = [&](double w) { return envelope(w) * x_minus_sin(w * t); };

  PanelSum sum;
  double a = 0.0;
  int k = 0;
  for (; k < max_half_periods; ++k) {
    const double panel = integrate(f, a, a + half, rel_tol);
    const bool settled = sum.add(panel, 0.1 * rel_tol);
    a += half;
    if (settled && k >= 2) {
      break;
    }
  }
  const double rest = integrate([&](double w) { return envelope(w) * w * t; }, a, inf, rel_tol);
  const double bound = std::abs(integrate(envelope, a, a + half, rel_tol));
  const double result = sum.total + rest;
  if (k == max_half_periods && bound > rel_tol * (std::abs(result) + sum.scale)) {
    throw QuadratureError("t-sin integral: oscillation not resolved within panel budget");
  }
  return result;
}

}  // namespace slnsim
