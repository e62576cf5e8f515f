#pragma once

#include <complex>

namespace slnsim {

// Digamma psi(z) and trigamma psi'(z) for complex argument.
// Recurrence pushes |z| >= 10, then the Stirling-type asymptotic series;
// reflection handles Re(z) < 0. Accurate to ~1e-13 on the imaginary axis,
// which is where the steady-state formulas evaluate them.
std::complex<double> digamma(std::complex<double> z);
std::complex<double> trigamma(std::complex<double> z);

}  // namespace slnsim
