#pragma once

#include <complex>

#include "latgenus/grid.hpp"

namespace latgenus {

// Truncated q-expansion j(tau) = 1/q + 744 + 196884 q + ..., q = e^{2 pi i tau}.
// Requires Im(tau) > 0. Throws std::invalid_argument when the truncation
// error estimate exceeds tol.
std::complex<double> j_q_series(std::complex<double> tau, int terms = 40,
                                double tol = 1e-9);

// j-invariant of C/L, evaluated at the fundamental-domain tau of the grid.
// Floating cross-check only: equal classes give equal values, distinct
// classes of one discriminant give well-separated values.
std::complex<double> j_invariant(const Grid& grid, int terms = 40, double tol = 1e-9);

// Series coefficient of q^(n-1) (n = 0 is the 1/q term); exposed so tests
// can pin the classical initial coefficients.
double j_series_coefficient(int n);

} // namespace latgenus
