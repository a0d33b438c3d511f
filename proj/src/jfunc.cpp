#include "latgenus/jfunc.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace latgenus {

namespace {

constexpr int kMaxTerms = 256;

std::vector<double> truncated_mul(const std::vector<double>& a, const std::vector<double>& b) {
    std::vector<double> c(kMaxTerms, 0.0);
    for (int i = 0; i < kMaxTerms; i++) {
        if (a[i] == 0.0)
            continue;
        for (int j = 0; i + j < kMaxTerms; j++)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

// Coefficients of j(q) * q = 1 + 744 q + 196884 q^2 + ..., computed as
// E4^3 / (Delta/q) by truncated power-series arithmetic.
std::vector<double> compute_coefficients() {
    // E4 = 1 + 240 sum sigma_3(n) q^n
    std::vector<double> e4(kMaxTerms, 0.0);
    e4[0] = 1.0;
    for (int n = 1; n < kMaxTerms; n++) {
        double s3 = 0.0;
        for (int d = 1; d <= n; d++)
            if (n % d == 0)
                s3 += (double)d * d * d;
        e4[n] = 240.0 * s3;
    }
    std::vector<double> e4cubed = truncated_mul(truncated_mul(e4, e4), e4);

    // Delta/q = prod (1 - q^n)^24
    std::vector<double> prod(kMaxTerms, 0.0);
    prod[0] = 1.0;
    for (int n = 1; n < kMaxTerms; n++) {
        // multiply by (1 - q^n), in place from the top
        for (int i = kMaxTerms - 1; i >= n; i--)
            prod[i] -= prod[i - n];
    }
    std::vector<double> delta_over_q(kMaxTerms, 0.0);
    delta_over_q[0] = 1.0;
    for (int k = 0; k < 24; k++)
        delta_over_q = truncated_mul(delta_over_q, prod);

    // inverse of Delta/q (constant term 1)
    std::vector<double> inv(kMaxTerms, 0.0);
    inv[0] = 1.0;
    for (int n = 1; n < kMaxTerms; n++) {
        double acc = 0.0;
        for (int k = 1; k <= n; k++)
            acc += delta_over_q[k] * inv[n - k];
        inv[n] = -acc;
    }
    return truncated_mul(e4cubed, inv);
}

const std::vector<double>& coefficients() {
    static const std::vector<double> table = compute_coefficients();
    return table;
}

} // namespace

double j_series_coefficient(int n) {
    if (n < 0 || n >= kMaxTerms)
        throw std::out_of_range("j series coefficient index out of range");
    return coefficients()[n];
}

std::complex<double> j_q_series(std::complex<double> tau, int terms, double tol) {
    if (!(tau.imag() > 0.0))
        throw std::invalid_argument("tau must lie in the upper half-plane");
    if (terms < 2 || terms >= kMaxTerms)
        throw std::invalid_argument("terms must be between 2 and 255");
    const auto& c = coefficients();
    std::complex<double> q = std::exp(std::complex<double>(0.0, 2.0 * M_PI) * tau);
    double aq = std::abs(q);
    // sum_{n=0}^{terms-1} c[n] q^{n-1}
    std::complex<double> qpow = 1.0 / q;
    std::complex<double> total = 0.0;
    for (int n = 0; n < terms; n++) {
        total += c[n] * qpow;
        qpow *= q;
    }
    // Tail estimate from the next coefficient; the coefficients grow like
    // e^{4 pi sqrt(n)}, so a factor-2 margin on a geometric bound is ample
    // once the terms are shrinking.
    double tail = 2.0 * std::abs(c[terms]) * std::pow(aq, terms - 1);
    if (!(tail <= tol))
        throw std::invalid_argument("too few series terms for the requested tolerance");
    return total;
}

std::complex<double> j_invariant(const Grid& grid, int terms, double tol) {
    auto [lambda, tau] = grid.normalize();
    (void)lambda;
    double re = tau.real().to_double();
    double im = tau.v().to_double() * std::sqrt((double)(-grid.field_disc().to_ll()));
    return j_q_series(std::complex<double>(re, im), terms, tol);
}

} // namespace latgenus
