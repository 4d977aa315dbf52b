#include "qdunkl/special.hpp"

#include <cmath>
#include <limits>

#include "qdunkl/errors.hpp"

namespace qdunkl {

double laguerre(int n, double a, double z) {
    if (n < 0) throw InvalidParam("laguerre: n must be >= 0");
    if (!(a > -1.0)) throw InvalidParam("laguerre: a must be > -1");
    if (n == 0) return 1.0;
    double lm = 1.0;
    double lc = 1.0 + a - z;
    for (int k = 1; k < n; ++k) {
        const double ln = ((2.0 * k + 1.0 + a - z) * lc - (k + a) * lm) / (k + 1.0);
        lm = lc;
        lc = ln;
    }
    return lc;
}

namespace {

// Series evaluation of j_chi; the term ratio is -(x/2)^2 / (n (n + chi + 1)),
// so convergence is fast and alternation is benign for moderate |x|.
double bessel_series(double chi, double x) {
    const double q = -0.25 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 400; ++n) {
        term *= q / (n * (n + chi));
        sum += term;
        if (std::abs(term) < 1e-18 * (std::abs(sum) + 1.0)) break;
    }
    return sum;
}

// Gamma(chi+1) (2/x)^chi J_chi(x) for x > 0, via the standard Bessel function.
// Orders in (-1, 0) are lifted with J_nu = (2(nu+1)/x) J_{nu+1} - J_{nu+2}.
double bessel_large(double chi, double x) {
    double jval;
    if (chi >= 0.0) {
        jval = std::cyl_bessel_j(chi, x);
    } else {
        const double j1 = std::cyl_bessel_j(chi + 1.0, x);
        const double j2 = std::cyl_bessel_j(chi + 2.0, x);
        jval = (2.0 * (chi + 1.0) / x) * j1 - j2;
    }
    const double sign = jval >= 0.0 ? 1.0 : -1.0;
    if (jval == 0.0) return 0.0;
    const double lg = std::lgamma(chi + 1.0) + chi * std::log(2.0 / x) + std::log(std::abs(jval));
    return sign * std::exp(lg);
}

} // namespace

double bessel_j_chi(double chi, double x) {
    if (!(chi > -1.0)) throw InvalidParam("bessel_j_chi: chi must be > -1");
    const double ax = std::abs(x);
    if (ax <= 9.0) return bessel_series(chi, ax);
    return bessel_large(chi, ax);
}

} // namespace qdunkl
