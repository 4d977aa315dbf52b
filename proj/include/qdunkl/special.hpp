#pragma once

namespace qdunkl {

// Generalized Laguerre polynomial L_n^{(a)}(z) by the stable three-term
// recurrence. Requires n >= 0, a > -1.
double laguerre(int n, double a, double z);

// Normalized spherical Bessel function
//   j_chi(x) = Gamma(chi+1) * sum_n (-1)^n (x/2)^{2n} / (n! Gamma(n+chi+1)).
// Even and entire; j_chi(0) = 1. Requires chi > -1.
double bessel_j_chi(double chi, double x);

} // namespace qdunkl
