#pragma once

#include <vector>

#include "qdunkl/frqdt2d.hpp"
#include "qdunkl/quadrature.hpp"
#include "qdunkl/report.hpp"

namespace qdunkl {

// int (x1^2 + x2^2)^p |f|_H^2 d mu, p >= 1.
double weighted_moment(const SampledField& f, double p);

// Diagonal quadratic-form coefficients A^{(p)}_{n,m} = <|x|^{2p} H_{n,m}, H_{n,m}>
// over the truncated table, with the minimum and its location.  Throws
// TruncationSuspect if the argmin falls on the outer truncation boundary
// (n = nmax or m = mmax), which would mean the tabulated minimum is unreliable.
struct DiagonalCoeffs {
    double p = 1.0;
    int nmax = 0;
    int mmax = 0;
    std::vector<double> table; // (nmax+1) x (mmax+1), row-major
    double amin = 0.0;
    int argmin_n = 0;
    int argmin_m = 0;

    double at(int n, int m) const { return table[static_cast<std::size_t>(n) * (mmax + 1) + m]; }
};
DiagonalCoeffs diagonal_coeffs(double p, double chi1, double chi2, int nmax, int mmax,
                               int quad_N = 96);

// Outcome of one uncertainty-product evaluation.
struct MomentReport {
    double p = 1.0;
    double spatial_moment = 0.0;
    double spectral_moment = 0.0;
    double norm4 = 0.0;
    double sharp_constant = 0.0;
    double ratio = 0.0; // spatial * spectral / (sharp_constant * norm4)
    bool pass = false;
    json params = json::object();

    json to_json() const;
};

struct HeisenbergOptions {
    double tolerance = 1e-6;
    int table_nmax = 16; // truncation of the diagonal table for p != 1
    int table_quad_N = 96;
    int threads = 0;
};

// Heisenberg-type product check: spatial moment of f times spectral moment of
// frqdt(f) against C ||f||^4.  For p = 1 the constant is the closed form
// ((2 chi1 + 1) + (2 chi2 + 1))^2; otherwise (amin of the diagonal table)^2.
MomentReport heisenberg_check(const SampledField& f, const TransformSpec& spec, double p,
                              const HeisenbergOptions& opts = {});

// The chi1 = chi2 = 0, a = i, b = j specialization with constant 4.  Note the
// underlying measure is d mu_{0,0} = |x1 x2| dx, not the Lebesgue measure; the
// report's params record this caveat.
MomentReport frqft_corollary_check(const SampledField& f, double theta1, double theta2,
                                   const HeisenbergOptions& opts = {});

} // namespace qdunkl
