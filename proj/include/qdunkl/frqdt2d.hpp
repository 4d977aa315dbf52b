#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qdunkl/basis.hpp"
#include "qdunkl/quadrature.hpp"
#include "qdunkl/report.hpp"
#include "qdunkl/transform1d.hpp"

namespace qdunkl {

// Parameters of one two-sided 2-D transform instance: left kernel in
// span{1, a} acting on x1, right kernel in span{1, b} acting on x2.
struct TransformSpec {
    double chi1 = 0.0;
    double chi2 = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    UnitAxis a = UnitAxis::i();
    UnitAxis b = UnitAxis::j();

    TransformSpec inverse() const {
        TransformSpec s = *this;
        s.theta1 = -theta1;
        s.theta2 = -theta2;
        return s;
    }
};

// Truncated matrix of generalized-Hermite coefficients c_{n,m} (coefficients
// multiply the basis from the left: f = sum c_{n,m} H_{n,m}).
struct SpectralCoeffs {
    int nmax = 0;
    int mmax = 0;
    std::vector<Quaternion> c;

    SpectralCoeffs() = default;
    SpectralCoeffs(int nmax_, int mmax_)
        : nmax(nmax_), mmax(mmax_),
          c(static_cast<std::size_t>(nmax_ + 1) * (mmax_ + 1)) {}

    Quaternion& at(int n, int m) { return c[static_cast<std::size_t>(n) * (mmax + 1) + m]; }
    const Quaternion& at(int n, int m) const {
        return c[static_cast<std::size_t>(n) * (mmax + 1) + m];
    }
};

// Fourier-Hermite analysis c_{n,m} = <f, H_{n,m}>; requires grid resolution
// >= max(nmax, mmax) + 8 per axis.
SpectralCoeffs analyze(const SampledField& f, int nmax, int mmax);

// f = sum c_{n,m} H_{n,m} sampled on the grid.
SampledField synthesize(const SpectralCoeffs& coeffs, GridPtr grid);

// Diagonal action: c'_{n,m} = axis_exp(a, n theta1) * c_{n,m} * axis_exp(b, m theta2).
SpectralCoeffs frqdt_spectral(const SpectralCoeffs& coeffs, const TransformSpec& spec);

// Direct tensor-factorized quadrature evaluation on the field's own grid:
// LEFT 1-D transform in x1, then RIGHT 1-D transform in x2.  Angles within
// sin_floor of pi*Z are routed to the exact identity/reflection special case
// on that axis.  threads <= 0 resolves via QDUNKL_THREADS.
SampledField frqdt_quadrature(const SampledField& f, const TransformSpec& spec, int threads = 0);

// Spectral-path evaluation (analysis, diagonal action, synthesis).
SampledField frqdt_via_spectral(const SampledField& f, const TransformSpec& spec, int nmax,
                                int mmax);

// Inverse transform: the spec with both angles negated.
SampledField inverse_frqdt(const SampledField& g, const TransformSpec& spec, int threads = 0);

// Closed-form image of e^{-alpha |x|^2} (0 < theta_i < pi): product of the two
// axis-subalgebra factors with nu_i = chi_i, left factor first.
SampledField gaussian_closed_form_2d(double alpha, const TransformSpec& spec, GridPtr grid);

// || F^{spec2} F^{spec1} f - F^{combined} f || / ||f|| with combined angles
// theta_i(spec1) + theta_i(spec2).  All six angles must avoid pi*Z.
CheckReport compose_check(const SampledField& f, const TransformSpec& spec1,
                          const TransformSpec& spec2, double tolerance = 1e-6, int threads = 0);

// Bochner-type identity for f = pcoeff x1^{r1} x2^{r2} psi1(|x1|) psi2(|x2|):
// the 2-D quadrature transform against the factorized form
//   [axis_exp(a, r1 theta1) y1^{r1} H^{theta1}_{r1+chi1} psi1(|y1|)]
//     * pcoeff * [y2^{r2} H^{theta2}_{r2+chi2} psi2(|y2|) axis_exp(b, r2 theta2)],
// i.e. the constant coefficient sits between the span{1,a} and span{1,b}
// factors.  r_i in {0, 1}; psi_i real radial profiles in the Gaussian class.
CheckReport bochner_check(int r1, int r2, const Quaternion& pcoeff,
                          const std::function<double(double)>& psi1,
                          const std::function<double(double)>& psi2, const TransformSpec& spec,
                          GridPtr grid, double tolerance = 1e-6, int threads = 0);

// max |F f|_H <= C ||f||_1 with
// C = 1 / (Gamma(chi1+1) Gamma(chi2+1) 2^{chi1+chi2+2} |sin theta1|^{chi1+1} |sin theta2|^{chi2+1});
// residual is max|Ff| / (C ||f||_1), pass when <= 1 + 1e-9.
CheckReport sup_bound_check(const SampledField& f, const TransformSpec& spec, int threads = 0);

} // namespace qdunkl
