#pragma once

#include <span>
#include <vector>

#include "qdunkl/quadrature.hpp"
#include "qdunkl/quaternion.hpp"

namespace qdunkl {

// Angles within sin_floor of pi*Z are routed to the exact identity/reflection
// special cases; the kernel normalization diverges like |sin theta|^{-chi-1}.
inline constexpr double sin_floor = 1e-8;

// theta reduced to (-pi, pi] modulo 2 pi (the transform is 2 pi periodic).
double reduce_theta(double theta);

// True when theta is within sin_floor of a multiple of pi.
bool theta_is_singular(double theta);

// L2(|x|^{2chi+1} dx)-orthonormal generalized Hermite function h_n^chi.
// Even n = 2k:  (-1)^k sqrt(k! / Gamma(k+chi+1))   e^{-x^2/2} L_k^{(chi)}(x^2)
// Odd  n = 2k+1:(-1)^k sqrt(k! / Gamma(k+chi+2)) x e^{-x^2/2} L_k^{(chi+1)}(x^2)
// Sign convention: positive leading behavior as x -> +infinity.
double hermite_h(int n, double chi, double x);

// Coefficients of the three-term relation
//   x^2 h_n = alpha_{n+2} h_{n+2} + beta_n h_n + alpha_n h_{n-2}   (alpha_n := <x^2 h_n, h_{n-2}>)
// in closed form from the Laguerre connection:
//   beta_n       = n + chi + 1
//   alpha_{2k}   = sqrt(k (k + chi))
//   alpha_{2k+1} = sqrt(k (k + chi + 1)),  alpha_0 = alpha_1 = 0.
struct RecurrenceCoeffs {
    std::vector<double> alpha;
    std::vector<double> beta;
};
RecurrenceCoeffs recurrence_coeffs(double chi, int nmax);

// Dunkl kernel at a purely imaginary spectral point along the axis:
//   E_chi(x, u; axis) = j_chi(x u) + axis * (x u / (2 chi + 2)) j_{chi+1}(x u).
// Lies in span{1, axis}; |E|_H <= 1.
Quaternion dunkl_kernel_imag(double chi, double x, double u, const UnitAxis& axis);

// Fractional Dunkl kernel: chirp times Dunkl kernel at y / sin(theta):
//   axis_exp(axis, -(x^2+y^2) cot(theta)/2) * E_chi(x, y/sin theta; axis).
// Throws ThetaSingular near pi*Z.
Quaternion frac_kernel(double chi, double theta, double x, double y, const UnitAxis& axis);

// Tensor basis function H_{n,m}(x1,x2) = h_n^{chi1}(x1) h_m^{chi2}(x2) sampled
// on the grid.
SampledField hermite2d(int n, int m, GridPtr grid);

// Fractional Dunkl operator on a sampled 1-D function over a symmetric grid
// excluding 0 (uniform spacing assumed):
//   Lf(y) = f'(y) + (2chi+1)/y * (f(y) - f(-y))/2 + axis * cot(theta) * y * f(y)
// with a 4th-order finite-difference derivative (one-sided at the edges).
// Intended for residual checks of the kernel eigen-equation only.
std::vector<Quaternion> dunkl_operator_apply(std::span<const double> ygrid,
                                             std::span<const Quaternion> f, double chi,
                                             double theta, const UnitAxis& axis);

} // namespace qdunkl
