#pragma once

#include <span>
#include <vector>

#include "qdunkl/basis.hpp"
#include "qdunkl/quadrature.hpp"
#include "qdunkl/quaternion.hpp"

namespace qdunkl {

// Which side of the integrand the kernel (and its constant) multiplies.
enum class KernelSide { Left, Right };

// One-dimensional fractional Dunkl transform instance.
struct AxisTransformSpec {
    double chi = 0.0;
    double theta = 0.0;
    UnitAxis axis = UnitAxis::i();
    KernelSide side = KernelSide::Left;
};

// Normalization constant c_chi^theta as a quaternion in span{1, axis}:
//   axis_exp(axis, (chi+1)(sgn(sin theta) pi/2 - theta)) * alpha_chi / |sin theta|^{chi+1},
//   alpha_chi = 1 / (2^{chi+1} Gamma(chi+1)).
struct NormConstant {
    Quaternion value;
};
NormConstant norm_constant(double chi, double theta, const UnitAxis& axis);

// Same constant as a complex number in the axis coordinate (for closed forms).
std::complex<double> norm_constant_complex(double chi, double theta);

// Direct quadrature evaluation of D_chi^theta f at the given targets.
// f must be sampled exactly on rule.nodes.  LEFT:  c * sum_i K(x_i,y) f_i w_i;
// RIGHT: (sum_i f_i K(x_i,y) w_i) * c, with the bare weights.
std::vector<Quaternion> frac_dunkl_quadrature(std::span<const Quaternion> f,
                                              const AxisTransformSpec& spec,
                                              const QuadratureRule1D& rule,
                                              std::span<const double> y_targets);

// theta within sin_floor of pi*Z: identity (even multiple) or reflection
// (odd multiple).  Reflection assumes sampling on a symmetric node set and is
// realized by index reversal.
std::vector<Quaternion> frac_dunkl_special(std::span<const Quaternion> f, double theta);

// Coefficients <f, h_n> for n = 0..nmax on the rule's nodes (quaternion on
// the left, matching the expansion f = sum c_n h_n).
std::vector<Quaternion> hermite_coeffs_1d(std::span<const Quaternion> f,
                                          const QuadratureRule1D& rule, int nmax);

// Spectral-path evaluation: expand in h_n, multiply the eigenvalues
// axis_exp(axis, n theta) on the spec's side, resum at the targets.
std::vector<Quaternion> frac_dunkl_spectral(std::span<const Quaternion> f,
                                            const AxisTransformSpec& spec,
                                            const QuadratureRule1D& rule, int nmax,
                                            std::span<const double> y_targets);

// Half-line Gauss rule for integrals int_0^inf g(x) x^{2 mu + 1} e^{-x^2} dx,
// obtained by folding the symmetric rule (positive nodes, un-doubled weights;
// the Hankel transform carries its own explicit factor 2).
// nu_weight records the mu of the rule's weight x^{2 mu + 1}; rules with
// mu != nu let the power factor of a singular integrand be absorbed exactly
// (frac_hankel multiplies by x^{2 nu + 1 - (2 mu + 1)}).
struct HankelRule {
    double nu_weight = 0.0;
    std::vector<double> nodes;        // ascending, > 0
    std::vector<double> bare_weights; // against x^{2 mu + 1} dx
};
HankelRule make_hankel_rule(double mu, int N);

// Fractional Hankel transform
//   H_nu^theta psi(y) = 2 c_nu^theta int_0^inf chirp(x,y) j_nu(x y / sin theta)
//                        psi(x) x^{2 nu + 1} dx
// evaluated with the supplied half-line rule; psi sampled on rule.nodes.
std::vector<Quaternion> frac_hankel(std::span<const Quaternion> psi, double nu, double theta,
                                    const UnitAxis& axis, const HankelRule& rule,
                                    std::span<const double> y_targets);

// Closed form of H_nu^theta applied to e^{-alpha x^2} (0 < theta < pi):
//   c_nu^theta Gamma(nu+1) A^{-nu-1} exp(-i y^2 cot(theta)/2 - y^2/(4 A sin^2 theta)),
//   A = alpha + i cot(theta)/2, computed in span{1, axis}.
Quaternion hankel_gaussian(double alpha, double nu, double theta, const UnitAxis& axis, double y);

} // namespace qdunkl
