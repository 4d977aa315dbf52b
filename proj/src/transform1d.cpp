#include "qdunkl/transform1d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qdunkl/errors.hpp"
#include "qdunkl/special.hpp"

namespace qdunkl {

namespace {
constexpr double pi = std::numbers::pi;
}

std::complex<double> norm_constant_complex(double chi, double theta) {
    const double t = reduce_theta(theta);
    const double s = std::sin(t);
    if (std::abs(s) < sin_floor) throw ThetaSingular(theta);
    const double that = s > 0.0 ? 1.0 : -1.0;
    const double mag =
        std::exp(-(chi + 1.0) * (std::log(2.0) + std::log(std::abs(s))) - std::lgamma(chi + 1.0));
    return std::polar(mag, (chi + 1.0) * (that * pi / 2.0 - t));
}

NormConstant norm_constant(double chi, double theta, const UnitAxis& axis) {
    return {embed(norm_constant_complex(chi, theta), axis)};
}

std::vector<Quaternion> frac_dunkl_quadrature(std::span<const Quaternion> f,
                                              const AxisTransformSpec& spec,
                                              const QuadratureRule1D& rule,
                                              std::span<const double> y_targets) {
    if (static_cast<int>(f.size()) != rule.size())
        throw GridMismatch("frac_dunkl_quadrature: f must be sampled on rule.nodes");
    const Quaternion c = norm_constant(spec.chi, spec.theta, spec.axis).value;

    std::vector<Quaternion> out(y_targets.size());
    for (std::size_t t = 0; t < y_targets.size(); ++t) {
        const double y = y_targets[t];
        Quaternion acc;
        if (spec.side == KernelSide::Left) {
            for (int i = 0; i < rule.size(); ++i) {
                const Quaternion K =
                    frac_kernel(spec.chi, spec.theta, rule.nodes[i], y, spec.axis);
                acc += (K * f[i]) * rule.bare_weights[i];
            }
            out[t] = c * acc;
        } else {
            for (int i = 0; i < rule.size(); ++i) {
                const Quaternion K =
                    frac_kernel(spec.chi, spec.theta, rule.nodes[i], y, spec.axis);
                acc += (f[i] * K) * rule.bare_weights[i];
            }
            out[t] = acc * c;
        }
    }
    return out;
}

std::vector<Quaternion> frac_dunkl_special(std::span<const Quaternion> f, double theta) {
    if (!theta_is_singular(theta))
        throw InvalidParam("frac_dunkl_special: theta must be within sin_floor of pi*Z");
    const long n = std::lround(theta / pi);
    std::vector<Quaternion> out(f.begin(), f.end());
    if (n % 2 != 0) std::reverse(out.begin(), out.end());
    return out;
}

std::vector<Quaternion> hermite_coeffs_1d(std::span<const Quaternion> f,
                                          const QuadratureRule1D& rule, int nmax) {
    if (static_cast<int>(f.size()) != rule.size())
        throw GridMismatch("hermite_coeffs_1d: f must be sampled on rule.nodes");
    if (rule.size() < nmax + 8)
        throw TruncationTooHigh("hermite_coeffs_1d: need rule size >= nmax + 8");
    std::vector<Quaternion> coeffs(nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
        Quaternion acc;
        for (int i = 0; i < rule.size(); ++i) {
            acc += f[i] * (hermite_h(n, rule.chi, rule.nodes[i]) * rule.bare_weights[i]);
        }
        coeffs[n] = acc;
    }
    return coeffs;
}

std::vector<Quaternion> frac_dunkl_spectral(std::span<const Quaternion> f,
                                            const AxisTransformSpec& spec,
                                            const QuadratureRule1D& rule, int nmax,
                                            std::span<const double> y_targets) {
    std::vector<Quaternion> coeffs = hermite_coeffs_1d(f, rule, nmax);
    for (int n = 0; n <= nmax; ++n) {
        const Quaternion e = axis_exp(spec.axis, n * spec.theta);
        coeffs[n] = (spec.side == KernelSide::Left) ? e * coeffs[n] : coeffs[n] * e;
    }
    std::vector<Quaternion> out(y_targets.size());
    for (std::size_t t = 0; t < y_targets.size(); ++t) {
        Quaternion acc;
        for (int n = 0; n <= nmax; ++n)
            acc += coeffs[n] * hermite_h(n, spec.chi, y_targets[t]);
        out[t] = acc;
    }
    return out;
}

HankelRule make_hankel_rule(double mu, int N) {
    const QuadratureRule1D full = detail::generalized_hermite_rule(mu, N);
    HankelRule rule;
    rule.nu_weight = mu;
    for (int i = 0; i < full.size(); ++i) {
        if (full.nodes[i] > 0.0) {
            rule.nodes.push_back(full.nodes[i]);
            rule.bare_weights.push_back(full.bare_weights[i]);
        }
    }
    return rule;
}

std::vector<Quaternion> frac_hankel(std::span<const Quaternion> psi, double nu, double theta,
                                    const UnitAxis& axis, const HankelRule& rule,
                                    std::span<const double> y_targets) {
    if (psi.size() != rule.nodes.size())
        throw GridMismatch("frac_hankel: psi must be sampled on rule.nodes");
    if (!(nu > -1.0)) throw InvalidParam("frac_hankel: nu must be > -1");
    const double t = reduce_theta(theta);
    const double s = std::sin(t);
    if (std::abs(s) < sin_floor) throw ThetaSingular(theta);
    const double cot = std::cos(t) / s;
    const std::complex<double> c2 = 2.0 * norm_constant_complex(nu, theta);

    // Power correction when the rule's weight exponent differs from the
    // transform's measure x^{2 nu + 1} (adapted rules for singular psi).
    const double dpow = 2.0 * nu - 2.0 * rule.nu_weight;

    std::vector<Quaternion> out(y_targets.size());
    for (std::size_t k = 0; k < y_targets.size(); ++k) {
        const double y = y_targets[k];
        Quaternion acc;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double xi = rule.nodes[i];
            const std::complex<double> chirp = std::polar(1.0, -0.5 * (xi * xi + y * y) * cot);
            const double jfac = bessel_j_chi(nu, xi * y / s);
            double w = rule.bare_weights[i];
            if (dpow != 0.0) w *= std::pow(xi, dpow);
            acc += (embed(chirp * jfac, axis) * psi[i]) * w;
        }
        out[k] = embed(c2, axis) * acc;
    }
    return out;
}

Quaternion hankel_gaussian(double alpha, double nu, double theta, const UnitAxis& axis, double y) {
    if (!(alpha > 0.0)) throw InvalidParam("hankel_gaussian: alpha must be > 0");
    if (!(nu > -1.0)) throw InvalidParam("hankel_gaussian: nu must be > -1");
    if (!(theta > 0.0 && theta < pi))
        throw InvalidParam("hankel_gaussian: closed form requires 0 < theta < pi");
    const double s = std::sin(theta);
    if (std::abs(s) < sin_floor) throw ThetaSingular(theta);
    const double cot = std::cos(theta) / s;
    const std::complex<double> A(alpha, 0.5 * cot);
    const std::complex<double> c = norm_constant_complex(nu, theta);
    const std::complex<double> val = c * std::tgamma(nu + 1.0) * std::pow(A, -nu - 1.0) *
                                     std::exp(std::complex<double>(0.0, -0.5 * y * y * cot) -
                                              y * y / (4.0 * A * s * s));
    return embed(val, axis);
}

} // namespace qdunkl
