#include "qdunkl/basis.hpp"

#include <cmath>
#include <numbers>

#include "qdunkl/errors.hpp"
#include "qdunkl/special.hpp"

namespace qdunkl {

namespace {
constexpr double pi = std::numbers::pi;
}

double reduce_theta(double theta) {
    double t = std::remainder(theta, 2.0 * pi);
    if (t <= -pi) t += 2.0 * pi;
    return t;
}

bool theta_is_singular(double theta) { return std::abs(std::sin(theta)) < sin_floor; }

double hermite_h(int n, double chi, double x) {
    if (n < 0) throw InvalidParam("hermite_h: n must be >= 0");
    if (!(chi >= 0.0)) throw InvalidParam("hermite_h: chi must be >= 0");
    const double g = std::exp(-0.5 * x * x);
    if (n % 2 == 0) {
        const int k = n / 2;
        const double norm = std::exp(0.5 * (std::lgamma(k + 1.0) - std::lgamma(k + chi + 1.0)));
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        return sign * norm * g * laguerre(k, chi, x * x);
    }
    const int k = (n - 1) / 2;
    const double norm = std::exp(0.5 * (std::lgamma(k + 1.0) - std::lgamma(k + chi + 2.0)));
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * norm * x * g * laguerre(k, chi + 1.0, x * x);
}

RecurrenceCoeffs recurrence_coeffs(double chi, int nmax) {
    if (nmax < 0) throw InvalidParam("recurrence_coeffs: nmax must be >= 0");
    RecurrenceCoeffs rc;
    rc.alpha.resize(nmax + 1, 0.0);
    rc.beta.resize(nmax + 1, 0.0);
    for (int n = 0; n <= nmax; ++n) {
        rc.beta[n] = n + chi + 1.0;
        if (n >= 2) {
            const int k = n / 2;
            rc.alpha[n] = (n % 2 == 0) ? std::sqrt(static_cast<double>(k) * (k + chi))
                                       : std::sqrt(static_cast<double>(k) * (k + chi + 1.0));
        }
    }
    return rc;
}

Quaternion dunkl_kernel_imag(double chi, double x, double u, const UnitAxis& axis) {
    if (!(chi >= 0.0)) throw InvalidParam("dunkl_kernel_imag: chi must be >= 0");
    const double t = x * u;
    const double re = bessel_j_chi(chi, t);
    const double im = (t / (2.0 * chi + 2.0)) * bessel_j_chi(chi + 1.0, t);
    return Quaternion::real(re) + axis.q() * im;
}

Quaternion frac_kernel(double chi, double theta, double x, double y, const UnitAxis& axis) {
    const double t = reduce_theta(theta);
    const double s = std::sin(t);
    if (std::abs(s) < sin_floor) throw ThetaSingular(theta);
    const double cot = std::cos(t) / s;
    const Quaternion chirp = axis_exp(axis, -0.5 * (x * x + y * y) * cot);
    return chirp * dunkl_kernel_imag(chi, x, y / s, axis);
}

SampledField hermite2d(int n, int m, GridPtr grid) {
    if (n < 0 || m < 0) throw InvalidParam("hermite2d: n, m must be >= 0");
    SampledField f(std::move(grid));
    const Grid2D& g = *f.grid;
    std::vector<double> h1(g.n1()), h2(g.n2());
    for (int i = 0; i < g.n1(); ++i) h1[i] = hermite_h(n, g.rule1.chi, g.rule1.nodes[i]);
    for (int j = 0; j < g.n2(); ++j) h2[j] = hermite_h(m, g.rule2.chi, g.rule2.nodes[j]);
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) f.at(i, j) = Quaternion::real(h1[i] * h2[j]);
    return f;
}

std::vector<Quaternion> dunkl_operator_apply(std::span<const double> ygrid,
                                             std::span<const Quaternion> f, double chi,
                                             double theta, const UnitAxis& axis) {
    const int M = static_cast<int>(ygrid.size());
    if (M < 5 || static_cast<int>(f.size()) != M)
        throw GridMismatch("dunkl_operator_apply: need matching grids with >= 5 points");
    const double t = reduce_theta(theta);
    const double s = std::sin(t);
    if (std::abs(s) < sin_floor) throw ThetaSingular(theta);
    const double cot = std::cos(t) / s;

    const double h = ygrid[1] - ygrid[0];
    for (int k = 0; k < M; ++k) {
        if (std::abs(ygrid[k]) < 1e-12) throw GridContainsZero();
        // symmetric grid: node k mirrors to node M-1-k
        if (std::abs(ygrid[k] + ygrid[M - 1 - k]) > 1e-9) throw GridContainsZero();
        if (k > 0 && std::abs((ygrid[k] - ygrid[k - 1]) - h) > 1e-9 * std::max(1.0, std::abs(h)))
            throw GridMismatch("dunkl_operator_apply: grid must be uniform");
    }

    std::vector<Quaternion> out(M);
    auto deriv = [&](int k) -> Quaternion {
        if (k >= 2 && k <= M - 3) {
            return (f[k - 2] - 8.0 * f[k - 1] + 8.0 * f[k + 1] - f[k + 2]) * (1.0 / (12.0 * h));
        }
        // 4th-order one-sided stencils at the boundary
        if (k <= 1) {
            const int b = k;
            return (-25.0 * f[b] + 48.0 * f[b + 1] - 36.0 * f[b + 2] + 16.0 * f[b + 3] -
                    3.0 * f[b + 4]) *
                   (1.0 / (12.0 * h));
        }
        const int b = k;
        return (25.0 * f[b] - 48.0 * f[b - 1] + 36.0 * f[b - 2] - 16.0 * f[b - 3] +
                3.0 * f[b - 4]) *
               (1.0 / (12.0 * h));
    };

    for (int k = 0; k < M; ++k) {
        const double y = ygrid[k];
        const Quaternion diff = (f[k] - f[M - 1 - k]) * (0.5 * (2.0 * chi + 1.0) / y);
        const Quaternion chirp = axis.q() * (cot * y) * f[k];
        out[k] = deriv(k) + diff + chirp;
    }
    return out;
}

} // namespace qdunkl
