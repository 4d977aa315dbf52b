#include "qdunkl/frqdt2d.hpp"

#include <cmath>
#include <numbers>

#include "qdunkl/errors.hpp"
#include "qdunkl/threading.hpp"

namespace qdunkl {

namespace {

constexpr double pi = std::numbers::pi;

std::vector<double> basis_table(int order, double chi, const std::vector<double>& nodes) {
    std::vector<double> h(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) h[i] = hermite_h(order, chi, nodes[i]);
    return h;
}

// Kernel matrix K[i * n + t] = frac_kernel(chi, theta, nodes[i], nodes[t]).
std::vector<Quaternion> kernel_matrix(double chi, double theta, const UnitAxis& axis,
                                      const std::vector<double>& nodes, int threads) {
    const int n = static_cast<int>(nodes.size());
    std::vector<Quaternion> K(static_cast<std::size_t>(n) * n);
    parallel_for(n, threads, [&](int i) {
        for (int t = 0; t < n; ++t)
            K[static_cast<std::size_t>(i) * n + t] = frac_kernel(chi, theta, nodes[i], nodes[t], axis);
    });
    return K;
}

// For singular angles: permutation of node indices (identity or mirror).
bool singular_is_reflection(double theta) {
    return std::lround(theta / pi) % 2 != 0;
}

} // namespace

SpectralCoeffs analyze(const SampledField& f, int nmax, int mmax) {
    if (!f.grid) throw GridMismatch("analyze: field has no grid");
    const Grid2D& g = *f.grid;
    if (g.n1() < std::max(nmax, mmax) + 8 || g.n2() < std::max(nmax, mmax) + 8)
        throw TruncationTooHigh("analyze: need grid resolution >= max(nmax, mmax) + 8");

    std::vector<std::vector<double>> h1(nmax + 1), h2(mmax + 1);
    for (int n = 0; n <= nmax; ++n) h1[n] = basis_table(n, g.rule1.chi, g.rule1.nodes);
    for (int m = 0; m <= mmax; ++m) h2[m] = basis_table(m, g.rule2.chi, g.rule2.nodes);

    SpectralCoeffs coeffs(nmax, mmax);
    // Partial sums over j first: P[n? no] -- accumulate row sums per m.
    for (int n = 0; n <= nmax; ++n) {
        for (int m = 0; m <= mmax; ++m) {
            Quaternion acc;
            for (int i = 0; i < g.n1(); ++i) {
                const double w1 = h1[n][i] * g.rule1.bare_weights[i];
                Quaternion row;
                for (int j = 0; j < g.n2(); ++j)
                    row += f.at(i, j) * (h2[m][j] * g.rule2.bare_weights[j]);
                acc += row * w1;
            }
            coeffs.at(n, m) = acc;
        }
    }
    return coeffs;
}

SampledField synthesize(const SpectralCoeffs& coeffs, GridPtr grid) {
    SampledField f(std::move(grid));
    const Grid2D& g = *f.grid;
    std::vector<std::vector<double>> h1(coeffs.nmax + 1), h2(coeffs.mmax + 1);
    for (int n = 0; n <= coeffs.nmax; ++n) h1[n] = basis_table(n, g.rule1.chi, g.rule1.nodes);
    for (int m = 0; m <= coeffs.mmax; ++m) h2[m] = basis_table(m, g.rule2.chi, g.rule2.nodes);
    for (int i = 0; i < g.n1(); ++i) {
        for (int j = 0; j < g.n2(); ++j) {
            Quaternion acc;
            for (int n = 0; n <= coeffs.nmax; ++n)
                for (int m = 0; m <= coeffs.mmax; ++m)
                    acc += coeffs.at(n, m) * (h1[n][i] * h2[m][j]);
            f.at(i, j) = acc;
        }
    }
    return f;
}

SpectralCoeffs frqdt_spectral(const SpectralCoeffs& coeffs, const TransformSpec& spec) {
    SpectralCoeffs out(coeffs.nmax, coeffs.mmax);
    for (int n = 0; n <= coeffs.nmax; ++n) {
        const Quaternion ea = axis_exp(spec.a, n * spec.theta1);
        for (int m = 0; m <= coeffs.mmax; ++m) {
            const Quaternion eb = axis_exp(spec.b, m * spec.theta2);
            out.at(n, m) = ea * coeffs.at(n, m) * eb;
        }
    }
    return out;
}

SampledField frqdt_quadrature(const SampledField& f, const TransformSpec& spec, int threads) {
    if (!f.grid) throw GridMismatch("frqdt_quadrature: field has no grid");
    const Grid2D& g = *f.grid;
    if (g.rule1.chi != spec.chi1 || g.rule2.chi != spec.chi2)
        throw GridMismatch("frqdt_quadrature: grid chi does not match spec chi");
    const int n1 = g.n1(), n2 = g.n2();
    threads = resolve_threads(threads);

    const bool sing1 = theta_is_singular(spec.theta1);
    const bool sing2 = theta_is_singular(spec.theta2);

    // Pass 1: LEFT transform in x1.  gmid(t, j) = c1 * sum_i K1(i, t) f(i, j) w1_i.
    SampledField gmid(f.grid);
    if (sing1) {
        const bool mirror = singular_is_reflection(spec.theta1);
        for (int t = 0; t < n1; ++t) {
            const int src = mirror ? n1 - 1 - t : t;
            for (int j = 0; j < n2; ++j) gmid.at(t, j) = f.at(src, j);
        }
    } else {
        const std::vector<Quaternion> K1 =
            kernel_matrix(spec.chi1, spec.theta1, spec.a, g.rule1.nodes, threads);
        const Quaternion c1 = norm_constant(spec.chi1, spec.theta1, spec.a).value;
        parallel_for(n1, threads, [&](int t) {
            for (int j = 0; j < n2; ++j) {
                Quaternion acc;
                for (int i = 0; i < n1; ++i) {
                    acc += (K1[static_cast<std::size_t>(i) * n1 + t] * f.at(i, j)) *
                           g.rule1.bare_weights[i];
                }
                gmid.at(t, j) = c1 * acc;
            }
        });
    }

    // Pass 2: RIGHT transform in x2.  out(t, u) = (sum_j gmid(t, j) K2(j, u) w2_j) * c2.
    SampledField out(f.grid);
    if (sing2) {
        const bool mirror = singular_is_reflection(spec.theta2);
        for (int t = 0; t < n1; ++t) {
            for (int u = 0; u < n2; ++u) out.at(t, u) = gmid.at(t, mirror ? n2 - 1 - u : u);
        }
    } else {
        const std::vector<Quaternion> K2 =
            kernel_matrix(spec.chi2, spec.theta2, spec.b, g.rule2.nodes, threads);
        const Quaternion c2 = norm_constant(spec.chi2, spec.theta2, spec.b).value;
        parallel_for(n1, threads, [&](int t) {
            for (int u = 0; u < n2; ++u) {
                Quaternion acc;
                for (int j = 0; j < n2; ++j) {
                    acc += (gmid.at(t, j) * K2[static_cast<std::size_t>(j) * n2 + u]) *
                           g.rule2.bare_weights[j];
                }
                out.at(t, u) = acc * c2;
            }
        });
    }
    return out;
}

SampledField frqdt_via_spectral(const SampledField& f, const TransformSpec& spec, int nmax,
                                int mmax) {
    return synthesize(frqdt_spectral(analyze(f, nmax, mmax), spec), f.grid);
}

SampledField inverse_frqdt(const SampledField& g, const TransformSpec& spec, int threads) {
    return frqdt_quadrature(g, spec.inverse(), threads);
}

SampledField gaussian_closed_form_2d(double alpha, const TransformSpec& spec, GridPtr grid) {
    if (!(alpha > 0.0)) throw InvalidParam("gaussian_closed_form_2d: alpha must be > 0");
    const double t1 = reduce_theta(spec.theta1);
    const double t2 = reduce_theta(spec.theta2);
    if (!(t1 > 0.0 && t1 < pi) || !(t2 > 0.0 && t2 < pi))
        throw InvalidParam("gaussian_closed_form_2d: requires 0 < theta_i < pi");

    SampledField out(std::move(grid));
    const Grid2D& g = *out.grid;
    std::vector<Quaternion> F1(g.n1()), F2(g.n2());
    // For even (radial-in-each-axis) functions the 1-D transform reduces
    // exactly to the fractional Hankel transform of order nu = chi.
    auto factor = [&](double chi, double theta, const UnitAxis& axis, double y) {
        return hankel_gaussian(alpha, chi, theta, axis, y);
    };
    for (int i = 0; i < g.n1(); ++i) F1[i] = factor(spec.chi1, t1, spec.a, g.rule1.nodes[i]);
    for (int j = 0; j < g.n2(); ++j) F2[j] = factor(spec.chi2, t2, spec.b, g.rule2.nodes[j]);
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) out.at(i, j) = F1[i] * F2[j];
    return out;
}

CheckReport compose_check(const SampledField& f, const TransformSpec& spec1,
                          const TransformSpec& spec2, double tolerance, int threads) {
    for (double th : {spec1.theta1, spec1.theta2, spec2.theta1, spec2.theta2,
                      spec1.theta1 + spec2.theta1, spec1.theta2 + spec2.theta2}) {
        if (theta_is_singular(th)) throw ThetaSingular(th);
    }
    TransformSpec combined = spec1;
    combined.theta1 = spec1.theta1 + spec2.theta1;
    combined.theta2 = spec1.theta2 + spec2.theta2;

    const SampledField lhs = frqdt_quadrature(frqdt_quadrature(f, spec1, threads), spec2, threads);
    const SampledField rhs = frqdt_quadrature(f, combined, threads);

    SampledField diff(f.grid);
    for (std::size_t k = 0; k < diff.values.size(); ++k)
        diff.values[k] = lhs.values[k] - rhs.values[k];
    const double nf = norm2(f);
    if (nf == 0.0) throw ZeroFunction();
    const double residual = norm2(diff) / nf;

    json params;
    params["theta"] = {spec1.theta1, spec1.theta2};
    params["beta"] = {spec2.theta1, spec2.theta2};
    params["chi"] = {spec1.chi1, spec1.chi2};
    return CheckReport::make("composition", std::move(params), residual, tolerance);
}

CheckReport bochner_check(int r1, int r2, const Quaternion& pcoeff,
                          const std::function<double(double)>& psi1,
                          const std::function<double(double)>& psi2, const TransformSpec& spec,
                          GridPtr grid, double tolerance, int threads) {
    if (r1 < 0 || r1 > 1) throw UnsupportedDegree(r1);
    if (r2 < 0 || r2 > 1) throw UnsupportedDegree(r2);
    const Grid2D& g = *grid;

    // Left-hand side: direct 2-D transform of pcoeff x1^r1 x2^r2 psi1 psi2.
    SampledField f(grid);
    for (int i = 0; i < g.n1(); ++i) {
        const double x1 = g.rule1.nodes[i];
        const double p1 = (r1 == 1) ? x1 : 1.0;
        for (int j = 0; j < g.n2(); ++j) {
            const double x2 = g.rule2.nodes[j];
            const double p2 = (r2 == 1) ? x2 : 1.0;
            f.at(i, j) = pcoeff * (p1 * p2 * psi1(std::abs(x1)) * psi2(std::abs(x2)));
        }
    }
    const SampledField lhs = frqdt_quadrature(f, spec, threads);

    // Right-hand side: shifted-order fractional Hankel transforms of the
    // radial profiles at the absolute node values.
    const double nu1 = r1 + spec.chi1;
    const double nu2 = r2 + spec.chi2;
    const int NH = std::max(96, g.n1());
    const HankelRule hr1 = make_hankel_rule(nu1, NH);
    const HankelRule hr2 = make_hankel_rule(nu2, NH);

    auto hankel_at = [](const std::function<double(double)>& psi, double nu, double theta,
                        const UnitAxis& axis, const HankelRule& hr,
                        const std::vector<double>& targets) {
        std::vector<Quaternion> samples(hr.nodes.size());
        for (std::size_t i = 0; i < hr.nodes.size(); ++i)
            samples[i] = Quaternion::real(psi(hr.nodes[i]));
        std::vector<double> abs_targets(targets.size());
        for (std::size_t k = 0; k < targets.size(); ++k) abs_targets[k] = std::abs(targets[k]);
        return frac_hankel(samples, nu, theta, axis, hr, abs_targets);
    };
    const std::vector<Quaternion> H1 =
        hankel_at(psi1, nu1, spec.theta1, spec.a, hr1, g.rule1.nodes);
    const std::vector<Quaternion> H2 =
        hankel_at(psi2, nu2, spec.theta2, spec.b, hr2, g.rule2.nodes);

    // The constant quaternion coefficient sits between the span{1,a} factors
    // (which act from the left) and the span{1,b} factors (from the right);
    // only the real scalars commute across it.
    const Quaternion ea = axis_exp(spec.a, r1 * spec.theta1);
    const Quaternion eb = axis_exp(spec.b, r2 * spec.theta2);
    SampledField rhs(grid);
    for (int t = 0; t < g.n1(); ++t) {
        const double y1 = g.rule1.nodes[t];
        const double p1 = (r1 == 1) ? y1 : 1.0;
        const Quaternion left = (ea * H1[t]) * p1;
        for (int u = 0; u < g.n2(); ++u) {
            const double y2 = g.rule2.nodes[u];
            const double p2 = (r2 == 1) ? y2 : 1.0;
            rhs.at(t, u) = left * pcoeff * (H2[u] * eb) * p2;
        }
    }

    SampledField diff(grid);
    for (std::size_t k = 0; k < diff.values.size(); ++k)
        diff.values[k] = lhs.values[k] - rhs.values[k];
    const double nf = norm2(f);
    if (nf == 0.0) throw ZeroFunction();
    const double residual = norm2(diff) / nf;

    json params;
    params["bidegree"] = {r1, r2};
    params["pcoeff"] = {pcoeff.w, pcoeff.x, pcoeff.y, pcoeff.z};
    params["chi"] = {spec.chi1, spec.chi2};
    params["theta"] = {spec.theta1, spec.theta2};
    return CheckReport::make("bochner", std::move(params), residual, tolerance);
}

CheckReport sup_bound_check(const SampledField& f, const TransformSpec& spec, int threads) {
    const SampledField Ff = frqdt_quadrature(f, spec, threads);
    double maxF = 0.0;
    for (const Quaternion& q : Ff.values) maxF = std::max(maxF, q.norm());
    const double l1 = norm1(f);

    const double s1 = std::abs(std::sin(reduce_theta(spec.theta1)));
    const double s2 = std::abs(std::sin(reduce_theta(spec.theta2)));
    const double logC = -std::lgamma(spec.chi1 + 1.0) - std::lgamma(spec.chi2 + 1.0) -
                        (spec.chi1 + spec.chi2 + 2.0) * std::log(2.0) -
                        (spec.chi1 + 1.0) * std::log(s1) - (spec.chi2 + 1.0) * std::log(s2);
    const double bound = std::exp(logC) * l1;

    json params;
    params["chi"] = {spec.chi1, spec.chi2};
    params["theta"] = {spec.theta1, spec.theta2};
    params["max_transform"] = maxF;
    params["bound"] = bound;
    const double ratio = (bound > 0.0) ? maxF / bound : (maxF > 0.0 ? 1e300 : 0.0);
    return CheckReport::make("sup_bound", std::move(params), ratio, 1.0 + 1e-9);
}

} // namespace qdunkl
