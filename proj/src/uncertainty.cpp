#include "qdunkl/uncertainty.hpp"

#include <cmath>

#include "qdunkl/basis.hpp"
#include "qdunkl/errors.hpp"

namespace qdunkl {

double weighted_moment(const SampledField& f, double p) {
    if (!(p >= 1.0)) throw InvalidParam("weighted_moment: p must be >= 1");
    const Grid2D& g = *f.grid;
    double acc = 0.0;
    for (int i = 0; i < g.n1(); ++i) {
        const double x1 = g.rule1.nodes[i];
        const double w1 = g.rule1.bare_weights[i];
        double row = 0.0;
        for (int j = 0; j < g.n2(); ++j) {
            const double x2 = g.rule2.nodes[j];
            const double r2 = x1 * x1 + x2 * x2;
            row += std::pow(r2, p) * f.at(i, j).norm_sq() * g.rule2.bare_weights[j];
        }
        acc += row * w1;
    }
    return acc;
}

DiagonalCoeffs diagonal_coeffs(double p, double chi1, double chi2, int nmax, int mmax,
                               int quad_N) {
    if (!(p >= 1.0)) throw InvalidParam("diagonal_coeffs: p must be >= 1");
    if (nmax < 0 || mmax < 0) throw InvalidParam("diagonal_coeffs: nmax, mmax must be >= 0");
    const QuadratureRule1D r1 = build_rule(chi1, quad_N);
    const QuadratureRule1D r2 = build_rule(chi2, quad_N);

    std::vector<std::vector<double>> h1(nmax + 1, std::vector<double>(r1.size()));
    std::vector<std::vector<double>> h2(mmax + 1, std::vector<double>(r2.size()));
    for (int n = 0; n <= nmax; ++n)
        for (int i = 0; i < r1.size(); ++i) h1[n][i] = hermite_h(n, chi1, r1.nodes[i]);
    for (int m = 0; m <= mmax; ++m)
        for (int j = 0; j < r2.size(); ++j) h2[m][j] = hermite_h(m, chi2, r2.nodes[j]);

    DiagonalCoeffs dc;
    dc.p = p;
    dc.nmax = nmax;
    dc.mmax = mmax;
    dc.table.resize(static_cast<std::size_t>(nmax + 1) * (mmax + 1));
    double best = 0.0;
    for (int n = 0; n <= nmax; ++n) {
        for (int m = 0; m <= mmax; ++m) {
            double acc = 0.0;
            for (int i = 0; i < r1.size(); ++i) {
                const double x1 = r1.nodes[i];
                const double w1 = h1[n][i] * h1[n][i] * r1.bare_weights[i];
                double row = 0.0;
                for (int j = 0; j < r2.size(); ++j) {
                    const double x2 = r2.nodes[j];
                    row += std::pow(x1 * x1 + x2 * x2, p) * h2[m][j] * h2[m][j] *
                           r2.bare_weights[j];
                }
                acc += row * w1;
            }
            dc.table[static_cast<std::size_t>(n) * (mmax + 1) + m] = acc;
            if ((n == 0 && m == 0) || acc < best) {
                best = acc;
                dc.argmin_n = n;
                dc.argmin_m = m;
            }
        }
    }
    dc.amin = best;
    if ((dc.argmin_n == nmax && nmax > 0) || (dc.argmin_m == mmax && mmax > 0))
        throw TruncationSuspect("diagonal_coeffs: argmin on the truncation boundary at (n,m) = (" +
                                std::to_string(dc.argmin_n) + "," + std::to_string(dc.argmin_m) +
                                ")");
    return dc;
}

json MomentReport::to_json() const {
    json j;
    j["check"] = "heisenberg";
    j["params"] = params;
    j["p"] = p;
    j["spatial_moment"] = spatial_moment;
    j["spectral_moment"] = spectral_moment;
    j["norm4"] = norm4;
    j["sharp_constant"] = sharp_constant;
    j["ratio"] = ratio;
    j["pass"] = pass;
    return j;
}

MomentReport heisenberg_check(const SampledField& f, const TransformSpec& spec, double p,
                              const HeisenbergOptions& opts) {
    if (!(p >= 1.0)) throw InvalidParam("heisenberg_check: p must be >= 1");
    const double nf = norm2(f);
    if (nf == 0.0) throw ZeroFunction();

    MomentReport rep;
    rep.p = p;
    rep.spatial_moment = weighted_moment(f, p);
    const SampledField Ff = frqdt_quadrature(f, spec, opts.threads);
    rep.spectral_moment = weighted_moment(Ff, p);
    rep.norm4 = nf * nf * nf * nf;

    if (p == 1.0) {
        const double c = (2.0 * spec.chi1 + 1.0) + (2.0 * spec.chi2 + 1.0);
        rep.sharp_constant = c * c;
    } else {
        const DiagonalCoeffs dc = diagonal_coeffs(p, spec.chi1, spec.chi2, opts.table_nmax,
                                                  opts.table_nmax, opts.table_quad_N);
        rep.sharp_constant = dc.amin * dc.amin;
        rep.params["table_nmax"] = opts.table_nmax;
        rep.params["table_argmin"] = {dc.argmin_n, dc.argmin_m};
    }

    rep.ratio = rep.spatial_moment * rep.spectral_moment / (rep.sharp_constant * rep.norm4);
    rep.pass = rep.ratio >= 1.0 - opts.tolerance;
    rep.params["chi"] = {spec.chi1, spec.chi2};
    rep.params["theta"] = {spec.theta1, spec.theta2};
    rep.params["tolerance"] = opts.tolerance;
    return rep;
}

MomentReport frqft_corollary_check(const SampledField& f, double theta1, double theta2,
                                   const HeisenbergOptions& opts) {
    if (!f.grid) throw GridMismatch("frqft_corollary_check: field has no grid");
    if (f.grid->rule1.chi != 0.0 || f.grid->rule2.chi != 0.0)
        throw GridMismatch("frqft_corollary_check: field must live on a chi = (0, 0) grid");
    TransformSpec spec;
    spec.chi1 = 0.0;
    spec.chi2 = 0.0;
    spec.theta1 = theta1;
    spec.theta2 = theta2;
    spec.a = UnitAxis::i();
    spec.b = UnitAxis::j();
    MomentReport rep = heisenberg_check(f, spec, 1.0, opts);
    rep.params["corollary"] = "frqft";
    rep.params["constant_is_4"] = (rep.sharp_constant == 4.0);
    rep.params["measure_caveat"] =
        "evaluated in the d mu_{0,0} = |x1 x2| dx1 dx2 setting, not plain Lebesgue measure";
    return rep;
}

} // namespace qdunkl
