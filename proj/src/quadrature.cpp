#include "qdunkl/quadrature.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "qdunkl/errors.hpp"

namespace qdunkl {

namespace detail {

// Jacobi-matrix coefficients for the monic generalized Hermite polynomials
// orthogonal w.r.t. |x|^{2 chi + 1} e^{-x^2}: a_n = 0 (symmetry) and
//   b_n = n/2          (n even),
//   b_n = n/2 + mu     (n odd),   mu = chi + 1/2.
// Nodes are the eigenvalues of the symmetric tridiagonal matrix with
// off-diagonal sqrt(b_n).  Weights come from the Christoffel function
//   w_i = 1 / sum_{n<N} phi_n(x_i)^2
// evaluated with the *damped* orthonormal polynomials phi_n(x) = p_n(x)
// e^{-x^2/2} / ||p_n||, which stay O(1) across the whole node range; this is
// stable at large N where eigenvector-based weights lose all accuracy once
// multiplied by e^{+x^2}.
QuadratureRule1D generalized_hermite_rule(double chi, int N) {
    if (!(chi > -1.0)) throw InvalidParam("quadrature: chi must be > -1");
    if (N < 2) throw InvalidParam("quadrature: N must be >= 2");

    const double mu = chi + 0.5;
    std::vector<double> b(N); // b[0] unused
    for (int n = 1; n < N; ++n) b[n] = (n % 2 == 0) ? 0.5 * n : 0.5 * n + mu;

    Eigen::VectorXd diag = Eigen::VectorXd::Zero(N);
    Eigen::VectorXd sub(N - 1);
    for (int n = 1; n < N; ++n) sub[n - 1] = std::sqrt(b[n]);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    Eigen::VectorXd x = solver.eigenvalues();

    QuadratureRule1D rule;
    rule.chi = chi;
    rule.degree = N;
    rule.nodes.assign(x.data(), x.data() + N);
    std::sort(rule.nodes.begin(), rule.nodes.end());

    const double lognorm0 = 0.5 * std::lgamma(chi + 1.0);
    rule.weights.resize(N);
    rule.bare_weights.resize(N);
    for (int i = 0; i < N; ++i) {
        const double xi = rule.nodes[i];
        double pm = 0.0;
        double pc = std::exp(-0.5 * xi * xi - lognorm0); // phi_0
        double s = pc * pc;
        for (int n = 1; n < N; ++n) {
            const double pn = (xi * pc - (n >= 2 ? std::sqrt(b[n - 1]) : 0.0) * pm) / std::sqrt(b[n]);
            s += pn * pn;
            pm = pc;
            pc = pn;
        }
        const double bare = 1.0 / s;
        rule.bare_weights[i] = bare;
        rule.weights[i] = bare * std::exp(-xi * xi);
    }
    return rule;
}

} // namespace detail

QuadratureRule1D build_rule(double chi, int N) {
    if (!(chi >= 0.0)) throw InvalidParam("build_rule: chi must be >= 0");
    if (N < 2 || N % 2 != 0) throw InvalidParam("build_rule: N must be even and >= 2");
    return detail::generalized_hermite_rule(chi, N);
}

GridPtr make_grid(double chi1, double chi2, int N1, int N2) {
    auto grid = std::make_shared<Grid2D>();
    grid->rule1 = build_rule(chi1, N1);
    grid->rule2 = build_rule(chi2, N2);
    return grid;
}

bool same_grid(const SampledField& f, const SampledField& g) {
    if (!f.grid || !g.grid) return false;
    if (f.grid == g.grid) return true;
    const Grid2D& a = *f.grid;
    const Grid2D& b = *g.grid;
    return a.rule1.chi == b.rule1.chi && a.rule2.chi == b.rule2.chi &&
           a.rule1.nodes == b.rule1.nodes && a.rule2.nodes == b.rule2.nodes;
}

Quaternion inner_product(const SampledField& f, const SampledField& g) {
    if (!same_grid(f, g)) throw GridMismatch("inner_product requires identical grids");
    const Grid2D& grid = *f.grid;
    Quaternion acc;
    for (int i = 0; i < grid.n1(); ++i) {
        const double w1 = grid.rule1.bare_weights[i];
        Quaternion row;
        for (int j = 0; j < grid.n2(); ++j) {
            row += (f.at(i, j) * g.at(i, j).conj()) * grid.rule2.bare_weights[j];
        }
        acc += row * w1;
    }
    return acc;
}

double norm2(const SampledField& f) {
    const Quaternion ip = inner_product(f, f);
    const double imag = ip.im().norm();
    if (imag > 1e-12 * std::abs(ip.w) && imag > 1e-300) {
        throw NumericalError("<f,f> has a non-negligible imaginary part: " + std::to_string(imag));
    }
    return std::sqrt(std::max(ip.w, 0.0));
}

double norm1(const SampledField& f) {
    const Grid2D& grid = *f.grid;
    double acc = 0.0;
    for (int i = 0; i < grid.n1(); ++i) {
        const double w1 = grid.rule1.bare_weights[i];
        double row = 0.0;
        for (int j = 0; j < grid.n2(); ++j) row += f.at(i, j).norm() * grid.rule2.bare_weights[j];
        acc += row * w1;
    }
    return acc;
}

} // namespace qdunkl
