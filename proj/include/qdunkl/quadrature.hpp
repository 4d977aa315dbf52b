#pragma once

#include <memory>
#include <span>
#include <vector>

#include "qdunkl/quaternion.hpp"

namespace qdunkl {

// Generalized Gauss-Hermite rule for the weight |x|^{2 chi + 1} e^{-x^2}.
//
// Two weight vectors are kept:
//   weights       (damped) : sum_i weights[i] psi(x_i) ~ int psi(x) e^{-x^2} |x|^{2chi+1} dx
//   bare_weights           : weights[i] e^{+x_i^2};
//                            sum_i bare_weights[i] g(x_i) ~ int g(x) |x|^{2chi+1} dx
//                            for g in the Gaussian-times-polynomial class.
// The bare weights are what sampled fields (which carry their own e^{-x^2/2}
// envelopes) are integrated with; the damped weights are used when the caller
// can supply the analytically undamped integrand.
struct QuadratureRule1D {
    double chi = 0.0;
    int degree = 0;
    std::vector<double> nodes;        // ascending, symmetric about 0
    std::vector<double> weights;      // damped
    std::vector<double> bare_weights; // weights * exp(node^2)

    int size() const { return static_cast<int>(nodes.size()); }
};

// Public constructor: chi >= 0, N even and >= 2.
QuadratureRule1D build_rule(double chi, int N);

namespace detail {
// Internal constructor allowing any chi > -1 (used by the Hankel rules).
QuadratureRule1D generalized_hermite_rule(double chi, int N);
} // namespace detail

// Tensor-product grid discretizing d mu_{chi1,chi2}.
struct Grid2D {
    QuadratureRule1D rule1;
    QuadratureRule1D rule2;

    int n1() const { return rule1.size(); }
    int n2() const { return rule2.size(); }
};

using GridPtr = std::shared_ptr<const Grid2D>;

GridPtr make_grid(double chi1, double chi2, int N1, int N2);
inline GridPtr make_grid(double chi1, double chi2, int N) { return make_grid(chi1, chi2, N, N); }

// Quaternion-valued function tabulated on the grid, row-major in (i, j) with
// i indexing rule1.nodes and j indexing rule2.nodes.
struct SampledField {
    GridPtr grid;
    std::vector<Quaternion> values;

    SampledField() = default;
    explicit SampledField(GridPtr g)
        : grid(std::move(g)), values(static_cast<std::size_t>(grid->n1()) * grid->n2()) {}

    Quaternion& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid->n2() + j]; }
    const Quaternion& at(int i, int j) const {
        return values[static_cast<std::size_t>(i) * grid->n2() + j];
    }
};

// True when the two fields live on grids with identical parameters and nodes.
bool same_grid(const SampledField& f, const SampledField& g);

// <f, g> = sum f(i,j) conj(g(i,j)) w1_i w2_j (order f * g_bar), with the bare
// weights so that sampled Gaussian-class fields integrate against
// |x1|^{2chi1+1} |x2|^{2chi2+1} dx.
Quaternion inner_product(const SampledField& f, const SampledField& g);

// L2 norm sqrt(Re <f,f>); throws NumericalError if the imaginary residue of
// <f,f> exceeds 1e-12 * ||f||^2 (a broken kernel-ordering detector).
double norm2(const SampledField& f);

// L1 norm: sum |f|_H w1 w2.
double norm1(const SampledField& f);

} // namespace qdunkl
