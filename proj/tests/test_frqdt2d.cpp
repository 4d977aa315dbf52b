#include <doctest.h>

#include <cmath>

#include "qdunkl/frqdt2d.hpp"
#include "qdunkl/random_field.hpp"

using namespace qdunkl;

namespace {

SampledField field_diff(const SampledField& f, const SampledField& g) {
    SampledField d(f.grid);
    for (std::size_t k = 0; k < d.values.size(); ++k) d.values[k] = f.values[k] - g.values[k];
    return d;
}

SampledField sampled_gaussian(GridPtr grid, const Quaternion& C, double alpha = 0.5) {
    SampledField f(std::move(grid));
    const Grid2D& g = *f.grid;
    for (int i = 0; i < g.n1(); ++i)
        for (int j = 0; j < g.n2(); ++j) {
            const double x1 = g.rule1.nodes[i], x2 = g.rule2.nodes[j];
            f.at(i, j) = C * std::exp(-alpha * (x1 * x1 + x2 * x2));
        }
    return f;
}

} // namespace

TEST_SUITE("frqdt2d") {

TEST_CASE("analyze picks out tensor basis coefficients") {
    const auto grid = make_grid(0.5, 1.0, 48);
    const auto f = hermite2d(2, 3, grid);
    const auto c = analyze(f, 6, 6);
    for (int n = 0; n <= 6; ++n)
        for (int m = 0; m <= 6; ++m) {
            const double expect = (n == 2 && m == 3) ? 1.0 : 0.0;
            CHECK((c.at(n, m) - Quaternion::real(expect)).norm() < 1e-10);
        }
}

TEST_CASE("analyze of a quaternionic ground state") {
    const double chi1 = 0.5, chi2 = 1.0;
    const auto grid = make_grid(chi1, chi2, 48);
    const Quaternion C{1.0, 1.0, 0.0, 0.0};
    const auto f = sampled_gaussian(grid, C);
    const auto c = analyze(f, 2, 2);
    const double scale = std::sqrt(std::tgamma(chi1 + 1.0) * std::tgamma(chi2 + 1.0));
    CHECK((c.at(0, 0) - C * scale).norm() < 1e-10);
    CHECK(c.at(1, 0).norm() < 1e-10);
    CHECK(c.at(0, 1).norm() < 1e-10);
}

TEST_CASE("analyze / synthesize round trip") {
    const auto grid = make_grid(0.5, 1.0, 48);
    const auto f = random_band_limited(grid, 8, 8, 12345);
    const auto back = synthesize(analyze(f, 8, 8), grid);
    CHECK(norm2(field_diff(f, back)) < 1e-9 * norm2(f));
    CHECK_THROWS_AS((void)analyze(f, 45, 45), TruncationTooHigh);
}

TEST_CASE("spectral action: two-sided eigenvalues") {
    SpectralCoeffs c(2, 2);
    c.at(1, 1) = Quaternion::unit_j();
    TransformSpec spec;
    spec.chi1 = 0.5;
    spec.chi2 = 1.0;
    spec.theta1 = M_PI / 2.0;
    spec.theta2 = 0.7;
    const auto out = frqdt_spectral(c, spec);
    // e^{i pi/2} j e^{j 0.7} = k e^{j 0.7}
    const Quaternion expect = qmul(Quaternion::unit_k(), axis_exp(UnitAxis::j(), 0.7));
    CHECK((out.at(1, 1) - expect).norm() < 1e-14);
    CHECK(out.at(0, 0).norm() == 0.0);
    // theta = 0 is the identity on coefficients
    TransformSpec id;
    id.chi1 = 0.5;
    id.chi2 = 1.0;
    const auto out2 = frqdt_spectral(c, id);
    CHECK((out2.at(1, 1) - c.at(1, 1)).norm() < 1e-15);
}

TEST_CASE("quadrature path: tensor Hermite eigenfunctions") {
    TransformSpec spec;
    spec.chi1 = 0.5;
    spec.chi2 = 1.0;
    spec.theta1 = M_PI / 3.0;
    spec.theta2 = 2.0 * M_PI / 5.0;
    const auto grid = make_grid(spec.chi1, spec.chi2, 96);
    for (int n : {0, 1, 3}) {
        for (int m : {0, 2}) {
            const auto H = hermite2d(n, m, grid);
            const auto FH = frqdt_quadrature(H, spec);
            const Quaternion ev = qmul(axis_exp(spec.a, n * spec.theta1),
                                       axis_exp(spec.b, m * spec.theta2));
            SampledField expect(grid);
            for (std::size_t k = 0; k < expect.values.size(); ++k)
                expect.values[k] = ev * H.values[k].w;
            CHECK(norm2(field_diff(FH, expect)) < 1e-7);
        }
    }
}

TEST_CASE("quadrature path matches spectral path on random band-limited fields") {
    TransformSpec spec;
    spec.chi1 = 0.5;
    spec.chi2 = 1.0;
    spec.theta1 = 1.1;
    spec.theta2 = 0.97;
    const auto grid = make_grid(spec.chi1, spec.chi2, 96);
    for (std::uint64_t seed : {7ull, 8ull}) {
        const auto f = random_band_limited(grid, 6, 6, seed);
        const auto quad = frqdt_quadrature(f, spec);
        const auto spectral = frqdt_via_spectral(f, spec, 6, 6);
        CHECK(norm2(field_diff(quad, spectral)) < 1e-7 * norm2(f));
    }
}

TEST_CASE("Plancherel and inversion") {
    TransformSpec spec;
    spec.chi1 = 0.5;
    spec.chi2 = 1.0;
    spec.theta1 = M_PI / 3.0;
    spec.theta2 = 2.0 * M_PI / 5.0;
    const auto grid = make_grid(spec.chi1, spec.chi2, 96);
    const auto f = random_band_limited(grid, 6, 6, 2024);
    const auto Ff = frqdt_quadrature(f, spec);
    CHECK(norm2(Ff) == doctest::Approx(norm2(f)).epsilon(1e-8));
    const auto back = inverse_frqdt(Ff, spec);
    CHECK(norm2(field_diff(back, f)) < 1e-7 * norm2(f));
}

TEST_CASE("grid / spec chi mismatch is rejected") {
    TransformSpec spec;
    spec.chi1 = 0.5;
    spec.chi2 = 1.0;
    spec.theta1 = 1.0;
    spec.theta2 = 1.0;
    const auto wrong = make_grid(0.6, 1.0, 32);
    CHECK_THROWS_AS((void)frqdt_quadrature(SampledField(wrong), spec), GridMismatch);
}

TEST_CASE("singular angles route to identity / reflection") {
    TransformSpec spec;
    spec.chi1 = 0.5;
    spec.chi2 = 1.0;
    spec.theta1 = 0.0;
    spec.theta2 = M_PI;
    const auto grid = make_grid(spec.chi1, spec.chi2, 32);
    const auto f = random_band_limited(grid, 4, 4, 77);
    const auto out = frqdt_quadrature(f, spec);
    const int n2 = grid->n2();
    double maxres = 0.0;
    for (int i = 0; i < grid->n1(); ++i)
        for (int j = 0; j < n2; ++j)
            maxres = std::max(maxres, (out.at(i, j) - f.at(i, n2 - 1 - j)).norm());
    CHECK(maxres < 1e-12);
}

TEST_CASE("two-pi periodicity in each angle") {
    TransformSpec s1;
    s1.chi1 = 0.5;
    s1.chi2 = 1.0;
    s1.theta1 = 1.0;
    s1.theta2 = 0.8;
    TransformSpec s2 = s1;
    s2.theta1 += 2.0 * M_PI;
    s2.theta2 -= 2.0 * M_PI;
    const auto grid = make_grid(0.5, 1.0, 64);
    const auto f = random_band_limited(grid, 4, 4, 31);
    const auto o1 = frqdt_quadrature(f, s1);
    const auto o2 = frqdt_quadrature(f, s2);
    CHECK(norm2(field_diff(o1, o2)) < 1e-9 * norm2(f));
}

TEST_CASE("order of the two kernels matters for quaternionic data") {
    // f = j H_{1,0}, a = i, theta1 = pi/2: the left eigenvalue acts as
    // i j = k on the coefficient; right placement would give j i = -k.
    TransformSpec spec;
    spec.chi1 = 0.5;
    spec.chi2 = 1.0;
    spec.theta1 = M_PI / 2.0;
    spec.theta2 = 1.0;
    const auto grid = make_grid(spec.chi1, spec.chi2, 96);
    const auto H = hermite2d(1, 0, grid);
    SampledField f(grid);
    for (std::size_t k = 0; k < f.values.size(); ++k)
        f.values[k] = Quaternion::unit_j() * H.values[k].w;
    const auto out = frqdt_quadrature(f, spec);
    SampledField correct(grid), wrong(grid);
    const Quaternion lv = qmul(axis_exp(spec.a, spec.theta1), Quaternion::unit_j()); // k
    const Quaternion wv = qmul(Quaternion::unit_j(), axis_exp(spec.a, spec.theta1)); // -k
    for (std::size_t k = 0; k < f.values.size(); ++k) {
        correct.values[k] = lv * H.values[k].w;
        wrong.values[k] = wv * H.values[k].w;
    }
    CHECK(norm2(field_diff(out, correct)) < 1e-7);
    CHECK(norm2(field_diff(out, wrong)) > 1e-3);
}

TEST_CASE("Gaussian closed form matches the quadrature transform") {
    TransformSpec spec;
    spec.chi1 = 0.5;
    spec.chi2 = 1.0;
    spec.theta1 = M_PI / 3.0;
    spec.theta2 = 2.0 * M_PI / 5.0;
    const auto grid = make_grid(spec.chi1, spec.chi2, 96);
    for (double alpha : {0.5, 0.8}) {
        const auto f = sampled_gaussian(grid, Quaternion::real(1.0), alpha);
        const auto Ff = frqdt_quadrature(f, spec);
        const auto closed = gaussian_closed_form_2d(alpha, spec, grid);
        CHECK(norm2(field_diff(Ff, closed)) < 1e-8 * norm2(f));
    }
    CHECK_THROWS_AS((void)gaussian_closed_form_2d(-0.5, spec, grid), InvalidParam);
    TransformSpec bad = spec;
    bad.theta1 = -1.0;
    CHECK_THROWS_AS((void)gaussian_closed_form_2d(0.5, bad, grid), InvalidParam);
}

TEST_CASE("composition check and its singular-angle guard") {
    TransformSpec s1;
    s1.chi1 = 0.5;
    s1.chi2 = 1.0;
    s1.theta1 = 1.0;
    s1.theta2 = 0.98;
    TransformSpec s2 = s1;
    s2.theta1 = 1.04;
    s2.theta2 = 1.02;
    const auto grid = make_grid(0.5, 1.0, 96);
    const auto f = random_band_limited(grid, 6, 6, 404);
    const auto rep = compose_check(f, s1, s2, 1e-6);
    CHECK(rep.pass);
    CHECK(rep.residual < 1e-6);
    // beta = -theta would reduce to inversion but hits the singular-sum guard
    CHECK_THROWS_AS((void)compose_check(f, s1, s1.inverse(), 1e-6), ThetaSingular);
    SampledField zero(grid);
    CHECK_THROWS_AS((void)compose_check(zero, s1, s2, 1e-6), ZeroFunction);
}

TEST_CASE("Bochner factorization for low bidegrees") {
    TransformSpec spec;
    spec.chi1 = 0.5;
    spec.chi2 = 1.0;
    spec.theta1 = M_PI / 3.0;
    spec.theta2 = 2.0 * M_PI / 5.0;
    const auto grid = make_grid(spec.chi1, spec.chi2, 96);
    auto psi = [](double r) { return std::exp(-0.7 * r * r); };
    for (int r1 : {0, 1}) {
        for (int r2 : {0, 1}) {
            const auto rep =
                bochner_check(r1, r2, Quaternion{1.0, 0.0, 0.5, 0.0}, psi, psi, spec, grid, 1e-6);
            CHECK(rep.pass);
        }
    }
    CHECK_THROWS_AS((void)bochner_check(2, 0, Quaternion::real(1.0), psi, psi, spec, grid),
                    UnsupportedDegree);
}

TEST_CASE("sup bound report") {
    TransformSpec spec;
    spec.chi1 = 0.5;
    spec.chi2 = 1.0;
    spec.theta1 = 1.2;
    spec.theta2 = 1.0;
    const auto grid = make_grid(spec.chi1, spec.chi2, 96);
    const auto f = sampled_gaussian(grid, Quaternion{0.6, 0.0, 0.8, 0.0}, 0.8);
    const auto rep = sup_bound_check(f, spec);
    CHECK(rep.pass);
    CHECK(rep.residual <= 1.0 + 1e-9);
}

} // TEST_SUITE
