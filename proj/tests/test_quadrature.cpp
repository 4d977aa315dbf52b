#include <doctest.h>

#include <cmath>

#include "qdunkl/basis.hpp"
#include "qdunkl/errors.hpp"
#include "qdunkl/quadrature.hpp"

using namespace qdunkl;

TEST_SUITE("quadrature") {

TEST_CASE("total mass Gamma(chi+1)") {
    for (double chi : {0.0, 0.3, 0.5, 1.0, 2.5}) {
        const auto rule = build_rule(chi, 16);
        double mass = 0.0;
        for (double w : rule.weights) mass += w;
        CHECK(mass == doctest::Approx(std::tgamma(chi + 1.0)).epsilon(1e-12));
    }
}

TEST_CASE("even moments are exact") {
    // sum w x^{2k} = Gamma(k + chi + 1) for 2k <= 2N - 2
    for (double chi : {0.0, 0.7, 1.8}) {
        const auto rule = build_rule(chi, 24);
        for (int k = 0; k <= 20; ++k) {
            double s = 0.0;
            for (int i = 0; i < rule.size(); ++i)
                s += rule.weights[i] * std::pow(rule.nodes[i], 2 * k);
            CHECK(s == doctest::Approx(std::tgamma(k + chi + 1.0)).epsilon(1e-11));
        }
    }
}

TEST_CASE("odd moments vanish and nodes are symmetric") {
    const auto rule = build_rule(0.6, 32);
    const int N = rule.size();
    for (int i = 0; i < N; ++i) {
        CHECK(rule.nodes[i] == doctest::Approx(-rule.nodes[N - 1 - i]).epsilon(1e-13));
        CHECK(rule.weights[i] == doctest::Approx(rule.weights[N - 1 - i]).epsilon(1e-12));
        CHECK(rule.weights[i] > 0.0);
        CHECK(rule.bare_weights[i] ==
              doctest::Approx(rule.weights[i] * std::exp(rule.nodes[i] * rule.nodes[i]))
                  .epsilon(1e-13));
    }
    double s = 0.0;
    for (int i = 0; i < N; ++i) s += rule.weights[i] * std::pow(rule.nodes[i], 3);
    CHECK(std::abs(s) < 1e-12);
}

TEST_CASE("bare weights integrate sampled Gaussian-class fields") {
    // int x^2 e^{-x^2} |x|^{2 chi + 1} dx = Gamma(chi + 2) via bare weights on
    // the damped samples
    const double chi = 0.9;
    const auto rule = build_rule(chi, 48);
    double s = 0.0;
    for (int i = 0; i < rule.size(); ++i) {
        const double x = rule.nodes[i];
        s += rule.bare_weights[i] * x * x * std::exp(-x * x);
    }
    CHECK(s == doctest::Approx(std::tgamma(chi + 2.0)).epsilon(1e-11));
}

TEST_CASE("build_rule argument validation") {
    CHECK_THROWS_AS((void)build_rule(-0.1, 16), InvalidParam);
    CHECK_THROWS_AS((void)build_rule(0.5, 15), InvalidParam);
    CHECK_THROWS_AS((void)build_rule(0.5, 0), InvalidParam);
}

TEST_CASE("tensor basis orthonormality on the grid") {
    const auto grid = make_grid(0.5, 1.0, 32);
    const int nmax = 8;
    for (int n = 0; n <= nmax; ++n)
        for (int m = 0; m <= nmax; ++m)
            for (int np = 0; np <= nmax; ++np)
                for (int mp = 0; mp <= nmax; ++mp) {
                    const Quaternion g =
                        inner_product(hermite2d(n, m, grid), hermite2d(np, mp, grid));
                    const double expect = (n == np && m == mp) ? 1.0 : 0.0;
                    CHECK(std::abs(g.w - expect) < 1e-9);
                    CHECK(g.im().norm() < 1e-12);
                }
}

TEST_CASE("inner_product order and conjugate symmetry") {
    const auto grid = make_grid(0.3, 0.8, 24);
    SampledField f(grid), g(grid);
    for (int i = 0; i < grid->n1(); ++i)
        for (int j = 0; j < grid->n2(); ++j) {
            const double x1 = grid->rule1.nodes[i], x2 = grid->rule2.nodes[j];
            const double env = std::exp(-0.5 * (x1 * x1 + x2 * x2));
            f.at(i, j) = Quaternion{env, 0.3 * env, 0.0, -x1 * env};
            g.at(i, j) = Quaternion{x2 * env, 0.0, env, 0.1 * env};
        }
    const Quaternion fg = inner_product(f, g);
    const Quaternion gf = inner_product(g, f);
    CHECK((fg - gf.conj()).norm() < 1e-13);
    const Quaternion ff = inner_product(f, f);
    CHECK(ff.w > 0.0);
    CHECK(ff.im().norm() < 1e-13 * ff.w);
}

TEST_CASE("norm2 values") {
    const double chi1 = 0.5, chi2 = 1.0;
    const auto grid = make_grid(chi1, chi2, 32);
    CHECK(norm2(hermite2d(0, 0, grid)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(norm2(hermite2d(3, 2, grid)) == doctest::Approx(1.0).epsilon(1e-10));
    SampledField zero(grid);
    CHECK(norm2(zero) == doctest::Approx(0.0));
    // C e^{-|x|^2/2} with |C| = sqrt(2): ||f|| = sqrt(2 Gamma(chi1+1) Gamma(chi2+1))
    SampledField f(grid);
    const Quaternion C{1.0, 0.0, 1.0, 0.0};
    for (int i = 0; i < grid->n1(); ++i)
        for (int j = 0; j < grid->n2(); ++j) {
            const double x1 = grid->rule1.nodes[i], x2 = grid->rule2.nodes[j];
            f.at(i, j) = C * std::exp(-0.5 * (x1 * x1 + x2 * x2));
        }
    const double expect = std::sqrt(2.0 * std::tgamma(chi1 + 1.0) * std::tgamma(chi2 + 1.0));
    CHECK(norm2(f) == doctest::Approx(expect).epsilon(1e-12));
    CHECK(norm1(f) > 0.0);
}

TEST_CASE("same_grid and grid mismatch detection") {
    const auto g1 = make_grid(0.5, 1.0, 24);
    const auto g2 = make_grid(0.5, 1.0, 24);
    const auto g3 = make_grid(0.6, 1.0, 24);
    CHECK(same_grid(SampledField(g1), SampledField(g2)));
    CHECK(!same_grid(SampledField(g1), SampledField(g3)));
    CHECK_THROWS_AS((void)inner_product(SampledField(g1), SampledField(g3)), GridMismatch);
}

} // TEST_SUITE
