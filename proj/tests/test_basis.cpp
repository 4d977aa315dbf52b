#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "qdunkl/basis.hpp"
#include "qdunkl/errors.hpp"
#include "oracles.hpp"

using namespace qdunkl;

TEST_SUITE("basis") {

TEST_CASE("reduce_theta and singularity detection") {
    CHECK(reduce_theta(0.3) == doctest::Approx(0.3));
    CHECK(reduce_theta(0.3 + 2.0 * M_PI) == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(reduce_theta(-M_PI) == doctest::Approx(M_PI));
    CHECK(reduce_theta(7.0 * M_PI) == doctest::Approx(M_PI));
    CHECK(theta_is_singular(0.0));
    CHECK(theta_is_singular(M_PI));
    CHECK(theta_is_singular(-2.0 * M_PI + 1e-9));
    CHECK(!theta_is_singular(M_PI / 3.0));
}

TEST_CASE("hermite_h ground state and low orders") {
    const double chi = 0.7, x = 1.3;
    CHECK(hermite_h(0, chi, x) ==
          doctest::Approx(std::exp(-0.5 * x * x) / std::sqrt(std::tgamma(chi + 1.0)))
              .epsilon(1e-14));
    // h_1 = x e^{-x^2/2} / sqrt(Gamma(chi+2))
    CHECK(hermite_h(1, chi, x) ==
          doctest::Approx(x * std::exp(-0.5 * x * x) / std::sqrt(std::tgamma(chi + 2.0)))
              .epsilon(1e-14));
}

TEST_CASE("hermite_h against the Gram-Schmidt oracle") {
    for (double chi : {0.0, 0.5, 1.7}) {
        for (int n = 0; n <= 5; ++n) {
            for (double x : {-1.3, 0.4, 2.0}) {
                CHECK(hermite_h(n, chi, x) ==
                      doctest::Approx(oracles::hermite_gram_schmidt(n, chi, x))
                          .epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("hermite_h parity") {
    for (int n = 0; n <= 9; ++n) {
        const double sign = (n % 2 == 0) ? 1.0 : -1.0;
        for (double x : {0.3, 1.1, 2.7}) {
            CHECK(hermite_h(n, 0.8, -x) ==
                  doctest::Approx(sign * hermite_h(n, 0.8, x)).epsilon(1e-14));
        }
    }
}

TEST_CASE("hermite_h 1-D orthonormality under the rule") {
    const double chi = 1.2;
    const auto rule = build_rule(chi, 40);
    for (int n = 0; n <= 10; ++n)
        for (int m = 0; m <= 10; ++m) {
            double s = 0.0;
            for (int i = 0; i < rule.size(); ++i)
                s += rule.bare_weights[i] * hermite_h(n, chi, rule.nodes[i]) *
                     hermite_h(m, chi, rule.nodes[i]);
            CHECK(s == doctest::Approx(n == m ? 1.0 : 0.0).epsilon(1e-10));
        }
}

TEST_CASE("three-term recurrence identity") {
    // x^2 h_n = alpha_{n+2} h_{n+2} + beta_n h_n + alpha_n h_{n-2}
    for (double chi : {0.0, 0.6, 2.1}) {
        const auto rc = recurrence_coeffs(chi, 16);
        for (int n = 0; n <= 12; ++n) {
            for (double x = -4.0; x <= 4.0; x += 0.23) {
                const double lhs = x * x * hermite_h(n, chi, x);
                double rhs = rc.alpha[n + 2] * hermite_h(n + 2, chi, x) +
                             rc.beta[n] * hermite_h(n, chi, x);
                if (n >= 2) rhs += rc.alpha[n] * hermite_h(n - 2, chi, x);
                CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("recurrence coefficients match quadrature inner products") {
    const double chi = 0.9;
    const auto rule = build_rule(chi, 48);
    const auto rc = recurrence_coeffs(chi, 10);
    auto ip = [&](int n, int m, bool with_x2) {
        double s = 0.0;
        for (int i = 0; i < rule.size(); ++i) {
            const double x = rule.nodes[i];
            s += rule.bare_weights[i] * (with_x2 ? x * x : 1.0) * hermite_h(n, chi, x) *
                 hermite_h(m, chi, x);
        }
        return s;
    };
    CHECK(rc.alpha[0] == 0.0);
    CHECK(rc.alpha[1] == 0.0);
    CHECK(rc.beta[0] == doctest::Approx(chi + 1.0));
    for (int n = 0; n <= 8; ++n)
        CHECK(ip(n, n, true) == doctest::Approx(rc.beta[n]).epsilon(1e-11));
    for (int n = 2; n <= 8; ++n)
        CHECK(ip(n, n - 2, true) == doctest::Approx(rc.alpha[n]).epsilon(1e-11));
}

TEST_CASE("dunkl_kernel_imag values and bound") {
    const UnitAxis a = UnitAxis::i();
    CHECK((dunkl_kernel_imag(0.8, 0.0, 2.0, a) - Quaternion::real(1.0)).norm() < 1e-15);
    for (double chi : {0.0, 0.5, 1.5}) {
        for (double x = -4.0; x <= 4.0; x += 0.41) {
            for (double u = -4.0; u <= 4.0; u += 0.41) {
                CHECK(dunkl_kernel_imag(chi, x, u, a).norm() <= 1.0 + 1e-12);
            }
        }
    }
}

TEST_CASE("dunkl_kernel_imag against the integral representation") {
    const UnitAxis a = UnitAxis::i();
    for (double chi : {0.0, 0.5, 1.5}) {
        for (int ix = 0; ix < 20; ++ix) {
            for (int iu = 0; iu < 20; ++iu) {
                const double x = -3.0 + 6.0 * ix / 19.0;
                const double u = -3.0 + 6.0 * iu / 19.0;
                const Quaternion got = dunkl_kernel_imag(chi, x, u, a);
                const std::complex<double> ref = oracles::dunkl_kernel_integral(chi, x, u);
                CHECK(std::abs(axis_complex(got, a) - ref) < 1e-10);
                // lies in span{1, axis}
                CHECK(std::abs(got.y) < 1e-15);
                CHECK(std::abs(got.z) < 1e-15);
            }
        }
    }
}

TEST_CASE("frac_kernel structure") {
    const UnitAxis a(0.0, 1.0, 1.0);
    const double chi = 0.6, theta = M_PI / 3.0, x = 1.2, y = 0.8;
    // oracle: chirp times the integral-representation kernel at u = y / sin
    const double s = std::sin(theta), cot = std::cos(theta) / s;
    const std::complex<double> chirp =
        std::exp(std::complex<double>(0.0, -0.5 * (x * x + y * y) * cot));
    const std::complex<double> ref = chirp * oracles::dunkl_kernel_integral(chi, x, y / s);
    CHECK(std::abs(axis_complex(frac_kernel(chi, theta, x, y, a), a) - ref) < 1e-10);
    // at theta = pi/2 the chirp disappears
    CHECK((frac_kernel(chi, M_PI / 2.0, x, y, a) - dunkl_kernel_imag(chi, x, y, a)).norm() <
          1e-14);
    // 2 pi periodicity
    CHECK((frac_kernel(chi, theta, x, y, a) - frac_kernel(chi, theta + 2.0 * M_PI, x, y, a))
              .norm() < 1e-12);
    CHECK_THROWS_AS((void)frac_kernel(chi, 0.0, x, y, a), ThetaSingular);
    CHECK_THROWS_AS((void)frac_kernel(chi, M_PI, x, y, a), ThetaSingular);
}

TEST_CASE("hermite2d tensor structure and norms") {
    const auto grid = make_grid(0.5, 1.0, 32);
    const auto f = hermite2d(2, 3, grid);
    for (int i : {3, 17}) {
        for (int j : {5, 20}) {
            CHECK(f.at(i, j).w == doctest::Approx(hermite_h(2, 0.5, grid->rule1.nodes[i]) *
                                                  hermite_h(3, 1.0, grid->rule2.nodes[j]))
                                      .epsilon(1e-14));
        }
    }
    CHECK(norm2(f) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("dunkl operator on analytic functions") {
    const UnitAxis a = UnitAxis::i();
    const double chi = 0.8, theta = M_PI / 3.0;
    const double cot = std::cos(theta) / std::sin(theta);
    const int M = 2000;
    std::vector<double> y(M);
    std::vector<Quaternion> f(M);
    for (int k = 0; k < M; ++k) {
        y[k] = -6.0 + (k + 0.5) * (12.0 / M);
        f[k] = Quaternion::real(std::exp(-0.5 * y[k] * y[k]));
    }
    // even f: difference term vanishes; L f = (-y + a cot y) f
    const auto Lf = dunkl_operator_apply(y, f, chi, theta, a);
    double maxres = 0.0;
    for (int k = 50; k < M - 50; ++k) {
        const Quaternion expect =
            (Quaternion::real(-y[k]) + a.q() * (cot * y[k])) * f[k].w;
        maxres = std::max(maxres, (Lf[k] - expect).norm());
    }
    CHECK(maxres < 1e-8);

    // odd g = y e^{-y^2/2}: difference term is (2 chi + 1)/y * g = (2chi+1) e^{-y^2/2}
    std::vector<Quaternion> g(M);
    for (int k = 0; k < M; ++k) g[k] = Quaternion::real(y[k] * std::exp(-0.5 * y[k] * y[k]));
    const auto Lg = dunkl_operator_apply(y, g, chi, theta, a);
    maxres = 0.0;
    for (int k = 50; k < M - 50; ++k) {
        const double env = std::exp(-0.5 * y[k] * y[k]);
        const Quaternion expect = Quaternion::real((1.0 - y[k] * y[k]) * env +
                                                   (2.0 * chi + 1.0) * env) +
                                  a.q() * (cot * y[k] * y[k] * env);
        maxres = std::max(maxres, (Lg[k] - expect).norm());
    }
    CHECK(maxres < 1e-8);
}

TEST_CASE("dunkl operator grid validation") {
    const UnitAxis a = UnitAxis::i();
    std::vector<double> bad = {-2.0, -1.0, 0.0, 1.0, 2.0};
    std::vector<Quaternion> f(bad.size(), Quaternion::real(1.0));
    CHECK_THROWS_AS((void)dunkl_operator_apply(bad, f, 0.5, 1.0, a), GridContainsZero);
    std::vector<double> asym = {-2.0, -1.0, 0.5, 1.5, 2.5};
    CHECK_THROWS_AS((void)dunkl_operator_apply(asym, f, 0.5, 1.0, a), GridContainsZero);
    std::vector<double> ok = {-2.5, -1.5, -0.5, 0.5, 1.5, 2.5};
    std::vector<Quaternion> g(ok.size(), Quaternion::real(1.0));
    CHECK_THROWS_AS((void)dunkl_operator_apply(ok, g, 0.5, 0.0, a), ThetaSingular);
}

} // TEST_SUITE
