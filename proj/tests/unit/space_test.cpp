#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

#include "oracles/frozen.hpp"
#include "rosym/space.hpp"
#include "rosym/spectral.hpp"

using namespace rosym;

namespace {

double rel_err(double got, double want) {
    double scale = std::max({std::abs(want), std::abs(got), 1e-300});
    return std::abs(got - want) / scale;
}

}  // namespace

TEST_CASE("space spec invariants") {
    auto ch2 = SpaceSpec::make(Algebra::Complex, 2);
    CHECK(ch2.d == 2);
    CHECK(ch2.n == 4);
    CHECK(ch2.name() == "CH2");
    CHECK(SpaceSpec::parse("OH2").n == 16);
    CHECK(SpaceSpec::parse("RH3").vertical_dim() == 2);
    CHECK(SpaceSpec::parse("HH2").horizontal_dim() == 3);
    CHECK_THROWS_AS(SpaceSpec::make(Algebra::Real, 1), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::make(Algebra::Octonion, 3), std::invalid_argument);
    CHECK_THROWS_AS(SpaceSpec::parse("XH2"), std::invalid_argument);
    CHECK(builtin_spaces().size() == 5);
}

TEST_CASE("volume density closed form and small-r limit") {
    for (const auto& s : builtin_spaces()) {
        RadialKernels k(s);
        CHECK(k.volume_density(0.0) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(k.volume_density(1e-9) == doctest::Approx(1.0).epsilon(1e-14));
    }
    RadialKernels ch2(SpaceSpec::parse("CH2"));
    CHECK(rel_err(ch2.volume_density(1.0), frozen::kVolumeDensityCH2At1) < 1e-14);
    RadialKernels hh2(SpaceSpec::parse("HH2"));
    CHECK(rel_err(hh2.volume_density(0.7), frozen::kVolumeDensityHH2At07) < 1e-14);

    // d = 1 kills the cosh factor
    RadialKernels rh3(SpaceSpec::parse("RH3"));
    double r = 1.3;
    CHECK(rel_err(rh3.volume_density(r), std::pow(std::sinh(r) / r, 2)) < 1e-14);
}

TEST_CASE("phi and psi against independent references") {
    struct Case {
        const char* space;
        double r;
        double phi;
        double psi;
    };
    const Case cases[] = {
        {"RH2", 0.7, frozen::kPhiRH2At0_7, frozen::kPsiRH2At0_7},
        {"RH3", 1.1, frozen::kPhiRH3At1_1, frozen::kPsiRH3At1_1},
        {"CH2", 0.5, frozen::kPhiCH2At0_5, frozen::kPsiCH2At0_5},
        {"HH2", 0.7, frozen::kPhiHH2At0_7, frozen::kPsiHH2At0_7},
        {"OH2", 0.5, frozen::kPhiOH2At0_5, frozen::kPsiOH2At0_5},
        {"OH2", 1.0, frozen::kPhiOH2At1_0, frozen::kPsiOH2At1_0},
    };
    for (const auto& c : cases) {
        RadialKernels k(SpaceSpec::parse(c.space));
        CHECK(rel_err(k.phi(c.r), c.phi) < 1e-12);
        CHECK(rel_err(k.psi(c.r), c.psi) < 1e-12);
    }

    // closed-form antiderivative of tau*sinh(tau) for RH2
    RadialKernels rh2(SpaceSpec::parse("RH2"));
    for (double r : {0.3, 0.9, 2.1}) {
        double want = r * std::cosh(r) - std::sinh(r);
        CHECK(rel_err(rh2.psi(r), want) < 1e-12);
    }

    RadialKernels k0(SpaceSpec::parse("CH2"));
    CHECK(k0.phi(0.0) == 0.0);
    CHECK(k0.psi(0.0) == 0.0);
    CHECK(k0.psi(0.5) > 0.0);
    CHECK(k0.psi(0.5) < 0.5 * k0.phi(0.5) * 0.5 + 0.5 * k0.phi(0.5));  // psi < r*phi
}

TEST_CASE("phi closed form for the complex family") {
    RadialKernels ch2(SpaceSpec::parse("CH2"));
    for (double r : {0.25, 0.5, 1.0, 2.0}) {
        double want = std::pow(std::sinh(r), 4) / 4.0;
        CHECK(rel_err(ch2.phi(r), want) < 1e-14);
        // cross-check against direct quadrature of phi'
        double quad = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
            [&](double t) { return ch2.phi_deriv(t, 1); }, 0.0, r, 15, 1e-13);
        CHECK(rel_err(ch2.phi(r), quad) < 1e-12);
    }
}

TEST_CASE("phi derivatives match finite differences") {
    const double h = 1e-5;
    for (const auto& s : builtin_spaces()) {
        RadialKernels k(s);
        for (double r : {0.2, 0.7, 1.4, 2.0}) {
            for (int kk = 0; kk <= 2; ++kk) {
                double fd = (k.phi_deriv(r + h, kk) - k.phi_deriv(r - h, kk)) / (2 * h);
                CHECK(rel_err(fd, k.phi_deriv(r, kk + 1)) < 1e-6);
            }
        }
    }
    RadialKernels hh2(SpaceSpec::parse("HH2"));
    CHECK(rel_err(hh2.phi_deriv(0.7, 2), frozen::kPhi2HH2At0_7) < 1e-14);
    CHECK_THROWS_AS(hh2.phi_deriv(0.5, 4), std::invalid_argument);
    CHECK(hh2.phi_deriv(0.0, 0) == 0.0);
}

TEST_CASE("omega_k values at zero and basic shape") {
    for (const auto& s : builtin_spaces()) {
        RadialKernels k(s);
        double n = s.n;
        CHECK(rel_err(k.omega(1, 0.0), 1.0) < 1e-12);
        CHECK(rel_err(k.omega(2, 0.0), n - 1) < 1e-12);
        if (s.n > 2) CHECK(rel_err(k.omega(3, 0.0), (n - 1) * (n - 2)) < 1e-12);
        else CHECK(k.omega(3, 0.0) == doctest::Approx(0.0));

        // evenness
        for (double r : {0.3, 1.1}) {
            for (int kk = 1; kk <= 3; ++kk) CHECK(k.omega(kk, r) == k.omega(kk, -r));
        }
        // positivity and convexity on a grid (second difference)
        for (int kk = 1; kk <= 3; ++kk) {
            double h = 0.01;
            for (double r = 0.0; r <= 2.0; r += 0.05) {
                double w = k.omega(kk, r);
                if (!(s.n == 2 && kk == 3)) CHECK(w > 0.0);
                double second = k.omega(kk, r + h) - 2 * k.omega(kk, r) + k.omega(kk, std::abs(r - h));
                CHECK(second >= -1e-10);
            }
        }
    }
}

TEST_CASE("omega_prime consistency with finite differences") {
    RadialKernels k(SpaceSpec::parse("HH2"));
    const double h = 1e-6;
    for (int kk = 1; kk <= 3; ++kk) {
        for (double r : {0.2, 0.8, 1.5}) {
            double fd = (k.omega(kk, r + h) - k.omega(kk, r - h)) / (2 * h);
            CHECK(rel_err(fd, k.omega_prime(kk, r)) < 1e-7);
        }
    }
    for (int i : {1, 2}) {
        for (double r : {0.2, 0.8, 1.5}) {
            double fd = (k.omega1i(i, r + h) - k.omega1i(i, r - h)) / (2 * h);
            CHECK(rel_err(fd, k.omega1i_prime(i, r)) < 1e-7);
        }
        CHECK(k.omega1i(i, 0.0) == doctest::Approx(1.0));
        CHECK(k.omega1i_prime(i, 1e-9) == doctest::Approx(0.0).epsilon(1e-8));
    }
}

TEST_CASE("ball volume and perimeter closed forms") {
    RadialKernels ch2(SpaceSpec::parse("CH2"));
    CHECK(rel_err(ch2.ball_volume(1.0), frozen::kBallVolCH2At1) < 1e-12);
    CHECK(rel_err(ch2.ball_perimeter(1.0), frozen::kBallPerCH2At1) < 1e-12);
    CHECK(rel_err(ch2.ball_volume(0.25), frozen::kBallVolCH2At0_25) < 1e-12);

    RadialKernels hh2(SpaceSpec::parse("HH2"));
    CHECK(rel_err(hh2.ball_volume(0.7), frozen::kBallVolHH2At0_7) < 1e-12);
    RadialKernels oh2(SpaceSpec::parse("OH2"));
    CHECK(rel_err(oh2.ball_perimeter(0.5), frozen::kBallPerOH2At0_5) < 1e-12);

    // Euclidean limit: Vol / (omega_n R^n) -> 1 as R -> 0
    for (const auto& s : builtin_spaces()) {
        RadialKernels k(s);
        double R = 1e-3;
        double ratio = k.ball_volume(R) / (k.unit_ball_volume() * std::pow(R, s.n));
        CHECK(rel_err(ratio, 1.0) < 1e-4);
    }
}

TEST_CASE("third-derivative identity against the first eigenvalue") {
    for (const auto& s : builtin_spaces()) {
        RadialKernels k(s);
        for (int i = 1; i <= 100; ++i) {
            double r = 3.0 * i / 100.0;
            double p1 = k.phi_deriv(r, 1);
            double p2 = k.phi_deriv(r, 2);
            double p3 = k.phi_deriv(r, 3);
            double lam1 = eigenvalue_lower_bound(s, r, 1);
            double lhs = p3 * p1;
            double rhs = p2 * p2 - lam1 * p1 * p1;
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(std::abs(lhs), std::abs(rhs)));
        }
    }
}

TEST_CASE("anchored phi/psi agree with the direct evaluators") {
    for (const auto& s : builtin_spaces()) {
        RadialKernels k(s);
        double R = 0.6;
        PhiPsiAnchor anchor(k, R);
        for (double x : {0.45, 0.55, 0.6, 0.62, 0.75}) {
            CHECK(rel_err(anchor.phi_at(x), k.phi(x)) < 1e-12);
            CHECK(rel_err(anchor.psi_at(x), k.psi(x)) < 1e-12);
        }
    }
}
