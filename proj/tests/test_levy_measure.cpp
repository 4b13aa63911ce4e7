#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "levylab/levy_measure.hpp"
#include "levylab/numerics.hpp"

using namespace levylab;
using Catch::Approx;

// Directional small-ball integral by quadrature only: adaptive Simpson on the
// log radial axis crossed with Simpson over the angle (d=2).  No closed forms.
static double directional_by_quadrature(const LevyMeasureSpec& s, double r, Vec theta) {
    if (s.dim == 1) {
        return radial_quadrature(s, 0.0, r, [](double z) { return z * z; });
    }
    // angular factor int_0^{2pi} <theta, e(phi)>^2 dphi for the isotropic kind,
    // sum over signed axes for the cylindrical kind
    double angular = 0.0;
    if (s.kind == LevyMeasureSpec::Kind::isotropic_stable) {
        const int n = 2048;
        const double h = 2.0 * M_PI / n;
        for (int i = 0; i < n; ++i) {
            const double phi = (i + 0.5) * h;
            const double d = theta[0] * std::cos(phi) + theta[1] * std::sin(phi);
            angular += d * d * h;
        }
        angular /= 2.0 * M_PI;  // radial_quadrature already carries the 2*pi*c factor
    } else {
        angular = norm2(theta) / s.dim;  // (sum_i theta_i^2) axes out of d, paired signs
    }
    return angular * radial_quadrature(s, 0.0, r, [](double z) { return z * z; });
}

TEST_CASE("small_ball_directional closed forms against quadrature oracle") {
    // frozen: alpha=1, c=1, R=1, r=0.5 -> 2 c r^{2-a}/(2-a) = 1.0
    auto iso1 = make_isotropic_stable(1, 1.0, 1.0, 1.0, 0.5, 0.9);
    CHECK(small_ball_directional(iso1, 0.5, vec1(1.0)) == Approx(1.0).epsilon(1e-12));
    CHECK(directional_by_quadrature(iso1, 0.5, vec1(1.0)) == Approx(1.0).epsilon(1e-9));

    SECTION("relative 1e-8 agreement on a log-spaced r grid") {
        auto iso2 = make_isotropic_stable(2, 1.2, 0.7, 1.0, 0.15, 0.9);
        auto cyl2 = shipped_cylindrical_2d();
        for (const auto& s : {iso1, iso2, cyl2}) {
            const Vec th = s.dim == 1 ? vec1(1.0) : vec2(std::cos(0.3), std::sin(0.3));
            for (double r : {1e-3, 1e-2, 0.1, 0.5, 1.0}) {
                const double cf = small_ball_directional(s, r, th);
                const double q = directional_by_quadrature(s, r, th);
                CHECK(cf == Approx(q).epsilon(1e-8));
            }
        }
    }

    SECTION("no atoms inside the ball gives zero") {
        auto disc = make_discrete_symmetric(
            2, 1.2, {{vec2(0.8, 0.0), 1.0}, {vec2(0.0, 0.8), 1.0}}, 1.0, 0.015, 0.4, "d", false);
        CHECK(small_ball_directional(disc, 0.5, vec2(1.0, 0.0)) == 0.0);
    }

    SECTION("value decreases monotonically to zero as r -> 0+") {
        auto s = shipped_isotropic_1d();
        double prev = small_ball_directional(s, 0.5, vec1(1.0));
        for (double r = 0.25; r > 1e-6; r *= 0.5) {
            const double v = small_ball_directional(s, r, vec1(1.0));
            CHECK(v >= 0.0);
            CHECK(v < prev);
            prev = v;
        }
        CHECK(prev < 1e-4);
    }

    SECTION("invalid radius rejected") {
        auto s = shipped_isotropic_1d();
        CHECK_THROWS_AS(small_ball_directional(s, 0.0, vec1(1.0)), InvalidRadius);
        CHECK_THROWS_AS(small_ball_directional(s, 1.5, vec1(1.0)), InvalidRadius);
    }
}

TEST_CASE("moment_integral closed forms") {
    SECTION("small ball, frozen value 2.0") {
        // alpha=0.5, c=1, r=0.25, theta=1: 2 c r^{th-a}/(th-a) = 2*0.5/0.5 = 2.0
        auto s = make_isotropic_stable(1, 0.5, 1.0, 1.0, 0.5, 0.9);
        CHECK(moment_integral(s, 0.25, 1.0, MomentRegion::small_ball) ==
              Approx(2.0).epsilon(1e-12));
        const double q =
            radial_quadrature(s, 0.0, 0.25, [](double z) { return z; });
        CHECK(moment_integral(s, 0.25, 1.0, MomentRegion::small_ball) == Approx(q).epsilon(1e-9));
    }

    SECTION("discrete atom summation, frozen value 0.36") {
        auto s = make_discrete_symmetric(1, 0.5, {{vec1(0.3), 2.0}}, 1.0, 0.1, 0.5, "d", false);
        CHECK(moment_integral(s, 0.5, 2.0, MomentRegion::small_ball) ==
              Approx(0.36).epsilon(1e-12));
    }

    SECTION("empty annulus at r = 1") {
        auto s = shipped_isotropic_1d();
        CHECK(moment_integral(s, 1.0, 0.2, MomentRegion::annulus_to_one) == 0.0);
    }

    SECTION("annulus agrees with quadrature") {
        auto s = shipped_isotropic_1d();  // alpha = 0.7
        const double got = moment_integral(s, 0.25, 0.3, MomentRegion::annulus_to_one);
        const double q = radial_quadrature(s, 0.25, 1.0, [](double z) { return std::pow(z, 0.3); });
        CHECK(got == Approx(q).epsilon(1e-9));
    }

    SECTION("exponent ordering enforced") {
        auto s = shipped_isotropic_1d();
        CHECK_THROWS_AS(moment_integral(s, 0.25, 0.5, MomentRegion::small_ball),
                        ExponentOutOfRange);
        CHECK_THROWS_AS(moment_integral(s, 0.25, 1.5, MomentRegion::annulus_to_one),
                        ExponentOutOfRange);
    }

    SECTION("r^{theta-alpha} scaling exponent by regression") {
        auto s = shipped_isotropic_1d();
        const double theta = 1.5;
        std::vector<double> lx, ly;
        for (double r = 1e-3; r < 0.5; r *= 2.0) {
            lx.push_back(std::log(r));
            ly.push_back(std::log(moment_integral(s, r, theta, MomentRegion::small_ball)));
        }
        CHECK(fit_slope(lx, ly) == Approx(theta - s.alpha).margin(1e-10));
    }
}

TEST_CASE("mass_above") {
    SECTION("frozen value 2.0 for the alpha=1 unit measure") {
        auto s = make_isotropic_stable(1, 1.0, 1.0, 1.0, 0.5, 0.9);
        CHECK(mass_above(s, 0.5) == Approx(2.0).epsilon(1e-12));
        const double q = radial_quadrature(s, 0.5, 1.0, [](double) { return 1.0; });
        CHECK(mass_above(s, 0.5) == Approx(q).epsilon(1e-9));
    }

    SECTION("vanishes as eps -> R-") {
        auto s = shipped_isotropic_1d();
        CHECK(mass_above(s, s.R * (1.0 - 1e-12)) == Approx(0.0).margin(1e-8));
    }

    SECTION("discrete atom summation, frozen value 4.0") {
        auto s = make_discrete_symmetric(1, 0.5, {{vec1(0.3), 2.0}}, 1.0, 0.1, 0.5, "d", false);
        CHECK(mass_above(s, 0.1) == Approx(4.0).epsilon(1e-14));
    }

    SECTION("cutoff validation") {
        auto s = shipped_isotropic_1d();
        CHECK_THROWS_AS(mass_above(s, 0.0), InvalidCutoff);
        CHECK_THROWS_AS(mass_above(s, 1.0), InvalidCutoff);
    }
}

TEST_CASE("(A1) certification") {
    SECTION("the three shipped specs certify") {
        CHECK(certify_a1(shipped_isotropic_1d()).pass);
        CHECK(certify_a1(shipped_cylindrical_2d()).pass);
        CHECK(certify_a1(shipped_discrete_2d()).pass);
    }

    SECTION("certification margins are reported") {
        const auto cert = certify_a1(shipped_isotropic_1d());
        CHECK(cert.worst_lower_margin > 0.0);
        CHECK(cert.worst_upper_margin > 0.0);
        CHECK(cert.samples_r == 32);
    }

    SECTION("single-axis discrete measure in d=2 is rejected") {
        std::vector<std::pair<Vec, double>> axis_atoms = {{vec2(1e-4, 0.0), 2.5e5}};
        CHECK_THROWS_AS(
            make_discrete_symmetric(2, 1.2, axis_atoms, 1.0, 0.015, 0.4),
            MeasureCertificationFailure);
    }

    SECTION("overdeclared c0 is rejected") {
        CHECK_THROWS_AS(make_isotropic_stable(1, 0.7, 1.0, 1.0, 0.99, 0.9),
                        MeasureCertificationFailure);
    }
}

TEST_CASE("symmetry and closure") {
    SECTION("directional moments invariant under theta -> -theta") {
        auto s = shipped_cylindrical_2d();
        for (double a : {0.1, 0.7, 2.2}) {
            const Vec th = vec2(std::cos(a), std::sin(a));
            CHECK(small_ball_directional(s, 0.3, th) ==
                  Approx(small_ball_directional(s, 0.3, -th)).epsilon(1e-14));
        }
    }

    SECTION("atom list is closed under z -> -z") {
        auto s = make_discrete_symmetric(1, 0.5, {{vec1(0.3), 2.0}}, 1.0, 0.1, 0.5, "d", false);
        REQUIRE(s.atoms.size() == 2);
        CHECK(s.atoms[1].first[0] == Approx(-0.3));
        CHECK(s.atoms[1].second == Approx(2.0));
    }

    SECTION("structural validation") {
        CHECK_THROWS_AS(make_isotropic_stable(1, 2.5, 1.0, 1.0, 0.5, 0.9), ParameterOutOfRange);
        CHECK_THROWS_AS(make_isotropic_stable(1, 0.7, 1.0, 1.0, 1.5, 0.9), ParameterOutOfRange);
        CHECK_THROWS_AS(
            make_discrete_symmetric(1, 0.5, {{vec1(1.7), 1.0}}, 1.0, 0.1, 0.5, "d", false),
            ParameterOutOfRange);
    }
}
