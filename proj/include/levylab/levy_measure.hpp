#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "levylab/errors.hpp"
#include "levylab/numerics.hpp"
#include "levylab/vec.hpp"

namespace levylab {

// Symmetric truncated Levy measures nu on B_R, in three flavors:
//   isotropic stable    nu(dz) = c |z|^{-d-alpha} dz,        |z| <= R
//   cylindrical stable  nu = sum_i (1-d stable of intensity c on axis i)
//   discrete symmetric  finite atoms closed under z -> -z
//
// The (A1) constants c0, rho in (0,1) are declared by the user and certified
// numerically at construction:
//   int_{B_r} <theta,z>^2 nu(dz) >= c0 r^{2-alpha}      (lower)
//   int_{B_r} |z|^2      nu(dz) <= r^{2-alpha} / c0     (upper)
// for sampled r in (R*1e-4, rho) and directions theta on the unit sphere.
struct LevyMeasureSpec {
    enum class Kind { isotropic_stable, cylindrical_stable, discrete_symmetric };

    Kind kind = Kind::isotropic_stable;
    int dim = 1;
    double alpha = 1.0;  // order index; for discrete kind the declared comparison order
    double c = 1.0;      // intensity (stable kinds)
    double R = 1.0;      // truncation radius: nu(B_R^c) = 0
    double c0 = 0.5;     // (A1) nondegeneracy constant
    double rho = 0.9;    // (A1) radius threshold
    std::vector<std::pair<Vec, double>> atoms;  // discrete kind only
    std::string name;
};

struct A1Certificate {
    bool pass = true;
    double worst_lower_margin = 0.0;  // min over samples of lhs/(c0 r^{2-a}) - 1
    double worst_upper_margin = 0.0;  // min over samples of (r^{2-a}/c0)/lhs - 1
    int samples_r = 0;
    int samples_theta = 0;
    std::string detail;
};

namespace measure_detail {

// angular factor K with int h(|z|) nu(dz) = K int_0^R h(s) s^{-1-alpha} ds
inline double radial_intensity(const LevyMeasureSpec& s) {
    switch (s.kind) {
        case LevyMeasureSpec::Kind::isotropic_stable:
            return s.dim == 1 ? 2.0 * s.c : 2.0 * M_PI * s.c;
        case LevyMeasureSpec::Kind::cylindrical_stable:
            return 2.0 * s.dim * s.c;
        default:
            return 0.0;
    }
}

// int_a^b s^{e} ds with e = power - 1 - alpha, exact
inline double radial_power_integral(double alpha, double power, double a, double b) {
    const double e = power - alpha;
    return (std::pow(b, e) - std::pow(a, e)) / e;
}

inline bool is_stable(const LevyMeasureSpec& s) {
    return s.kind != LevyMeasureSpec::Kind::discrete_symmetric;
}

}  // namespace measure_detail

// int_{B_r} <theta, z>^2 nu(dz); closed form for stable kinds, exact atom
// summation otherwise.
inline double small_ball_directional(const LevyMeasureSpec& s, double r, Vec theta) {
    if (!(r > 0.0) || r > s.R) throw InvalidRadius("small_ball_directional: need 0 < r <= R");
    using K = LevyMeasureSpec::Kind;
    const double radial = measure_detail::radial_power_integral(s.alpha, 2.0, 0.0, r);
    switch (s.kind) {
        case K::isotropic_stable:
            // d=1: <theta,z>^2 = z^2; d=2: angular average of cos^2 is pi (not 2pi)
            return (s.dim == 1 ? 2.0 * s.c : M_PI * s.c) * radial;
        case K::cylindrical_stable:
            // each axis contributes theta_i^2 times the 1-d moment; |theta| = 1
            return 2.0 * s.c * norm2(theta) * radial;
        case K::discrete_symmetric: {
            double acc = 0.0;
            for (const auto& [z, w] : s.atoms)
                if (norm(z) <= r) acc += w * dot(theta, z) * dot(theta, z);
            return acc;
        }
    }
    return 0.0;
}

// int_{B_r} |z|^2 nu(dz)
inline double small_ball_second_moment(const LevyMeasureSpec& s, double r) {
    if (!(r > 0.0) || r > s.R) throw InvalidRadius("small_ball_second_moment: need 0 < r <= R");
    if (s.kind == LevyMeasureSpec::Kind::discrete_symmetric) {
        double acc = 0.0;
        for (const auto& [z, w] : s.atoms)
            if (norm(z) <= r) acc += w * norm2(z);
        return acc;
    }
    return measure_detail::radial_intensity(s) *
           measure_detail::radial_power_integral(s.alpha, 2.0, 0.0, r);
}

enum class MomentRegion { small_ball, annulus_to_one };

// int_{|z|<=r} |z|^theta nu(dz)            (small_ball, theta > alpha)
// int_{r<|z|<=1} |z|^theta nu(dz)          (annulus_to_one, 0 <= theta < alpha, r < 1 <= R)
inline double moment_integral(const LevyMeasureSpec& s, double r, double theta_exp,
                              MomentRegion region) {
    if (region == MomentRegion::small_ball) {
        if (!(theta_exp > s.alpha))
            throw ExponentOutOfRange("moment_integral: small_ball needs theta_exp > alpha");
        if (!(r > 0.0) || r > s.R) throw InvalidRadius("moment_integral: need 0 < r <= R");
        if (s.kind == LevyMeasureSpec::Kind::discrete_symmetric) {
            double acc = 0.0;
            for (const auto& [z, w] : s.atoms)
                if (norm(z) <= r) acc += w * std::pow(norm(z), theta_exp);
            return acc;
        }
        return measure_detail::radial_intensity(s) *
               measure_detail::radial_power_integral(s.alpha, theta_exp, 0.0, r);
    }
    if (!(theta_exp >= 0.0) || !(theta_exp < s.alpha))
        throw ExponentOutOfRange("moment_integral: annulus_to_one needs 0 <= theta_exp < alpha");
    if (!(r > 0.0) || !(r <= 1.0) || !(s.R >= 1.0))
        throw InvalidRadius("moment_integral: annulus_to_one needs 0 < r <= 1 <= R");
    if (s.kind == LevyMeasureSpec::Kind::discrete_symmetric) {
        double acc = 0.0;
        for (const auto& [z, w] : s.atoms) {
            const double a = norm(z);
            if (a > r && a <= 1.0) acc += w * std::pow(a, theta_exp);
        }
        return acc;
    }
    if (r == 1.0) return 0.0;
    return measure_detail::radial_intensity(s) *
           measure_detail::radial_power_integral(s.alpha, theta_exp, r, 1.0);
}

// lambda_eps = nu({eps < |z| <= R}); the jump rate of the compound-Poisson
// approximation with cutoff eps.
inline double mass_above(const LevyMeasureSpec& s, double eps) {
    if (!(eps > 0.0) || !(eps < s.R)) throw InvalidCutoff("mass_above: need 0 < eps < R");
    if (s.kind == LevyMeasureSpec::Kind::discrete_symmetric) {
        double acc = 0.0;
        for (const auto& [z, w] : s.atoms)
            if (norm(z) > eps) acc += w;
        return acc;
    }
    return measure_detail::radial_intensity(s) *
           measure_detail::radial_power_integral(s.alpha, 0.0, eps, s.R);
}

// int_{a<|z|<=b} |z|^2 nu(dz); a = 0 gives the small-jump truncation bias.
inline double second_moment_range(const LevyMeasureSpec& s, double a, double b) {
    if (s.kind == LevyMeasureSpec::Kind::discrete_symmetric) {
        double acc = 0.0;
        for (const auto& [z, w] : s.atoms) {
            const double n = norm(z);
            if (n > a && n <= b) acc += w * norm2(z);
        }
        return acc;
    }
    return measure_detail::radial_intensity(s) *
           measure_detail::radial_power_integral(s.alpha, 2.0, a, b);
}

// Independent route for the stable-kind radial integrals: adaptive Simpson on
// the log axis (handles the s^{-1-alpha} singularity without closed forms).
template <typename Fn>
double radial_quadrature(const LevyMeasureSpec& s, double lo, double hi, Fn&& h,
                         double reltol = 1e-11) {
    if (!measure_detail::is_stable(s)) throw ParameterOutOfRange("radial_quadrature: stable kinds only");
    const double K = measure_detail::radial_intensity(s);
    const double floor_lo = std::max(lo, hi * 1e-30);
    const double a = std::log(floor_lo), b = std::log(hi);
    auto integrand = [&](double t) {
        const double sr = std::exp(t);
        return h(sr) * std::exp(-s.alpha * t);
    };
    return K * adaptive_simpson(integrand, a, b, reltol);
}

inline std::vector<Vec> certification_directions(int dim, int count) {
    std::vector<Vec> dirs;
    if (dim == 1) {
        dirs.push_back(vec1(1.0));
        dirs.push_back(vec1(-1.0));
        return dirs;
    }
    for (int j = 0; j < count; ++j) {
        const double a = 2.0 * M_PI * j / count;
        dirs.push_back(vec2(std::cos(a), std::sin(a)));
    }
    return dirs;
}

inline std::vector<double> certification_radii(const LevyMeasureSpec& s, int count) {
    std::vector<double> rs;
    const double lo = s.R * 1e-4, hi = s.rho;
    for (int i = 0; i < count; ++i) {
        const double t = (i + 0.5) / count;
        rs.push_back(lo * std::pow(hi / lo, t));
    }
    return rs;
}

inline A1Certificate certify_a1(const LevyMeasureSpec& s, int n_r = 32, int n_theta = 16) {
    A1Certificate cert;
    cert.samples_r = n_r;
    cert.worst_lower_margin = 1e300;
    cert.worst_upper_margin = 1e300;
    const auto dirs = certification_directions(s.dim, n_theta);
    cert.samples_theta = static_cast<int>(dirs.size());
    for (double r : certification_radii(s, n_r)) {
        const double scale = std::pow(r, 2.0 - s.alpha);
        const double upper = small_ball_second_moment(s, r);
        const double upper_margin = (scale / s.c0) / std::max(upper, 1e-300) - 1.0;
        cert.worst_upper_margin = std::min(cert.worst_upper_margin, upper_margin);
        if (upper > scale / s.c0 && cert.pass) {
            cert.pass = false;
            cert.detail = "upper bound violated at r=" + std::to_string(r);
        }
        for (const auto& th : dirs) {
            const double lower = small_ball_directional(s, r, th);
            const double lower_margin = lower / (s.c0 * scale) - 1.0;
            cert.worst_lower_margin = std::min(cert.worst_lower_margin, lower_margin);
            if (lower < s.c0 * scale && cert.pass) {
                cert.pass = false;
                cert.detail = "lower bound violated at r=" + std::to_string(r);
            }
        }
    }
    return cert;
}

namespace measure_detail {

inline void validate_common(const LevyMeasureSpec& s, bool certify) {
    if (s.dim != 1 && s.dim != 2) throw ParameterOutOfRange("measure dim must be 1 or 2");
    if (!(s.alpha > 0.0) || !(s.alpha < 2.0)) throw ParameterOutOfRange("alpha must lie in (0,2)");
    if (!(s.R > 0.0)) throw ParameterOutOfRange("truncation radius R must be positive");
    if (!(s.c0 > 0.0) || !(s.c0 < 1.0)) throw ParameterOutOfRange("c0 must lie in (0,1)");
    if (!(s.rho > 0.0) || !(s.rho < 1.0)) throw ParameterOutOfRange("rho must lie in (0,1)");
    if (s.rho > s.R) throw ParameterOutOfRange("rho must not exceed R");
    if (is_stable(s) && !(s.c > 0.0)) throw ParameterOutOfRange("intensity c must be positive");
    if (certify) {
        const auto cert = certify_a1(s);
        if (!cert.pass)
            throw MeasureCertificationFailure("(A1) certification failed: " + cert.detail);
    }
}

}  // namespace measure_detail

inline LevyMeasureSpec make_isotropic_stable(int dim, double alpha, double c, double R, double c0,
                                             double rho, std::string name = "isotropic",
                                             bool certify = true) {
    LevyMeasureSpec s;
    s.kind = LevyMeasureSpec::Kind::isotropic_stable;
    s.dim = dim;
    s.alpha = alpha;
    s.c = c;
    s.R = R;
    s.c0 = c0;
    s.rho = rho;
    s.name = std::move(name);
    measure_detail::validate_common(s, certify);
    return s;
}

inline LevyMeasureSpec make_cylindrical_stable(int dim, double alpha, double c, double R, double c0,
                                               double rho, std::string name = "cylindrical",
                                               bool certify = true) {
    LevyMeasureSpec s;
    s.kind = LevyMeasureSpec::Kind::cylindrical_stable;
    s.dim = dim;
    s.alpha = alpha;
    s.c = c;
    s.R = R;
    s.c0 = c0;
    s.rho = rho;
    s.name = std::move(name);
    measure_detail::validate_common(s, certify);
    return s;
}

// Atoms are listed once per +/- pair or in full; the constructor completes and
// verifies the symmetric closure.
inline LevyMeasureSpec make_discrete_symmetric(int dim, double alpha,
                                               std::vector<std::pair<Vec, double>> atoms, double R,
                                               double c0, double rho,
                                               std::string name = "discrete", bool certify = true) {
    LevyMeasureSpec s;
    s.kind = LevyMeasureSpec::Kind::discrete_symmetric;
    s.dim = dim;
    s.alpha = alpha;
    s.R = R;
    s.c0 = c0;
    s.rho = rho;
    s.name = std::move(name);

    // symmetric closure: every atom needs a mirror of equal weight
    std::vector<std::pair<Vec, double>> closed = std::move(atoms);
    auto find_mirror = [&](Vec z, double w) {
        for (const auto& [z2, w2] : closed)
            if (norm(z2 + z) < 1e-14 * (1.0 + norm(z)) && std::abs(w2 - w) < 1e-14 * w) return true;
        return false;
    };
    const std::size_t original = closed.size();
    for (std::size_t i = 0; i < original; ++i) {
        const auto [z, w] = closed[i];
        if (!(w > 0.0)) throw ParameterOutOfRange("atom weights must be positive");
        if (norm(z) > R) throw ParameterOutOfRange("atom outside the truncation ball");
        if (norm(z) == 0.0) throw ParameterOutOfRange("atom at the origin is not allowed");
        if (!find_mirror(z, w)) closed.emplace_back(-z, w);
    }
    s.atoms = std::move(closed);
    measure_detail::validate_common(s, certify);
    return s;
}

// The three shipped desk-scale fixtures.
inline LevyMeasureSpec shipped_isotropic_1d() {
    return make_isotropic_stable(1, 0.7, 1.0, 1.0, 0.6, 0.9, "iso-1d-a0.7");
}

inline LevyMeasureSpec shipped_cylindrical_2d() {
    return make_cylindrical_stable(2, 1.2, 1.0, 1.0, 0.15, 0.9, "cyl-2d-a1.2");
}

// Eight atoms, one shell at radius R*1e-4 with 45-degree spacing.  The shell
// sits inside every certification ball, and the eight-point design makes the
// directional second moment exactly isotropic.
inline LevyMeasureSpec shipped_discrete_2d() {
    const double a = 1e-4, w = 2.5e5;
    std::vector<std::pair<Vec, double>> atoms;
    for (int j = 0; j < 8; ++j) {
        const double ang = 2.0 * M_PI * j / 8.0;
        atoms.emplace_back(vec2(a * std::cos(ang), a * std::sin(ang)), w);
    }
    return make_discrete_symmetric(2, 1.2, std::move(atoms), 1.0, 0.015, 0.4, "disc-2d-8atom");
}

}  // namespace levylab
