#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "levylab/errors.hpp"
#include "levylab/levy_measure.hpp"
#include "levylab/rng.hpp"
#include "levylab/vec.hpp"

namespace levylab {

struct Jump {
    double t = 0.0;
    Vec z = vec0();
};

// Compound-Poisson realization of the driving process Z on [0, T]: jumps with
// |z| <= eps are discarded (no Gaussian substitution), the rest arrive at rate
// lambda_eps = nu({eps < |z| <= R}).  Immutable after construction.
struct JumpPath {
    double T = 1.0;
    double eps = 0.1;
    std::uint64_t seed = 0;
    std::string spec_ref;
    int dim = 1;
    double R = 1.0;
    std::vector<Jump> jumps;  // strictly increasing in t, all eps < |z| <= R
};

namespace sampler_detail {

// inverse-transform draw of the radial law ~ s^{-1-alpha} restricted to (eps, R]
inline double stable_radius(double alpha, double eps, double R, double u) {
    const double ea = std::pow(eps, -alpha), ra = std::pow(R, -alpha);
    return std::pow(ea - u * (ea - ra), -1.0 / alpha);
}

inline Vec draw_jump(const LevyMeasureSpec& s, double eps, Rng& rng) {
    using K = LevyMeasureSpec::Kind;
    switch (s.kind) {
        case K::isotropic_stable: {
            const double r = stable_radius(s.alpha, eps, s.R, rng.uniform());
            if (s.dim == 1) return vec1(rng.uniform() < 0.5 ? r : -r);
            const double phi = rng.uniform(0.0, 2.0 * M_PI);
            return vec2(r * std::cos(phi), r * std::sin(phi));
        }
        case K::cylindrical_stable: {
            const double r = stable_radius(s.alpha, eps, s.R, rng.uniform());
            const int axis = s.dim == 1 ? 0 : static_cast<int>(rng.index(2));
            const double v = rng.uniform() < 0.5 ? r : -r;
            Vec z = vec0();
            z[axis] = v;
            return z;
        }
        case K::discrete_symmetric: {
            double total = 0.0;
            for (const auto& [z, w] : s.atoms)
                if (norm(z) > eps) total += w;
            double pick = rng.uniform() * total;
            for (const auto& [z, w] : s.atoms) {
                if (norm(z) <= eps) continue;
                pick -= w;
                if (pick <= 0.0) return z;
            }
            return s.atoms.back().first;
        }
    }
    return vec0();
}

}  // namespace sampler_detail

inline JumpPath sample_jump_path(const LevyMeasureSpec& spec, double T, double eps,
                                 std::uint64_t seed) {
    if (!(T > 0.0)) throw TimeOutOfRange("sample_jump_path: need T > 0");
    const double rate = mass_above(spec, eps);  // validates the cutoff
    JumpPath path;
    path.T = T;
    path.eps = eps;
    path.seed = seed;
    path.spec_ref = spec.name;
    path.dim = spec.dim;
    path.R = spec.R;
    if (rate <= 0.0) return path;
    Rng rng(seed);
    double t = 0.0;
    while (true) {
        t += rng.exponential(rate);
        if (t > T) break;
        path.jumps.push_back({t, sampler_detail::draw_jump(spec, eps, rng)});
    }
    return path;
}

// Z_t = sum of jumps up to and including t (cadlag step function, Z_0 = 0).
inline Vec evaluate_Z(const JumpPath& path, double t) {
    if (t < 0.0 || t > path.T) throw TimeOutOfRange("evaluate_Z: t outside [0, T]");
    Vec acc = vec0();
    for (const auto& j : path.jumps) {
        if (j.t > t) break;
        acc += j.z;
    }
    return acc;
}

inline JumpPath insert_jump(const JumpPath& path, double r, Vec z) {
    if (!(r > 0.0) || !(r <= path.T)) throw TimeOutOfRange("insert_jump: need 0 < r <= T");
    const double n = norm(z);
    if (!(n > path.eps) || !(n <= path.R))
        throw JumpOutOfSupport("insert_jump: need eps < |z| <= R");
    for (const auto& j : path.jumps)
        if (j.t == r) throw DuplicateTimestamp("insert_jump: time already occupied");
    JumpPath out = path;
    const auto pos = std::upper_bound(out.jumps.begin(), out.jumps.end(), r,
                                      [](double v, const Jump& j) { return v < j.t; });
    out.jumps.insert(pos, Jump{r, z});
    return out;
}

// L2 size of the discarded small-jump part of Z_T: the exact moment and the
// (A1)-based cap T c0^{-1} eps^{2-alpha} from the upper bound (valid eps < rho).
struct TruncationBias {
    double exact = 0.0;
    double a1_cap = 0.0;
};

inline TruncationBias truncation_bias_l2(const LevyMeasureSpec& spec, double T, double eps) {
    TruncationBias b;
    b.exact = T * second_moment_range(spec, 0.0, eps);
    b.a1_cap = T * std::pow(eps, 2.0 - spec.alpha) / spec.c0;
    return b;
}

inline double quadratic_variation(const JumpPath& path) {
    double acc = 0.0;
    for (const auto& j : path.jumps) acc += norm2(j.z);
    return acc;
}

}  // namespace levylab
