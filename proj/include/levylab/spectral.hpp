#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "levylab/fft.hpp"
#include "levylab/grid.hpp"

namespace levylab {

using Spectrum = std::vector<std::complex<double>>;

// Raw (unnormalized, FFT-ordered) spectrum of one component.
inline Spectrum to_spectrum(const GridField& f, int comp = 0) {
    const auto n = f.npoints();
    Spectrum s(n);
    const double* src = f.comp_data(comp);
    for (std::size_t i = 0; i < n; ++i) s[i] = src[i];
    Fft::forward(f.grid().dim, f.grid().N, s.data());
    return s;
}

inline void spectrum_into_comp(GridField& f, int comp, Spectrum s) {
    Fft::inverse(f.grid().dim, f.grid().N, s.data());
    double* dst = f.comp_data(comp);
    for (std::size_t i = 0; i < s.size(); ++i) dst[i] = s[i].real();
}

// Apply a frequency multiplier m(xi) componentwise.  The multiplier must be
// conjugate-symmetric (real m suffices) so real fields stay real.
template <typename Fn>
GridField apply_multiplier(const GridField& f, Fn&& m) {
    GridField out(f.grid(), f.comps());
    const auto& g = f.grid();
    for (int c = 0; c < f.comps(); ++c) {
        Spectrum s = to_spectrum(f, c);
        for (std::size_t k = 0; k < s.size(); ++k) s[k] *= m(g.xi(k));
        spectrum_into_comp(out, c, std::move(s));
    }
    return out;
}

// f(x + v) by phase shift; exact on grid harmonics.
inline GridField shift_field(const GridField& f, Vec v) {
    return apply_multiplier(f, [v](Vec xi) {
        return std::exp(std::complex<double>(0.0, dot(xi, v)));
    });
}

// Spectral partial derivative along one axis (Nyquist mode zeroed).
inline GridField partial_derivative(const GridField& f, int axis) {
    const auto& g = f.grid();
    const double nyq = g.xi_max();
    return apply_multiplier(f, [axis, nyq](Vec xi) {
        const double x = xi[axis];
        if (std::abs(std::abs(x) - nyq) < 1e-12) return std::complex<double>(0.0, 0.0);
        return std::complex<double>(0.0, x);
    });
}

// Gradient: scalar (comps=1) -> d comps; d-vector -> d*d comps laid out so
// comp r*d+c = d u_r / d x_c (matches Mat row-major).
inline GridField gradient(const GridField& f) {
    const auto& g = f.grid();
    const int d = g.dim;
    GridField out(g, f.comps() * d);
    for (int r = 0; r < f.comps(); ++r) {
        for (int c = 0; c < d; ++c) {
            GridField comp_view(g, 1);
            const double* src = f.comp_data(r);
            for (std::size_t i = 0; i < g.size(); ++i) comp_view.at(i) = src[i];
            GridField dr = partial_derivative(comp_view, c);
            double* dst = out.comp_data(r * d + c);
            const double* v = dr.comp_data(0);
            for (std::size_t i = 0; i < g.size(); ++i) dst[i] = v[i];
        }
    }
    return out;
}

// Fraction of spectral energy carried by Nyquist-line modes; the band-limit
// diagnostic behind GridTooCoarse.
inline double nyquist_energy_fraction(const GridField& f) {
    const auto& g = f.grid();
    double total = 0.0, nyq = 0.0;
    for (int c = 0; c < f.comps(); ++c) {
        Spectrum s = to_spectrum(f, c);
        for (std::size_t k = 0; k < s.size(); ++k) {
            const double e = std::norm(s[k]);
            total += e;
            bool on_nyquist = false;
            if (g.dim == 1) {
                on_nyquist = (static_cast<int>(k) == g.N / 2);
            } else {
                const int k0 = static_cast<int>(k) / g.N;
                const int k1 = static_cast<int>(k) % g.N;
                on_nyquist = (k0 == g.N / 2) || (k1 == g.N / 2);
            }
            if (on_nyquist) nyq += e;
        }
    }
    return total > 0.0 ? nyq / total : 0.0;
}

// Trigonometric interpolant of a GridField: exact at grid points and on all
// resolved harmonics.  Coefficients are stored over k in [-N/2, N/2] per axis
// with half weights at |k| = N/2 (cosine symmetrization of the Nyquist mode),
// so evaluation is real-valued and smooth.
class SpectralInterpolant {
  public:
    SpectralInterpolant() = default;

    explicit SpectralInterpolant(const GridField& f) : grid_(f.grid()), comps_(f.comps()) {
        const int N = grid_.N;
        const int M = N / 2;
        const std::size_t stride = static_cast<std::size_t>(N + 1);
        const std::size_t per_comp = grid_.dim == 1 ? stride : stride * stride;
        coef_.assign(per_comp * static_cast<std::size_t>(comps_), {0.0, 0.0});
        const double inv_total = 1.0 / static_cast<double>(grid_.size());
        for (int c = 0; c < comps_; ++c) {
            Spectrum s = to_spectrum(f, c);
            for (std::size_t kraw = 0; kraw < s.size(); ++kraw) {
                int k0, k1 = 0;
                if (grid_.dim == 1) {
                    k0 = grid_.signed_k(static_cast<int>(kraw));
                } else {
                    k0 = grid_.signed_k(static_cast<int>(kraw) / N);
                    k1 = grid_.signed_k(static_cast<int>(kraw) % N);
                }
                // twiddle (-1)^{k0+k1} converts the raw FFT (indexed from
                // x = -L) into true Fourier coefficients
                const double tw = ((k0 + k1) & 1) ? -1.0 : 1.0;
                std::complex<double> v = s[kraw] * (tw * inv_total);
                place(c, k0, k1, v, M, stride);
            }
        }
    }

    const PeriodicGrid& grid() const { return grid_; }
    int comps() const { return comps_; }

    double value(Vec y, int c) const {
        if (grid_.dim == 1) return eval1(y[0], c, nullptr);
        return eval2(y, c, nullptr);
    }

    Vec value_vec(Vec y) const {
        Vec r = vec0();
        for (int c = 0; c < grid_.dim; ++c) r[c] = value(y, c);
        return r;
    }

    Mat value_mat(Vec y) const {
        Mat m = mat_zero();
        const int d = grid_.dim;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c)
                m[static_cast<std::size_t>(r) * 2 + c] = value(y, r * d + c);
        return m;
    }

    // value and gradient of component c at y
    double value_and_gradient(Vec y, int c, Vec& grad) const {
        if (grid_.dim == 1) {
            Vec g = vec0();
            const double v = eval1(y[0], c, &g);
            grad = g;
            return v;
        }
        Vec g = vec0();
        const double v = eval2(y, c, &g);
        grad = g;
        return v;
    }

  private:
    void place(int c, int k0, int k1, std::complex<double> v, int M, std::size_t stride) {
        // Nyquist bucket -M contributes half weight at both -M and +M
        struct Split { int k; double w; };
        auto split = [M](int k) {
            std::vector<Split> out;
            if (k == -M) {
                out.push_back({-M, 0.5});
                out.push_back({M, 0.5});
            } else {
                out.push_back({k, 1.0});
            }
            return out;
        };
        for (const auto& a : split(k0)) {
            if (grid_.dim == 1) {
                coef_[idx(c, a.k + M, 0, stride)] += a.w * v;
            } else {
                for (const auto& b : split(k1))
                    coef_[idx(c, a.k + M, b.k + M, stride)] += a.w * b.w * v;
            }
        }
    }

    std::size_t idx(int c, int i0, int i1, std::size_t stride) const {
        const std::size_t per_comp = grid_.dim == 1 ? stride : stride * stride;
        return static_cast<std::size_t>(c) * per_comp +
               static_cast<std::size_t>(i0) * (grid_.dim == 1 ? 1 : stride) +
               static_cast<std::size_t>(i1);
    }

    double eval1(double y, int c, Vec* grad) const {
        const int N = grid_.N, M = N / 2;
        const std::size_t stride = static_cast<std::size_t>(N + 1);
        const double w = M_PI / grid_.L;
        const std::complex<double> e(std::cos(w * y), std::sin(w * y));
        std::complex<double> p = std::polar(1.0, -w * M * y);
        std::complex<double> acc(0.0, 0.0), dacc(0.0, 0.0);
        const std::complex<double>* cf = coef_.data() + idx(c, 0, 0, stride);
        for (int k = -M; k <= M; ++k) {
            const std::complex<double> term = cf[k + M] * p;
            acc += term;
            if (grad) dacc += std::complex<double>(0.0, w * k) * term;
            p *= e;
        }
        if (grad) (*grad)[0] = dacc.real();
        return acc.real();
    }

    double eval2(Vec y, int c, Vec* grad) const {
        const int N = grid_.N, M = N / 2;
        const std::size_t stride = static_cast<std::size_t>(N + 1);
        const double w = M_PI / grid_.L;
        thread_local std::vector<std::complex<double>> p0, p1;
        p0.resize(stride);
        p1.resize(stride);
        const std::complex<double> e0(std::cos(w * y[0]), std::sin(w * y[0]));
        const std::complex<double> e1(std::cos(w * y[1]), std::sin(w * y[1]));
        p0[0] = std::polar(1.0, -w * M * y[0]);
        p1[0] = std::polar(1.0, -w * M * y[1]);
        for (std::size_t k = 1; k < stride; ++k) {
            p0[k] = p0[k - 1] * e0;
            p1[k] = p1[k - 1] * e1;
        }
        std::complex<double> acc(0.0, 0.0), d0(0.0, 0.0), d1(0.0, 0.0);
        const std::complex<double>* cf = coef_.data() + idx(c, 0, 0, stride);
        for (int a = 0; a <= N; ++a) {
            std::complex<double> row(0.0, 0.0), drow(0.0, 0.0);
            const std::complex<double>* line = cf + static_cast<std::size_t>(a) * stride;
            for (int b = 0; b <= N; ++b) {
                const std::complex<double> t = line[b] * p1[b];
                row += t;
                if (grad) drow += std::complex<double>(0.0, w * (b - M)) * t;
            }
            const std::complex<double> ax = p0[static_cast<std::size_t>(a)];
            acc += ax * row;
            if (grad) {
                d0 += std::complex<double>(0.0, w * (a - M)) * ax * row;
                d1 += ax * drow;
            }
        }
        if (grad) {
            (*grad)[0] = d0.real();
            (*grad)[1] = d1.real();
        }
        return acc.real();
    }

    PeriodicGrid grid_;
    int comps_ = 0;
    std::vector<std::complex<double>> coef_;
};

}  // namespace levylab
