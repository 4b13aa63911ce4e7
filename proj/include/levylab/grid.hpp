#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "levylab/errors.hpp"
#include "levylab/vec.hpp"

namespace levylab {

// Uniform periodic grid on [-L, L)^d with N (a power of two, N >= 16) points
// per axis.  Grid frequencies are xi_k = pi k / L, |k| <= N/2.
struct PeriodicGrid {
    int dim = 1;
    double L = 8.0;
    int N = 64;

    PeriodicGrid() = default;
    PeriodicGrid(int dim_, double L_, int N_) : dim(dim_), L(L_), N(N_) {
        if (dim < 1 || dim > 2) throw ParameterOutOfRange("grid dim must be 1 or 2");
        if (L <= 0) throw ParameterOutOfRange("grid half-period must be positive");
        if (N < 16 || (N & (N - 1)) != 0)
            throw ParameterOutOfRange("grid N must be a power of two >= 16");
    }

    std::size_t size() const {
        return dim == 1 ? static_cast<std::size_t>(N)
                        : static_cast<std::size_t>(N) * static_cast<std::size_t>(N);
    }

    double spacing() const { return 2.0 * L / N; }
    double cell_volume() const { return dim == 1 ? spacing() : spacing() * spacing(); }
    double volume() const { return std::pow(2.0 * L, dim); }

    // flattened index <-> lattice coordinates (axis-0 major)
    std::size_t index(int i0, int i1 = 0) const {
        return dim == 1 ? static_cast<std::size_t>(i0)
                        : static_cast<std::size_t>(i0) * N + static_cast<std::size_t>(i1);
    }

    Vec point(std::size_t idx) const {
        const double h = spacing();
        if (dim == 1) return vec1(-L + h * static_cast<double>(idx));
        const int i0 = static_cast<int>(idx / static_cast<std::size_t>(N));
        const int i1 = static_cast<int>(idx % static_cast<std::size_t>(N));
        return vec2(-L + h * i0, -L + h * i1);
    }

    // signed integer frequency of a raw FFT bucket (Nyquist maps to -N/2)
    int signed_k(int k) const { return k < N / 2 ? k : k - N; }

    double xi_axis(int k) const { return M_PI * signed_k(k) / L; }

    Vec xi(std::size_t idx) const {
        if (dim == 1) return vec1(xi_axis(static_cast<int>(idx)));
        const int k0 = static_cast<int>(idx / static_cast<std::size_t>(N));
        const int k1 = static_cast<int>(idx % static_cast<std::size_t>(N));
        return vec2(xi_axis(k0), xi_axis(k1));
    }

    double xi_max() const { return M_PI * (N / 2) / L; }

    // shortest periodic displacement from a to b, componentwise in (-L, L]
    Vec min_image(Vec a, Vec b) const {
        Vec r = b - a;
        for (int c = 0; c < dim; ++c) {
            const double span = 2.0 * L;
            r[c] -= span * std::round(r[c] / span);
        }
        return r;
    }

    // wrap a point into [-L, L)
    Vec wrap(Vec x) const {
        for (int c = 0; c < dim; ++c) {
            const double span = 2.0 * L;
            x[c] -= span * std::floor((x[c] + L) / span);
        }
        return x;
    }

    bool operator==(const PeriodicGrid& o) const {
        return dim == o.dim && L == o.L && N == o.N;
    }
};

// Function sampled on a PeriodicGrid; scalar (comps=1), d-vector (comps=d) or
// d x d matrix valued (comps=d*d, row-major).  Storage is component-major.
class GridField {
  public:
    GridField() = default;
    GridField(const PeriodicGrid& grid, int comps)
        : grid_(grid), comps_(comps), v_(grid.size() * static_cast<std::size_t>(comps), 0.0) {}

    static GridField zeros(const PeriodicGrid& grid, int comps = 1) {
        return GridField(grid, comps);
    }

    static GridField constant(const PeriodicGrid& grid, double value, int comps = 1) {
        GridField f(grid, comps);
        std::fill(f.v_.begin(), f.v_.end(), value);
        return f;
    }

    const PeriodicGrid& grid() const { return grid_; }
    int comps() const { return comps_; }
    std::size_t npoints() const { return grid_.size(); }

    double& at(std::size_t i, int c = 0) { return v_[static_cast<std::size_t>(c) * npoints() + i]; }
    double at(std::size_t i, int c = 0) const {
        return v_[static_cast<std::size_t>(c) * npoints() + i];
    }

    double* comp_data(int c) { return v_.data() + static_cast<std::size_t>(c) * npoints(); }
    const double* comp_data(int c) const {
        return v_.data() + static_cast<std::size_t>(c) * npoints();
    }

    // vector-valued access helpers (comps == dim)
    Vec vec_at(std::size_t i) const {
        Vec r = vec0();
        for (int c = 0; c < grid_.dim; ++c) r[c] = at(i, c);
        return r;
    }
    void set_vec(std::size_t i, Vec v) {
        for (int c = 0; c < grid_.dim; ++c) at(i, c) = v[c];
    }

    Mat mat_at(std::size_t i) const {
        Mat m = mat_zero();
        const int d = grid_.dim;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) m[static_cast<std::size_t>(r) * 2 + c] = at(i, r * d + c);
        return m;
    }
    void set_mat(std::size_t i, const Mat& m) {
        const int d = grid_.dim;
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) at(i, r * d + c) = m[static_cast<std::size_t>(r) * 2 + c];
    }

    std::vector<double>& raw() { return v_; }
    const std::vector<double>& raw() const { return v_; }

    GridField& operator+=(const GridField& o) {
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    GridField& operator-=(const GridField& o) {
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    GridField& operator*=(double s) {
        for (double& x : v_) x *= s;
        return *this;
    }

    friend GridField operator+(GridField a, const GridField& b) { return a += b; }
    friend GridField operator-(GridField a, const GridField& b) { return a -= b; }
    friend GridField operator*(double s, GridField a) { return a *= s; }

    double sup_norm() const {
        double m = 0.0;
        for (double x : v_) m = std::max(m, std::abs(x));
        return m;
    }

  private:
    PeriodicGrid grid_;
    int comps_ = 1;
    std::vector<double> v_;
};

}  // namespace levylab
