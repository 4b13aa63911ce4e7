#pragma once

#include <complex>
#include <map>
#include <mutex>
#include <vector>

#include <fftw3.h>

namespace levylab {

// Thin wrapper over FFTW complex transforms (1-d and 2-d, power-of-two sizes).
// Plans are created once per (rank, N, direction) with FFTW_ESTIMATE and
// reused through fftw_execute_dft; creation is serialized, execution is not.
class Fft {
  public:
    // in-place, unnormalized forward transform of an N^rank complex array
    static void forward(int rank, int n, std::complex<double>* data) {
        execute(rank, n, FFTW_FORWARD, data);
    }

    // in-place inverse transform, normalized by 1/N^rank
    static void inverse(int rank, int n, std::complex<double>* data) {
        execute(rank, n, FFTW_BACKWARD, data);
        std::size_t total = 1;
        for (int r = 0; r < rank; ++r) total *= static_cast<std::size_t>(n);
        const double inv = 1.0 / static_cast<double>(total);
        for (std::size_t i = 0; i < total; ++i) data[i] *= inv;
    }

  private:
    static void execute(int rank, int n, int sign, std::complex<double>* data) {
        fftw_plan plan = plan_for(rank, n, sign);
        auto* p = reinterpret_cast<fftw_complex*>(data);
        fftw_execute_dft(plan, p, p);
    }

    static fftw_plan plan_for(int rank, int n, int sign) {
        static std::map<std::tuple<int, int, int>, fftw_plan> cache;
        static std::mutex mtx;
        std::lock_guard<std::mutex> lock(mtx);
        auto key = std::make_tuple(rank, n, sign);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
        std::vector<std::complex<double>> scratch;
        std::size_t total = 1;
        for (int r = 0; r < rank; ++r) total *= static_cast<std::size_t>(n);
        scratch.resize(total);
        auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
        std::vector<int> dims(static_cast<std::size_t>(rank), n);
        fftw_plan plan = fftw_plan_dft(rank, dims.data(), p, p, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        cache.emplace(key, plan);
        return plan;
    }
};

}  // namespace levylab
