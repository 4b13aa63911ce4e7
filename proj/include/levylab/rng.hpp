#pragma once

#include <cstdint>
#include <random>

namespace levylab {

// Stream splitting: path k of a batch draws from seed derive_seed(master, k).
// The mix is splitmix64 over the concatenated words, so any build reproduces
// batch statistics from the master seed alone.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t k) {
    return splitmix64(splitmix64(master) ^ splitmix64(k + 0x632be59bd9b4e019ULL));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        return std::generate_canonical<double, 53>(eng_);
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // strictly positive uniform, safe for logs and inverse transforms
    double uniform_pos() {
        double u;
        do { u = uniform(); } while (u <= 0.0);
        return u;
    }

    double exponential(double rate) { return -std::log(1.0 - uniform()) / rate; }

    double normal() {
        std::normal_distribution<double> n(0.0, 1.0);
        return n(eng_);
    }

    // index in [0, n)
    std::size_t index(std::size_t n) {
        std::uniform_int_distribution<std::size_t> d(0, n - 1);
        return d(eng_);
    }

    std::mt19937_64& engine() { return eng_; }

  private:
    std::mt19937_64 eng_;
};

}  // namespace levylab
