#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "mldeg/rational.hpp"

namespace mldeg {

// Uniform double in [0, 1) from the top 53 bits of the generator output.
// Used instead of std::uniform_real_distribution, whose results are not
// pinned down by the standard; this one is bit-identical everywhere.
inline double canonical_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// splitmix64 finalizer, used to derive independent stream seeds from a base
// seed and a salt without correlated low bits.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (salt + 1ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct DataVector {
    std::vector<Complex> lambda;
    std::uint64_t seed = 0;
};

// Generic complex weights: moduli in [1/2, 2), angles uniform. Keeping the
// moduli bounded away from 0 and infinity keeps the critical systems well
// scaled for path tracking.
inline DataVector sample_generic_data(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("data dimension must be positive");
    DataVector data;
    data.seed = seed;
    data.lambda.reserve(static_cast<size_t>(n));
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n; ++i) {
        double modulus = 0.5 + 1.5 * canonical_double(rng);
        double angle = 2.0 * std::numbers::pi * canonical_double(rng);
        data.lambda.push_back(std::polar(modulus, angle));
    }
    return data;
}

}  // namespace mldeg
