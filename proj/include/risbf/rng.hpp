#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace risbf {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Derive an independent seed for stream `stream`, item `idx` of a base seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream, std::uint64_t idx = 0) {
    return splitmix64(splitmix64(base ^ (0xA0761D6478BD642FULL * (stream + 1))) ^ idx);
}

// mt19937_64 with explicit value derivation so that generated doubles are
// identical across standard library implementations. Normal draws use
// Box-Muller without caching; state serializes to text exactly.
class Rng {
public:
    explicit Rng(std::uint64_t seed = 0) : eng_(seed) {}

    std::uint64_t u64() { return eng_(); }

    // uniform on [0, 1) with 53 mantissa bits
    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // standard normal via Box-Muller (no cached spare)
    double normal() {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // CN(0,1): real/imag each N(0, 1/2)
    void cnormal(double& re, double& im) {
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double u2 = uniform();
        double r = std::sqrt(-std::log(u1));  // radius for variance 1/2 per component
        re = r * std::cos(2.0 * M_PI * u2);
        im = r * std::sin(2.0 * M_PI * u2);
    }

    // bounded integer in [0, n)
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(eng_() % n); }

    // Fisher-Yates; spelled out so shuffles are identical across platforms
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = index(i);
            std::swap(v[i - 1], v[j]);
        }
    }

    std::string serialize() const {
        std::ostringstream os;
        os << eng_;
        return os.str();
    }

    void deserialize(const std::string& s) {
        std::istringstream is(s);
        is >> eng_;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace risbf
