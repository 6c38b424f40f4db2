#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>

namespace minclass {

/// Seedable random generator used for every stochastic draw in the library.
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard, and all conversions to doubles are done explicitly here rather
/// than through std::*_distribution (whose algorithms are
/// implementation-defined). Substreams are derived by hashing a seed with an
/// integer path, so independent components (CV, chains, replicates) get
/// decorrelated, reproducible streams.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    static std::uint64_t mix(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
        std::uint64_t h = splitmix(seed);
        for (std::uint64_t tag : path) {
            h = splitmix(h ^ (0x9E3779B97F4A7C15ULL * (tag + 1)));
        }
        return h;
    }

    static Rng substream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
        return Rng(mix(seed, path));
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform on (0, 1]; safe as a log() argument.
    double uniform_pos() {
        return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller; the paired value is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double u1 = uniform_pos();
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 6.283185307179586476925286766559 * u2;
        spare_ = radius * std::sin(angle);
        has_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Unbiased integer in [0, bound) by rejection.
    int uniform_int(int bound) {
        const std::uint64_t n = static_cast<std::uint64_t>(bound);
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t draw;
        do {
            draw = next_u64();
        } while (draw >= limit);
        return static_cast<int>(draw % n);
    }

private:
    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9E3779B97F4A7C15ULL;
        x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
        x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
        return x ^ (x >> 31);
    }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace minclass
