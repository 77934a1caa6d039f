#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace girthpath {

// Deterministic seeded randomness. mt19937_64 output is pinned by the
// standard and the draw helpers below avoid std::uniform_int_distribution
// (whose mapping is implementation-defined), so a given seed produces the
// same stream on every platform.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform-enough value in [0, k). Modulo mapping; the bias at 64 bits is
    // far below anything the statistical tests can see.
    std::uint64_t bounded(std::uint64_t k) { return engine_() % k; }

    bool bernoulli(double p) {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    std::vector<int> permutation(int k) {
        std::vector<int> p(k);
        for (int i = 0; i < k; ++i) p[i] = i;
        shuffle(p);
        return p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace girthpath
