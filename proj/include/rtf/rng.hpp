#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace rtf {

// Seeded generator wrapper. mt19937_64 output is pinned by the standard, and
// we avoid std::uniform_* distributions so streams are identical across
// compilers for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // uniform in [0, k)
    int below(int k) { return int(next() % std::uint64_t(k)); }

    double unit() { return double(next() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (int i = int(v.size()) - 1; i > 0; --i) {
            int j = below(i + 1);
            std::swap(v[i], v[j]);
        }
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace rtf
