#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace potc {

// Thin deterministic wrapper over mt19937_64. Draw helpers avoid
// std::uniform_int_distribution so streams are identical across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    int below(int m) { return m <= 1 ? 0 : static_cast<int>(next() % static_cast<std::uint64_t>(m)); }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) {
        if (p <= 0.0) return false;
        if (p >= 1.0) return true;
        return unit() < p;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (int i = static_cast<int>(v.size()) - 1; i > 0; --i)
            std::swap(v[static_cast<size_t>(i)], v[static_cast<size_t>(below(i + 1))]);
    }

    // k distinct values from {1..m}, sorted.
    std::vector<int> k_subset(int k, int m) {
        std::vector<int> pool(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) pool[static_cast<size_t>(i)] = i + 1;
        for (int i = 0; i < k; ++i) {
            int j = i + below(m - i);
            std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
        }
        pool.resize(static_cast<size_t>(k));
        std::sort(pool.begin(), pool.end());
        return pool;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace potc
