#pragma once

#include <graphpoly/multigraph.hpp>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace graphpoly {

/// Reproducible RNG: std::mt19937_64 (algorithm fixed by the C++ standard)
/// with explicit rejection sampling for bounded draws, so streams are
/// identical across platforms and standard libraries.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // Uniform in [0, n), modulo-bias free.
    uint64_t bounded(uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::bounded: n must be positive");
        uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        uint64_t r;
        do {
            r = gen_();
        } while (r >= limit);
        return r % n;
    }

    double uniform01() { return (gen_() >> 11) * 0x1.0p-53; }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[bounded(i)]);
    }

private:
    std::mt19937_64 gen_;
};

/// Configuration (pairing) model: uniformly pair the n*d half-edge stubs and
/// reject until the result is simple. Uniform over simple d-regular graphs,
/// deterministic for a given seed.
inline Multigraph random_regular(int n, int d, uint64_t seed) {
    if (n <= 0 || d < 0) throw std::invalid_argument("random_regular: need n > 0, d >= 0");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("random_regular: n*d must be even");
    if (d >= n) throw std::invalid_argument("random_regular: need d < n");

    Rng rng(seed);
    std::vector<int> stubs(static_cast<size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < d; ++i) stubs[static_cast<size_t>(v) * d + i] = v;

    constexpr int kMaxAttempts = 1000000;
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        rng.shuffle(stubs);
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(stubs.size() / 2);
        bool simple = true;
        for (size_t i = 0; i < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                simple = false;
                break;
            }
            pairs.push_back({std::min(u, v), std::max(u, v)});
        }
        if (!simple) continue;
        std::sort(pairs.begin(), pairs.end());
        if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) continue;
        Multigraph g(n);
        for (auto [u, v] : pairs) g.add_edge(u, v);
        return g;
    }
    throw std::runtime_error("random_regular: rejection sampling did not converge");
}

}  // namespace graphpoly
