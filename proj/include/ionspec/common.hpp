#pragma once

// Shared conventions for the whole library.
//
// Units: energies and frequencies in kHz (h = 1), times in ms, so a level at
// E kHz accumulates phase exp(-i 2*pi*E*t) over t ms. Trap secular frequencies
// and the beatnote detuning are quoted in MHz and converted at the point of use.
//
// Spin configurations are indices into the sigma_x product basis. Bit value 1
// means "up along x", bit 0 "down along x". Spin 0 is the leftmost ion and maps
// to the most significant bit, so for 8 spins |11111111> = 255 and the state
// with only spin 0 flipped, |01111111>, is 127.

#include <bit>
#include <cmath>
#include <cstdint>
#include <future>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace ionspec {

inline constexpr double two_pi = 6.283185307179586476925286766559;

using config_t = std::uint64_t;

inline int bit_of_spin(config_t config, int spin, int n_spins) {
    return static_cast<int>((config >> (n_spins - 1 - spin)) & 1u);
}

// +1 for up along x, -1 for down.
inline int spin_sign(config_t config, int spin, int n_spins) {
    return bit_of_spin(config, spin, n_spins) ? +1 : -1;
}

inline config_t flip_spin(config_t config, int spin, int n_spins) {
    return config ^ (config_t{1} << (n_spins - 1 - spin));
}

inline config_t polarized_config(int n_spins) {
    return (config_t{1} << n_spins) - 1;
}

// Left-right mirror image of a configuration (ion i <-> ion N-1-i).
inline config_t mirror_config(config_t config, int n_spins) {
    config_t out = 0;
    for (int i = 0; i < n_spins; ++i)
        out |= ((config >> i) & 1u) << (n_spins - 1 - i);
    return out;
}

inline int hamming_distance(config_t a, config_t b) {
    return std::popcount(a ^ b);
}

inline std::string config_to_string(config_t config, int n_spins) {
    std::string s(n_spins, '0');
    for (int i = 0; i < n_spins; ++i)
        if (bit_of_spin(config, i, n_spins)) s[i] = '1';
    return s;
}

// ---------------------------------------------------------------------------
// Seeded random streams.
//
// A single campaign seed is expanded into independent per-task streams by
// mixing the seed with a task label (splitmix64). Results are then identical
// no matter how tasks are scheduled.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t label) {
    return splitmix64(splitmix64(seed) ^ splitmix64(label * 0x9e3779b97f4a7c15ull + 1));
}

inline std::uint64_t hash_label(const std::string& label) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : label) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::mt19937_64 make_rng(std::uint64_t seed, std::uint64_t label = 0) {
    return std::mt19937_64(derive_seed(seed, label));
}

// Uniform double in [0,1). std::uniform_real_distribution is implementation
// defined; this mapping is portable and reproducible.
inline double uniform_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Box-Muller normal deviate from the portable uniform source.
inline double normal_double(std::mt19937_64& rng) {
    double u1 = uniform_double(rng);
    double u2 = uniform_double(rng);
    while (u1 <= 0.0) u1 = uniform_double(rng);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

// ---------------------------------------------------------------------------

inline std::vector<double> linspace(double lo, double hi, int n) {
    if (n < 1) throw std::invalid_argument("linspace: need at least one point");
    std::vector<double> xs(n);
    if (n == 1) {
        xs[0] = lo;
        return xs;
    }
    for (int i = 0; i < n; ++i) xs[i] = lo + (hi - lo) * i / (n - 1);
    return xs;
}

// Index-deterministic parallel map: results are assembled by task index, so
// output is identical for any worker count (including 1).
template <class Fn>
void parallel_for(int n_tasks, Fn&& fn, int n_workers = 0) {
    if (n_workers <= 0) {
        n_workers = static_cast<int>(std::thread::hardware_concurrency());
        if (n_workers <= 0) n_workers = 1;
    }
    if (n_workers == 1 || n_tasks <= 1) {
        for (int i = 0; i < n_tasks; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    auto worker = [&] {
        for (;;) {
            const int i = next.fetch_add(1);
            if (i >= n_tasks) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

}  // namespace ionspec
