#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace schatten {

using Complex = std::complex<double>;

namespace util {

// Derives an independent stream seed from a master seed. splitmix64 step:
// statistically decorrelated for distinct indices, stable across platforms.
inline std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
    std::uint64_t z = master + 0x9e3779b97f4a7c15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

// FNV-1a over a byte range; used for input digests in scenario reports.
inline std::uint64_t fnv1a(const void* data, std::size_t bytes) {
    const auto* p = static_cast<const unsigned char*>(data);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::size_t i = 0; i < bytes; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(std::uint64_t v);

// Number of worker threads honored by the batch helpers: SCHATTEN_THREADS if
// set to a positive integer, otherwise the hardware count.
int thread_count();

// Runs body(i) for i in [0, n). Work is split into contiguous chunks, one
// per worker, so results written by index are deterministic regardless of
// the thread count. Falls back to a plain loop when one thread suffices.
void parallel_for(int n, const std::function<void(int)>& body);

}  // namespace util
}  // namespace schatten
