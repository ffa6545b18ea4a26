#pragma once

#include "lrpr/types.hpp"

#include <cmath>
#include <cstdint>
#include <string_view>

namespace lrpr {

/// Identifies one reproducible random stream.  The same (base_seed, stream_id)
/// pair always yields the bitwise-identical sample sequence, so parallel
/// trials can derive their own streams and stay reproducible regardless of
/// scheduling.
struct RngSpec {
    std::uint64_t base_seed = 0;
    std::uint64_t stream_id = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
}

} // namespace detail

/// 64-bit FNV-1a, used to derive stream ids from purpose tags.
inline std::uint64_t hash_str(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

/// Mixes a purpose tag and an index into a fresh stream id.
inline std::uint64_t derive_stream(std::uint64_t purpose, std::uint64_t index) {
    std::uint64_t s = purpose ^ (0x9e3779b97f4a7c15ull + index);
    detail::splitmix64(s);
    return detail::splitmix64(s);
}

inline std::uint64_t derive_stream(std::string_view purpose, std::uint64_t index) {
    return derive_stream(hash_str(purpose), index);
}

inline RngSpec substream(const RngSpec& rng, std::string_view purpose, std::uint64_t index = 0) {
    return {rng.base_seed, derive_stream(rng.stream_id ^ hash_str(purpose), index)};
}

/// xoshiro256++ seeded through splitmix64.  Box-Muller for normals (no
/// rejection, so consumption per sample is fixed).
class Rng {
  public:
    explicit Rng(const RngSpec& spec) {
        std::uint64_t seed = spec.base_seed ^ detail::rotl(spec.stream_id, 17)
                             ^ 0x6a09e667f3bcc908ull;
        for (auto& w : state_) w = detail::splitmix64(seed);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = detail::rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = detail::rotl(state_[3], 45);
        return result;
    }

    /// Uniform on [0, 1).
    double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal N(0, 1).
    double gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = 1.0 - uniform();  // (0, 1]
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * M_PI * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    /// Standard complex normal CN(0, 1): (g1 + i g2)/sqrt(2), so E|g|^2 = 1.
    cplx cgaussian() {
        const double re = gaussian();
        const double im = gaussian();
        return cplx(re, im) / std::sqrt(2.0);
    }

    rvec gaussian_vec(Index n) {
        rvec v(n);
        for (Index i = 0; i < n; ++i) v[i] = gaussian();
        return v;
    }

    cvec cgaussian_vec(Index n) {
        cvec v(n);
        for (Index i = 0; i < n; ++i) v[i] = cgaussian();
        return v;
    }

    rmat gaussian_mat(Index rows, Index cols) {
        rmat m(rows, cols);
        for (Index j = 0; j < cols; ++j)
            for (Index i = 0; i < rows; ++i) m(i, j) = gaussian();
        return m;
    }

    cmat cgaussian_mat(Index rows, Index cols) {
        cmat m(rows, cols);
        for (Index j = 0; j < cols; ++j)
            for (Index i = 0; i < rows; ++i) m(i, j) = cgaussian();
        return m;
    }

  private:
    std::uint64_t state_[4] = {};
    double spare_ = 0;
    bool have_spare_ = false;
};

} // namespace lrpr
