#pragma once

#include <cstdint>

namespace octorank {

/// Deterministic splitmix64 stream.
///
/// Audits and reports promise byte-identical output for a given seed, so we
/// cannot rely on std::uniform_int_distribution (its output is
/// implementation-defined). This tiny generator is fully pinned down.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform-ish integer in [lo, hi]. Modulo bias is irrelevant for the
    /// tiny ranges used here and keeps the stream reproducible everywhere.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    /// Derives an independent child stream; used to give every audit claim
    /// its own reproducible sequence.
    Rng fork(std::uint64_t salt) {
        return Rng(next_u64() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x632be59bd9b4e019ULL));
    }

private:
    std::uint64_t state_;
};

}  // namespace octorank
