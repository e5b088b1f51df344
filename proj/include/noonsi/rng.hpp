#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "noonsi/errors.hpp"
#include "noonsi/units.hpp"

namespace noonsi {

/// SplitMix64 finalizer (Steele, Lea & Flood, OOPSLA 2014).
inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-based pseudo-random generator.
///
/// Output i of stream s under seed k is splitmix64 applied to a per-stream
/// key plus i * golden-gamma: draws depend only on (seed, stream, counter),
/// so independent streams for Monte-Carlo trials are derived as
/// CounterRng(seed, trial_index) and results are identical for any degree
/// of parallelism or evaluation order.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
        : key_(splitmix64(splitmix64(seed) ^ splitmix64(0x5851F42D4C957F2DULL + stream))) {}

    std::uint64_t next_u64() {
        counter_ += 0x9E3779B97F4A7C15ULL;
        return splitmix64(key_ ^ counter_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Standard normal via Box-Muller (pairs cached).
    double normal() {
        if (have_cached_) {
            have_cached_ = false;
            return cached_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        cached_ = r * std::sin(kTwoPi * u2);
        have_cached_ = true;
        return r * std::cos(kTwoPi * u2);
    }

    /// Poisson sample: Knuth's product method for small means, rounded
    /// Gaussian approximation above (same split as Geant4's G4Poisson).
    std::uint64_t poisson(double mean) {
        if (mean < 0.0) throw NumericError("poisson mean must be nonnegative");
        if (mean == 0.0) return 0;
        if (mean <= 16.0) {
            const double limit = std::exp(-mean);
            std::uint64_t k = 0;
            double p = 1.0;
            do {
                ++k;
                p *= uniform();
            } while (p > limit);
            return k - 1;
        }
        const double x = mean + std::sqrt(mean) * normal();
        return x <= 0.0 ? 0 : static_cast<std::uint64_t>(x + 0.5);
    }

private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool have_cached_ = false;
    double cached_ = 0.0;
};

/// Inverse-CDF sampler over a discrete nonnegative weight vector.
/// Exact for the discretized model; zero-weight cells are never drawn.
class DiscreteSampler {
public:
    explicit DiscreteSampler(const std::vector<double>& weights) {
        cumulative_.reserve(weights.size());
        double total = 0.0;
        for (double w : weights) {
            if (!(w >= 0.0) || !std::isfinite(w))
                throw NumericError("discrete sampler: weights must be finite and nonnegative");
            total += w;
            cumulative_.push_back(total);
        }
        if (total <= 0.0)
            throw NumericError("discrete sampler: total weight is zero (degenerate density)");
        total_ = total;
    }

    std::size_t draw(CounterRng& rng) const {
        const double u = rng.uniform() * total_;
        // first index with cumulative > u
        std::size_t lo = 0, hi = cumulative_.size() - 1;
        while (lo < hi) {
            const std::size_t mid = (lo + hi) / 2;
            if (cumulative_[mid] > u) hi = mid; else lo = mid + 1;
        }
        return lo;
    }

    double total() const { return total_; }

private:
    std::vector<double> cumulative_;
    double total_ = 0.0;
};

} // namespace noonsi
