#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hpo/kernel.hpp"

namespace hpo {

/// Deterministic sampler for half-plane points and kernel combos.
/// Points are drawn as Re = exp(U[-1.5, 1.5]), Im = U[-4, 4], which spans
/// both near-boundary and deep-interior regimes. Uniform deviates are built
/// from the top 53 bits of an mt19937_64 draw so streams are reproducible
/// independent of the standard library's distribution implementations.
class PointSampler {
public:
    explicit PointSampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi);

    HalfPlanePoint point();
    std::vector<HalfPlanePoint> points(int n);

    /// Complex coefficient from the box [-2, 2]^2.
    Complex coefficient();

    /// Random combo with a term count in [min_terms, max_terms].
    KernelCombo combo(int min_terms = 2, int max_terms = 4);
    std::vector<KernelCombo> combos(int n, int min_terms = 2, int max_terms = 4);

private:
    std::mt19937_64 rng_;
};

/// Stable 64-bit hash for deriving per-suite seeds from (seed, name).
std::uint64_t seed_for(std::uint64_t seed, const std::string& name);

} // namespace hpo
