#include "hpo/sampling.hpp"

#include <cmath>

namespace hpo {

double PointSampler::uniform(double lo, double hi) {
    const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

HalfPlanePoint PointSampler::point() {
    const double re = std::exp(uniform(-1.5, 1.5));
    const double im = uniform(-4.0, 4.0);
    return HalfPlanePoint(Complex{re, im});
}

std::vector<HalfPlanePoint> PointSampler::points(int n) {
    std::vector<HalfPlanePoint> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.push_back(point());
    }
    return out;
}

Complex PointSampler::coefficient() {
    const double re = uniform(-2.0, 2.0);
    const double im = uniform(-2.0, 2.0);
    return Complex{re, im};
}

KernelCombo PointSampler::combo(int min_terms, int max_terms) {
    const int span = max_terms - min_terms + 1;
    const int n = min_terms + static_cast<int>(rng_() % static_cast<std::uint64_t>(span));
    std::vector<ScaledKernel> terms;
    terms.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const Complex c = coefficient();
        terms.push_back({c, point()});
    }
    return KernelCombo(std::move(terms));
}

std::vector<KernelCombo> PointSampler::combos(int n, int min_terms, int max_terms) {
    std::vector<KernelCombo> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        out.push_back(combo(min_terms, max_terms));
    }
    return out;
}

std::uint64_t seed_for(std::uint64_t seed, const std::string& name) {
    // FNV-1a over the name, mixed with the user seed.
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : name) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h ^ (seed * 0x9e3779b97f4a7c15ull);
}

} // namespace hpo
