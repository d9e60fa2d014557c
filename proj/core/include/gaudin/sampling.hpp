// sampling.hpp — Deterministic seeded draws of spectral points

#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "gaudin/hilbert.hpp"

namespace gaudin {

// Seeded generator with a platform-independent uniform mapping (the raw
// engine output is used directly, no std distribution objects).
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : engine_(seed) {}

    double uniform();                       // [0, 1)
    double uniform(double lo, double hi);
    Complex in_disk(double radius);         // area-uniform

    // Point with |z| ≤ max_abs staying at least min_dist away from every
    // entry of `avoid` (declared poles plus previously drawn tuple members).
    Complex spectral_point(std::span<const Complex> avoid,
                           double min_dist = 0.5, double max_abs = 2.0);

    // `count` points, each clear of the poles and of one another.
    std::vector<Complex> spectral_points(std::span<const Complex> poles, int count,
                                         double min_dist = 0.5, double max_abs = 2.0);

private:
    std::mt19937_64 engine_;
};

} // namespace gaudin
