// sampling.cpp — Seeded rejection sampling of spectral points

#include "gaudin/sampling.hpp"

#include <cmath>

namespace gaudin {

double SampleRng::uniform() {
    // 53-bit mantissa mapping, identical on every platform.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SampleRng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

Complex SampleRng::in_disk(double radius) {
    for (;;) {
        const double x = uniform(-radius, radius);
        const double y = uniform(-radius, radius);
        if (x * x + y * y <= radius * radius)
            return {x, y};
    }
}

Complex SampleRng::spectral_point(std::span<const Complex> avoid,
                                  double min_dist, double max_abs) {
    for (int attempt = 0; attempt < 100000; ++attempt) {
        const Complex z = in_disk(max_abs);
        bool ok = true;
        for (const Complex& p : avoid)
            if (std::abs(z - p) < min_dist) { ok = false; break; }
        if (ok)
            return z;
    }
    throw Error("spectral-point sampling failed; pole set too crowded");
}

std::vector<Complex> SampleRng::spectral_points(std::span<const Complex> poles, int count,
                                                double min_dist, double max_abs) {
    std::vector<Complex> avoid(poles.begin(), poles.end());
    std::vector<Complex> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        const Complex z = spectral_point(avoid, min_dist, max_abs);
        out.push_back(z);
        avoid.push_back(z);
    }
    return out;
}

} // namespace gaudin
