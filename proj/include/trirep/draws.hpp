#pragma once

// Seeded uniform draws with a fixed mapping from the 64-bit engine, so runs
// reproduce bit for bit across standard libraries.

#include <cstdint>
#include <random>

namespace trirep {

class Draws {
public:
    explicit Draws(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [lo, hi).
    double uniform(double lo, double hi) {
        const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
        return lo + (hi - lo) * u;
    }

    int integer(int lo, int hi) { return lo + static_cast<int>(uniform(0, 1) * (hi - lo + 1)); }

private:
    std::mt19937_64 engine_;
};

}  // namespace trirep
