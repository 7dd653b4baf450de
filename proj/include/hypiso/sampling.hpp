#pragma once

// Seeded random sampling. Every trial owns a generator derived from
// (seed, stream), so results do not depend on the order trials run in.

#include "hypiso/polygon.hpp"

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

namespace hypiso {

class TrialRng {
public:
    /// Generator for trial `stream` of a campaign seeded with `seed`. Extra
    /// words further separate campaigns that share a seed.
    TrialRng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream);

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi);
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);

private:
    std::mt19937_64 engine_;
};

/// n positive weights drawn from uniform(0.1, 1), scaled to sum to `total`.
std::vector<double> random_partition(TrialRng& rng, int n, double total);

/// k values each above `lower`, summing to `total`:
/// lower + (total - k lower) w_i / sum(w) with w_i from uniform(0.1, 1).
std::vector<double> random_split(TrialRng& rng, int k, double total, double lower);

/// Random cyclic polygon with the given circumradius.
CyclicPolygon random_cyclic(TrialRng& rng, int n, double circumradius);

/// Random tangential polygon with the given inradius. Partitions with an
/// ideal vertex are redrawn up to `attempts` times; throws IdealVertex after that.
TangentialPolygon random_tangential(TrialRng& rng, int n, double inradius, int attempts = 1000);

} // namespace hypiso
