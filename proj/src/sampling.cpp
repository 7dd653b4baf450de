#include "hypiso/sampling.hpp"

#include "hypiso/error.hpp"
#include "hypiso/hypmath.hpp"

#include <numeric>

namespace hypiso {

namespace {

std::seed_seq make_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> stream) {
    std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    for (std::uint64_t s : stream) {
        words.push_back(static_cast<std::uint32_t>(s));
        words.push_back(static_cast<std::uint32_t>(s >> 32));
    }
    return std::seed_seq(words.begin(), words.end());
}

} // namespace

TrialRng::TrialRng(std::uint64_t seed, std::initializer_list<std::uint64_t> stream) {
    auto seq = make_seed(seed, stream);
    engine_.seed(seq);
}

double TrialRng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double TrialRng::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

int TrialRng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(static_cast<std::uint64_t>(uniform() * static_cast<double>(span)) % span);
}

std::vector<double> random_partition(TrialRng& rng, int n, double total) {
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "partition needs at least one part");
    std::vector<double> w(static_cast<size_t>(n));
    for (double& x : w)
        x = rng.uniform(0.1, 1.0);
    const double sum = std::accumulate(w.begin(), w.end(), 0.0);
    for (double& x : w)
        x *= total / sum;
    return w;
}

std::vector<double> random_split(TrialRng& rng, int k, double total, double lower) {
    if (total <= k * lower)
        throw Error(ErrorCode::InvalidTotal, "total does not exceed k times the lower limit");
    auto parts = random_partition(rng, k, total - k * lower);
    for (double& x : parts)
        x += lower;
    return parts;
}

CyclicPolygon random_cyclic(TrialRng& rng, int n, double circumradius) {
    for (;;) {
        auto thetas = random_partition(rng, n, 2.0 * kPi);
        bool ok = true;
        for (double t : thetas)
            ok = ok && t < kPi;
        if (ok)
            return CyclicPolygon::make(circumradius, std::move(thetas));
    }
}

TangentialPolygon random_tangential(TrialRng& rng, int n, double inradius, int attempts) {
    for (int i = 0; i < attempts; ++i) {
        auto thetas = random_partition(rng, n, 2.0 * kPi);
        try {
            return TangentialPolygon::make(inradius, std::move(thetas));
        } catch (const Error& e) {
            if (e.code() != ErrorCode::IdealVertex && e.code() != ErrorCode::InvalidPolygon)
                throw;
        }
    }
    throw Error(ErrorCode::IdealVertex, "no finite tangential polygon found for this inradius");
}

} // namespace hypiso
