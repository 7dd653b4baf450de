#include "hypiso/acceptance.hpp"

#include <cstdio>
#include <cstdlib>
#include <string>

int main(int argc, char** argv) {
    hypiso::AcceptanceOptions opts;
    if (argc > 1)
        opts.seed = std::strtoull(argv[1], nullptr, 0);
    const auto results = hypiso::run_acceptance(opts);
    int failed = 0;
    for (const auto& r : results) {
        std::printf("[%s] criterion %d: %s (%.2f s) %s\n", r.passed ? "PASS" : "FAIL", r.id, r.title.c_str(), r.seconds,
                    r.summary.c_str());
        failed += !r.passed;
    }
    std::printf("%zu criteria, %d passed, %d failed\n", results.size(), static_cast<int>(results.size()) - failed,
                failed);
    return failed == 0 ? 0 : 1;
}
