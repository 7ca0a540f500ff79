// Acceptance suite: runs every verification criterion at its pinned tolerance
// and prints one pass/fail line per criterion. Exit code is the number of
// failing criteria.

#include <chrono>
#include <cstdio>

#include "membrane/verify.hpp"

int main() {
    using clock = std::chrono::steady_clock;
    membrane::VerifyOptions opts;
    opts.seed = 1;

    int failures = 0;
    int index = 0;
    const auto t0 = clock::now();
    for (const auto& name : membrane::suite_names()) {
        const auto s0 = clock::now();
        const membrane::SuiteResult r = membrane::run_suite(name, opts);
        const double secs = std::chrono::duration<double>(clock::now() - s0).count();
        ++index;
        std::printf("[%s] %2d. %-24s (%5.2fs) %s\n", r.pass ? "PASS" : "FAIL", index,
                    r.name.c_str(), secs, r.detail.c_str());
        if (!r.pass) ++failures;
    }
    const double total = std::chrono::duration<double>(clock::now() - t0).count();
    std::printf("%d of %zu criteria passed in %.1fs\n",
                static_cast<int>(membrane::suite_names().size()) - failures,
                membrane::suite_names().size(), total);
    return failures;
}
