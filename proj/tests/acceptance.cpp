// One line per acceptance criterion; nonzero exit if any suite fails.
#include <chrono>
#include <cstdio>

#include "checks.hpp"

int main() {
    const std::uint64_t seed = 20260823;
    bool all = true;
    int idx = 0;
    for (const auto& name : seqcomb::checks::suite_names()) {
        auto t0 = std::chrono::steady_clock::now();
        seqcomb::checks::SuiteResult r = seqcomb::checks::run_suite(name, seed);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("criterion %2d %-25s %s  (%lld cases, %lld ms)\n", ++idx,
                    name.c_str(), r.pass ? "PASS" : "FAIL",
                    static_cast<long long>(r.cases),
                    static_cast<long long>(ms));
        for (const auto& n : r.notes)
            std::printf("             note: %s\n", n.c_str());
        for (const auto& f : r.failures)
            std::printf("             counterexample: %s\n", f.c_str());
        all = all && r.pass;
    }
    return all ? 0 : 1;
}
