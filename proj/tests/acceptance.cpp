// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
// All arithmetic exact; the per-criterion timing is informational.

#include <chrono>
#include <cstdio>

#include "mcg/recipes.hpp"

int main() {
    const auto& rs = mcg::recipes::all();
    bool all = true;
    int n = 0;
    for (const auto& r : rs) {
        ++n;
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        const char* note = "";
        std::string what;
        try {
            ok = r.run();
        } catch (const std::exception& ex) {
            what = std::string(" (exception: ") + ex.what() + ")";
            note = what.c_str();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("criterion %d (%s): %s%s (%lld ms)\n", n, r.description,
                    ok ? "PASS" : "FAIL", note, static_cast<long long>(ms));
        all = all && ok;
    }
    return all ? 0 : 1;
}
