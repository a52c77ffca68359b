// Acceptance suite: runs every verification criterion at its stated
// tolerance and prints one pass/fail line per criterion.
#include <doctest.h>

#include <cstdio>

#include "orbitq/verify.hpp"

TEST_CASE("acceptance criteria") {
    const auto results = orbitq::verify::run_suite(orbitq::verify::Suite::All);
    REQUIRE(results.size() == 12);
    for (const auto& r : results) {
        std::printf("%s  criterion %2d: %s — %s\n", r.pass ? "PASS" : "FAIL", r.id,
                    r.name.c_str(), r.detail.c_str());
        std::fflush(stdout);
        CHECK_MESSAGE(r.pass, "criterion ", r.id, ": ", r.name, " — ", r.detail);
    }
}
