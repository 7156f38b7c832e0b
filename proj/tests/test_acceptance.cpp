// Acceptance suite: runs the full verification grid and requires every
// criterion to pass. One line per criterion goes to stdout.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <iostream>

#include "dwred/acceptance.hpp"

TEST_CASE("full verification grid") {
    dwred::AcceptanceOptions opt;
    dwred::AcceptanceSummary s = dwred::run_acceptance(opt, std::cout);
    for (const auto& r : s.results) {
        CAPTURE(r.name);
        CAPTURE(r.detail);
        CHECK(r.passed);
    }
    REQUIRE(s.results.size() == 9);
    CHECK(s.all_passed);
}
