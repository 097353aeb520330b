#include <doctest.h>

#include "properties.hpp"

using namespace chowkit::testing;

TEST_CASE("randomized algebraic properties") {
    for (const auto& r : run_all_properties(kPropertySeed, 1000)) {
        CAPTURE(r.name);
        CAPTURE(r.first_failure);
        CHECK(r.cases >= 1000);
        CHECK(r.failures == 0);
    }
}
