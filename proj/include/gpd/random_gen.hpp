#pragma once

// Seeded random groupoid instances: a random partition of the atoms into
// orbits, uniform weights inside each orbit, and over every orbit the full
// pair groupoid twisted by a random cyclic isotropy group. The document
// also names a generating arrow set ("gen") and an orbit transversal
// ("transversal") for restriction checks.

#include <gpd/document.hpp>

#include <cstdint>

namespace gpd {

GroupoidDocument random_groupoid(std::uint64_t seed, int atoms, int isotropy_max,
                                 long long arrow_budget = 2000);

}  // namespace gpd
