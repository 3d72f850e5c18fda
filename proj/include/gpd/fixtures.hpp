#pragma once

/*
 * Built-in example groupoids used across the test suite.
 *
 *   triv2       two atoms of weight 1/2, units only
 *   r2          full equivalence relation on two uniform atoms
 *   r3          full equivalence relation on three uniform atoms
 *   z2pt        the group Z/2 sitting over a single atom of weight 1
 *   amalg3      r3 with named subgroupoid arrow sets G1, G2 and their
 *               intersection G3 (units), exhibiting r3 as an amalgam
 *   swap        transformation groupoid of Z/2 swapping two atoms
 *   trivaction  transformation groupoid of Z/2 acting trivially on two atoms
 */

#include <gpd/document.hpp>

#include <string>
#include <vector>

namespace gpd {

GroupoidDocument fixture_triv2();
GroupoidDocument fixture_r2();
GroupoidDocument fixture_r3();
GroupoidDocument fixture_z2pt();
GroupoidDocument fixture_amalg3();
GroupoidDocument fixture_swap();
GroupoidDocument fixture_trivaction();

/* Full equivalence relation on uniformly weighted atoms. */
GroupoidDocument fixture_full_relation(const std::vector<std::string>& atom_labels);

const std::vector<std::string>& fixture_names();
GroupoidDocument fixture_by_name(const std::string& name);

}  // namespace gpd
