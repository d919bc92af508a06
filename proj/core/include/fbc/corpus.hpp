#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fbc/brauer.hpp"
#include "fbc/configuration.hpp"

namespace fbc::corpus {

Configuration example0();  // two 3-cycles, pairs as polygons, d = 2
Configuration example1();  // nontrivial L-block {1, 1'}, integral degrees
Configuration example2();  // one polygon, collapses to the ground field
Configuration example3();  // f-BC that is not of type S
BrauerPresentation gs_example();  // three vertices, two polygons, nu(3) = 2
Configuration ex6_5_bc();  // Brauer configuration E
Configuration ex6_5();     // the configuration E' with a non-multiserial algebra
/// Angles 1, 1', 1'', 2, ..., m with g = (1 1' 2 ... m) and L(1) = {1, 1''}.
Configuration example_7_6(int m);

/// Every built-in configuration, the BC example converted, keyed by corpus id.
std::vector<std::pair<std::string, Configuration>> all();

}  // namespace fbc::corpus
