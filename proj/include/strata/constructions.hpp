#pragma once

#include "strata/filtered_complex.hpp"

#include <string>
#include <vector>

namespace strata {

// Closed cone: apex at level 0, every old level shifted up by one.  The
// apex stratum gets `base` as its link (name is the link's recipe).
FilteredComplex cone(const FilteredComplex& base, const std::string& name = "");
// Two cone points N, S at level 0; the base keeps its strata, shifted up.
FilteredComplex suspension(const FilteredComplex& base, const std::string& name = "");
// S^1 x X with an m-gon circle, staircase prisms.  Levels move up by one
// (the product has formal dimension n + 1 and an empty bottom skeleton).
FilteredComplex product_circle(const FilteredComplex& x, int m = 3);

// Trivially filtered complex from top simplices on vertices 0..count-1.
FilteredComplex trivially_filtered(int n, int vertex_count, const std::vector<std::vector<std::int64_t>>& facets);

FilteredComplex sphere(int n);
FilteredComplex torus();
FilteredComplex rp2();
FilteredComplex rp3();

// Names: sphere(n), torus, rp2, rp3, sigma_rp2, sigma_rp3, cone_rp2, and
// the recipes cone(R), suspension(R), product_circle(R[,m]).
FilteredComplex from_recipe(const std::string& recipe);
std::vector<std::string> library_names();

}  // namespace strata
