// Reference triangulations.
#include "strata/constructions.hpp"

#include "strata/errors.hpp"

namespace strata {

FilteredComplex trivially_filtered(int n, int vertex_count, const std::vector<std::vector<std::int64_t>>& facets) {
  RawComplex raw;
  raw.formal_dim = n;
  for (int v = 0; v < vertex_count; ++v) raw.vertices.emplace_back(v, n);
  raw.simplices = facets;
  return FilteredComplex::build(raw);
}

FilteredComplex sphere(int n) {
  if (n < 0 || n > 20) throw Error("InvalidFiltration", "sphere dimension out of range");
  std::vector<std::vector<std::int64_t>> facets;
  for (int skip = 0; skip <= n + 1; ++skip) {
    std::vector<std::int64_t> f;
    for (int v = 0; v <= n + 1; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return trivially_filtered(n, n + 2, facets);
}

// Moebius' 7-vertex torus
FilteredComplex torus() {
  std::vector<std::vector<std::int64_t>> facets;
  for (int i = 0; i < 7; ++i) {
    facets.push_back({i, (i + 1) % 7, (i + 3) % 7});
    facets.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return trivially_filtered(2, 7, facets);
}

// 6-vertex projective plane
FilteredComplex rp2() {
  return trivially_filtered(2, 6,
                            {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                             {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

// 11 vertices, 40 tetrahedra; obtained from the antipodal quotient of the
// subdivided cross-polytope by edge contractions and bistellar moves
// (scripts/reduce_rp3.py)
FilteredComplex rp3() {
  return trivially_filtered(
      3, 11,
      {{0, 1, 2, 4},  {0, 1, 2, 8},  {0, 1, 4, 6},  {0, 1, 6, 9},  {0, 1, 8, 9},  {0, 2, 3, 8},  {0, 2, 3, 10},
       {0, 2, 4, 10}, {0, 3, 5, 7},  {0, 3, 5, 10}, {0, 3, 7, 8},  {0, 4, 5, 6},  {0, 4, 5, 10}, {0, 5, 6, 7},
       {0, 6, 7, 9},  {0, 7, 8, 9},  {1, 2, 4, 7},  {1, 2, 5, 7},  {1, 2, 5, 8},  {1, 3, 4, 6},  {1, 3, 4, 7},
       {1, 3, 5, 7},  {1, 3, 5, 10}, {1, 3, 6, 10}, {1, 5, 8, 10}, {1, 6, 9, 10}, {1, 8, 9, 10}, {2, 3, 6, 8},
       {2, 3, 6, 10}, {2, 4, 7, 10}, {2, 5, 6, 7},  {2, 5, 6, 8},  {2, 6, 7, 10}, {3, 4, 6, 8},  {3, 4, 7, 8},
       {4, 5, 6, 8},  {4, 5, 8, 10}, {4, 7, 8, 10}, {6, 7, 9, 10}, {7, 8, 9, 10}});
}

}  // namespace strata
