#pragma once

#include "strata/blowup.hpp"
#include "strata/homology.hpp"
#include "strata/intersection_chains.hpp"
#include "strata/perversity.hpp"
#include "strata/ring.hpp"

#include <string>
#include <vector>

namespace strata {

// +1/-1 per n-simplex (index within dimension n); 0 on non-regular ones.
struct Orientation {
  std::vector<int> sign;
};

// Coherent orientation of the regular part, propagated across regular
// (n-1)-faces.  Supplied orientations seed and are validated; otherwise the
// first simplex of each component is positive.  With mod2 every simplex is
// +1 and only the pseudomanifold condition is checked.
Orientation orient(const FilteredComplex& x, bool mod2 = false);
Chain fundamental_cycle(const FilteredComplex& x, const Orientation& o, bool mod2 = false);
// Z/2 coefficients use the mod 2 class; other rings need a Z-orientation
Chain fundamental_cycle(const FilteredComplex& x, const CoefficientRing& ring = CoefficientRing::integers());

// cap with gamma as a matrix, degree k -> (n - k)-chains
SparseMatrix<Integer> duality_matrix(const BlownUpComplex& b, int k, const Chain& gamma);

// Mapping cone of w -> w cap gamma from the perverse blown-up complex
// (cohomological degree k placed in homological degree n - k) to the tame
// complex of the same perversity.  Acyclic iff the map is a
// quasi-isomorphism.
Presentation duality_cone(const BlownUpComplex& b, const Perversity& p, const Chain& gamma);

struct DualityDegree {
  int k = 0;
  HomologyGroup cohomology;  // of the perverse blown-up complex, degree k
  HomologyGroup homology;    // tame, degree n - k
  // images of the free generators in class coordinates (rows = generators)
  std::vector<std::vector<Integer>> matrix;
};

struct DualityReport {
  CoefficientRing ring;
  bool iso = false;
  HomologySummary cone;
  std::vector<DualityDegree> degrees;
};

DualityReport duality(const BlownUpComplex& b, const Perversity& p, const CoefficientRing& ring,
                      bool with_matrices = true);

struct PairingReport {
  int k = 0;
  int rows = 0, cols = 0;
  std::vector<std::vector<Integer>> matrix;
  bool square = false;
  Integer det;  // 0 unless square
  bool nondegenerate = false;
  bool unimodular = false;
};

// Phi(w, e) = augmentation((w cup e) cap gamma) on free parts of the
// blown-up cohomology, degree k for p and n - k for q
PairingReport pairing(const BlownUpComplex& b, const Perversity& p, const Perversity& q, int k,
                      const CoefficientRing& ring);

Integer augmentation(const Chain& c);

// <chi(w), xi> between the blown-up cohomology of p in degree k and the tame
// homology of the complementary perversity in degree k, on free parts.  Over
// a field an invertible matrix identifies the two groups.
struct ChiReport {
  int k = 0;
  int rows = 0, cols = 0;
  std::vector<std::vector<Integer>> matrix;
  bool square = false;
  Integer det;
  bool invertible = false;
};

ChiReport chi_pairing(const BlownUpComplex& b, const Perversity& p, int k, const CoefficientRing& ring);

struct WittStratum {
  StratumKey key;
  int codim = 0;
  bool checked = false;  // odd codimension
  std::string link;
  HomologyGroup middle;
  bool vanishes = true;
};

struct WittReport {
  bool witt = true;
  std::vector<WittStratum> strata;
};

// Uses the links attached by the constructions; MissingLink otherwise.
WittReport witt_report(const FilteredComplex& x, const CoefficientRing& ring);
inline bool is_witt(const FilteredComplex& x, const CoefficientRing& ring) { return witt_report(x, ring).witt; }

}  // namespace strata
