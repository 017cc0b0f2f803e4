#pragma once

#include "strata/blowup.hpp"
#include "strata/intersection_chains.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace strata {

// Formal sum of tensor faces of one local complex; zero terms are dropped.
using ShuffleChain = std::map<TensorFace, long long>;

void add_term(ShuffleChain& c, const TensorFace& f, long long coeff);
ShuffleChain local_coboundary(const LocalBlowup& l, const ShuffleChain& w);
ShuffleChain local_chain_boundary(const LocalBlowup& l, const ShuffleChain& c);
ShuffleChain local_cup(const LocalBlowup& l, const ShuffleChain& a, const ShuffleChain& b);
ShuffleChain local_tilde_cap(const LocalBlowup& l, const ShuffleChain& w, const ShuffleChain& c);
ShuffleChain local_mu(const LocalBlowup& l, const ShuffleChain& c);
ShuffleChain local_face_boundary(const LocalBlowup& l, const ShuffleChain& c);

// Global products.  Cochains are indexed by the blown-up basis of their
// degree, chains by the simplices of their dimension.
Cochain cup(const BlownUpComplex& b, int k, const Cochain& w, int l, const Cochain& e);
// w in degree k capped with a chain of dimension m; a chain of dimension m - k
Chain cap(const BlownUpComplex& b, int k, const Cochain& w, int m, const Chain& xi);
// the map w -> w cap xi as a matrix from degree k to (m - k)-chains
SparseMatrix<Integer> cap_matrix(const BlownUpComplex& b, int k, int m, const Chain& xi);
// constant cochain 1 (degree 0)
Cochain unit_cochain(const BlownUpComplex& b);

// chi(w)(s) = w_s evaluated on the top chain of the blow-up of s, for
// regular k-simplices s; a cochain on k-simplices
Chain chi(const BlownUpComplex& b, int k, const Cochain& w);
SparseMatrix<Integer> chi_matrix(const BlownUpComplex& b, int k);

// ||w||_S for a global cochain: max over its basis elements
ExtendedInt cochain_perverse_degree(const BlownUpComplex& b, int k, const Cochain& w, const Stratum& s);

// Randomised identity checks on the blown-up complex of b: cap Leibniz,
// (w cup e) cap xi = (-1)^{|w||e|} e cap (w cap xi), cup Leibniz, cup
// associativity and the unit.  Cochains and chains have at most `terms`
// random entries in [-3, 3]; everything is determined by the seed.
struct ProductCheck {
  std::string name;
  int trials = 0;
  int failures = 0;
  int nontrivial = 0;  // trials where the two sides were not both zero
};

struct ProductReport {
  std::vector<ProductCheck> checks;
  bool ok() const;
};

ProductReport check_products(const BlownUpComplex& b, int trials, std::uint64_t seed, int terms = 5);

}  // namespace strata
