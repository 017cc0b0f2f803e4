#pragma once

#include "strata/filtered_complex.hpp"
#include "strata/homology.hpp"
#include "strata/perversity.hpp"

#include <climits>
#include <compare>
#include <string>

namespace strata {

// Integer or -infinity; -infinity is below every integer and absorbs sums.
class ExtendedInt {
 public:
  constexpr ExtendedInt(int v = 0) : v_(v) {}
  static constexpr ExtendedInt neg_inf() { return ExtendedInt(INT_MIN); }
  constexpr bool is_neg_inf() const { return v_ == INT_MIN; }
  constexpr int value() const { return v_; }
  friend constexpr auto operator<=>(ExtendedInt a, ExtendedInt b) { return a.v_ <=> b.v_; }
  friend constexpr bool operator==(ExtendedInt a, ExtendedInt b) = default;
  friend constexpr ExtendedInt operator+(ExtendedInt a, ExtendedInt b) {
    return a.is_neg_inf() || b.is_neg_inf() ? neg_inf() : ExtendedInt(a.v_ + b.v_);
  }
  std::string str() const { return is_neg_inf() ? "-inf" : std::to_string(v_); }

 private:
  int v_;
};

inline ExtendedInt max(ExtendedInt a, ExtendedInt b) { return a < b ? b : a; }

// Chain in a fixed dimension: coefficients on simplex indices of that dimension.
using Chain = SparseVec<Integer>;

// dim of the part of s at levels <= n - ell, or -inf when empty
ExtendedInt perverse_degree(const FilteredComplex& x, const Simplex& s, int ell);
// perverse degree along a stratum: -inf when the closed simplex misses it
ExtendedInt perverse_degree(const FilteredComplex& x, const Simplex& s, const Stratum& stratum);
// strata (indices) met by the closed simplex
std::vector<int> strata_met(const FilteredComplex& x, const Simplex& s);

bool is_allowable(const FilteredComplex& x, const Simplex& s, const Perversity& p);
// per dimension, per simplex index
std::vector<std::vector<char>> allowable_mask(const FilteredComplex& x, const Perversity& p);

struct BoundarySplit {
  Chain regular, singular;  // on (d-1)-simplices
};
BoundarySplit boundary_split(const FilteredComplex& x, const Simplex& s);

Chain boundary_of(const FilteredComplex& x, int d, const Chain& c);
Chain regular_boundary_of(const FilteredComplex& x, int d, const Chain& c);

// C^p: allowable chains with allowable boundary, differential the full boundary
Presentation intersection_complex(const FilteredComplex& x, const Perversity& p);
// tame complex: regular allowable chains with allowable regular boundary,
// differential the regular part of the boundary
Presentation tame_complex(const FilteredComplex& x, const Perversity& p);

bool chain_is_allowable(const FilteredComplex& x, int d, const Chain& c, const Perversity& p);

}  // namespace strata
