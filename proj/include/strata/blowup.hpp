#pragma once

#include "strata/filtered_complex.hpp"
#include "strata/homology.hpp"
#include "strata/intersection_chains.hpp"
#include "strata/perversity.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace strata {

// A face of the cone cD_i = D_i * apex: a subset of D_i (bitmask over the
// positions of D_i) and whether the apex, the last vertex, is included.
struct ConeFace {
  std::uint32_t face = 0;
  bool apex = false;
  auto operator<=>(const ConeFace&) const = default;
  int vertex_count() const { return __builtin_popcount(face) + (apex ? 1 : 0); }
  int degree() const { return vertex_count() - 1; }
};

// One cone face per level 0..n; the last factor is a plain face of D_n.
// Serves both as a cochain basis element 1_(F,e) and as a chain basis
// element of N_*(cD_0) x ... x N_*(D_n).  A face of the join D itself is a
// TensorFace with no apex anywhere.
using TensorFace = std::vector<ConeFace>;

struct SignedFace {
  TensorFace face;
  int sign = 1;
};

// The local complex attached to one regular simplex D = D_0 * ... * D_n.
class LocalBlowup {
 public:
  // sizes[i] = number of vertices of D_i; sizes[n] >= 1
  explicit LocalBlowup(std::vector<int> sizes);

  int n() const { return static_cast<int>(sizes_.size()) - 1; }
  const std::vector<int>& sizes() const { return sizes_; }
  bool is_element(const TensorFace& e) const;
  int degree(const TensorFace& e) const;

  // all basis elements, ordered by degree then lexicographically; built on
  // first use (not thread safe)
  const std::vector<TensorFace>& basis() const;
  std::vector<TensorFace> basis(int degree) const;
  int index(const TensorFace& e) const;

  ExtendedInt perverse_degree(const TensorFace& e, int ell) const;

  std::vector<SignedFace> coboundary(const TensorFace& e) const;
  std::optional<SignedFace> cup(const TensorFace& a, const TensorFace& b) const;

  // top chain (D_0,1) x ... x (D_{n-1},1) x D_n
  TensorFace top_chain() const;
  std::vector<SignedFace> chain_boundary(const TensorFace& c) const;
  std::optional<SignedFace> tilde_cap(const TensorFace& cochain, const TensorFace& chain) const;
  // blowdown to a face of D (no apex); nullopt when zero
  std::optional<SignedFace> mu(const TensorFace& chain) const;
  // cochain cap the simplex D itself, as a face of D
  std::optional<SignedFace> cap(const TensorFace& cochain) const;
  // simplicial boundary of a face of D
  std::vector<SignedFace> face_boundary(const TensorFace& face) const;
  // faces of D (join faces), all dimensions
  std::vector<TensorFace> faces() const;

  // coefficient of cochain e on the top chain
  int evaluate_top(const TensorFace& e) const { return e == top_chain() ? 1 : 0; }

  std::string describe(const TensorFace& e) const;

 private:
  std::vector<int> sizes_;
  mutable std::vector<TensorFace> basis_;
  mutable std::unordered_map<std::string, int> index_;
};

std::string face_key(const TensorFace& e);

// Basis element of the global blown-up complex: a regular simplex t and a
// cone bit per singular level i with t_i nonempty.  Bits of empty levels are
// stored as 1 (the apex is forced).
struct GlobalElement {
  int dim = 0;
  int index = 0;
  std::uint32_t eps = 0;
  bool operator==(const GlobalElement&) const = default;
};

// Global cochain of one degree: coefficients on the basis of that degree.
using Cochain = SparseVec<Integer>;

class BlownUpComplex {
 public:
  explicit BlownUpComplex(const FilteredComplex& x);
  // keeps a pointer to x
  explicit BlownUpComplex(FilteredComplex&&) = delete;

  const FilteredComplex& space() const { return *x_; }
  int max_degree() const { return static_cast<int>(basis_.size()) - 1; }
  int count(int k) const { return k >= 0 && k <= max_degree() ? static_cast<int>(basis_[k].size()) : 0; }
  const GlobalElement& element(int k, int i) const { return basis_[k][i]; }
  int degree(const GlobalElement& g) const;
  // index within its degree, -1 when not a basis element
  int index(const GlobalElement& g) const;
  const Simplex& simplex(const GlobalElement& g) const { return x_->simplex(g.dim, g.index); }

  // coboundary matrix, degree k -> k+1
  const SparseMatrix<Integer>& coboundary(int k) const { return delta_[k]; }
  Cochain apply_coboundary(int k, const Cochain& w) const;

  ExtendedInt perverse_degree(const GlobalElement& g, const Stratum& s) const;
  bool is_allowable(const GlobalElement& g, const Perversity& p) const;
  std::vector<std::vector<char>> allowable_mask(const Perversity& p) const;
  bool cochain_is_allowable(int k, const Cochain& w, const Perversity& p) const;

  // the perverse subcomplex as a presented cochain complex
  Presentation presentation(const Perversity& p) const;
  Presentation full_presentation() const;

  LocalBlowup local_complex(const Simplex& host) const;
  // restriction of g to the host simplex (must contain g's simplex)
  TensorFace restrict_to(const GlobalElement& g, const Simplex& host) const;
  // global element whose restriction to host is the full element e
  GlobalElement from_full(const Simplex& host, const TensorFace& e) const;
  // the global element restricting to e on host (every local element is one)
  GlobalElement from_local(const Simplex& host, const TensorFace& e) const;
  // the face of host selected by a join face (apex flags ignored)
  Simplex face_of(const Simplex& host, const TensorFace& face) const;

  std::string describe(const GlobalElement& g) const;

 private:
  static std::uint64_t key(const GlobalElement& g) {
    return (std::uint64_t(g.dim) << 56) | (std::uint64_t(g.eps) << 32) | std::uint32_t(g.index);
  }

  std::vector<int> sizes_of(const Simplex& host) const;

  const FilteredComplex* x_;
  std::vector<std::vector<std::vector<int>>> cofaces_;  // [dim][index] -> indices at dim + 1
  std::vector<std::vector<GlobalElement>> basis_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<SparseMatrix<Integer>> delta_;
};

}  // namespace strata
