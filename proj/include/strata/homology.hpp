#pragma once

#include "strata/linalg.hpp"
#include "strata/ring.hpp"

#include <string>
#include <vector>

namespace strata {

struct HomologyGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;  // nonunit invariant factors, ascending
  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  bool operator==(const HomologyGroup&) const = default;
  std::string str() const;  // e.g. "Z^2 + Z/2", "0"
};

struct HomologySummary {
  CoefficientRing ring;
  int min_degree = 0;
  std::vector<HomologyGroup> groups;  // degree min_degree + i

  HomologyGroup at(int degree) const;
  int max_degree() const { return min_degree + static_cast<int>(groups.size()) - 1; }
  // equality up to trailing and leading zero groups
  bool same_groups(const HomologySummary& o) const;
};

// A sub(co)chain complex of a based ambient complex.  In degree k the ambient
// has dims[k] basis vectors and the differential maps degree k to k + step.
// The subcomplex is { x in span(allowed_k) : d x in span(allowed_{k+step}) }.
struct Presentation {
  int min_degree = 0;
  int step = -1;
  std::vector<int> dims;
  std::vector<std::vector<char>> allowed;
  // diff[i] maps degree min_degree + i to min_degree + i + step; an empty
  // matrix with rows = 0 when the target is out of range
  std::vector<SparseMatrix<Integer>> diff;

  int degree_count() const { return static_cast<int>(dims.size()); }
  int max_degree() const { return min_degree + degree_count() - 1; }
  bool in_range(int k) const { return k >= min_degree && k <= max_degree(); }
  int dim(int k) const { return in_range(k) ? dims[k - min_degree] : 0; }
  // sizes agree and the ambient d squares to zero in the ring (a cap with
  // the mod 2 class is only a chain map mod 2)
  void validate(const CoefficientRing& ring = CoefficientRing::integers()) const;
};

// Lattice basis (over the ring of ops) of the subcomplex in degree k, as
// ambient vectors.
template <class Ops>
std::vector<SparseVec<typename Ops::T>> subcomplex_basis(const Ops& ops, const Presentation& p, int k) {
  using T = typename Ops::T;
  if (!p.in_range(k)) return {};
  const int i = k - p.min_degree;
  const auto& allow = p.allowed[i];
  std::vector<int> cols;
  for (int c = 0; c < p.dims[i]; ++c)
    if (allow[c]) cols.push_back(c);
  const int t = k + p.step;
  SparseMatrix<T> constraint;
  if (p.in_range(t)) {
    const auto& tallow = p.allowed[t - p.min_degree];
    std::vector<int> row_index(p.dim(t), -1);
    int nr = 0;
    for (int r = 0; r < p.dim(t); ++r)
      if (!tallow[r]) row_index[r] = nr++;
    constraint.rows = nr;
    constraint.cols.resize(cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c)
      for (const auto& [r, v] : p.diff[i].cols[cols[c]])
        if (row_index[r] >= 0) {
          auto w = ops.from(v);
          if (!ops.is_zero(w)) constraint.cols[c].emplace_back(row_index[r], w);
        }
  } else {
    constraint.cols.resize(cols.size());
  }
  auto ker = kernel_basis(ops, constraint);
  for (auto& v : ker)
    for (auto& e : v) e.first = cols[e.first];
  return ker;
}

// d applied to each basis vector, as columns over the target ambient.
template <class Ops>
SparseMatrix<typename Ops::T> image_matrix(const Ops& ops, const Presentation& p, int k,
                                           const std::vector<SparseVec<typename Ops::T>>& basis) {
  SparseMatrix<typename Ops::T> m;
  m.rows = p.dim(k + p.step);
  if (!p.in_range(k) || !p.in_range(k + p.step)) {
    m.cols.resize(basis.size());
    return m;
  }
  auto d = convert(ops, p.diff[k - p.min_degree]);
  d.rows = m.rows;
  for (const auto& b : basis) m.cols.push_back(apply(ops, d, b));
  return m;
}

template <class Ops>
struct RawHomology {
  std::vector<int> free_rank;
  std::vector<std::vector<typename Ops::T>> torsion;
};

template <class Ops>
RawHomology<Ops> raw_homology(const Ops& ops, const Presentation& p) {
  const int n = p.degree_count();
  std::vector<int> lat(n), out_rank(n);
  std::vector<std::vector<typename Ops::T>> out_torsion(n);
  for (int i = 0; i < n; ++i) {
    int k = p.min_degree + i;
    auto b = subcomplex_basis(ops, p, k);
    lat[i] = static_cast<int>(b.size());
    auto info = rank_info(ops, image_matrix(ops, p, k, b));
    out_rank[i] = info.rank;
    out_torsion[i] = std::move(info.torsion);
  }
  RawHomology<Ops> h;
  h.free_rank.resize(n);
  h.torsion.resize(n);
  for (int i = 0; i < n; ++i) {
    int in = i - p.step;  // degree whose differential lands here
    int r_in = (in >= 0 && in < n) ? out_rank[in] : 0;
    h.free_rank[i] = lat[i] - out_rank[i] - r_in;
    if (in >= 0 && in < n) h.torsion[i] = out_torsion[in];
  }
  return h;
}

HomologySummary homology(const Presentation& p, const CoefficientRing& ring);

// d o d = 0 on the subcomplex over the ring, checked on a basis in every
// degree
bool squares_to_zero(const Presentation& p, const CoefficientRing& ring = CoefficientRing::integers());

// Cycle representatives for a basis of the free part of H_k (over Z) or of
// H_k (over a field), together with a way to read off class coordinates.
template <class Ops>
class HomologyBasis {
 public:
  using T = typename Ops::T;

  HomologyBasis(const Ops& ops, const Presentation& p, int k) : ops_(ops) {
    auto lb = subcomplex_basis(ops, p, k);
    lattice_.emplace(ops_, lb);
    auto dm = image_matrix(ops, p, k, lb);
    // cycles in lattice coordinates
    SparseMatrix<T> d_in_lattice = dm;
    cycles_ = kernel_basis(ops, d_in_lattice);
    cycle_solver_.emplace(ops_, cycles_);
    ambient_basis_ = std::move(lb);
    // boundaries, in cycle coordinates
    int src = k - p.step;
    auto bin = subcomplex_basis(ops, p, src);
    auto bm = image_matrix(ops, p, src, bin);
    SparseMatrix<T> ct;  // transpose of the coordinate matrix
    ct.rows = bm.col_count();
    ct.cols.resize(cycles_.size());
    for (int b = 0; b < bm.col_count(); ++b) {
      auto lc = lattice_->solve(bm.cols[b]);
      if (!lc) throw MathFailure("boundary outside the subcomplex lattice");
      auto cc = cycle_solver_->solve(*lc);
      if (!cc) throw MathFailure("boundary is not a cycle");
      for (const auto& [j, v] : *cc) ct.cols[j].emplace_back(b, v);
    }
    functionals_ = kernel_basis(ops, ct);
    auto sections = right_inverse(ops, static_cast<int>(cycles_.size()), functionals_);
    for (const auto& s : sections) reps_.push_back(to_ambient(to_lattice(s)));
  }

  int rank() const { return static_cast<int>(reps_.size()); }
  const std::vector<SparseVec<T>>& representatives() const { return reps_; }

  // class coordinates of an ambient cycle; throws when it is not a cycle of
  // the subcomplex
  std::vector<T> classify(const SparseVec<T>& cycle) const {
    auto lc = lattice_->solve(cycle);
    if (!lc) throw MathFailure("vector is not in the subcomplex");
    auto cc = cycle_solver_->solve(*lc);
    if (!cc) throw MathFailure("vector is not a cycle");
    std::vector<T> out;
    for (const auto& f : functionals_) {
      T acc = ops_.zero();
      for (const auto& [j, v] : f)
        if (const T* c = find_entry(*cc, j)) acc = ops_.add(acc, ops_.mul(v, *c));
      out.push_back(acc);
    }
    return out;
  }

 private:
  SparseVec<T> to_lattice(const SparseVec<T>& cyc) const {
    SparseVec<T> acc;
    for (const auto& [j, c] : cyc) acc = combine(ops_, ops_.one(), acc, c, cycles_[j]);
    return acc;
  }
  SparseVec<T> to_ambient(const SparseVec<T>& lat) const {
    SparseVec<T> acc;
    for (const auto& [j, c] : lat) acc = combine(ops_, ops_.one(), acc, c, ambient_basis_[j]);
    return acc;
  }

  Ops ops_;
  std::vector<SparseVec<T>> ambient_basis_, cycles_, functionals_, reps_;
  std::optional<LatticeSolver<Ops>> lattice_, cycle_solver_;
};

}  // namespace strata
