#pragma once

#include "strata/integer.hpp"
#include "strata/linalg.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace strata {

// Internal vertex indices in ascending order.  Vertices are indexed by
// (level, id), so ascending index order is the canonical filtered order.
using Simplex = std::vector<int>;

struct SimplexHash {
  std::size_t operator()(const Simplex& s) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : s) h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    return h;
  }
};

struct StratumKey {
  int level = 0;
  int id = 0;
  auto operator<=>(const StratumKey&) const = default;
};

struct Stratum {
  StratumKey key;
  int codim = 0;
  bool regular = false;
  std::vector<int> vertices;
};

// d[i] = (number of vertices at level i) - 1, so -1 encodes an empty factor.
using JoinDecomposition = std::vector<int>;

struct RawComplex {
  int formal_dim = 0;
  std::vector<std::pair<std::int64_t, int>> vertices;  // (id, level)
  std::vector<std::vector<std::int64_t>> simplices;
  std::vector<std::pair<std::vector<std::int64_t>, int>> orientations;
};

class FilteredComplex;

struct Link {
  std::string recipe;
  std::shared_ptr<const FilteredComplex> complex;
};

class FilteredComplex {
 public:
  static FilteredComplex build(const RawComplex& raw);

  int formal_dim() const { return n_; }
  int dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  int vertex_count() const { return static_cast<int>(ids_.size()); }
  std::int64_t vertex_id(int v) const { return ids_[v]; }
  int level(int v) const { return levels_[v]; }
  // -1 when absent
  int vertex_index(std::int64_t id) const;

  int count(int d) const { return d >= 0 && d <= dim() ? static_cast<int>(by_dim_[d].size()) : 0; }
  const std::vector<Simplex>& simplices(int d) const { return by_dim_.at(d); }
  const Simplex& simplex(int d, int i) const { return by_dim_[d][i]; }
  // index within its dimension, -1 when absent
  int index(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index(s) >= 0; }
  int total_count() const;

  JoinDecomposition join_decomposition(const Simplex& s) const;
  bool is_regular(const Simplex& s) const { return !s.empty() && levels_[s.back()] == n_; }
  int max_level(const Simplex& s) const { return levels_[s.back()]; }
  // vertices of s at the given level
  Simplex part(const Simplex& s, int level) const;
  // vertices of s at levels <= level
  Simplex part_up_to(const Simplex& s, int level) const;

  const std::vector<Stratum>& strata() const { return strata_; }
  int stratum_of_vertex(int v) const { return vertex_stratum_[v]; }
  // stratum containing the open simplex (its maximal-level part)
  int stratum_index(const Simplex& s) const { return vertex_stratum_[s.back()]; }
  int stratum_lookup(const StratumKey& k) const;  // -1 when absent

  // boundary matrix: d-simplices -> (d-1)-simplices, alternating signs
  SparseMatrix<Integer> boundary(int d) const;
  std::vector<Simplex> facets() const;

  const std::vector<std::pair<Simplex, int>>& supplied_orientations() const { return orientations_; }

  const std::map<StratumKey, Link>& links() const { return links_; }
  void attach_link(const StratumKey& k, Link link) { links_[k] = std::move(link); }

  // canonical raw description (maximal simplices, external ids)
  RawComplex raw() const;

 private:
  int n_ = 0;
  std::vector<std::int64_t> ids_;
  std::vector<int> levels_;
  std::unordered_map<std::int64_t, int> id_index_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::unordered_map<Simplex, int, SimplexHash>> index_;
  std::vector<Stratum> strata_;
  std::vector<int> vertex_stratum_;
  std::vector<std::pair<Simplex, int>> orientations_;
  std::map<StratumKey, Link> links_;
};

}  // namespace strata
