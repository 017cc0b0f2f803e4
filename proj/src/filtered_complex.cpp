#include "strata/filtered_complex.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace strata {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

FilteredComplex FilteredComplex::build(const RawComplex& raw) {
  if (raw.formal_dim < 0) throw Error("InvalidFiltration", "formal dimension must be >= 0");
  FilteredComplex x;
  x.n_ = raw.formal_dim;

  std::vector<std::pair<int, std::int64_t>> order;  // (level, id)
  std::set<std::int64_t> seen;
  for (const auto& [id, level] : raw.vertices) {
    if (level < 0 || level > raw.formal_dim)
      throw Error("InvalidFiltration", "vertex " + std::to_string(id) + " has level outside [0,n]");
    if (!seen.insert(id).second) throw Error("NonSimplicial", "duplicate vertex id " + std::to_string(id));
    order.emplace_back(level, id);
  }
  std::sort(order.begin(), order.end());
  for (const auto& [level, id] : order) {
    x.id_index_[id] = static_cast<int>(x.ids_.size());
    x.ids_.push_back(id);
    x.levels_.push_back(level);
  }
  if (x.ids_.empty() || x.levels_.back() != x.n_)
    throw Error("EmptyRegularPart", "no vertex at level n = " + std::to_string(x.n_));

  auto to_internal = [&](const std::vector<std::int64_t>& ext) {
    Simplex s;
    for (auto id : ext) {
      auto it = x.id_index_.find(id);
      if (it == x.id_index_.end()) throw Error("NonSimplicial", "unknown vertex id " + std::to_string(id));
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw Error("NonSimplicial", "repeated vertex in simplex");
    if (s.empty()) throw Error("NonSimplicial", "empty simplex");
    return s;
  };

  std::set<Simplex> all;
  for (int v = 0; v < x.vertex_count(); ++v) all.insert({v});
  for (const auto& ext : raw.simplices) {
    Simplex s = to_internal(ext);
    if (s.size() > 25) throw Error("DimensionViolation", "simplex dimension too large");
    const unsigned k = static_cast<unsigned>(s.size());
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      Simplex f;
      for (unsigned b = 0; b < k; ++b)
        if (mask & (1u << b)) f.push_back(s[b]);
      all.insert(std::move(f));
    }
  }
  int top = 0;
  for (const auto& s : all) {
    int d = static_cast<int>(s.size()) - 1;
    if (d > x.levels_[s.back()])
      throw Error("DimensionViolation", "a simplex of dimension " + std::to_string(d) + " lies in X_" +
                                            std::to_string(x.levels_[s.back()]));
    top = std::max(top, d);
  }
  x.by_dim_.resize(top + 1);
  x.index_.resize(top + 1);
  for (const auto& s : all) {  // std::set order is lexicographic
    int d = static_cast<int>(s.size()) - 1;
    x.index_[d][s] = static_cast<int>(x.by_dim_[d].size());
    x.by_dim_[d].push_back(s);
  }

  // strata: components of the level-i vertex graph
  UnionFind uf(x.vertex_count());
  if (top >= 1)
    for (const auto& e : x.by_dim_[1])
      if (x.levels_[e[0]] == x.levels_[e[1]]) uf.unite(e[0], e[1]);
  std::map<int, int> root_to_stratum;
  std::vector<int> next_id(x.n_ + 1, 0);
  x.vertex_stratum_.assign(x.vertex_count(), -1);
  for (int v = 0; v < x.vertex_count(); ++v) {
    int r = uf.find(v);
    auto it = root_to_stratum.find(r);
    if (it == root_to_stratum.end()) {
      Stratum s;
      s.key = {x.levels_[v], next_id[x.levels_[v]]++};
      s.codim = x.n_ - x.levels_[v];
      s.regular = s.codim == 0;
      it = root_to_stratum.emplace(r, static_cast<int>(x.strata_.size())).first;
      x.strata_.push_back(std::move(s));
    }
    x.strata_[it->second].vertices.push_back(v);
    x.vertex_stratum_[v] = it->second;
  }

  for (const auto& [ext, sign] : raw.orientations) {
    if (sign != 1 && sign != -1) throw Error("Orientation", "orientation sign must be +1 or -1");
    Simplex s = to_internal(ext);
    if (!x.contains(s)) throw Error("NonSimplicial", "oriented simplex is not in the complex");
    x.orientations_.emplace_back(std::move(s), sign);
  }
  return x;
}

int FilteredComplex::vertex_index(std::int64_t id) const {
  auto it = id_index_.find(id);
  return it == id_index_.end() ? -1 : it->second;
}

int FilteredComplex::index(const Simplex& s) const {
  int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > dim()) return -1;
  auto it = index_[d].find(s);
  return it == index_[d].end() ? -1 : it->second;
}

int FilteredComplex::total_count() const {
  int t = 0;
  for (const auto& v : by_dim_) t += static_cast<int>(v.size());
  return t;
}

JoinDecomposition FilteredComplex::join_decomposition(const Simplex& s) const {
  JoinDecomposition d(n_ + 1, -1);
  for (int v : s) ++d[levels_[v]];
  return d;
}

Simplex FilteredComplex::part(const Simplex& s, int level) const {
  Simplex out;
  for (int v : s)
    if (levels_[v] == level) out.push_back(v);
  return out;
}

Simplex FilteredComplex::part_up_to(const Simplex& s, int level) const {
  Simplex out;
  for (int v : s)
    if (levels_[v] <= level) out.push_back(v);
  return out;
}

int FilteredComplex::stratum_lookup(const StratumKey& k) const {
  for (std::size_t i = 0; i < strata_.size(); ++i)
    if (strata_[i].key == k) return static_cast<int>(i);
  return -1;
}

SparseMatrix<Integer> FilteredComplex::boundary(int d) const {
  SparseMatrix<Integer> m;
  m.rows = count(d - 1);
  if (d < 0 || d > dim()) return m;
  m.cols.resize(by_dim_[d].size());
  if (d == 0) return m;
  for (std::size_t c = 0; c < by_dim_[d].size(); ++c) {
    const Simplex& s = by_dim_[d][c];
    std::vector<std::pair<int, Integer>> col;
    for (int j = 0; j <= d; ++j) {
      Simplex f = s;
      f.erase(f.begin() + j);
      col.emplace_back(index(f), Integer(j % 2 == 0 ? 1 : -1));
    }
    std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    m.cols[c] = std::move(col);
  }
  return m;
}

std::vector<Simplex> FilteredComplex::facets() const {
  std::vector<std::vector<char>> maximal(by_dim_.size());
  for (std::size_t d = 0; d < by_dim_.size(); ++d) maximal[d].assign(by_dim_[d].size(), 1);
  for (int d = 1; d <= dim(); ++d)
    for (const auto& s : by_dim_[d])
      for (int j = 0; j <= d; ++j) {
        Simplex f = s;
        f.erase(f.begin() + j);
        maximal[d - 1][index(f)] = 0;
      }
  std::vector<Simplex> out;
  for (int d = 0; d <= dim(); ++d)
    for (std::size_t i = 0; i < by_dim_[d].size(); ++i)
      if (maximal[d][i]) out.push_back(by_dim_[d][i]);
  return out;
}

RawComplex FilteredComplex::raw() const {
  RawComplex r;
  r.formal_dim = n_;
  for (int v = 0; v < vertex_count(); ++v) r.vertices.emplace_back(ids_[v], levels_[v]);
  for (const auto& s : facets()) {
    std::vector<std::int64_t> ext;
    for (int v : s) ext.push_back(ids_[v]);
    r.simplices.push_back(std::move(ext));
  }
  for (const auto& [s, sign] : orientations_) {
    std::vector<std::int64_t> ext;
    for (int v : s) ext.push_back(ids_[v]);
    r.orientations.emplace_back(std::move(ext), sign);
  }
  return r;
}

}  // namespace strata
