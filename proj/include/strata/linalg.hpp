#pragma once

#include "strata/errors.hpp"
#include "strata/ring.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

namespace strata {

// Sorted by index, no explicit zeros.
template <class T>
using SparseVec = std::vector<std::pair<int, T>>;

template <class T>
struct SparseMatrix {
  int rows = 0;
  std::vector<SparseVec<T>> cols;
  int col_count() const { return static_cast<int>(cols.size()); }
};

template <class T>
struct DenseMatrix {
  int rows = 0, cols = 0;
  std::vector<T> a;
  DenseMatrix() = default;
  DenseMatrix(int r, int c, const T& fill) : rows(r), cols(c), a(std::size_t(r) * c, fill) {}
  T& operator()(int i, int j) { return a[std::size_t(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

template <class Ops>
DenseMatrix<typename Ops::T> identity(const Ops& ops, int n) {
  DenseMatrix<typename Ops::T> m(n, n, ops.zero());
  for (int i = 0; i < n; ++i) m(i, i) = ops.one();
  return m;
}

template <class Ops>
DenseMatrix<typename Ops::T> multiply(const Ops& ops, const DenseMatrix<typename Ops::T>& x,
                                      const DenseMatrix<typename Ops::T>& y) {
  DenseMatrix<typename Ops::T> r(x.rows, y.cols, ops.zero());
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (ops.is_zero(x(i, k))) continue;
      for (int j = 0; j < y.cols; ++j) r(i, j) = ops.add(r(i, j), ops.mul(x(i, k), y(k, j)));
    }
  return r;
}

template <class T>
const T* find_entry(const SparseVec<T>& v, int idx) {
  auto it = std::lower_bound(v.begin(), v.end(), idx, [](const auto& e, int i) { return e.first < i; });
  if (it == v.end() || it->first != idx) return nullptr;
  return &it->second;
}

// ca*a + cb*b
template <class Ops>
SparseVec<typename Ops::T> combine(const Ops& ops, const typename Ops::T& ca, const SparseVec<typename Ops::T>& a,
                                   const typename Ops::T& cb, const SparseVec<typename Ops::T>& b) {
  SparseVec<typename Ops::T> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      auto v = ops.mul(ca, a[i].second);
      if (!ops.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      auto v = ops.mul(cb, b[j].second);
      if (!ops.is_zero(v)) out.emplace_back(b[j].first, std::move(v));
      ++j;
    } else {
      auto v = ops.add(ops.mul(ca, a[i].second), ops.mul(cb, b[j].second));
      if (!ops.is_zero(v)) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// y - q*x
template <class Ops>
SparseVec<typename Ops::T> sub_multiple(const Ops& ops, const SparseVec<typename Ops::T>& y, const typename Ops::T& q,
                                        const SparseVec<typename Ops::T>& x) {
  return combine(ops, ops.one(), y, ops.neg(q), x);
}

template <class Ops>
SparseVec<typename Ops::T> from_pairs(const Ops& ops, std::vector<std::pair<int, typename Ops::T>> entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec<typename Ops::T> out;
  for (auto& [i, v] : entries) {
    if (!out.empty() && out.back().first == i)
      out.back().second = ops.add(out.back().second, v);
    else
      out.emplace_back(i, v);
  }
  std::erase_if(out, [&](const auto& e) { return ops.is_zero(e.second); });
  return out;
}

// M*x where x is indexed by columns of M
template <class Ops>
SparseVec<typename Ops::T> apply(const Ops& ops, const SparseMatrix<typename Ops::T>& m,
                                 const SparseVec<typename Ops::T>& x) {
  std::vector<std::pair<int, typename Ops::T>> acc;
  for (const auto& [j, c] : x)
    for (const auto& [i, v] : m.cols[j]) acc.emplace_back(i, ops.mul(c, v));
  return from_pairs(ops, std::move(acc));
}

template <class Ops>
SparseMatrix<typename Ops::T> convert(const Ops& ops, const SparseMatrix<Integer>& m) {
  SparseMatrix<typename Ops::T> out;
  out.rows = m.rows;
  out.cols.resize(m.cols.size());
  for (std::size_t j = 0; j < m.cols.size(); ++j)
    for (const auto& [i, v] : m.cols[j]) {
      auto w = ops.from(v);
      if (!ops.is_zero(w)) out.cols[j].emplace_back(i, w);
    }
  return out;
}

template <class Ops>
SparseVec<typename Ops::T> convert_vec(const Ops& ops, const SparseVec<Integer>& v) {
  SparseVec<typename Ops::T> out;
  for (const auto& [i, x] : v) {
    auto w = ops.from(x);
    if (!ops.is_zero(w)) out.emplace_back(i, w);
  }
  return out;
}

template <class T>
SparseMatrix<T> transpose(const SparseMatrix<T>& m) {
  SparseMatrix<T> t;
  t.rows = m.col_count();
  t.cols.resize(m.rows);
  for (int j = 0; j < m.col_count(); ++j)
    for (const auto& [i, v] : m.cols[j]) t.cols[i].emplace_back(j, v);
  return t;
}

namespace detail {

// Column reduction with transform tracking.  After reduce(), every column
// that is still active is zero; retired columns form an echelon family.
template <class Ops>
struct ColumnReducer {
  using T = typename Ops::T;
  const Ops& ops;
  std::vector<SparseVec<T>> v, t;
  std::vector<char> active;
  std::vector<std::vector<int>> row_cols;
  bool track;

  ColumnReducer(const Ops& o, const SparseMatrix<T>& m, bool track_transform)
      : ops(o), v(m.cols), active(m.cols.size(), 1), row_cols(m.rows), track(track_transform) {
    if (track) {
      t.resize(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) t[j] = {{static_cast<int>(j), ops.one()}};
    }
    for (std::size_t j = 0; j < v.size(); ++j)
      for (const auto& e : v[j]) row_cols[e.first].push_back(static_cast<int>(j));
  }

  std::vector<int> live(int r) {
    auto& lst = row_cols[r];
    std::sort(lst.begin(), lst.end());
    lst.erase(std::unique(lst.begin(), lst.end()), lst.end());
    std::vector<int> out;
    for (int j : lst)
      if (active[j] && find_entry(v[j], r)) out.push_back(j);
    lst = out;
    return out;
  }

  void subtract(int k, const T& q, int p) {
    v[k] = sub_multiple(ops, v[k], q, v[p]);
    if (track) t[k] = sub_multiple(ops, t[k], q, t[p]);
    for (const auto& e : v[p]) row_cols[e.first].push_back(k);
  }

  // Reduce row r to a single active column, which is retired.  Returns it or -1.
  int eliminate_row(int r) {
    auto cand = live(r);
    while (cand.size() > 1) {
      int p = cand[0];
      for (int j : cand) {
        const T& a = *find_entry(v[j], r);
        const T& b = *find_entry(v[p], r);
        if (ops.less_norm(a, b) || (!ops.less_norm(b, a) && v[j].size() < v[p].size())) p = j;
      }
      T pv = *find_entry(v[p], r);
      std::vector<int> next{p};
      for (int k : cand) {
        if (k == p) continue;
        T q = ops.quotient(*find_entry(v[k], r), pv);
        subtract(k, q, p);
        if (find_entry(v[k], r)) next.push_back(k);
      }
      cand = std::move(next);
    }
    if (cand.empty()) return -1;
    active[cand[0]] = 0;
    return cand[0];
  }
};

}  // namespace detail

// Basis of {x : M x = 0}.  Over Z the result is a lattice basis of the kernel.
template <class Ops>
std::vector<SparseVec<typename Ops::T>> kernel_basis(const Ops& ops, const SparseMatrix<typename Ops::T>& m) {
  detail::ColumnReducer<Ops> red(ops, m, true);
  for (int r = 0; r < m.rows; ++r) red.eliminate_row(r);
  std::vector<SparseVec<typename Ops::T>> out;
  for (std::size_t j = 0; j < red.v.size(); ++j)
    if (red.active[j]) out.push_back(std::move(red.t[j]));
  return out;
}

template <class T>
struct RankInfo {
  int rank = 0;
  // nonunit invariant factors (empty over a field)
  std::vector<T> torsion;
};

template <class Ops>
DenseMatrix<typename Ops::T> snf_diagonal(const Ops& ops, DenseMatrix<typename Ops::T> a);

// Rank and nonunit invariant factors of M.
template <class Ops>
RankInfo<typename Ops::T> rank_info(const Ops& ops, const SparseMatrix<typename Ops::T>& m) {
  using T = typename Ops::T;
  detail::ColumnReducer<Ops> red(ops, m, false);
  RankInfo<T> info;
  std::vector<int> order(m.cols.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return m.cols[a].size() < m.cols[b].size(); });
  bool progress = true;
  while (progress) {
    progress = false;
    for (int j : order) {
      if (!red.active[j]) continue;
      if (red.v[j].empty()) {
        red.active[j] = 0;
        continue;
      }
      int best = -1;
      std::size_t best_count = 0;
      for (const auto& [r, x] : red.v[j]) {
        if (!ops.is_unit(x)) continue;
        std::size_t c = red.row_cols[r].size();
        if (best < 0 || c < best_count) best = r, best_count = c;
      }
      if (best < 0) continue;
      T pinv = ops.inv(*find_entry(red.v[j], best));
      for (int k : red.live(best)) {
        if (k == j) continue;
        red.subtract(k, ops.mul(*find_entry(red.v[k], best), pinv), j);
      }
      red.active[j] = 0;
      ++info.rank;
      progress = true;
    }
  }
  std::vector<int> rest;
  std::vector<int> rows;
  for (std::size_t j = 0; j < red.v.size(); ++j)
    if (red.active[j] && !red.v[j].empty()) {
      rest.push_back(static_cast<int>(j));
      for (const auto& e : red.v[j]) rows.push_back(e.first);
    }
  if (rest.empty()) return info;
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  DenseMatrix<T> core(static_cast<int>(rows.size()), static_cast<int>(rest.size()), ops.zero());
  for (std::size_t c = 0; c < rest.size(); ++c)
    for (const auto& [r, x] : red.v[rest[c]]) {
      int i = static_cast<int>(std::lower_bound(rows.begin(), rows.end(), r) - rows.begin());
      core(i, static_cast<int>(c)) = x;
    }
  auto d = snf_diagonal(ops, std::move(core));
  for (int i = 0; i < std::min(d.rows, d.cols); ++i) {
    if (ops.is_zero(d(i, i))) break;
    ++info.rank;
    if (!ops.is_unit(d(i, i))) info.torsion.push_back(ops.normalize(d(i, i)));
  }
  return info;
}

template <class Ops>
int rank(const Ops& ops, const SparseMatrix<typename Ops::T>& m) {
  return rank_info(ops, m).rank;
}

template <class T>
struct SmithForm {
  DenseMatrix<T> u, d, v;  // m = u * d * v
};

namespace detail {

// Dense Smith normal form, optionally tracking u and v with m = u * a * v.
template <class Ops>
void smith_in_place(const Ops& ops, DenseMatrix<typename Ops::T>& a, DenseMatrix<typename Ops::T>* u,
                    DenseMatrix<typename Ops::T>* v) {
  using T = typename Ops::T;
  const int m = a.rows, n = a.cols;
  auto swap_rows = [&](int i, int j) {
    if (i == j) return;
    for (int c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    if (u)
      for (int r = 0; r < m; ++r) std::swap((*u)(r, i), (*u)(r, j));
  };
  auto swap_cols = [&](int i, int j) {
    if (i == j) return;
    for (int r = 0; r < m; ++r) std::swap(a(r, i), a(r, j));
    if (v)
      for (int c = 0; c < n; ++c) std::swap((*v)(i, c), (*v)(j, c));
  };
  // row i -= q * row j
  auto row_sub = [&](int i, const T& q, int j) {
    for (int c = 0; c < n; ++c)
      if (!ops.is_zero(a(j, c))) a(i, c) = ops.sub(a(i, c), ops.mul(q, a(j, c)));
    if (u)
      for (int r = 0; r < m; ++r)
        if (!ops.is_zero((*u)(r, i))) (*u)(r, j) = ops.add((*u)(r, j), ops.mul(q, (*u)(r, i)));
  };
  // col i -= q * col j
  auto col_sub = [&](int i, const T& q, int j) {
    for (int r = 0; r < m; ++r)
      if (!ops.is_zero(a(r, j))) a(r, i) = ops.sub(a(r, i), ops.mul(q, a(r, j)));
    if (v)
      for (int c = 0; c < n; ++c)
        if (!ops.is_zero((*v)(i, c))) (*v)(j, c) = ops.add((*v)(j, c), ops.mul(q, (*v)(i, c)));
  };
  // row i *= unit s
  auto row_scale = [&](int i, const T& s) {
    T si = ops.inv(s);
    for (int c = 0; c < n; ++c) a(i, c) = ops.mul(a(i, c), s);
    if (u)
      for (int r = 0; r < m; ++r) (*u)(r, i) = ops.mul((*u)(r, i), si);
  };

  for (int t = 0; t < std::min(m, n); ++t) {
    int pi = -1, pj = -1;
    for (int i = t; i < m; ++i)
      for (int j = t; j < n; ++j)
        if (!ops.is_zero(a(i, j)) && (pi < 0 || ops.less_norm(a(i, j), a(pi, pj)))) pi = i, pj = j;
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    for (;;) {
      bool dirty = false;
      for (int i = t + 1; i < m; ++i)
        if (!ops.is_zero(a(i, t))) row_sub(i, ops.quotient(a(i, t), a(t, t)), t);
      for (int j = t + 1; j < n; ++j)
        if (!ops.is_zero(a(t, j))) col_sub(j, ops.quotient(a(t, j), a(t, t)), t);
      int bi = -1, bj = -1;
      for (int i = t + 1; i < m; ++i)
        if (!ops.is_zero(a(i, t)) && (bi < 0 || ops.less_norm(a(i, t), a(bi, t)))) bi = i;
      for (int j = t + 1; j < n; ++j)
        if (!ops.is_zero(a(t, j)) && (bj < 0 || ops.less_norm(a(t, j), a(t, bj)))) bj = j;
      if (bi >= 0 && (bj < 0 || ops.less_norm(a(bi, t), a(t, bj)))) {
        swap_rows(t, bi);
        dirty = true;
      } else if (bj >= 0) {
        swap_cols(t, bj);
        dirty = true;
      }
      if (dirty) continue;
      // divisibility of the remaining block
      int fi = -1;
      for (int i = t + 1; i < m && fi < 0; ++i)
        for (int j = t + 1; j < n; ++j)
          if (!ops.is_zero(a(i, j)) && !ops.divides(a(t, t), a(i, j))) {
            fi = i;
            break;
          }
      if (fi < 0) break;
      row_sub(t, ops.neg(ops.one()), fi);
    }
    T norm = ops.normalize(a(t, t));
    if (!(norm == a(t, t))) {
      // a(t,t) = unit * norm; scale row by the inverse unit
      if constexpr (Ops::kField) {
        row_scale(t, ops.inv(a(t, t)));
      } else {
        row_scale(t, ops.neg(ops.one()));
      }
    }
  }
}

}  // namespace detail

template <class Ops>
DenseMatrix<typename Ops::T> snf_diagonal(const Ops& ops, DenseMatrix<typename Ops::T> a) {
  detail::smith_in_place(ops, a, nullptr, nullptr);
  return a;
}

// m = u * d * v with u, v invertible and d diagonal, d_i | d_{i+1}.
template <class Ops>
SmithForm<typename Ops::T> smith_normal_form(const Ops& ops, const DenseMatrix<typename Ops::T>& m) {
  SmithForm<typename Ops::T> s{identity(ops, m.rows), m, identity(ops, m.cols)};
  detail::smith_in_place(ops, s.d, &s.u, &s.v);
  return s;
}

// Fraction-free determinant.
template <class Ops>
typename Ops::T determinant(const Ops& ops, DenseMatrix<typename Ops::T> a) {
  using T = typename Ops::T;
  if (a.rows != a.cols) throw Error("DimensionMismatch", "determinant of a non-square matrix");
  const int n = a.rows;
  if (n == 0) return ops.one();
  bool negate = false;
  if constexpr (Ops::kField) {
    T det = ops.one();
    for (int k = 0; k < n; ++k) {
      int p = k;
      while (p < n && ops.is_zero(a(p, k))) ++p;
      if (p == n) return ops.zero();
      if (p != k) {
        for (int c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
        negate = !negate;
      }
      det = ops.mul(det, a(k, k));
      T inv = ops.inv(a(k, k));
      for (int i = k + 1; i < n; ++i) {
        if (ops.is_zero(a(i, k))) continue;
        T f = ops.mul(a(i, k), inv);
        for (int c = k; c < n; ++c) a(i, c) = ops.sub(a(i, c), ops.mul(f, a(k, c)));
      }
    }
    return negate ? ops.neg(det) : det;
  } else {
    T prev = ops.one();
    for (int k = 0; k < n - 1; ++k) {
      int p = k;
      while (p < n && ops.is_zero(a(p, k))) ++p;
      if (p == n) return ops.zero();
      if (p != k) {
        for (int c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
        negate = !negate;
      }
      for (int i = k + 1; i < n; ++i) {
        for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        a(i, k) = ops.zero();
      }
      prev = a(k, k);
    }
    T det = a(n - 1, n - 1);
    return negate ? ops.neg(det) : det;
  }
}

// Echelon form of a family of independent vectors, supporting exact
// coordinate solves.
template <class Ops>
class LatticeSolver {
 public:
  using T = typename Ops::T;

  LatticeSolver(const Ops& ops, const std::vector<SparseVec<T>>& basis) : ops_(ops), size_(basis.size()) {
    for (std::size_t k = 0; k < basis.size(); ++k) insert(basis[k], static_cast<int>(k));
  }

  std::size_t size() const { return size_; }

  // coordinates c with sum c_k basis_k = y, or nullopt when y is not in the span
  std::optional<SparseVec<T>> solve(SparseVec<T> y) const {
    std::vector<std::pair<int, T>> coords;
    for (std::size_t i = 0; i < echelon_.size() && !y.empty(); ++i) {
      const T* yv = find_entry(y, pivots_[i]);
      if (!yv) continue;
      const T& ev = *find_entry(echelon_[i], pivots_[i]);
      if (!ops_.divides(ev, *yv)) return std::nullopt;
      T q = ops_.quotient(*yv, ev);
      y = sub_multiple(ops_, y, q, echelon_[i]);
      for (const auto& [k, c] : transforms_[i]) coords.emplace_back(k, ops_.mul(q, c));
    }
    if (!y.empty()) return std::nullopt;
    return from_pairs(ops_, std::move(coords));
  }

 private:
  void insert(SparseVec<T> v, int k) {
    SparseVec<T> tv{{k, ops_.one()}};
    for (std::size_t i = 0; i < echelon_.size() && !v.empty(); ++i) {
      const T* vv = find_entry(v, pivots_[i]);
      if (!vv) continue;
      T a = *find_entry(echelon_[i], pivots_[i]);
      T b = *vv;
      if (ops_.divides(a, b)) {
        T q = ops_.quotient(b, a);
        v = sub_multiple(ops_, v, q, echelon_[i]);
        tv = sub_multiple(ops_, tv, q, transforms_[i]);
        continue;
      }
      if constexpr (!Ops::kField) {
        // replace e_i by the gcd combination, keep the complementary one in v
        ExtGcd g = ext_gcd(a, b);
        T ag = a / g.g, bg = b / g.g;
        auto e_new = combine(ops_, g.s, echelon_[i], g.t, v);
        auto te_new = combine(ops_, g.s, transforms_[i], g.t, tv);
        v = combine(ops_, ag, v, ops_.neg(bg), echelon_[i]);
        tv = combine(ops_, ag, tv, ops_.neg(bg), transforms_[i]);
        echelon_[i] = std::move(e_new);
        transforms_[i] = std::move(te_new);
      }
    }
    if (v.empty()) throw Error("DimensionMismatch", "lattice basis vectors are dependent");
    std::size_t best = 0;
    for (std::size_t q = 1; q < v.size(); ++q)
      if (ops_.less_norm(v[q].second, v[best].second)) best = q;
    pivots_.push_back(v[best].first);
    echelon_.push_back(std::move(v));
    transforms_.push_back(std::move(tv));
  }

  Ops ops_;
  std::size_t size_;
  std::vector<SparseVec<T>> echelon_, transforms_;
  std::vector<int> pivots_;
};

// Given rows y_1..y_r spanning a saturated lattice (so the map Y: R^m -> R^r
// is onto), return x_1..x_r in R^m with Y x_j = e_j.
template <class Ops>
std::vector<SparseVec<typename Ops::T>> right_inverse(const Ops& ops, int m,
                                                      const std::vector<SparseVec<typename Ops::T>>& rows) {
  using T = typename Ops::T;
  const int r = static_cast<int>(rows.size());
  SparseMatrix<T> cols;  // Y as columns indexed by m, rows r
  cols.rows = r;
  cols.cols.resize(m);
  for (int i = 0; i < r; ++i)
    for (const auto& [j, v] : rows[i]) cols.cols[j].emplace_back(i, v);
  detail::ColumnReducer<Ops> red(ops, cols, true);
  std::vector<int> piv(r);
  for (int i = 0; i < r; ++i) {
    piv[i] = red.eliminate_row(i);
    if (piv[i] < 0 || !ops.is_unit(*find_entry(red.v[piv[i]], i)))
      throw MathFailure("right_inverse: map is not onto");
  }
  // Y W_piv = H lower triangular, unit diagonal; x = W_piv H^{-1}
  std::vector<SparseVec<T>> x(r);
  for (int j = 0; j < r; ++j) {
    // solve H c = e_j by forward substitution
    std::vector<T> c(r, ops.zero());
    for (int i = 0; i < r; ++i) {
      T acc = i == j ? ops.one() : ops.zero();
      for (int k = 0; k < i; ++k) {
        const T* h = find_entry(red.v[piv[k]], i);
        if (h && !ops.is_zero(c[k])) acc = ops.sub(acc, ops.mul(*h, c[k]));
      }
      c[i] = ops.mul(acc, ops.inv(*find_entry(red.v[piv[i]], i)));
    }
    SparseVec<T> acc;
    for (int k = 0; k < r; ++k)
      if (!ops.is_zero(c[k])) acc = combine(ops, ops.one(), acc, c[k], red.t[piv[k]]);
    x[j] = std::move(acc);
  }
  return x;
}

}  // namespace strata
