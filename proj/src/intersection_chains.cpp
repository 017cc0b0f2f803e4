#include "strata/intersection_chains.hpp"

#include <algorithm>

namespace strata {

ExtendedInt perverse_degree(const FilteredComplex& x, const Simplex& s, int ell) {
  int cut = x.formal_dim() - ell;
  int k = 0;
  for (int v : s)
    if (x.level(v) <= cut) ++k;
  return k == 0 ? ExtendedInt::neg_inf() : ExtendedInt(k - 1);
}

std::vector<int> strata_met(const FilteredComplex& x, const Simplex& s) {
  std::vector<int> out;
  for (int v : s) {
    int st = x.stratum_of_vertex(v);
    if (out.empty() || out.back() != st) out.push_back(st);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExtendedInt perverse_degree(const FilteredComplex& x, const Simplex& s, const Stratum& stratum) {
  bool meets = false;
  for (int v : s)
    if (x.level(v) == stratum.key.level && x.strata()[x.stratum_of_vertex(v)].key == stratum.key) meets = true;
  if (!meets) return ExtendedInt::neg_inf();
  return perverse_degree(x, s, stratum.codim);
}

bool is_allowable(const FilteredComplex& x, const Simplex& s, const Perversity& p) {
  const int d = static_cast<int>(s.size()) - 1;
  for (int si : strata_met(x, s)) {
    const Stratum& st = x.strata()[si];
    if (st.regular) continue;
    ExtendedInt deg = perverse_degree(x, s, st.codim);
    if (deg > ExtendedInt(d - st.codim + p.value(st))) return false;
  }
  return true;
}

std::vector<std::vector<char>> allowable_mask(const FilteredComplex& x, const Perversity& p) {
  std::vector<std::vector<char>> m(x.dim() + 1);
  for (int d = 0; d <= x.dim(); ++d) {
    m[d].resize(x.count(d));
    for (int i = 0; i < x.count(d); ++i) m[d][i] = is_allowable(x, x.simplex(d, i), p);
  }
  return m;
}

BoundarySplit boundary_split(const FilteredComplex& x, const Simplex& s) {
  BoundarySplit b;
  const int d = static_cast<int>(s.size()) - 1;
  if (d == 0) return b;
  std::vector<std::pair<int, Integer>> reg, sing;
  for (int j = 0; j <= d; ++j) {
    Simplex f = s;
    f.erase(f.begin() + j);
    Integer c(j % 2 == 0 ? 1 : -1);
    (x.is_regular(f) ? reg : sing).emplace_back(x.index(f), c);
  }
  b.regular = from_pairs(IntegerOps{}, std::move(reg));
  b.singular = from_pairs(IntegerOps{}, std::move(sing));
  return b;
}

Chain boundary_of(const FilteredComplex& x, int d, const Chain& c) {
  std::vector<std::pair<int, Integer>> acc;
  for (const auto& [i, a] : c) {
    const Simplex& s = x.simplex(d, i);
    for (int j = 0; j <= d && d > 0; ++j) {
      Simplex f = s;
      f.erase(f.begin() + j);
      acc.emplace_back(x.index(f), j % 2 == 0 ? a : -a);
    }
  }
  return from_pairs(IntegerOps{}, std::move(acc));
}

Chain regular_boundary_of(const FilteredComplex& x, int d, const Chain& c) {
  Chain b = boundary_of(x, d, c);
  std::erase_if(b, [&](const auto& e) { return !x.is_regular(x.simplex(d - 1, e.first)); });
  return b;
}

namespace {

Presentation chain_presentation(const FilteredComplex& x, const Perversity& p, bool tame) {
  Presentation pr;
  pr.min_degree = 0;
  pr.step = -1;
  auto allow = allowable_mask(x, p);
  for (int d = 0; d <= x.dim(); ++d) {
    pr.dims.push_back(x.count(d));
    std::vector<char> a(x.count(d));
    for (int i = 0; i < x.count(d); ++i) a[i] = allow[d][i] && (!tame || x.is_regular(x.simplex(d, i)));
    pr.allowed.push_back(std::move(a));
    SparseMatrix<Integer> m = x.boundary(d);
    if (tame && d > 0)
      for (auto& col : m.cols)
        std::erase_if(col, [&](const auto& e) { return !x.is_regular(x.simplex(d - 1, e.first)); });
    pr.diff.push_back(std::move(m));
  }
  return pr;
}

}  // namespace

Presentation intersection_complex(const FilteredComplex& x, const Perversity& p) {
  return chain_presentation(x, p, false);
}

Presentation tame_complex(const FilteredComplex& x, const Perversity& p) { return chain_presentation(x, p, true); }

bool chain_is_allowable(const FilteredComplex& x, int d, const Chain& c, const Perversity& p) {
  for (const auto& [i, a] : c)
    if (!is_allowable(x, x.simplex(d, i), p)) return false;
  return true;
}

}  // namespace strata
