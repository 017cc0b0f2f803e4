#include "strata/products.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <random>

namespace strata {

void add_term(ShuffleChain& c, const TensorFace& f, long long coeff) {
  if (coeff == 0) return;
  auto [it, fresh] = c.emplace(f, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second == 0) c.erase(it);
  }
}

namespace {

template <class F>
ShuffleChain map_terms(const ShuffleChain& in, F&& f) {
  ShuffleChain out;
  for (const auto& [face, c] : in)
    for (const auto& t : f(face)) add_term(out, t.face, c * t.sign);
  return out;
}

std::vector<SignedFace> as_list(std::optional<SignedFace> s) {
  if (!s) return {};
  return {std::move(*s)};
}

}  // namespace

ShuffleChain local_coboundary(const LocalBlowup& l, const ShuffleChain& w) {
  return map_terms(w, [&](const TensorFace& f) { return l.coboundary(f); });
}

ShuffleChain local_chain_boundary(const LocalBlowup& l, const ShuffleChain& c) {
  return map_terms(c, [&](const TensorFace& f) { return l.chain_boundary(f); });
}

ShuffleChain local_face_boundary(const LocalBlowup& l, const ShuffleChain& c) {
  return map_terms(c, [&](const TensorFace& f) { return l.face_boundary(f); });
}

ShuffleChain local_mu(const LocalBlowup& l, const ShuffleChain& c) {
  return map_terms(c, [&](const TensorFace& f) { return as_list(l.mu(f)); });
}

ShuffleChain local_cup(const LocalBlowup& l, const ShuffleChain& a, const ShuffleChain& b) {
  ShuffleChain out;
  for (const auto& [fa, ca] : a)
    for (const auto& [fb, cb] : b)
      if (auto r = l.cup(fa, fb)) add_term(out, r->face, ca * cb * r->sign);
  return out;
}

ShuffleChain local_tilde_cap(const LocalBlowup& l, const ShuffleChain& w, const ShuffleChain& c) {
  ShuffleChain out;
  for (const auto& [fw, cw] : w)
    for (const auto& [fc, cc] : c)
      if (auto r = l.tilde_cap(fw, fc)) add_term(out, r->face, cw * cc * r->sign);
  return out;
}

Cochain cup(const BlownUpComplex& b, int k, const Cochain& w, int l, const Cochain& e) {
  const FilteredComplex& x = b.space();
  std::vector<std::pair<int, Integer>> acc;
  for (const auto& [i, cw] : w) {
    const GlobalElement& ga = b.element(k, i);
    const Simplex& ta = b.simplex(ga);
    for (const auto& [j, ce] : e) {
      const GlobalElement& gb = b.element(l, j);
      const Simplex& tb = b.simplex(gb);
      Simplex host;
      std::set_union(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(host));
      if (!x.contains(host)) continue;
      LocalBlowup local = b.local_complex(host);
      auto r = local.cup(b.restrict_to(ga, host), b.restrict_to(gb, host));
      if (!r) continue;
      int idx = b.index(b.from_full(host, r->face));
      if (idx < 0) throw MathFailure("cup product left the blown-up basis");
      acc.emplace_back(idx, cw * ce * Integer(r->sign));
    }
  }
  return from_pairs(IntegerOps{}, std::move(acc));
}

Chain cap(const BlownUpComplex& b, int k, const Cochain& w, int m, const Chain& xi) {
  const FilteredComplex& x = b.space();
  std::vector<std::pair<int, Integer>> acc;
  for (const auto& [s, cs] : xi) {
    const Simplex& host = x.simplex(m, s);
    if (!x.is_regular(host)) continue;
    LocalBlowup local = b.local_complex(host);
    for (const auto& [i, cw] : w) {
      const GlobalElement& g = b.element(k, i);
      const Simplex& t = b.simplex(g);
      if (!std::includes(host.begin(), host.end(), t.begin(), t.end())) continue;
      auto r = local.cap(b.restrict_to(g, host));
      if (!r) continue;
      acc.emplace_back(x.index(b.face_of(host, r->face)), cs * cw * Integer(r->sign));
    }
  }
  return from_pairs(IntegerOps{}, std::move(acc));
}

SparseMatrix<Integer> cap_matrix(const BlownUpComplex& b, int k, int m, const Chain& xi) {
  const FilteredComplex& x = b.space();
  std::vector<std::vector<std::pair<int, Integer>>> cols(b.count(k));
  for (const auto& [s, cs] : xi) {
    const Simplex& host = x.simplex(m, s);
    if (!x.is_regular(host)) continue;
    LocalBlowup local = b.local_complex(host);
    for (const auto& e : local.basis(k)) {
      auto r = local.cap(e);
      if (!r) continue;
      int col = b.index(b.from_local(host, e));
      if (col < 0) throw MathFailure("local element without a global counterpart");
      cols[col].emplace_back(x.index(b.face_of(host, r->face)), cs * Integer(r->sign));
    }
  }
  SparseMatrix<Integer> mat;
  mat.rows = x.count(m - k);
  for (auto& c : cols) mat.cols.push_back(from_pairs(IntegerOps{}, std::move(c)));
  return mat;
}

Cochain unit_cochain(const BlownUpComplex& b) {
  Cochain u;
  for (int i = 0; i < b.count(0); ++i) u.emplace_back(i, Integer(1));
  return u;
}

namespace {

bool is_top_element(const BlownUpComplex& b, const GlobalElement& g) {
  const int n = b.space().formal_dim();
  const std::uint32_t all = n == 0 ? 0u : ((1u << n) - 1);
  return g.eps == all;
}

// Koszul sign of evaluating a tensor cochain on the tensor top chain of s:
// (-1)^{sum_{i>j} d_i d_j} with d_i the dimension of the i-th factor
int evaluation_sign(const FilteredComplex& x, const Simplex& s) {
  std::vector<int> d(x.formal_dim() + 1, 0);
  for (int v : s) ++d[x.level(v)];
  d.back() -= 1;
  int left = 0, e = 0;
  for (int di : d) {
    e += di * left;
    left += di;
  }
  return (e & 1) ? -1 : 1;
}

}  // namespace

Chain chi(const BlownUpComplex& b, int k, const Cochain& w) {
  std::vector<std::pair<int, Integer>> acc;
  for (const auto& [i, c] : w) {
    const GlobalElement& g = b.element(k, i);
    if (is_top_element(b, g)) acc.emplace_back(g.index, c * Integer(evaluation_sign(b.space(), b.simplex(g))));
  }
  return from_pairs(IntegerOps{}, std::move(acc));
}

SparseMatrix<Integer> chi_matrix(const BlownUpComplex& b, int k) {
  SparseMatrix<Integer> m;
  m.rows = b.space().count(k);
  m.cols.resize(b.count(k));
  for (int i = 0; i < b.count(k); ++i) {
    const GlobalElement& g = b.element(k, i);
    if (is_top_element(b, g)) m.cols[i].emplace_back(g.index, Integer(evaluation_sign(b.space(), b.simplex(g))));
  }
  return m;
}

ExtendedInt cochain_perverse_degree(const BlownUpComplex& b, int k, const Cochain& w, const Stratum& s) {
  ExtendedInt best = ExtendedInt::neg_inf();
  for (const auto& [i, c] : w) best = max(best, b.perverse_degree(b.element(k, i), s));
  return best;
}

bool ProductReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const ProductCheck& c) { return c.failures == 0; });
}

namespace {

SparseVec<Integer> random_vec(std::mt19937_64& g, int n, int terms) {
  if (n == 0) return {};
  std::uniform_int_distribution<int> at(0, n - 1), coeff(-3, 3);
  std::vector<std::pair<int, Integer>> v;
  for (int t = 0; t < terms; ++t) v.emplace_back(at(g), Integer(coeff(g)));
  return from_pairs(IntegerOps{}, std::move(v));
}

// terms drawn from the elements living on faces of host
Cochain random_local(std::mt19937_64& g, const BlownUpComplex& b, const LocalBlowup& local, const Simplex& host,
                     int k, int terms) {
  const auto& basis = local.basis(k);
  if (basis.empty()) return {};
  std::uniform_int_distribution<std::size_t> at(0, basis.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<std::pair<int, Integer>> v;
  for (int t = 0; t < terms; ++t) {
    int idx = b.index(b.from_local(host, basis[at(g)]));
    if (idx >= 0) v.emplace_back(idx, Integer(coeff(g)));
  }
  return from_pairs(IntegerOps{}, std::move(v));
}

SparseVec<Integer> plus(const SparseVec<Integer>& a, const SparseVec<Integer>& b, int sign = 1) {
  return combine(IntegerOps{}, Integer(1), a, Integer(sign), b);
}

}  // namespace

ProductReport check_products(const BlownUpComplex& b, int trials, std::uint64_t seed, int terms) {
  const FilteredComplex& x = b.space();
  const int top = b.max_degree();
  std::mt19937_64 g(seed);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, std::max(lo, hi))(g); };
  ProductCheck leibniz{"cap_leibniz"}, cupcap{"cup_cap"}, cupleib{"cup_leibniz"}, assoc{"cup_associative"},
      unit{"unit"};
  const Cochain one = unit_cochain(b);

  for (int t = 0; t < trials; ++t) {
    const int m = pick(0, x.dim());
    const int k = pick(0, std::min(m, top));
    const int l = pick(0, std::min(m - k, top - k));
    const int j = pick(0, std::min(m - k - l, top - k - l));
    // concentrate on one regular host simplex so the products rarely vanish
    Chain xi = random_vec(g, x.count(m), terms);
    std::vector<int> regular;
    for (int i = 0; i < x.count(m); ++i)
      if (x.is_regular(x.simplex(m, i))) regular.push_back(i);
    Cochain w, e, f;
    if (!regular.empty()) {
      const int h = regular[pick(0, static_cast<int>(regular.size()) - 1)];
      xi = plus(xi, Chain{{h, Integer(pick(1, 3))}});
      const Simplex& host = x.simplex(m, h);
      LocalBlowup local = b.local_complex(host);
      w = random_local(g, b, local, host, k, terms);
      e = random_local(g, b, local, host, l, terms);
      f = random_local(g, b, local, host, j, terms);
    }
    w = plus(w, random_vec(g, b.count(k), 2));
    e = plus(e, random_vec(g, b.count(l), 2));
    f = plus(f, random_vec(g, b.count(j), 2));
    std::erase_if(xi, [&](const auto& c) { return !x.is_regular(x.simplex(m, c.first)); });
    const int sk = k % 2 ? -1 : 1;

    // d(w cap xi) = dw cap xi + (-1)^k w cap d xi
    ++leibniz.trials;
    if (m > k) {
      Chain lhs = regular_boundary_of(x, m - k, cap(b, k, w, m, xi));
      Chain r1 = k < top ? cap(b, k + 1, b.apply_coboundary(k, w), m, xi) : Chain{};
      Chain r2 = cap(b, k, w, m - 1, regular_boundary_of(x, m, xi));
      if (!lhs.empty() || !r1.empty() || !r2.empty()) ++leibniz.nontrivial;
      if (!plus(lhs, plus(r1, r2, sk), -1).empty()) ++leibniz.failures;
    }

    ++cupcap.trials;
    {
      Chain a = cap(b, k + l, cup(b, k, w, l, e), m, xi);
      Chain c = cap(b, l, e, m - k, cap(b, k, w, m, xi));
      if (!a.empty() || !c.empty()) ++cupcap.nontrivial;
      if (!plus(a, c, (k * l) % 2 ? 1 : -1).empty()) ++cupcap.failures;
    }

    // d(w cup e) = dw cup e + (-1)^k w cup de
    ++cupleib.trials;
    if (k + l < top) {
      Cochain lhs = b.apply_coboundary(k + l, cup(b, k, w, l, e));
      Cochain r1 = cup(b, k + 1, b.apply_coboundary(k, w), l, e);
      Cochain r2 = cup(b, k, w, l + 1, b.apply_coboundary(l, e));
      if (!lhs.empty() || !r1.empty() || !r2.empty()) ++cupleib.nontrivial;
      if (!plus(lhs, plus(r1, r2, sk), -1).empty()) ++cupleib.failures;
    }

    ++assoc.trials;
    {
      Cochain a = cup(b, k + l, cup(b, k, w, l, e), j, f);
      Cochain c = cup(b, k, w, l + j, cup(b, l, e, j, f));
      if (!a.empty() || !c.empty()) ++assoc.nontrivial;
      if (!plus(a, c, -1).empty()) ++assoc.failures;
    }

    ++unit.trials;
    if (!w.empty()) ++unit.nontrivial;
    if (!plus(cup(b, 0, one, k, w), w, -1).empty() || !plus(cup(b, k, w, 0, one), w, -1).empty()) ++unit.failures;
  }
  return ProductReport{{leibniz, cupcap, cupleib, assoc, unit}};
}

}  // namespace strata
