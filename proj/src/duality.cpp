#include "strata/duality.hpp"

#include "strata/errors.hpp"
#include "strata/products.hpp"

#include <deque>
#include <map>

namespace strata {

Orientation orient(const FilteredComplex& x, bool mod2) {
  const int n = x.formal_dim();
  if (x.dim() != n) throw Error("NotPseudomanifold", "no simplex of the formal dimension");
  for (const auto& f : x.facets())
    if (static_cast<int>(f.size()) != n + 1) throw Error("NotPseudomanifold", "complex is not pure");

  // regular (n-1)-face -> (top simplex, removed position)
  std::map<int, std::vector<std::pair<int, int>>> faces;
  for (int i = 0; i < x.count(n); ++i) {
    const Simplex& s = x.simplex(n, i);
    for (int j = 0; j <= n && n > 0; ++j) {
      Simplex f = s;
      f.erase(f.begin() + j);
      if (x.is_regular(f)) faces[x.index(f)].emplace_back(i, j);
    }
  }
  std::vector<std::vector<std::pair<int, int>>> adj(x.count(n));  // (neighbour, sign relation)
  for (const auto& [f, inc] : faces) {
    if (inc.size() != 2)
      throw Error("NotPseudomanifold", "a regular (n-1)-simplex lies in " + std::to_string(inc.size()) +
                                           " top simplices");
    // coherent when o_a (-1)^ja + o_b (-1)^jb = 0
    int rel = ((inc[0].second + inc[1].second) % 2 == 0) ? -1 : 1;
    adj[inc[0].first].emplace_back(inc[1].first, rel);
    adj[inc[1].first].emplace_back(inc[0].first, rel);
  }

  Orientation o;
  if (mod2) {
    o.sign.assign(x.count(n), 1);
    return o;
  }
  o.sign.assign(x.count(n), 0);
  std::vector<std::pair<int, int>> seeds;
  for (const auto& [s, sign] : x.supplied_orientations()) {
    if (static_cast<int>(s.size()) != n + 1) throw Error("Orientation", "orientation given on a non-top simplex");
    seeds.emplace_back(x.index(s), sign);
  }
  for (int i = 0; i < x.count(n); ++i) seeds.emplace_back(i, 1);
  for (const auto& [start, sign] : seeds) {
    if (o.sign[start]) continue;
    o.sign[start] = sign;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int a = queue.front();
      queue.pop_front();
      for (const auto& [b, rel] : adj[a]) {
        int want = o.sign[a] * rel;
        if (!o.sign[b]) {
          o.sign[b] = want;
          queue.push_back(b);
        } else if (o.sign[b] != want) {
          throw Error("NonOrientable", "orientation propagation reached a contradiction");
        }
      }
    }
  }
  for (const auto& [s, sign] : x.supplied_orientations())
    if (o.sign[x.index(s)] != sign) throw Error("Orientation", "supplied orientations are not coherent");
  return o;
}

Chain fundamental_cycle(const FilteredComplex& x, const Orientation& o, bool mod2) {
  const int n = x.formal_dim();
  Chain g;
  for (int i = 0; i < x.count(n); ++i)
    if (o.sign[i]) g.emplace_back(i, Integer(o.sign[i]));
  for (const auto& [i, c] : regular_boundary_of(x, n, g))
    if (!mod2 || c.mod(2) != 0) throw MathFailure("fundamental chain is not a tame cycle");
  return g;
}

Chain fundamental_cycle(const FilteredComplex& x, const CoefficientRing& ring) {
  const bool mod2 = ring.kind == RingKind::PrimeField && ring.p == 2;
  return fundamental_cycle(x, orient(x, mod2), mod2);
}

SparseMatrix<Integer> duality_matrix(const BlownUpComplex& b, int k, const Chain& gamma) {
  return cap_matrix(b, k, b.space().formal_dim(), gamma);
}

namespace {

// the cap map must send the perverse blown-up complex into allowable chains
void check_lands_in_tame(const BlownUpComplex& b, const Presentation& nb, int k, const SparseMatrix<Integer>& f,
                         const std::vector<char>& target_allowed) {
  auto inside = [&](const SparseVec<Integer>& v) {
    for (const auto& [r, c] : v)
      if (!target_allowed[r]) return false;
    return true;
  };
  bool ok = true;
  for (int i = 0; i < b.count(k) && ok; ++i)
    if (nb.allowed[k][i]) ok = inside(f.cols[i]);
  if (ok) return;
  for (const auto& v : subcomplex_basis(IntegerOps{}, nb, k))
    if (!inside(apply(IntegerOps{}, f, v)))
      throw MathFailure("cap with the fundamental class leaves the tame complex in degree " + std::to_string(k));
}

}  // namespace

Presentation duality_cone(const BlownUpComplex& b, const Perversity& p, const Chain& gamma) {
  const FilteredComplex& x = b.space();
  const int n = x.formal_dim();
  const int top = b.max_degree();
  Presentation tame = tame_complex(x, p);
  Presentation nb = b.presentation(p);
  std::vector<SparseMatrix<Integer>> f(top + 1);
  for (int k = 0; k <= top; ++k) {
    f[k] = duality_matrix(b, k, gamma);
    if (n - k >= 0 && n - k <= x.dim()) check_lands_in_tame(b, nb, k, f[k], tame.allowed[n - k]);
  }
  auto bcount = [&](int k) { return b.count(k); };
  auto ccount = [&](int j) { return x.count(j); };

  Presentation pr;
  pr.step = -1;
  pr.min_degree = std::min(0, n + 1 - top);
  const int hi = n + 1;
  for (int j = pr.min_degree; j <= hi; ++j) {
    const int k = n - j + 1;
    const int na = bcount(k), nc = ccount(j);
    pr.dims.push_back(na + nc);
    std::vector<char> allow;
    for (int i = 0; i < na; ++i) allow.push_back(nb.allowed[k][i]);
    for (int i = 0; i < nc; ++i) allow.push_back(tame.allowed[j][i]);
    pr.allowed.push_back(std::move(allow));

    SparseMatrix<Integer> d;
    if (j - 1 < pr.min_degree) {
      d.rows = 0;
      d.cols.resize(na + nc);
    } else {
      const int ka = k + 1;
      const int off = bcount(ka);
      d.rows = off + ccount(j - 1);
      for (int i = 0; i < na; ++i) {
        SparseVec<Integer> col;
        if (k >= 0 && k < top)
          for (const auto& [r, v] : b.coboundary(k).cols[i]) col.emplace_back(r, -v);
        for (const auto& [r, v] : f[k].cols[i]) col.emplace_back(off + r, v);
        d.cols.push_back(std::move(col));
      }
      for (int i = 0; i < nc; ++i) {
        SparseVec<Integer> col;
        for (const auto& [r, v] : tame.diff[j].cols[i]) col.emplace_back(off + r, v);
        d.cols.push_back(std::move(col));
      }
    }
    pr.diff.push_back(std::move(d));
  }
  return pr;
}

namespace {

template <class Ops>
std::vector<std::vector<Integer>> degree_matrix(const Ops& ops, const BlownUpComplex& b, const Presentation& nb,
                                                const Presentation& tame, const Chain& gamma, int k) {
  const int n = b.space().formal_dim();
  HomologyBasis<Ops> hc(ops, nb, k), hh(ops, tame, n - k);
  auto f = convert(ops, duality_matrix(b, k, gamma));
  std::vector<std::vector<Integer>> rows;
  for (const auto& rep : hc.representatives()) {
    auto coords = hh.classify(apply(ops, f, rep));
    std::vector<Integer> row;
    for (const auto& c : coords) row.push_back(ops.lift(c));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

DualityReport duality(const BlownUpComplex& b, const Perversity& p, const CoefficientRing& ring, bool with_matrices) {
  const FilteredComplex& x = b.space();
  const int n = x.formal_dim();
  Chain gamma = fundamental_cycle(x, ring);
  DualityReport r;
  r.ring = ring;
  r.cone = homology(duality_cone(b, p, gamma), ring);
  r.iso = true;
  for (const auto& g : r.cone.groups) r.iso = r.iso && g.is_zero();

  Presentation nb = b.presentation(p);
  Presentation tame = tame_complex(x, p);
  auto hc = homology(nb, ring);
  auto hh = homology(tame, ring);
  for (int k = 0; k <= n; ++k) {
    DualityDegree d;
    d.k = k;
    d.cohomology = hc.at(k);
    d.homology = hh.at(n - k);
    if (with_matrices) {
      if (ring.kind == RingKind::PrimeField)
        d.matrix = degree_matrix(PrimeFieldOps{ring.p}, b, nb, tame, gamma, k);
      else
        d.matrix = degree_matrix(IntegerOps{}, b, nb, tame, gamma, k);
    }
    r.degrees.push_back(std::move(d));
  }
  for (int k = n + 1; k <= hc.max_degree(); ++k)
    if (!hc.at(k).is_zero()) r.iso = false;
  return r;
}

Integer augmentation(const Chain& c) {
  Integer s(0);
  for (const auto& [i, v] : c) s = s + v;
  return s;
}

namespace {

template <class Ops>
PairingReport pairing_impl(const Ops& ops, const BlownUpComplex& b, const Perversity& p, const Perversity& q, int k,
                           const CoefficientRing& ring) {
  const FilteredComplex& x = b.space();
  const int n = x.formal_dim();
  const bool field = ring.is_field();
  Chain gamma = fundamental_cycle(x, ring);
  Presentation np = b.presentation(p), nq = b.presentation(q);
  HomologyBasis<Ops> hp(ops, np, k), hq(ops, nq, n - k);
  auto lift = [&](const SparseVec<typename Ops::T>& v) {
    Cochain c;
    for (const auto& [i, a] : v) c.emplace_back(i, ops.lift(a));
    return c;
  };
  PairingReport r;
  r.k = k;
  r.rows = hp.rank();
  r.cols = hq.rank();
  DenseMatrix<typename Ops::T> m(r.rows, r.cols, ops.zero());
  std::vector<Cochain> right;
  for (const auto& e : hq.representatives()) right.push_back(lift(e));
  for (int i = 0; i < r.rows; ++i) {
    Cochain w = lift(hp.representatives()[i]);
    std::vector<Integer> row;
    for (int j = 0; j < r.cols; ++j) {
      Integer v = augmentation(cap(b, n, cup(b, k, w, n - k, right[j]), n, gamma));
      m(i, j) = ops.from(v);
      row.push_back(ops.lift(m(i, j)));
    }
    r.matrix.push_back(std::move(row));
  }
  r.square = r.rows == r.cols;
  if (r.square) {
    auto det = determinant(ops, m);
    r.det = ops.lift(det);
    r.nondegenerate = !ops.is_zero(det);
    r.unimodular = field ? r.nondegenerate : ops.is_unit(det);
  }
  return r;
}

template <class Ops>
ChiReport chi_impl(const Ops& ops, const BlownUpComplex& b, const Perversity& p, int k, const CoefficientRing& ring) {
  const FilteredComplex& x = b.space();
  HomologyBasis<Ops> hc(ops, b.presentation(p), k), hh(ops, tame_complex(x, complement(p)), k);
  auto chi_m = convert(ops, chi_matrix(b, k));
  ChiReport r;
  r.k = k;
  r.rows = hc.rank();
  r.cols = hh.rank();
  DenseMatrix<typename Ops::T> m(r.rows, r.cols, ops.zero());
  for (int i = 0; i < r.rows; ++i) {
    auto c = apply(ops, chi_m, hc.representatives()[i]);
    std::vector<Integer> row;
    for (int j = 0; j < r.cols; ++j) {
      auto v = ops.zero();
      for (const auto& [s, a] : hh.representatives()[j])
        if (const auto* w = find_entry(c, s)) v = ops.add(v, ops.mul(a, *w));
      m(i, j) = v;
      row.push_back(ops.lift(v));
    }
    r.matrix.push_back(std::move(row));
  }
  r.square = r.rows == r.cols;
  if (r.square) {
    auto det = determinant(ops, m);
    r.det = ops.lift(det);
    r.invertible = ring.is_field() ? !ops.is_zero(det) : ops.is_unit(det);
  }
  return r;
}

}  // namespace

ChiReport chi_pairing(const BlownUpComplex& b, const Perversity& p, int k, const CoefficientRing& ring) {
  if (ring.kind == RingKind::PrimeField) return chi_impl(PrimeFieldOps{ring.p}, b, p, k, ring);
  return chi_impl(IntegerOps{}, b, p, k, ring);
}

PairingReport pairing(const BlownUpComplex& b, const Perversity& p, const Perversity& q, int k,
                      const CoefficientRing& ring) {
  if (ring.kind == RingKind::PrimeField) return pairing_impl(PrimeFieldOps{ring.p}, b, p, q, k, ring);
  return pairing_impl(IntegerOps{}, b, p, q, k, ring);
}

WittReport witt_report(const FilteredComplex& x, const CoefficientRing& ring) {
  WittReport r;
  for (const auto& s : x.strata()) {
    if (s.regular) continue;
    WittStratum w;
    w.key = s.key;
    w.codim = s.codim;
    w.checked = s.codim % 2 == 1;
    if (w.checked) {
      auto it = x.links().find(s.key);
      if (it == x.links().end() || !it->second.complex)
        throw Error("MissingLink", "no link known for stratum (" + std::to_string(s.key.level) + "," +
                                       std::to_string(s.key.id) + ")");
      const FilteredComplex& link = *it->second.complex;
      w.link = it->second.recipe;
      auto h = homology(tame_complex(link, Perversity::lower_middle()), ring);
      w.middle = h.at((s.codim - 1) / 2);
      w.vanishes = w.middle.is_zero();
      r.witt = r.witt && w.vanishes;
    }
    r.strata.push_back(std::move(w));
  }
  return r;
}

}  // namespace strata
