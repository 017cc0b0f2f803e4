#include "strata/blowup.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <sstream>

namespace strata {

namespace {

int parity_sign(int k) { return (k & 1) ? -1 : 1; }

std::uint32_t full_mask(int m) { return m == 0 ? 0u : (m >= 32 ? ~0u : ((1u << m) - 1)); }

int highest_bit(std::uint32_t f) { return 31 - __builtin_clz(f); }
int lowest_bit(std::uint32_t f) { return __builtin_ctz(f); }

}  // namespace

std::string face_key(const TensorFace& e) {
  std::string k;
  k.reserve(e.size() * 5);
  for (const auto& c : e) {
    for (int b = 0; b < 4; ++b) k.push_back(static_cast<char>((c.face >> (8 * b)) & 0xff));
    k.push_back(c.apex ? 1 : 0);
  }
  return k;
}

LocalBlowup::LocalBlowup(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty() || sizes_.back() < 1)
    throw Error("DimensionMismatch", "a local simplex needs a nonempty regular part");
  for (int s : sizes_)
    if (s < 0 || s > 24) throw Error("DimensionMismatch", "local factor size out of range");
}

const std::vector<TensorFace>& LocalBlowup::basis() const {
  if (!basis_.empty()) return basis_;
  std::vector<TensorFace> all{TensorFace{}};
  for (int i = 0; i <= n(); ++i) {
    std::vector<ConeFace> options;
    const std::uint32_t full = full_mask(sizes_[i]);
    for (std::uint32_t f = 0; f <= full; ++f) {
      if (i < n()) {
        options.push_back({f, true});
        if (f) options.push_back({f, false});
      } else if (f) {
        options.push_back({f, false});
      }
    }
    std::vector<TensorFace> next;
    next.reserve(all.size() * options.size());
    for (const auto& prefix : all)
      for (const auto& o : options) {
        TensorFace t = prefix;
        t.push_back(o);
        next.push_back(std::move(t));
      }
    all = std::move(next);
  }
  std::stable_sort(all.begin(), all.end(),
                   [&](const TensorFace& a, const TensorFace& b) { return degree(a) < degree(b); });
  basis_ = std::move(all);
  for (std::size_t i = 0; i < basis_.size(); ++i) index_[face_key(basis_[i])] = static_cast<int>(i);
  return basis_;
}

std::vector<TensorFace> LocalBlowup::basis(int k) const {
  std::vector<TensorFace> out;
  for (const auto& e : basis())
    if (degree(e) == k) out.push_back(e);
  return out;
}

int LocalBlowup::index(const TensorFace& e) const {
  basis();
  auto it = index_.find(face_key(e));
  return it == index_.end() ? -1 : it->second;
}

bool LocalBlowup::is_element(const TensorFace& e) const {
  if (static_cast<int>(e.size()) != n() + 1) return false;
  for (int i = 0; i <= n(); ++i) {
    const auto& c = e[i];
    if (c.face & ~full_mask(sizes_[i])) return false;
    if (c.vertex_count() == 0) return false;
    if (i == n() && c.apex) return false;
  }
  return true;
}

int LocalBlowup::degree(const TensorFace& e) const {
  int d = 0;
  for (const auto& c : e) d += c.degree();
  return d;
}

ExtendedInt LocalBlowup::perverse_degree(const TensorFace& e, int ell) const {
  const int i = n() - ell;
  if (i < 0 || i >= n() || e[i].apex) return ExtendedInt::neg_inf();
  int d = 0;
  for (int j = i + 1; j <= n(); ++j) d += e[j].degree();
  return d;
}

// d 1_G = (-1)^{|G|+1} sum over G' = G + v of [G':G] 1_G', per factor, with
// the Koszul sign of the factors to the left.
std::vector<SignedFace> LocalBlowup::coboundary(const TensorFace& e) const {
  std::vector<SignedFace> out;
  int left = 0;
  for (int i = 0; i <= n(); ++i) {
    const ConeFace& c = e[i];
    const int dc = c.degree();
    const int base = parity_sign(left + dc + 1);
    for (int w = 0; w < sizes_[i]; ++w) {
      if (c.face & (1u << w)) continue;
      int pos = __builtin_popcount(c.face & ((1u << w) - 1));
      TensorFace f = e;
      f[i].face |= 1u << w;
      out.push_back({std::move(f), base * parity_sign(pos)});
    }
    if (i < n() && !c.apex) {
      TensorFace f = e;
      f[i].apex = true;
      out.push_back({std::move(f), base * parity_sign(__builtin_popcount(c.face))});
    }
    left += dc;
  }
  return out;
}

std::optional<SignedFace> LocalBlowup::cup(const TensorFace& a, const TensorFace& b) const {
  SignedFace r;
  r.face.resize(n() + 1);
  int sign = 1;
  for (int i = 0; i <= n(); ++i) {
    const int apex_vertex = sizes_[i];
    int last = a[i].apex ? apex_vertex : highest_bit(a[i].face);
    int first = b[i].face ? lowest_bit(b[i].face) : apex_vertex;
    if (last != first) return std::nullopt;
    r.face[i] = {a[i].face | b[i].face, b[i].apex};
    sign *= parity_sign(a[i].degree() * b[i].degree());
  }
  int b_left = 0;
  for (int i = 0; i <= n(); ++i) {
    sign *= parity_sign(a[i].degree() * b_left);
    b_left += b[i].degree();
  }
  r.sign = sign;
  return r;
}

TensorFace LocalBlowup::top_chain() const {
  TensorFace t(n() + 1);
  for (int i = 0; i <= n(); ++i) t[i] = {full_mask(sizes_[i]), i < n()};
  return t;
}

std::vector<SignedFace> LocalBlowup::chain_boundary(const TensorFace& c) const {
  std::vector<SignedFace> out;
  int left = 0;
  for (int i = 0; i <= n(); ++i) {
    const ConeFace& f = c[i];
    if (f.vertex_count() > 1) {
      int j = 0;
      for (int w = 0; w < sizes_[i]; ++w) {
        if (!(f.face & (1u << w))) continue;
        TensorFace g = c;
        g[i].face &= ~(1u << w);
        out.push_back({std::move(g), parity_sign(left + j)});
        ++j;
      }
      if (f.apex) {
        TensorFace g = c;
        g[i].apex = false;
        out.push_back({std::move(g), parity_sign(left + j)});
      }
    }
    left += f.degree();
  }
  return out;
}

std::optional<SignedFace> LocalBlowup::tilde_cap(const TensorFace& w, const TensorFace& c) const {
  SignedFace r;
  r.face.resize(n() + 1);
  for (int i = 0; i <= n(); ++i) {
    const auto& a = w[i];
    const auto& g = c[i];
    if ((a.face & ~g.face) || (a.apex && !g.apex)) return std::nullopt;
    // a must be the front face of g
    const int last = a.apex ? sizes_[i] : highest_bit(a.face);
    const std::uint32_t below = last >= 32 ? ~0u : ((1u << last) - 1);
    if ((g.face & below) != (a.face & below)) return std::nullopt;
    r.face[i] = {g.face & ~below, g.apex};
  }
  int nu = 0;
  for (int j = 0; j <= n(); ++j) {
    int right = 0;
    for (int i = j + 1; i <= n(); ++i) right += w[i].degree();
    nu += c[j].degree() * right;
  }
  r.sign = parity_sign(nu);
  return r;
}

std::optional<SignedFace> LocalBlowup::mu(const TensorFace& c) const {
  int ell = n();
  for (int i = 0; i < n(); ++i)
    if (!c[i].apex) {
      ell = i;
      break;
    }
  int verts = 0;
  for (int i = 0; i <= ell; ++i) verts += __builtin_popcount(c[i].face);
  if (degree(c) != verts - 1) return std::nullopt;
  SignedFace r;
  r.face.resize(n() + 1);
  for (int i = 0; i <= ell; ++i) r.face[i] = {c[i].face, false};
  return r;
}

std::optional<SignedFace> LocalBlowup::cap(const TensorFace& w) const {
  auto t = tilde_cap(w, top_chain());
  if (!t) return std::nullopt;
  auto m = mu(t->face);
  if (!m) return std::nullopt;
  m->sign *= t->sign;
  return m;
}

std::vector<SignedFace> LocalBlowup::face_boundary(const TensorFace& face) const {
  std::vector<SignedFace> out;
  int total = 0;
  for (const auto& c : face) total += __builtin_popcount(c.face);
  if (total <= 1) return out;
  int p = 0;
  for (int i = 0; i <= n(); ++i)
    for (int w = 0; w < sizes_[i]; ++w) {
      if (!(face[i].face & (1u << w))) continue;
      TensorFace g = face;
      g[i].face &= ~(1u << w);
      out.push_back({std::move(g), parity_sign(p)});
      ++p;
    }
  return out;
}

std::vector<TensorFace> LocalBlowup::faces() const {
  std::vector<TensorFace> all{TensorFace{}};
  for (int i = 0; i <= n(); ++i) {
    std::vector<TensorFace> next;
    for (const auto& prefix : all)
      for (std::uint32_t f = 0; f <= full_mask(sizes_[i]); ++f) {
        TensorFace t = prefix;
        t.push_back({f, false});
        next.push_back(std::move(t));
      }
    all = std::move(next);
  }
  std::erase_if(all, [](const TensorFace& t) {
    for (const auto& c : t)
      if (c.face) return false;
    return true;
  });
  return all;
}

std::string LocalBlowup::describe(const TensorFace& e) const {
  std::ostringstream os;
  for (int i = 0; i <= n(); ++i) {
    if (i) os << " x ";
    os << "{";
    bool first = true;
    for (int w = 0; w < sizes_[i]; ++w)
      if (e[i].face & (1u << w)) {
        os << (first ? "" : ",") << w;
        first = false;
      }
    if (e[i].apex) os << (first ? "" : ",") << "v";
    os << "}";
  }
  return os.str();
}

// ---- global complex ----

std::vector<int> BlownUpComplex::sizes_of(const Simplex& host) const {
  std::vector<int> s(x_->formal_dim() + 1, 0);
  for (int v : host) ++s[x_->level(v)];
  return s;
}

BlownUpComplex::BlownUpComplex(const FilteredComplex& x) : x_(&x) {
  const int n = x.formal_dim();
  if (n > 24) throw Error("DimensionMismatch", "formal dimension too large for the blown-up complex");

  cofaces_.resize(x.dim() + 1);
  for (int d = 0; d <= x.dim(); ++d) cofaces_[d].resize(x.count(d));
  for (int d = 1; d <= x.dim(); ++d)
    for (int i = 0; i < x.count(d); ++i) {
      const Simplex& s = x.simplex(d, i);
      for (int j = 0; j <= d; ++j) {
        Simplex f = s;
        f.erase(f.begin() + j);
        cofaces_[d - 1][x.index(f)].push_back(i);
      }
    }

  for (int d = 0; d <= x.dim(); ++d)
    for (int i = 0; i < x.count(d); ++i) {
      const Simplex& s = x.simplex(d, i);
      if (!x.is_regular(s)) continue;
      auto sz = sizes_of(s);
      std::uint32_t forced = 0, free = 0;
      for (int l = 0; l < n; ++l) (sz[l] ? free : forced) |= 1u << l;
      // enumerate subsets of the free bits in increasing order
      std::uint32_t sub = 0;
      while (true) {
        GlobalElement g{d, i, forced | sub};
        int k = degree(g);
        if (k >= static_cast<int>(basis_.size())) basis_.resize(k + 1);
        index_[key(g)] = static_cast<int>(basis_[k].size());
        basis_[k].push_back(g);
        if (sub == free) break;
        sub = (sub - free) & free;
      }
    }

  delta_.resize(basis_.size());
  for (int k = 0; k <= max_degree(); ++k) {
    auto& m = delta_[k];
    m.rows = count(k + 1);
    m.cols.resize(count(k));
    for (int c = 0; c < count(k); ++c) {
      const GlobalElement& g = basis_[k][c];
      std::vector<int> hosts_idx{-1};
      for (int h : cofaces_[g.dim][g.index]) hosts_idx.push_back(h);
      std::vector<std::pair<int, Integer>> col;
      for (int h : hosts_idx) {
        const Simplex& host = h < 0 ? simplex(g) : x.simplex(g.dim + 1, h);
        LocalBlowup local(sizes_of(host));
        TensorFace e = restrict_to(g, host);
        const auto full = local.top_chain();
        for (auto& t : local.coboundary(e)) {
          bool is_full = true;
          for (int l = 0; l <= n && is_full; ++l) is_full = t.face[l].face == full[l].face;
          if (!is_full) continue;
          int r = index(from_full(host, t.face));
          if (r < 0) throw MathFailure("coboundary left the blown-up basis");
          col.emplace_back(r, Integer(t.sign));
        }
      }
      m.cols[c] = from_pairs(IntegerOps{}, std::move(col));
    }
  }
}

int BlownUpComplex::degree(const GlobalElement& g) const {
  auto sz = sizes_of(simplex(g));
  const int n = x_->formal_dim();
  int k = sz[n] - 1;
  for (int l = 0; l < n; ++l)
    if (sz[l]) k += sz[l] - 1 + ((g.eps >> l) & 1);
  return k;
}

int BlownUpComplex::index(const GlobalElement& g) const {
  auto it = index_.find(key(g));
  return it == index_.end() ? -1 : it->second;
}

Cochain BlownUpComplex::apply_coboundary(int k, const Cochain& w) const {
  if (k < 0 || k >= max_degree()) return {};
  return apply(IntegerOps{}, delta_[k], w);
}

LocalBlowup BlownUpComplex::local_complex(const Simplex& host) const { return LocalBlowup(sizes_of(host)); }

TensorFace BlownUpComplex::restrict_to(const GlobalElement& g, const Simplex& host) const {
  const int n = x_->formal_dim();
  const Simplex& t = simplex(g);
  TensorFace e(n + 1);
  std::vector<int> pos(n + 1, 0);
  std::size_t ti = 0, hits = 0;
  for (int v : host) {
    int l = x_->level(v);
    while (ti < t.size() && t[ti] < v) ++ti;
    if (ti < t.size() && t[ti] == v) {
      e[l].face |= 1u << pos[l];
      ++hits;
    }
    ++pos[l];
  }
  if (hits != t.size()) throw MathFailure("restriction to a simplex that is not a coface");
  for (int l = 0; l < n; ++l) e[l].apex = e[l].face == 0 || ((g.eps >> l) & 1);
  return e;
}

GlobalElement BlownUpComplex::from_full(const Simplex& host, const TensorFace& e) const {
  GlobalElement g;
  g.dim = static_cast<int>(host.size()) - 1;
  g.index = x_->index(host);
  for (int l = 0; l < x_->formal_dim(); ++l)
    if (e[l].apex) g.eps |= 1u << l;
  return g;
}

Simplex BlownUpComplex::face_of(const Simplex& host, const TensorFace& face) const {
  Simplex out;
  std::vector<int> pos(x_->formal_dim() + 1, 0);
  for (int v : host) {
    int l = x_->level(v);
    if (face[l].face & (1u << pos[l])) out.push_back(v);
    ++pos[l];
  }
  return out;
}

GlobalElement BlownUpComplex::from_local(const Simplex& host, const TensorFace& e) const {
  Simplex t = face_of(host, e);
  GlobalElement g;
  g.dim = static_cast<int>(t.size()) - 1;
  g.index = x_->index(t);
  for (int l = 0; l < x_->formal_dim(); ++l)
    if (e[l].apex) g.eps |= 1u << l;
  return g;
}

ExtendedInt BlownUpComplex::perverse_degree(const GlobalElement& g, const Stratum& s) const {
  const int n = x_->formal_dim();
  const int l = s.key.level;
  if (s.regular || l >= n || ((g.eps >> l) & 1)) return ExtendedInt::neg_inf();
  const Simplex& t = simplex(g);
  auto sz = sizes_of(t);
  if (!sz[l]) return ExtendedInt::neg_inf();
  for (int v : t)
    if (x_->level(v) == l) {
      if (x_->strata()[x_->stratum_of_vertex(v)].key != s.key) return ExtendedInt::neg_inf();
      break;
    }
  int d = sz[n] - 1;
  for (int j = l + 1; j < n; ++j)
    if (sz[j]) d += sz[j] - 1 + ((g.eps >> j) & 1);
  return d;
}

bool BlownUpComplex::is_allowable(const GlobalElement& g, const Perversity& p) const {
  const int n = x_->formal_dim();
  const Simplex& t = simplex(g);
  auto sz = sizes_of(t);
  int d = sz[n] - 1;  // running sum of degrees of levels above l
  std::vector<int> above(n + 1, 0);
  for (int l = n - 1; l >= 0; --l) {
    above[l] = d;
    if (sz[l]) d += sz[l] - 1 + ((g.eps >> l) & 1);
  }
  std::size_t at = 0;
  for (int l = 0; l < n; ++l) {
    if (!sz[l]) continue;
    while (x_->level(t[at]) < l) ++at;
    if ((g.eps >> l) & 1) continue;
    const Stratum& s = x_->strata()[x_->stratum_of_vertex(t[at])];
    if (above[l] > p.value(s)) return false;
  }
  return true;
}

std::vector<std::vector<char>> BlownUpComplex::allowable_mask(const Perversity& p) const {
  std::vector<std::vector<char>> m(basis_.size());
  for (int k = 0; k <= max_degree(); ++k) {
    m[k].resize(count(k));
    for (int i = 0; i < count(k); ++i) m[k][i] = is_allowable(basis_[k][i], p);
  }
  return m;
}

bool BlownUpComplex::cochain_is_allowable(int k, const Cochain& w, const Perversity& p) const {
  for (const auto& [i, c] : w)
    if (!is_allowable(basis_[k][i], p)) return false;
  return true;
}

Presentation BlownUpComplex::full_presentation() const {
  Presentation pr;
  pr.min_degree = 0;
  pr.step = 1;
  for (int k = 0; k <= max_degree(); ++k) {
    pr.dims.push_back(count(k));
    pr.allowed.emplace_back(count(k), 1);
    pr.diff.push_back(delta_[k]);
  }
  return pr;
}

Presentation BlownUpComplex::presentation(const Perversity& p) const {
  Presentation pr = full_presentation();
  pr.allowed = allowable_mask(p);
  return pr;
}

std::string BlownUpComplex::describe(const GlobalElement& g) const {
  const Simplex& host = simplex(g);
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < host.size(); ++i) os << (i ? "," : "") << x_->vertex_id(host[i]);
  os << "] eps=";
  for (int l = 0; l < x_->formal_dim(); ++l) os << ((g.eps >> l) & 1);
  return os.str();
}

}  // namespace strata
