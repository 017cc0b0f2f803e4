#include "strata/perversity.hpp"

#include "strata/errors.hpp"

#include <sstream>

namespace strata {

int top_value(int codim) { return codim - 2; }

namespace {

int floor_half(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }
int ceil_half(int a) { return -floor_half(-a); }

}  // namespace

Perversity Perversity::constant(int c) {
  Perversity p;
  p.has_table_ = true;
  p.table_.assign(kMaxCodim + 1, c);
  p.table_[0] = 0;
  return p;
}

Perversity Perversity::zero() { return constant(0); }

Perversity Perversity::top() {
  Perversity p = constant(0);
  for (int c = 1; c <= kMaxCodim; ++c) p.table_[c] = top_value(c);
  return p;
}

Perversity Perversity::lower_middle() {
  Perversity p = constant(0);
  for (int c = 1; c <= kMaxCodim; ++c) p.table_[c] = floor_half(c - 2);
  return p;
}

Perversity Perversity::upper_middle() {
  Perversity p = constant(0);
  for (int c = 1; c <= kMaxCodim; ++c) p.table_[c] = ceil_half(c - 2);
  return p;
}

Perversity Perversity::preset(const std::string& name) {
  if (name == "zero") return zero();
  if (name == "top") return top();
  if (name == "lower-middle" || name == "middle") return lower_middle();
  if (name == "upper-middle") return upper_middle();
  throw Error("InvalidPerversity", "unknown perversity preset '" + name + "'");
}

Perversity Perversity::gm(const std::vector<int>& values) {
  if (values.empty() || values[0] != 0) throw Error("InvalidPerversity", "GM table must start with p(2) = 0");
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i + 1] < values[i] || values[i + 1] > values[i] + 1)
      throw Error("InvalidPerversity", "GM table violates p(i) <= p(i+1) <= p(i)+1");
  if (values.size() + 2 > kMaxCodim + 1) throw Error("InvalidPerversity", "GM table too long");
  Perversity p;
  p.has_table_ = true;
  p.table_.assign(kMaxCodim + 1, std::nullopt);
  p.table_[0] = 0;
  for (std::size_t i = 0; i < values.size(); ++i) p.table_[i + 2] = values[i];
  return p;
}

Perversity Perversity::per_stratum(std::map<StratumKey, int> values, int formal_dim) {
  Perversity p;
  for (const auto& [k, v] : values) {
    if (k.level == formal_dim && v != 0)
      throw Error("InvalidPerversity", "perversity must vanish on regular strata");
    if (k.level < 0 || k.level > formal_dim) throw Error("UnknownStratum", "stratum level outside [0,n]");
  }
  std::erase_if(values, [&](const auto& e) { return e.first.level == formal_dim; });
  p.overrides_ = std::move(values);
  p.override_dim_ = formal_dim;
  return p;
}

int Perversity::value(const Stratum& s) const {
  if (s.regular) return 0;
  if (auto it = overrides_.find(s.key); it != overrides_.end()) return it->second;
  if (has_table_ && s.codim < static_cast<int>(table_.size()) && table_[s.codim]) return *table_[s.codim];
  std::ostringstream os;
  os << "perversity has no value on stratum (level " << s.key.level << ", id " << s.key.id << ", codim " << s.codim
     << ")";
  throw Error("UnknownStratum", os.str());
}

bool Perversity::is_gm() const {
  if (!overrides_.empty() || !has_table_) return false;
  if (!table_[2] || *table_[2] != 0) return false;
  // a finite table is GM on the codimensions it covers
  for (int c = 2; c < kMaxCodim && table_[c + 1]; ++c) {
    if (*table_[c + 1] < *table_[c] || *table_[c + 1] > *table_[c] + 1) return false;
  }
  return true;
}

Perversity Perversity::bind(const FilteredComplex& x) const {
  std::map<StratumKey, int> v;
  for (const auto& s : x.strata())
    if (!s.regular) v[s.key] = value(s);
  return per_stratum(std::move(v), x.formal_dim());
}

std::string Perversity::describe() const {
  std::ostringstream os;
  bool first = true;
  if (has_table_) {
    os << "codim[";
    for (int c = 1; c <= 8; ++c) {
      if (c > 1) os << ",";
      if (table_[c])
        os << *table_[c];
      else
        os << "?";
    }
    os << ",...]";
    first = false;
  }
  if (!overrides_.empty()) {
    if (!first) os << "+";
    os << "{";
    bool f = true;
    for (const auto& [k, v] : overrides_) {
      if (!f) os << ",";
      os << "(" << k.level << "," << k.id << "):" << v;
      f = false;
    }
    os << "}";
  }
  return os.str();
}

namespace {

// value of p on a stratum key of a complex of formal dimension n, if defined
std::optional<int> value_at(const Perversity& p, const StratumKey& k, int n) {
  Stratum s;
  s.key = k;
  s.codim = n - k.level;
  s.regular = s.codim == 0;
  try {
    return p.value(s);
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

Perversity complement(const Perversity& p) {
  Perversity r;
  r.has_table_ = p.has_table_;
  if (p.has_table_) {
    r.table_.assign(Perversity::kMaxCodim + 1, std::nullopt);
    r.table_[0] = 0;
    for (int c = 1; c <= Perversity::kMaxCodim; ++c)
      if (p.table_[c]) r.table_[c] = top_value(c) - *p.table_[c];
  }
  r.override_dim_ = p.override_dim_;
  for (const auto& [k, v] : p.overrides_) r.overrides_[k] = top_value(p.override_dim_ - k.level) - v;
  return r;
}

Perversity add(const Perversity& p, const Perversity& q) {
  Perversity r;
  r.has_table_ = p.has_table_ && q.has_table_;
  if (r.has_table_) {
    r.table_.assign(Perversity::kMaxCodim + 1, std::nullopt);
    for (int c = 0; c <= Perversity::kMaxCodim; ++c)
      if (p.table_[c] && q.table_[c]) r.table_[c] = *p.table_[c] + *q.table_[c];
  }
  int n = std::max(p.override_dim_, q.override_dim_);
  r.override_dim_ = n;
  std::map<StratumKey, int> keys;
  for (const auto& [k, v] : p.overrides_) keys[k] = 0;
  for (const auto& [k, v] : q.overrides_) keys[k] = 0;
  for (const auto& [k, unused] : keys) {
    auto a = value_at(p, k, n);
    auto b = value_at(q, k, n);
    if (a && b) r.overrides_[k] = *a + *b;
  }
  return r;
}

Perversity subtract(const Perversity& p, const Perversity& q) {
  Perversity neg = q;
  for (auto& v : neg.table_)
    if (v) v = -*v;
  for (auto& [k, v] : neg.overrides_) v = -v;
  return add(p, neg);
}

bool leq(const FilteredComplex& x, const Perversity& p, const Perversity& q) {
  for (const auto& s : x.strata())
    if (!s.regular && p.value(s) > q.value(s)) return false;
  return true;
}

std::vector<Perversity> perversity_grid(const FilteredComplex& x, int lo, int above) {
  std::vector<const Stratum*> singular;
  for (const auto& s : x.strata())
    if (!s.regular) singular.push_back(&s);
  std::vector<Perversity> out;
  std::vector<int> v(singular.size(), lo);
  while (true) {
    std::map<StratumKey, int> values;
    for (std::size_t i = 0; i < singular.size(); ++i) values[singular[i]->key] = v[i];
    out.push_back(Perversity::per_stratum(std::move(values), x.formal_dim()));
    int i = static_cast<int>(singular.size()) - 1;
    for (; i >= 0; --i) {
      if (v[i] < top_value(singular[i]->codim) + above) {
        ++v[i];
        break;
      }
      v[i] = lo;
    }
    if (i < 0) break;
  }
  return out;
}

}  // namespace strata
