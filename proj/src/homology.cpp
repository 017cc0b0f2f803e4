#include "strata/homology.hpp"

#include <sstream>

namespace strata {

std::string HomologyGroup::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  if (free_rank > 0) {
    os << "Z";
    if (free_rank > 1) os << "^" << free_rank;
    first = false;
  }
  for (const auto& t : torsion) {
    if (!first) os << " + ";
    os << "Z/" << t;
    first = false;
  }
  return os.str();
}

HomologyGroup HomologySummary::at(int degree) const {
  int i = degree - min_degree;
  if (i < 0 || i >= static_cast<int>(groups.size())) return {};
  return groups[i];
}

bool HomologySummary::same_groups(const HomologySummary& o) const {
  int lo = std::min(min_degree, o.min_degree);
  int hi = std::max(max_degree(), o.max_degree());
  for (int k = lo; k <= hi; ++k)
    if (!(at(k) == o.at(k))) return false;
  return true;
}

void Presentation::validate(const CoefficientRing& ring) const {
  const int n = degree_count();
  if (static_cast<int>(allowed.size()) != n || static_cast<int>(diff.size()) != n)
    throw Error("DimensionMismatch", "presentation arrays disagree in length");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(allowed[i].size()) != dims[i] || diff[i].col_count() != dims[i])
      throw Error("DimensionMismatch", "presentation degree size mismatch");
    int t = min_degree + i + step;
    if (diff[i].rows != dim(t)) throw Error("DimensionMismatch", "differential target size mismatch");
  }
  // ambient d o d = 0, column by column
  IntegerOps ops;
  for (int i = 0; i < n; ++i) {
    int j = i + step;
    if (j < 0 || j >= n) continue;
    for (const auto& col : diff[i].cols)
      for (const auto& [r, v] : apply(ops, diff[j], col))
        if (ring.kind != RingKind::PrimeField || v.mod(ring.p) != 0)
          throw Error("NotAComplex", "the differential does not square to zero");
  }
}

namespace {

HomologySummary from_raw_integers(const RawHomology<IntegerOps>& raw, const Presentation& p, bool keep_torsion) {
  HomologySummary h;
  h.min_degree = p.min_degree;
  for (std::size_t i = 0; i < raw.free_rank.size(); ++i) {
    HomologyGroup g;
    g.free_rank = raw.free_rank[i];
    if (keep_torsion) {
      g.torsion = raw.torsion[i];
      std::sort(g.torsion.begin(), g.torsion.end());
    }
    h.groups.push_back(std::move(g));
  }
  return h;
}

}  // namespace

HomologySummary homology(const Presentation& p, const CoefficientRing& ring) {
  p.validate(ring);
  HomologySummary h;
  switch (ring.kind) {
    case RingKind::Integers:
      h = from_raw_integers(raw_homology(IntegerOps{}, p), p, true);
      break;
    case RingKind::Rationals:
      h = from_raw_integers(raw_homology(IntegerOps{}, p), p, false);
      break;
    case RingKind::PrimeField: {
      auto raw = raw_homology(PrimeFieldOps{ring.p}, p);
      h.min_degree = p.min_degree;
      for (int r : raw.free_rank) h.groups.push_back({r, {}});
      break;
    }
  }
  h.ring = ring;
  return h;
}

namespace {

template <class Ops>
bool squares_to_zero_over(const Ops& ops, const Presentation& p) {
  for (int k = p.min_degree; k <= p.max_degree(); ++k) {
    const int t = k + p.step;
    if (!p.in_range(t) || !p.in_range(t + p.step)) continue;
    auto b = subcomplex_basis(ops, p, k);
    auto img = image_matrix(ops, p, k, b);
    auto d2 = convert(ops, p.diff[t - p.min_degree]);
    for (const auto& col : img.cols)
      if (!apply(ops, d2, col).empty()) return false;
  }
  return true;
}

}  // namespace

bool squares_to_zero(const Presentation& p, const CoefficientRing& ring) {
  if (ring.kind == RingKind::PrimeField) return squares_to_zero_over(PrimeFieldOps{ring.p}, p);
  return squares_to_zero_over(IntegerOps{}, p);
}

}  // namespace strata
