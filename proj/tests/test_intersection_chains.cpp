#include "doctest.h"

#include "strata/constructions.hpp"
#include "strata/intersection_chains.hpp"

#include <random>

using namespace strata;

namespace {

// allowability recomputed from vertex levels only
bool allowable_by_hand(const FilteredComplex& x, const Simplex& s, const Perversity& p) {
  const int dim = static_cast<int>(s.size()) - 1;
  for (const auto& st : x.strata()) {
    if (st.regular) continue;
    bool meets = false;
    for (int v : s) meets = meets || std::find(st.vertices.begin(), st.vertices.end(), v) != st.vertices.end();
    if (!meets) continue;
    int below = 0;
    for (int v : s) below += x.level(v) <= st.key.level;
    if (below - 1 > dim - st.codim + p.value(st)) return false;
  }
  return true;
}

Simplex apex_triangle(const FilteredComplex& x) {
  for (const auto& s : x.simplices(2))
    if (x.level(s[0]) == 0 && x.level(s[1]) == x.formal_dim()) return s;
  throw std::logic_error("no apex triangle");
}

std::vector<std::string> groups(const Presentation& p, int top) {
  auto h = homology(p, CoefficientRing::integers());
  std::vector<std::string> out;
  for (int k = 0; k <= top; ++k) out.push_back(h.at(k).str());
  return out;
}

}  // namespace

TEST_CASE("perverse degree of an apex triangle") {
  auto x = from_recipe("sigma_rp2");
  Simplex s = apex_triangle(x);
  CHECK(perverse_degree(x, s, 3) == ExtendedInt(0));
  CHECK(perverse_degree(x, s, 0) == ExtendedInt(2));
  for (const auto& r : x.simplices(2))
    if (x.level(r[0]) == 3) CHECK(perverse_degree(x, r, 1).is_neg_inf());
}

TEST_CASE("allowability of an apex triangle") {
  auto x = from_recipe("sigma_rp2");
  Simplex s = apex_triangle(x);
  const Stratum& apex = x.strata()[x.stratum_of_vertex(s[0])];
  std::map<StratumKey, int> zero, one;
  for (const auto& t : x.strata())
    if (!t.regular) {
      zero[t.key] = 0;
      one[t.key] = 1;
    }
  CHECK_FALSE(is_allowable(x, s, Perversity::per_stratum(zero, 3)));
  CHECK(is_allowable(x, s, Perversity::per_stratum(one, 3)));
  CHECK(apex.codim == 3);
  // regular simplices are always allowable
  for (const auto& r : x.simplices(2))
    if (x.level(r[0]) == 3) CHECK(is_allowable(x, r, Perversity::constant(-9)));
}

TEST_CASE("allowability matches a direct count on every simplex") {
  std::mt19937_64 g(5);
  for (const char* r : {"sigma_rp2", "cone_rp2", "product_circle(sigma_rp2)", "suspension(cone(circle))"}) {
    auto x = from_recipe(r);
    for (int t = 0; t < 6; ++t) {
      std::map<StratumKey, int> v;
      for (const auto& s : x.strata())
        if (!s.regular) v[s.key] = std::uniform_int_distribution<int>(-3, s.codim + 1)(g);
      auto p = Perversity::per_stratum(v, x.formal_dim());
      for (int d = 0; d <= x.dim(); ++d)
        for (const auto& s : x.simplices(d)) CHECK(is_allowable(x, s, p) == allowable_by_hand(x, s, p));
    }
  }
}

TEST_CASE("boundary split") {
  auto x = from_recipe("sigma_rp2");
  for (int d = 1; d <= x.dim(); ++d)
    for (const auto& s : x.simplices(d)) {
      auto split = boundary_split(x, s);
      Chain one{{x.index(s), Integer(1)}};
      Chain full = boundary_of(x, d, one);
      CHECK(combine(IntegerOps{}, Integer(1), split.regular, Integer(1), split.singular) == full);
      for (const auto& [i, c] : split.regular) CHECK(x.is_regular(x.simplex(d - 1, i)));
      for (const auto& [i, c] : split.singular) CHECK_FALSE(x.is_regular(x.simplex(d - 1, i)));
      auto jd = x.join_decomposition(s);
      if (jd.back() > 0) CHECK(split.singular.empty());
      if (jd.back() < 0) CHECK(split.regular.empty());
    }
}

TEST_CASE("classical and tame homology of the suspension of RP2") {
  auto x = from_recipe("sigma_rp2");
  auto want = std::vector<std::string>{"Z", "Z/2", "0", "0"};
  CHECK(groups(intersection_complex(x, Perversity::zero()), 3) == want);
  CHECK(groups(tame_complex(x, Perversity::zero()), 3) == want);
}

TEST_CASE("tame and classical agree below the top perversity") {
  for (const char* r : {"sigma_rp2", "sigma_rp3", "cone_rp2", "product_circle(sigma_rp2)"}) {
    CAPTURE(r);
    auto x = from_recipe(r);
    for (const auto& p : perversity_grid(x, -2, 0)) {
      for (auto ring : {CoefficientRing::integers(), CoefficientRing::prime_field(2)}) {
        auto a = homology(intersection_complex(x, p), ring);
        auto b = homology(tame_complex(x, p), ring);
        CHECK(a.same_groups(b));
      }
    }
  }
}

TEST_CASE("tame homology of a cone far below the GM range") {
  auto x = from_recipe("cone_rp2");
  auto base = homology(tame_complex(rp2(), Perversity::zero()), CoefficientRing::integers());
  auto h = homology(tame_complex(x, Perversity::constant(-5)), CoefficientRing::integers());
  for (int k = 0; k <= 2; ++k) CHECK(h.at(k) == base.at(k));
  CHECK(h.at(3).is_zero());
}

TEST_CASE("allowable simplices below the top perversity are regular with regular faces") {
  std::mt19937_64 g(8);
  for (const char* r : {"sigma_rp2", "sigma_rp3", "cone_rp2", "product_circle(cone_rp2)"}) {
    auto x = from_recipe(r);
    for (int t = 0; t < 5; ++t) {
      std::map<StratumKey, int> v;
      for (const auto& s : x.strata())
        if (!s.regular) v[s.key] = std::uniform_int_distribution<int>(-4, top_value(s.codim))(g);
      auto p = Perversity::per_stratum(v, x.formal_dim());
      for (int d = 0; d <= x.dim(); ++d)
        for (const auto& s : x.simplices(d)) {
          if (!is_allowable(x, s, p)) continue;
          CHECK(x.is_regular(s));
          for (const auto& [i, c] : boundary_of(x, d, Chain{{x.index(s), Integer(1)}}))
            CHECK(x.is_regular(x.simplex(d - 1, i)));
        }
    }
  }
}

TEST_CASE("presented chain complexes square to zero") {
  for (const char* r : {"sigma_rp2", "cone_rp2", "product_circle(sigma_rp2)"}) {
    auto x = from_recipe(r);
    for (int c = -2; c <= 3; ++c) {
      CHECK(squares_to_zero(intersection_complex(x, Perversity::constant(c))));
      CHECK(squares_to_zero(tame_complex(x, Perversity::constant(c))));
    }
  }
}
