#include "doctest.h"
#include "oracles.hpp"

#include "strata/constructions.hpp"
#include "strata/errors.hpp"
#include "strata/filtered_complex.hpp"

using namespace strata;

namespace {

std::string kind_of(const RawComplex& raw) {
  try {
    FilteredComplex::build(raw);
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("tetrahedron boundary with the trivial filtration") {
  RawComplex raw;
  raw.formal_dim = 2;
  for (int v = 0; v < 4; ++v) raw.vertices.emplace_back(v, 2);
  raw.simplices = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  auto x = FilteredComplex::build(raw);
  CHECK(x.formal_dim() == 2);
  CHECK(x.count(0) == 4);
  CHECK(x.count(1) == 6);
  CHECK(x.count(2) == 4);
  REQUIRE(x.strata().size() == 1);
  CHECK(x.strata()[0].regular);
}

TEST_CASE("build rejects malformed filtrations") {
  RawComplex star;
  star.formal_dim = 2;
  star.vertices = {{0, 1}, {1, 2}, {2, 2}, {3, 2}};
  star.simplices = {{0, 1, 2, 3}};
  CHECK(kind_of(star) == "DimensionViolation");

  RawComplex singular_only;
  singular_only.formal_dim = 2;
  singular_only.vertices = {{0, 0}, {1, 1}};
  singular_only.simplices = {{0, 1}};
  CHECK(kind_of(singular_only) == "EmptyRegularPart");

  RawComplex repeated;
  repeated.formal_dim = 1;
  repeated.vertices = {{0, 1}, {1, 1}};
  repeated.simplices = {{0, 0, 1}};
  CHECK(kind_of(repeated) == "NonSimplicial");

  RawComplex edge_in_x0;
  edge_in_x0.formal_dim = 1;
  edge_in_x0.vertices = {{0, 0}, {1, 0}, {2, 1}};
  edge_in_x0.simplices = {{0, 1}, {1, 2}};
  CHECK(kind_of(edge_in_x0) == "DimensionViolation");
}

TEST_CASE("strata agree with a union-find over the raw facets") {
  for (const char* r : {"sigma_rp2", "sigma_rp3", "cone_rp2", "torus", "product_circle(sigma_rp2)",
                        "suspension(suspension(circle))", "cone(torus)"}) {
    CAPTURE(r);
    auto x = from_recipe(r);
    auto expect = oracle::strata_by_union_find(x.raw());
    std::map<int, std::set<std::set<std::int64_t>>> got;
    for (const auto& s : x.strata()) {
      std::set<std::int64_t> ids;
      for (int v : s.vertices) ids.insert(x.vertex_id(v));
      got[s.key.level].insert(ids);
      CHECK(s.codim == x.formal_dim() - s.key.level);
      CHECK(s.regular == (s.key.level == x.formal_dim()));
    }
    CHECK(got == expect);
  }
}

TEST_CASE("suspension of RP2 has the two apexes and one regular stratum") {
  auto x = from_recipe("sigma_rp2");
  int singular = 0, regular = 0;
  for (const auto& s : x.strata()) {
    if (s.regular) {
      ++regular;
    } else {
      ++singular;
      CHECK(s.codim == 3);
      CHECK(s.vertices.size() == 1);
    }
  }
  CHECK(singular == 2);
  CHECK(regular == 1);
}

TEST_CASE("strata partition the simplices") {
  auto x = from_recipe("sigma_rp3");
  std::vector<int> hits(x.strata().size(), 0);
  for (int d = 0; d <= x.dim(); ++d)
    for (const auto& s : x.simplices(d)) {
      int i = x.stratum_index(s);
      REQUIRE(i >= 0);
      CHECK(x.strata()[i].key.level == x.max_level(s));
      ++hits[i];
    }
  for (int h : hits) CHECK(h > 0);
}

TEST_CASE("join decomposition counts vertices per level") {
  auto x = from_recipe("sigma_rp2");
  const int n = x.formal_dim();
  for (int d = 0; d <= x.dim(); ++d)
    for (const auto& s : x.simplices(d)) {
      auto jd = x.join_decomposition(s);
      REQUIRE(static_cast<int>(jd.size()) == n + 1);
      int total = 0;
      for (int i = 0; i <= n; ++i) {
        int at = 0;
        for (int v : s) at += x.level(v) == i;
        CHECK(jd[i] == at - 1);
        total += jd[i] + 1;
        // the part in X_i has dimension at most i
        CHECK(total - 1 <= i);
      }
      CHECK(total == static_cast<int>(s.size()));
      CHECK(x.is_regular(s) == (jd[n] >= 0));
    }

  // an apex with two regular vertices
  for (const auto& s : x.simplices(2))
    if (x.level(s[0]) == 0) {
      CHECK(x.join_decomposition(s) == JoinDecomposition{0, -1, -1, 1});
      break;
    }
}

TEST_CASE("vertices inside a simplex are ordered by level then id") {
  auto x = from_recipe("product_circle(cone_rp2)");
  for (int d = 1; d <= x.dim(); ++d)
    for (const auto& s : x.simplices(d))
      for (std::size_t i = 1; i < s.size(); ++i) {
        auto a = std::make_pair(x.level(s[i - 1]), x.vertex_id(s[i - 1]));
        auto b = std::make_pair(x.level(s[i]), x.vertex_id(s[i]));
        CHECK(a < b);
      }
}
