#include "doctest.h"

#include "strata/constructions.hpp"
#include "strata/duality.hpp"
#include "strata/products.hpp"

#include <random>

using namespace strata;

namespace {

const std::vector<std::vector<int>> kSizes = {{1, 1}, {2, 1}, {1, 2}, {0, 2}, {2, 2},
                                              {1, 1, 1}, {0, 1, 2}, {2, 0, 1}, {1, 2, 1}};

ShuffleChain single(const TensorFace& f, long long c = 1) {
  ShuffleChain s;
  add_term(s, f, c);
  return s;
}

ShuffleChain sum(ShuffleChain a, const ShuffleChain& b, long long sign = 1) {
  for (const auto& [f, c] : b) add_term(a, f, sign * c);
  return a;
}

long long parity(int k) { return k % 2 ? -1 : 1; }

Integer evaluate(const Chain& cochain_on_simplices, const Chain& xi) {
  Integer v(0);
  for (const auto& [j, a] : xi)
    if (const Integer* c = find_entry(cochain_on_simplices, j)) v = v + a * *c;
  return v;
}

}  // namespace

TEST_CASE("local cup is a derivation") {
  for (const auto& sz : kSizes) {
    LocalBlowup l(sz);
    for (const auto& a : l.basis())
      for (const auto& b : l.basis()) {
        auto lhs = local_coboundary(l, local_cup(l, single(a), single(b)));
        auto rhs = sum(local_cup(l, local_coboundary(l, single(a)), single(b)),
                       local_cup(l, single(a), local_coboundary(l, single(b))), parity(l.degree(a)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("local tilde cap satisfies the Leibniz rule") {
  for (const auto& sz : kSizes) {
    LocalBlowup l(sz);
    for (const auto& w : l.basis())
      for (const auto& c : l.basis()) {
        auto lhs = local_chain_boundary(l, local_tilde_cap(l, single(w), single(c)));
        auto rhs = sum(local_tilde_cap(l, local_coboundary(l, single(w)), single(c)),
                       local_tilde_cap(l, single(w), local_chain_boundary(l, single(c))), parity(l.degree(w)));
        CHECK(lhs == rhs);
      }
  }
}

TEST_CASE("blowdown is a chain map") {
  for (const auto& sz : kSizes) {
    LocalBlowup l(sz);
    for (const auto& c : l.basis()) {
      CHECK(local_face_boundary(l, local_mu(l, single(c))) == local_mu(l, local_chain_boundary(l, single(c))));
      CHECK(local_chain_boundary(l, local_chain_boundary(l, single(c))).empty());
    }
  }
}

TEST_CASE("cup and cap on a manifold simplex are Alexander-Whitney") {
  LocalBlowup l({3});
  auto face = [](std::uint32_t m) { return TensorFace{ConeFace{m, false}}; };
  // front face cup back face, twisted by (-1)^{|F||G|}
  auto c = l.cup(face(0b011), face(0b110));
  REQUIRE(c);
  CHECK(c->face == face(0b111));
  CHECK(c->sign == -1);
  CHECK(l.cup(face(0b001), face(0b111))->sign == 1);
  CHECK_FALSE(l.cup(face(0b011), face(0b101)));
  CHECK(l.cup(face(0b001), face(0b001))->face == face(0b001));
  // 1_[0..k] cap [0..2] = [k..2], everything else caps to zero
  for (const auto& e : l.basis()) {
    auto r = l.cap(e);
    std::uint32_t m = e[0].face;
    bool front = (m & (m + 1)) == 0;
    CHECK(static_cast<bool>(r) == front);
    if (r) {
      int k = l.degree(e);
      CHECK(r->face == face(0b111 & ~((1u << k) - 1)));
      CHECK(r->sign == 1);
    }
  }
}

TEST_CASE("tilde cap on the blown-up simplex") {
  // per factor the front face rule on cD_i = [e_0 .. e_m, apex], then the
  // Koszul sign nu = sum_j |D_j| * (degrees of the factors after j)
  for (const auto& sz : kSizes) {
    LocalBlowup l(sz);
    const int n = l.n();
    int nonzero = 0;
    for (const auto& e : l.basis()) {
      bool front = true;
      for (int i = 0; i <= n; ++i) {
        std::uint32_t m = e[i].face;
        bool prefix = (m & (m + 1)) == 0;
        bool full = m == (1u << sz[i]) - 1;
        front = front && prefix && (!e[i].apex || full);
      }
      int nu = 0;
      for (int j = 0; j < n; ++j) {
        int after = 0;
        for (int i = j + 1; i <= n; ++i) after += e[i].degree();
        nu += sz[j] * after;
      }
      auto r = l.tilde_cap(e, l.top_chain());
      CHECK(static_cast<bool>(r) == front);
      if (r) {
        ++nonzero;
        CHECK(r->sign == (nu % 2 ? -1 : 1));
      }
    }
    CHECK(nonzero > 0);
  }
}

TEST_CASE("unit cochain") {
  auto x = from_recipe("sigma_rp2");
  BlownUpComplex b(x);
  auto one = unit_cochain(b);
  CHECK(b.apply_coboundary(0, one).empty());
  std::mt19937_64 g(11);
  for (int k = 0; k <= b.max_degree(); ++k)
    for (int t = 0; t < 10 && b.count(k); ++t) {
      Cochain w{{std::uniform_int_distribution<int>(0, b.count(k) - 1)(g), Integer(3)}};
      CHECK(cup(b, 0, one, k, w) == w);
      CHECK(cup(b, k, w, 0, one) == w);
    }
}

TEST_CASE("randomised product identities on the blown-up complexes") {
  for (const char* r : {"sigma_rp2", "cone_rp2", "torus", "product_circle(cone(circle))"}) {
    CAPTURE(r);
    auto x = from_recipe(r);
    BlownUpComplex b(x);
    auto report = check_products(b, 40, 7);
    CHECK(report.ok());
    for (const auto& c : report.checks) {
      CAPTURE(c.name);
      CHECK(c.failures == 0);
      CHECK(c.nontrivial > 0);
    }
  }
}

TEST_CASE("perverse degree is subadditive under cup") {
  auto x = from_recipe("sigma_rp2");
  BlownUpComplex b(x);
  int seen = 0;
  for (const auto& s : x.strata()) {
    if (s.regular) continue;
    for (int k = 0; k <= b.max_degree(); ++k)
      for (int i = 0; i < b.count(k); ++i)
        for (int l = 0; k + l <= b.max_degree(); ++l)
          for (int j = 0; j < b.count(l); j += 3) {
            Cochain w{{i, Integer(1)}}, e{{j, Integer(1)}};
            auto we = cup(b, k, w, l, e);
            if (we.empty()) continue;
            ++seen;
            ExtendedInt bound = cochain_perverse_degree(b, k, w, s) + cochain_perverse_degree(b, l, e, s);
            CHECK(cochain_perverse_degree(b, k + l, we, s) <= bound);
          }
  }
  CHECK(seen > 0);
}

TEST_CASE("cap of allowable inputs is allowable for the sum of perversities") {
  auto x = from_recipe("sigma_rp2");
  BlownUpComplex b(x);
  int seen = 0;
  for (int pv = -1; pv <= 2; ++pv)
    for (int qv = -1; qv <= 2; ++qv) {
      auto p = Perversity::constant(pv), q = Perversity::constant(qv);
      auto mask = b.allowable_mask(p);
      for (int m = 0; m <= x.dim(); ++m)
        for (const auto& s : x.simplices(m)) {
          if (!x.is_regular(s) || !is_allowable(x, s, q)) continue;
          Chain xi{{x.index(s), Integer(1)}};
          for (int k = 0; k <= m; ++k)
            for (int i = 0; i < b.count(k); ++i) {
              if (!mask[k][i]) continue;
              auto r = cap(b, k, Cochain{{i, Integer(1)}}, m, xi);
              if (r.empty()) continue;
              ++seen;
              CHECK(chain_is_allowable(x, m - k, r, add(p, q)));
            }
        }
    }
  CHECK(seen > 0);
}

TEST_CASE("chi intertwines the coboundary and the regular boundary") {
  IntegerOps ops;
  for (const char* r : {"sigma_rp2", "cone_rp2", "product_circle(cone(circle))"}) {
    CAPTURE(r);
    auto x = from_recipe(r);
    BlownUpComplex b(x);
    for (int pv = -1; pv <= 2; ++pv) {
      auto p = Perversity::constant(pv);
      auto cochains = b.presentation(p);
      auto chains = tame_complex(x, complement(p));
      for (int k = 0; k < b.max_degree() && k < x.dim(); ++k) {
        CAPTURE(k);
        for (const auto& w : subcomplex_basis(ops, cochains, k))
          for (const auto& xi : subcomplex_basis(ops, chains, k + 1)) {
            Integer u = evaluate(chi(b, k + 1, b.apply_coboundary(k, w)), xi);
            Integer v = evaluate(chi(b, k, w), regular_boundary_of(x, k + 1, xi));
            CHECK(u == (k % 2 ? v : -v));
          }
      }
    }
  }
}

TEST_CASE("intersection pairing is graded commutative") {
  for (const char* r : {"sigma_rp3", "torus", "product_circle(sphere(2))"}) {
    CAPTURE(r);
    auto x = from_recipe(r);
    BlownUpComplex b(x);
    const int n = x.formal_dim();
    auto p = Perversity::lower_middle(), q = Perversity::upper_middle();
    for (int k = 0; k <= n; ++k) {
      auto a = pairing(b, p, q, k, CoefficientRing::rationals());
      auto c = pairing(b, q, p, n - k, CoefficientRing::rationals());
      REQUIRE(a.rows == c.cols);
      REQUIRE(a.cols == c.rows);
      const int s = (k * (n - k)) % 2 ? -1 : 1;
      for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) CHECK(a.matrix[i][j] == Integer(s) * c.matrix[j][i]);
    }
  }
}
