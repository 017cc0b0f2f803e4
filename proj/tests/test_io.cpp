#include "doctest.h"

#include "strata/constructions.hpp"
#include "strata/errors.hpp"
#include "strata/io.hpp"

#include <functional>
#include <sstream>

using namespace strata;

namespace {

std::string kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return "";
}

}  // namespace

TEST_CASE("complex JSON round trip") {
  for (const char* r : {"sigma_rp2", "cone_rp2", "torus"}) {
    auto x = from_recipe(r);
    Json j = complex_to_json(x);
    auto y = complex_from_json(j);
    CHECK(complex_to_json(y) == j);
    CHECK(y.links().size() == x.links().size());
    for (int d = 0; d <= x.dim(); ++d) CHECK(y.count(d) == x.count(d));
    CHECK(y.strata().size() == x.strata().size());
  }
}

TEST_CASE("load_space accepts recipes") {
  CHECK(load_space("recipe:sigma_rp2").count(3) == from_recipe("sigma_rp2").count(3));
  CHECK(load_space("torus").count(2) == torus().count(2));
}

TEST_CASE("perversity descriptions") {
  auto x = from_recipe("sigma_rp3");
  const Stratum* apex = nullptr;
  for (const auto& s : x.strata())
    if (!s.regular) apex = &s;
  REQUIRE(apex);
  CHECK(parse_perversity("lower-middle", x).value(*apex) == 1);
  CHECK(parse_perversity("{\"constant\": 3}", x).value(*apex) == 3);
  CHECK(parse_perversity("{\"gm\": [0, 0, 1]}", x).value(*apex) == 1);
  CHECK(parse_perversity("\"top\"", x).value(*apex) == 2);

  auto p = Perversity::lower_middle();
  auto back = perversity_from_json(perversity_to_json(p, x), x);
  for (const auto& s : x.strata()) CHECK(back.value(s) == p.value(s));
}

TEST_CASE("perversity errors") {
  auto x = from_recipe("sigma_rp2");
  CHECK(kind_of([&] { parse_perversity("{\"strata\": [{\"level\": 1, \"id\": 0, \"value\": 0}]}", x); }) ==
        "UnknownStratum");
  CHECK(kind_of([&] { parse_perversity("{\"constant\": ", x); }) == "InvalidPerversity");
  CHECK(kind_of([&] { parse_perversity("{\"shape\": 1}", x); }) == "InvalidPerversity");
  CHECK(kind_of([&] { parse_perversity("no_such_preset", x); }) == "InvalidPerversity");
}

TEST_CASE("malformed complex JSON") {
  CHECK(kind_of([] { complex_from_json(Json::parse(R"({"vertices": []})")); }) == "InvalidInput");
  CHECK(kind_of([] {
          complex_from_json(Json::parse(R"({"formal_dim": 1, "vertices": [{"id": 0, "level": 1}], "simplices": [[0, 7]]})"));
        }) != "");
  Json j = complex_to_json(from_recipe("sigma_rp2"));
  j["links"] = Json::array({Json{{"level", 2}, {"id", 0}, {"recipe", "rp2"}}});
  CHECK(kind_of([&] { complex_from_json(j); }) == "UnknownStratum");
}

TEST_CASE("triplet output") {
  SparseMatrix<Integer> m;
  m.rows = 2;
  m.cols = {{{0, Integer(1)}}, {}, {{1, Integer(-2)}}};
  std::ostringstream os;
  write_triplets(os, 3, m);
  CHECK(os.str() == "3 0 0 1\n3 1 2 -2\n");
}
