#include "strata/constructions.hpp"

#include "strata/errors.hpp"

#include <algorithm>
#include <cctype>

namespace strata {

namespace {

std::int64_t max_id(const FilteredComplex& x) {
  std::int64_t m = 0;
  for (int v = 0; v < x.vertex_count(); ++v) m = std::max(m, x.vertex_id(v));
  return m;
}

// carry the links of x over to y; vertex_map sends an internal vertex of x
// to an external id of y
template <class Map>
void carry_links(const FilteredComplex& x, FilteredComplex& y, Map vertex_map) {
  for (const auto& [key, link] : x.links()) {
    int si = x.stratum_lookup(key);
    if (si < 0) continue;
    int v = y.vertex_index(vertex_map(x.strata()[si].vertices.front()));
    y.attach_link(y.strata()[y.stratum_of_vertex(v)].key, link);
  }
}

std::vector<std::int64_t> external(const FilteredComplex& x, const Simplex& s) {
  std::vector<std::int64_t> e;
  for (int v : s) e.push_back(x.vertex_id(v));
  return e;
}

}  // namespace

FilteredComplex cone(const FilteredComplex& base, const std::string& name) {
  RawComplex raw;
  raw.formal_dim = base.formal_dim() + 1;
  const std::int64_t apex = max_id(base) + 1;
  raw.vertices.emplace_back(apex, 0);
  for (int v = 0; v < base.vertex_count(); ++v) raw.vertices.emplace_back(base.vertex_id(v), base.level(v) + 1);
  for (const auto& f : base.facets()) {
    auto e = external(base, f);
    e.push_back(apex);
    raw.simplices.push_back(std::move(e));
  }
  FilteredComplex c = FilteredComplex::build(raw);
  carry_links(base, c, [&](int v) { return base.vertex_id(v); });
  auto link = std::make_shared<const FilteredComplex>(base);
  c.attach_link(c.strata()[c.stratum_of_vertex(c.vertex_index(apex))].key, Link{name, link});
  return c;
}

FilteredComplex suspension(const FilteredComplex& base, const std::string& name) {
  RawComplex raw;
  raw.formal_dim = base.formal_dim() + 1;
  const std::int64_t north = max_id(base) + 1, south = north + 1;
  raw.vertices.emplace_back(north, 0);
  raw.vertices.emplace_back(south, 0);
  for (int v = 0; v < base.vertex_count(); ++v) raw.vertices.emplace_back(base.vertex_id(v), base.level(v) + 1);
  for (const auto& f : base.facets())
    for (auto pole : {north, south}) {
      auto e = external(base, f);
      e.push_back(pole);
      raw.simplices.push_back(std::move(e));
    }
  FilteredComplex s = FilteredComplex::build(raw);
  carry_links(base, s, [&](int v) { return base.vertex_id(v); });
  auto link = std::make_shared<const FilteredComplex>(base);
  for (auto pole : {north, south})
    s.attach_link(s.strata()[s.stratum_of_vertex(s.vertex_index(pole))].key, Link{name, link});
  return s;
}

FilteredComplex product_circle(const FilteredComplex& x, int m) {
  if (m < 3) throw Error("InvalidFiltration", "the circle needs at least 3 vertices");
  RawComplex raw;
  raw.formal_dim = x.formal_dim() + 1;
  auto id = [m](int v, int j) { return static_cast<std::int64_t>(v) * m + j; };
  for (int v = 0; v < x.vertex_count(); ++v)
    for (int j = 0; j < m; ++j) raw.vertices.emplace_back(id(v, j), x.level(v) + 1);
  for (const auto& f : x.facets())
    for (int j = 0; j < m; ++j) {
      const int a = j, b = (j + 1) % m;
      for (std::size_t r = 0; r < f.size(); ++r) {
        std::vector<std::int64_t> s;
        for (std::size_t t = 0; t <= r; ++t) s.push_back(id(f[t], a));
        for (std::size_t t = r; t < f.size(); ++t) s.push_back(id(f[t], b));
        raw.simplices.push_back(std::move(s));
      }
    }
  FilteredComplex p = FilteredComplex::build(raw);
  carry_links(x, p, [&](int v) { return id(v, 0); });
  return p;
}

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\n");
  return s.substr(b, e - b + 1);
}

// "name(a, b(c), d)" -> name, {a, b(c), d}
std::pair<std::string, std::vector<std::string>> split_call(const std::string& recipe) {
  auto open = recipe.find('(');
  if (open == std::string::npos) return {recipe, {}};
  if (recipe.back() != ')') throw Error("InvalidRecipe", "unbalanced parentheses in '" + recipe + "'");
  std::string name = trim(recipe.substr(0, open));
  std::vector<std::string> args;
  int depth = 0;
  std::string cur;
  for (std::size_t i = open + 1; i + 1 < recipe.size(); ++i) {
    char c = recipe[i];
    if (c == '(') ++depth;
    if (c == ')' && --depth < 0) throw Error("InvalidRecipe", "unbalanced parentheses in '" + recipe + "'");
    if (c == ',' && depth == 0) {
      args.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (depth != 0) throw Error("InvalidRecipe", "unbalanced parentheses in '" + recipe + "'");
  args.push_back(trim(cur));
  return {name, args};
}

int parse_int(const std::string& s) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw Error("InvalidRecipe", "expected a nonnegative integer, got '" + s + "'");
  return std::stoi(s);
}

}  // namespace

FilteredComplex from_recipe(const std::string& text) {
  const std::string recipe = trim(text);
  auto [name, args] = split_call(recipe);
  auto want = [&, &name = name, &args = args](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi) throw Error("InvalidRecipe", "wrong number of arguments to " + name);
  };
  if (name == "sphere") {
    want(1, 1);
    return sphere(parse_int(args[0]));
  }
  if (name == "cone") {
    want(1, 1);
    return cone(from_recipe(args[0]), args[0]);
  }
  if (name == "suspension") {
    want(1, 1);
    return suspension(from_recipe(args[0]), args[0]);
  }
  if (name == "product_circle") {
    want(1, 2);
    return product_circle(from_recipe(args[0]), args.size() > 1 ? parse_int(args[1]) : 3);
  }
  want(0, 0);
  if (name == "circle") return sphere(1);
  if (name == "torus") return torus();
  if (name == "rp2") return rp2();
  if (name == "rp3") return rp3();
  if (name == "sigma_rp2") return suspension(rp2(), "rp2");
  if (name == "sigma_rp3") return suspension(rp3(), "rp3");
  if (name == "cone_rp2") return cone(rp2(), "rp2");
  throw Error("InvalidRecipe", "unknown space '" + recipe + "'");
}

std::vector<std::string> library_names() {
  return {"sphere(n)", "circle", "torus", "rp2", "rp3", "sigma_rp2", "sigma_rp3", "cone_rp2",
          "cone(R)",   "suspension(R)", "product_circle(R[,m])"};
}

}  // namespace strata
