#include "strata/io.hpp"

#include "strata/constructions.hpp"
#include "strata/errors.hpp"

#include <fstream>
#include <sstream>

namespace strata {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("InvalidInput", "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error("InvalidInput", "'" + path + "' is not valid JSON: " + e.what());
  }
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error("InvalidInput", std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw Error("InvalidInput", std::string("field '") + key + "' has the wrong type");
  }
}

}  // namespace

FilteredComplex complex_from_json(const Json& j) {
  RawComplex raw;
  raw.formal_dim = field<int>(j, "formal_dim");
  for (const auto& v : field<Json>(j, "vertices")) raw.vertices.emplace_back(field<std::int64_t>(v, "id"), field<int>(v, "level"));
  raw.simplices = field<std::vector<std::vector<std::int64_t>>>(j, "simplices");
  if (j.contains("orientations"))
    for (const auto& o : j.at("orientations"))
      raw.orientations.emplace_back(field<std::vector<std::int64_t>>(o, "simplex"), field<int>(o, "sign"));
  FilteredComplex x = FilteredComplex::build(raw);
  if (j.contains("links"))
    for (const auto& l : j.at("links")) {
      StratumKey key{field<int>(l, "level"), field<int>(l, "id")};
      if (x.stratum_lookup(key) < 0) throw Error("UnknownStratum", "link given for a stratum that does not exist");
      std::string recipe = field<std::string>(l, "recipe");
      x.attach_link(key, Link{recipe, std::make_shared<const FilteredComplex>(from_recipe(recipe))});
    }
  return x;
}

Json complex_to_json(const FilteredComplex& x) {
  RawComplex raw = x.raw();
  Json j;
  j["formal_dim"] = raw.formal_dim;
  Json verts = Json::array();
  for (const auto& [id, level] : raw.vertices) verts.push_back({{"id", id}, {"level", level}});
  j["vertices"] = std::move(verts);
  j["simplices"] = raw.simplices;
  if (!raw.orientations.empty()) {
    Json o = Json::array();
    for (const auto& [s, sign] : raw.orientations) o.push_back({{"simplex", s}, {"sign", sign}});
    j["orientations"] = std::move(o);
  }
  Json links = Json::array();
  for (const auto& [key, link] : x.links())
    if (!link.recipe.empty()) links.push_back({{"level", key.level}, {"id", key.id}, {"recipe", link.recipe}});
  if (!links.empty()) j["links"] = std::move(links);
  return j;
}

FilteredComplex load_space(const std::string& arg) {
  const std::string prefix = "recipe:";
  if (arg.rfind(prefix, 0) == 0) return from_recipe(arg.substr(prefix.size()));
  std::ifstream probe(arg);
  if (probe) return complex_from_json(read_json_file(arg));
  return from_recipe(arg);
}

Perversity perversity_from_json(const Json& j, const FilteredComplex& x) {
  if (j.is_string()) return Perversity::preset(j.get<std::string>());
  if (!j.is_object()) throw Error("InvalidPerversity", "perversity must be a preset name or an object");
  if (j.contains("preset")) return Perversity::preset(field<std::string>(j, "preset"));
  if (j.contains("constant")) return Perversity::constant(field<int>(j, "constant"));
  if (j.contains("gm")) return Perversity::gm(field<std::vector<int>>(j, "gm"));
  if (j.contains("strata")) {
    std::map<StratumKey, int> values;
    for (const auto& s : j.at("strata")) {
      StratumKey key{field<int>(s, "level"), field<int>(s, "id")};
      if (x.stratum_lookup(key) < 0)
        throw Error("UnknownStratum", "no stratum (" + std::to_string(key.level) + "," + std::to_string(key.id) + ")");
      values[key] = field<int>(s, "value");
    }
    return Perversity::per_stratum(std::move(values), x.formal_dim());
  }
  throw Error("InvalidPerversity", "unrecognised perversity description");
}

Perversity parse_perversity(const std::string& arg, const FilteredComplex& x) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '"')) {
    try {
      return perversity_from_json(Json::parse(arg), x);
    } catch (const Json::exception& e) {
      throw Error("InvalidPerversity", std::string("bad perversity JSON: ") + e.what());
    }
  }
  std::ifstream probe(arg);
  if (probe) return perversity_from_json(read_json_file(arg), x);
  return Perversity::preset(arg);
}

Json perversity_to_json(const Perversity& p, const FilteredComplex& x) {
  Json arr = Json::array();
  for (const auto& s : x.strata())
    if (!s.regular) arr.push_back({{"level", s.key.level}, {"id", s.key.id}, {"value", p.value(s)}});
  return Json{{"strata", std::move(arr)}};
}

Json to_json(const Integer& v) {
  if (v.fits_int64()) return v.to_int64();
  return v.str();
}

Json to_json(const HomologyGroup& g) {
  Json t = Json::array();
  for (const auto& v : g.torsion) t.push_back(to_json(v));
  return Json{{"rank", g.free_rank}, {"torsion", std::move(t)}, {"group", g.str()}};
}

Json to_json(const HomologySummary& h) {
  Json degrees = Json::array();
  for (int k = h.min_degree; k <= h.max_degree(); ++k) {
    Json g = to_json(h.at(k));
    g["degree"] = k;
    degrees.push_back(std::move(g));
  }
  return Json{{"ring", h.ring.name()}, {"degrees", std::move(degrees)}};
}

namespace {

Json matrix_json(const std::vector<std::vector<Integer>>& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(to_json(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const DualityReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees)
    degrees.push_back({{"k", d.k},
                       {"cohomology", to_json(d.cohomology)},
                       {"tame_homology", to_json(d.homology)},
                       {"matrix", matrix_json(d.matrix)}});
  return Json{{"ring", r.ring.name()}, {"iso", r.iso}, {"cone", to_json(r.cone)}, {"degrees", std::move(degrees)}};
}

Json to_json(const PairingReport& r) {
  return Json{{"k", r.k},
              {"rows", r.rows},
              {"cols", r.cols},
              {"matrix", matrix_json(r.matrix)},
              {"square", r.square},
              {"det", to_json(r.det)},
              {"nondegenerate", r.nondegenerate},
              {"unimodular", r.unimodular}};
}

Json to_json(const WittReport& r) {
  Json strata = Json::array();
  for (const auto& s : r.strata) {
    Json j{{"level", s.key.level}, {"id", s.key.id}, {"codim", s.codim}, {"checked", s.checked}};
    if (s.checked) {
      j["link"] = s.link;
      j["middle_homology"] = to_json(s.middle);
      j["vanishes"] = s.vanishes;
    }
    strata.push_back(std::move(j));
  }
  return Json{{"witt", r.witt}, {"strata", std::move(strata)}};
}

void write_triplets(std::ostream& os, int degree, const SparseMatrix<Integer>& m) {
  for (int c = 0; c < m.col_count(); ++c)
    for (const auto& [r, v] : m.cols[c]) os << degree << ' ' << r << ' ' << c << ' ' << v << '\n';
}

void write_triplets(std::ostream& os, int degree, const std::vector<SparseVec<Integer>>& columns) {
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (const auto& [r, v] : columns[c]) os << degree << ' ' << r << ' ' << c << ' ' << v << '\n';
}

}  // namespace strata
