#include "strata/blowup.hpp"
#include "strata/constructions.hpp"
#include "strata/duality.hpp"
#include "strata/errors.hpp"
#include "strata/intersection_chains.hpp"
#include "strata/io.hpp"
#include "strata/products.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <thread>

using namespace strata;

namespace {

constexpr const char* kSchema = "strata/1";

Json header(const std::string& command, const std::string& space) {
  return Json{{"schema", kSchema}, {"command", command}, {"space", space}};
}

void emit(const Json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw Error("InvalidInput", "cannot write '" + out + "'");
  f << j.dump(2) << '\n';
}

template <class Ops>
void dump_basis(const Ops& ops, const Presentation& p, std::ostream& os) {
  for (int k = p.min_degree; k <= p.max_degree(); ++k) {
    std::vector<SparseVec<Integer>> cols;
    for (const auto& v : subcomplex_basis(ops, p, k)) {
      SparseVec<Integer> c;
      for (const auto& [i, a] : v) c.emplace_back(i, ops.lift(a));
      cols.push_back(std::move(c));
    }
    write_triplets(os, k, cols);
  }
}

struct Options {
  std::string space, perversity = "zero", q, ring = "Z", recipe, out;
  std::vector<std::string> rings{"Z", "Q", "F2"};
  bool tame = false, classical = false, dump = false;
  int k = 0, trials = 200, jobs = 0, lo = -2, above = 2;
  std::uint64_t seed = 1;
};

int run_make(const Options& o) {
  FilteredComplex x = from_recipe(o.recipe);
  Json j{{"schema", kSchema}, {"recipe", o.recipe}};
  j.update(complex_to_json(x));
  emit(j, o.out);
  return 0;
}

int run_homology(const Options& o) {
  FilteredComplex x = load_space(o.space);
  Perversity p = parse_perversity(o.perversity, x);
  CoefficientRing ring = CoefficientRing::parse(o.ring);
  const bool classical = o.classical && !o.tame;
  Presentation pr = classical ? intersection_complex(x, p) : tame_complex(x, p);
  Json j = header("homology", o.space);
  j["complex"] = classical ? "classical" : "tame";
  j["perversity"] = perversity_to_json(p, x);
  j.update(to_json(homology(pr, ring)));
  emit(j, o.out);
  return 0;
}

int run_blowup(const Options& o) {
  FilteredComplex x = load_space(o.space);
  Perversity p = parse_perversity(o.perversity, x);
  CoefficientRing ring = CoefficientRing::parse(o.ring);
  BlownUpComplex b(x);
  Presentation pr = b.presentation(p);
  if (o.dump) {
    std::ofstream f;
    if (!o.out.empty()) {
      f.open(o.out);
      if (!f) throw Error("InvalidInput", "cannot write '" + o.out + "'");
    }
    std::ostream& os = o.out.empty() ? std::cout : f;
    if (ring.kind == RingKind::PrimeField)
      dump_basis(PrimeFieldOps{ring.p}, pr, os);
    else
      dump_basis(IntegerOps{}, pr, os);
    return 0;
  }
  Json j = header("blowup", o.space);
  j["perversity"] = perversity_to_json(p, x);
  Json counts = Json::array();
  for (int k = 0; k <= b.max_degree(); ++k) counts.push_back(b.count(k));
  j["basis_sizes"] = std::move(counts);
  j.update(to_json(homology(pr, ring)));
  emit(j, o.out);
  return 0;
}

int run_duality(const Options& o) {
  FilteredComplex x = load_space(o.space);
  Perversity p = parse_perversity(o.perversity, x);
  CoefficientRing ring = CoefficientRing::parse(o.ring);
  BlownUpComplex b(x);
  DualityReport r = duality(b, p, ring);
  Json j = header("duality", o.space);
  j["perversity"] = perversity_to_json(p, x);
  j.update(to_json(r));
  emit(j, o.out);
  return r.iso ? 0 : 2;
}

int run_pairing(const Options& o) {
  FilteredComplex x = load_space(o.space);
  Perversity p = parse_perversity(o.perversity, x);
  Perversity q = o.q.empty() ? complement(p) : parse_perversity(o.q, x);
  CoefficientRing ring = CoefficientRing::parse(o.ring);
  BlownUpComplex b(x);
  Json j = header("pairing", o.space);
  j["p"] = perversity_to_json(p, x);
  j["q"] = perversity_to_json(q, x);
  j["ring"] = ring.name();
  j.update(to_json(pairing(b, p, q, o.k, ring)));
  emit(j, o.out);
  return 0;
}

int run_check_products(const Options& o) {
  FilteredComplex x = load_space(o.space);
  BlownUpComplex b(x);
  ProductReport r = check_products(b, o.trials, o.seed);
  Json j = header("check-products", o.space);
  j["seed"] = o.seed;
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"trials", c.trials}, {"nontrivial", c.nontrivial}, {"failures", c.failures}});
  j["checks"] = std::move(checks);
  j["ok"] = r.ok();
  emit(j, o.out);
  return r.ok() ? 0 : 2;
}

// cases run on a pool of threads; each writes its own slot so the report
// order is the grid order whatever the scheduling
int run_sweep(const Options& o) {
  FilteredComplex x = load_space(o.space);
  BlownUpComplex b(x);
  std::vector<CoefficientRing> rings;
  for (const auto& r : o.rings) rings.push_back(CoefficientRing::parse(r));
  std::vector<Perversity> grid = perversity_grid(x, o.lo, o.above);
  const std::size_t total = grid.size() * rings.size();

  struct Outcome {
    bool iso = false;
    std::string error;
    int code = 0;
  };
  std::vector<Outcome> out(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < total;) {
      const Perversity& p = grid[i / rings.size()];
      const CoefficientRing& ring = rings[i % rings.size()];
      try {
        out[i].iso = duality(b, p, ring, false).iso;
        if (!out[i].iso) out[i].code = 2;
      } catch (const MathFailure& e) {
        out[i] = {false, std::string("MathFailure: ") + e.what(), 2};
      } catch (const Error& e) {
        out[i] = {false, e.what(), 1};
      }
    }
  };
  int jobs = o.jobs > 0 ? o.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = static_cast<int>(std::min<std::size_t>(jobs, std::max<std::size_t>(total, 1)));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Json cases = Json::array();
  int code = 0, iso = 0;
  for (std::size_t i = 0; i < total; ++i) {
    Json c{{"perversity", perversity_to_json(grid[i / rings.size()], x)},
           {"ring", rings[i % rings.size()].name()},
           {"iso", out[i].iso}};
    if (!out[i].error.empty()) c["error"] = out[i].error;
    cases.push_back(std::move(c));
    iso += out[i].iso;
    code = std::max(code, out[i].code);
  }
  Json j = header("sweep", o.space);
  j["cases"] = std::move(cases);
  j["total"] = total;
  j["iso"] = iso;
  emit(j, o.out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection homology, blown-up cohomology and duality checks"};
  app.require_subcommand(1);
  Options o;

  auto space = [&](CLI::App* s) { s->add_option("--space", o.space, "JSON file, recipe:<r> or library name")->required(); };
  auto ring = [&](CLI::App* s) { s->add_option("--ring", o.ring, "Z, Q, F2 or Fp")->capture_default_str(); };
  auto perv = [&](CLI::App* s) {
    s->add_option("--perversity", o.perversity, "preset name, inline JSON or JSON file")->capture_default_str();
  };
  auto out = [&](CLI::App* s) { s->add_option("-o,--output", o.out, "write the report here instead of stdout"); };

  auto* make = app.add_subcommand("make", "build a space from a recipe");
  make->add_option("--recipe", o.recipe, "e.g. suspension(rp2)")->required();
  out(make);

  auto* hom = app.add_subcommand("homology", "intersection homology");
  space(hom);
  perv(hom);
  ring(hom);
  auto* tame_flag = hom->add_flag("--tame", o.tame, "tame complex (default)");
  hom->add_flag("--classical", o.classical, "classical intersection chains")->excludes(tame_flag);
  out(hom);

  auto* blow = app.add_subcommand("blowup", "blown-up intersection cohomology");
  space(blow);
  perv(blow);
  ring(blow);
  blow->add_flag("--dump-basis", o.dump, "emit the subcomplex basis as 'degree row col value' triplets");
  out(blow);

  auto* dual = app.add_subcommand("duality", "cap with the fundamental class");
  space(dual);
  perv(dual);
  ring(dual);
  out(dual);

  auto* pair = app.add_subcommand("pairing", "cup pairing matrix");
  pair->alias("pair");
  space(pair);
  pair->add_option("--p,--perversity", o.perversity, "perversity of the left factor")->capture_default_str();
  pair->add_option("--q", o.q, "perversity of the right factor (default: complement of p)");
  pair->add_option("--k", o.k, "degree of the left factor")->required();
  ring(pair);
  out(pair);

  auto* prod = app.add_subcommand("check-products", "randomised product identities");
  space(prod);
  prod->add_option("--trials", o.trials)->capture_default_str();
  prod->add_option("--seed", o.seed)->capture_default_str();
  out(prod);

  auto* sweep = app.add_subcommand("sweep", "duality over a grid of per-stratum perversities");
  space(sweep);
  sweep->add_option("--ring", o.rings, "rings to sweep (repeatable)")->capture_default_str();
  sweep->add_option("--lo", o.lo, "lowest value on each stratum")->capture_default_str();
  sweep->add_option("--above", o.above, "highest value is t(S) plus this")->capture_default_str();
  sweep->add_option("--jobs", o.jobs, "worker threads (default: hardware)");
  out(sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*make) return run_make(o);
    if (*hom) return run_homology(o);
    if (*blow) return run_blowup(o);
    if (*dual) return run_duality(o);
    if (*pair) return run_pairing(o);
    if (*prod) return run_check_products(o);
    if (*sweep) return run_sweep(o);
  } catch (const MathFailure& e) {
    std::cerr << "MathFailure: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return 1;
  }
  return 1;
}
