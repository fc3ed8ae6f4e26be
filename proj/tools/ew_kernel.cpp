#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "ewk/day.hpp"
#include "ewk/suites.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ewk::Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw ewk::Error("cannot write " + path);
  out << text;
}

// exit code 0 iff every plain check passes and every expected negative is
// confirmed negative
int exit_code(const ewk::Report& r) { return r.ok() ? 0 : 1; }

void print_summary(const ewk::Report& r) {
  int passed = 0, failed = 0, negatives = 0;
  for (const auto& c : r.checks) {
    (c.pass ? passed : failed)++;
    if (c.expected_negative) negatives++;
    if (!c.pass)
      std::cerr << "FAIL " << c.id << (c.witness.empty() ? "" : ": " + c.witness) << "\n";
  }
  std::cerr << "suite " << r.suite << ": " << passed << " passed, " << failed << " failed";
  if (negatives) std::cerr << " (" << negatives << " expected-negative confirmed)";
  std::cerr << " [" << static_cast<long>(r.elapsed_ms) << " ms]\n";
}

ewk::Report run_named_suite(const std::string& suite, const ewk::Instance& inst,
                            const std::string& report_path) {
  ewk::Report rep = ewk::run_suite(suite, inst);
  if (!report_path.empty()) write_output(report_path, ewk::report_to_json(rep));
  print_summary(rep);
  return rep;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification kernel for module categories over commutative monoids"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "generate a deterministic instance file");
  uint64_t seed = 0;
  std::string profile = "small", field_spec = "q", out_path = "-";
  gen->add_option("--seed", seed, "instance seed");
  gen->add_option("--profile", profile, "small (dims <= 3) or medium (dims <= 4)");
  gen->add_option("--field", field_spec, "q or fp:<p>");
  gen->add_option("-o,--output", out_path, "output path (default stdout)");

  // run
  auto* run = app.add_subcommand("run", "run a verification suite against an instance");
  std::string suite = "all", instance_path, report_path;
  run->add_option("--suite", suite, "one of: cosmos-laws module-laws tensor-coherence ew six main-thm day all");
  run->add_option("--instance", instance_path, "instance JSON (omit to generate in memory)");
  run->add_option("--seed", seed, "seed when generating in memory");
  run->add_option("--profile", profile, "profile when generating in memory");
  run->add_option("--field", field_spec, "field when generating in memory");
  run->add_option("--report", report_path, "write the JSON report here");

  // six
  auto* six = app.add_subcommand("six", "six-functor law report for one morphism");
  std::string alg_src, alg_dst, morphism = "unit";
  six->add_option("--algebra-src", alg_src, "builtin name of the source algebra")->required();
  six->add_option("--algebra-dst", alg_dst, "builtin name of the target algebra")->required();
  six->add_option("--morphism", morphism, "unit | aug | id (id requires equal algebras)");
  six->add_option("--field", field_spec, "q or fp:<p>");
  six->add_option("--seed", seed, "sample seed");
  six->add_option("--report", report_path, "write the JSON report here");

  // main-thm
  auto* mt = app.add_subcommand("main-thm", "main equivalence report for an instance");
  mt->add_option("--instance", instance_path, "instance JSON (omit to generate in memory)");
  mt->add_option("--seed", seed, "seed");
  mt->add_option("--field", field_spec, "field when generating in memory");
  mt->add_option("--report", report_path, "write the JSON report here");

  // day
  auto* day = app.add_subcommand("day", "Day convolution report for an instance");
  day->add_option("--instance", instance_path, "instance JSON (omit to generate in memory)");
  day->add_option("--seed", seed, "seed");
  day->add_option("--field", field_spec, "field when generating in memory");
  day->add_option("--report", report_path, "write the JSON report here");

  // probe
  auto* probe = app.add_subcommand(
      "probe", "evaluate a functor expression and probe its cocontinuity via lambda");
  std::string expr_text;
  probe->add_option("--expr", expr_text,
                    "stages in diagrammatic order, e.g. \"tensor(reg_bimod_dual) ; "
                    "restrict(unit_dual_numbers)\"")
      ->required();
  probe->add_option("--instance", instance_path, "instance JSON (omit to generate in memory)");
  probe->add_option("--seed", seed, "seed when generating in memory");
  probe->add_option("--field", field_spec, "field when generating in memory");
  probe->add_option("-o,--output", out_path, "output path (default stdout)");

  // algebra
  auto* alg = app.add_subcommand("algebra", "print a builtin algebra and its law report");
  std::string algebra_name;
  alg->add_option("--algebra", algebra_name, "builtin algebra name")->required();
  alg->add_option("--field", field_spec, "q or fp:<p>");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      ewk::Instance inst = ewk::generate(seed, profile, ewk::Field::parse(field_spec));
      write_output(out_path, ewk::instance_to_json(inst));
      return 0;
    }

    auto load_instance = [&]() {
      if (!instance_path.empty()) return ewk::instance_from_json(read_file(instance_path));
      return ewk::generate(seed, profile, ewk::Field::parse(field_spec));
    };

    if (run->parsed()) return exit_code(run_named_suite(suite, load_instance(), report_path));
    if (mt->parsed()) return exit_code(run_named_suite("main-thm", load_instance(), report_path));
    if (day->parsed()) return exit_code(run_named_suite("day", load_instance(), report_path));

    if (probe->parsed()) {
      ewk::Instance inst = load_instance();
      ewk::FunctorExpr F = ewk::parse_functor_expr(expr_text, inst);
      std::vector<ewk::RightModule> samples = inst.modules_over(F.src_base());
      if (samples.empty()) samples.push_back(ewk::regular_module(F.src_base()));
      ewk::ProbeResult pr = ewk::cocontinuity_probe(F, samples);
      nlohmann::ordered_json j;
      j["schema"] = "ew-kernel/probe@1";
      j["expr"] = expr_text;
      j["structurally_cocontinuous"] = pr.structurally_cocontinuous;
      j["iso_on_all_samples"] = pr.iso_on_all_samples;
      nlohmann::ordered_json entries = nlohmann::ordered_json::array();
      for (const auto& e : pr.entries) {
        nlohmann::ordered_json je;
        je["sample"] = e.sample;
        je["invertible"] = e.invertible;
        je["src_dim"] = e.src_dim;
        je["dst_dim"] = e.dst_dim;
        entries.push_back(std::move(je));
      }
      j["samples"] = std::move(entries);
      write_output(out_path, j.dump(2) + "\n");
      return 0;
    }

    if (alg->parsed()) {
      ewk::Field f = ewk::Field::parse(field_spec);
      ewk::CommMonoid b = ewk::builtin_algebra(algebra_name, f);
      ewk::LawReport rep = ewk::check_comm_monoid(b);
      nlohmann::ordered_json j;
      j["name"] = algebra_name;
      j["field"] = f.name();
      j["dim"] = b.carrier.dim;
      nlohmann::ordered_json unit = nlohmann::ordered_json::array();
      for (int i = 0; i < b.carrier.dim; ++i) unit.push_back(b.unit.at(i, 0).str());
      j["unit"] = std::move(unit);
      nlohmann::ordered_json product = nlohmann::ordered_json::array();
      for (int r = 0; r < b.product.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (int c = 0; c < b.product.cols(); ++c) row.push_back(b.product.at(r, c).str());
        product.push_back(std::move(row));
      }
      j["product"] = std::move(product);
      j["laws_pass"] = rep.all_pass();
      write_output("-", j.dump(2) + "\n");
      return rep.all_pass() ? 0 : 1;
    }

    if (six->parsed()) {
      ewk::Field f = ewk::Field::parse(field_spec);
      ewk::CommMonoid a = ewk::builtin_algebra(alg_src, f);
      ewk::CommMonoid b = ewk::builtin_algebra(alg_dst, f);
      ewk::Instance inst = ewk::generate(seed, "small", f);
      ewk::MonoidMor fm = ewk::identity_mor(a);
      if (morphism == "id") {
        if (!(a == b)) throw ewk::Error("id morphism needs equal algebras");
      } else if (morphism == "unit") {
        if (alg_src != "ground") throw ewk::Error("unit morphism needs --algebra-src ground");
        fm = ewk::MonoidMor{a, b, b.unit};
      } else if (morphism == "aug") {
        if (alg_dst != "ground") throw ewk::Error("aug morphism needs --algebra-dst ground");
        fm = inst.morphism("aug_" + alg_src);
      } else {
        // a named morphism from the generated instance
        fm = inst.morphism(morphism);
        if (!(fm.src == a && fm.dst == b)) throw ewk::Error("morphism does not match algebras");
      }
      ewk::SixFunctorPack pack = ewk::build_pack(fm);
      ewk::Rng rng(seed);
      ewk::Report rep;
      rep.suite = "six:" + alg_src + "->" + alg_dst;
      rep.seed = seed;
      rep.field = f.name();
      rep.version = ewk::kArtifactVersion;
      ewk::LawReport body;
      std::vector<ewk::RightModule> xs = inst.modules_over(a);
      std::vector<ewk::RightModule> ys = inst.modules_over(b);
      if (xs.empty()) xs.push_back(ewk::regular_module(a));
      if (ys.empty()) ys.push_back(ewk::regular_module(b));
      for (size_t i = 0; i < 2; ++i) {
        const auto& x = xs[rng.below(static_cast<int>(xs.size()))];
        const auto& y = ys[rng.below(static_cast<int>(ys.size()))];
        body.merge(ewk::check_star_triangles(pack, x, y));
        body.merge(ewk::check_shriek_triangles(pack, y, x));
        body.merge(ewk::check_mate_consistency(pack, x, x));
        body.merge(ewk::projection_formula(pack, x, y).report);
        body.add("six.shriek_star_invertible", is_invertible(ewk::shriek_star_iso(pack, y).map));
      }
      rep.checks = body.checks;
      if (!report_path.empty()) write_output(report_path, ewk::report_to_json(rep));
      print_summary(rep);
      return exit_code(rep);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
