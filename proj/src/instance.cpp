#include "ewk/instance.hpp"

#include <json.hpp>

namespace ewk {

using ordered_json = nlohmann::ordered_json;

const char* const kArtifactVersion = "0.1.0";

namespace {

template <class T>
const T& find_named(const std::vector<std::pair<std::string, T>>& v, const std::string& name,
                    const char* what) {
  for (const auto& [n, value] : v)
    if (n == name) return value;
  throw ParseError(std::string("unknown ") + what + ": " + name);
}

}  // namespace

const CommMonoid& Instance::algebra(const std::string& name) const {
  return find_named(algebras, name, "algebra");
}
const MonoidMor& Instance::morphism(const std::string& name) const {
  return find_named(morphisms, name, "morphism");
}
const RightModule& Instance::module(const std::string& name) const {
  return find_named(modules, name, "module");
}
const Bimodule& Instance::bimodule(const std::string& name) const {
  return find_named(bimodules, name, "bimodule");
}

std::vector<RightModule> Instance::modules_over(const CommMonoid& b) const {
  std::vector<RightModule> out;
  for (const auto& [n, m] : modules)
    if (m.over == b) out.push_back(m);
  return out;
}

RightModule sample_module(Rng& rng, const CommMonoid& b, int dim) {
  const Field& f = b.field;
  const int n = dim;
  if (b.name == "ground") return RightModule{b, Obj{n}, Mor::identity(f, Obj{n})};
  Mor gen(f, Obj{n}, Obj{n});
  if (b.name == "dual_numbers") {
    for (int i = 0; i + 1 < n; i += 2) gen.set(i, i + 1, 1);  // square zero
  } else if (b.name == "t_cubed") {
    for (int i = 0; i + 1 < n; ++i)
      if (i % 3 != 2) gen.set(i, i + 1, 1);  // cube zero
  } else if (b.name == "split_pair") {
    for (int i = 0; i < n; ++i) gen.set(i, i, rng.below(2));  // idempotent
  } else if (b.name == "z2_group_algebra") {
    for (int i = 0; i < n; ++i) gen.set(i, i, rng.below(2) ? 1 : -1);  // involution
  } else {
    throw ParseError("sample_module: no generator recipe for algebra " + b.name);
  }
  Mor p(f, Obj{n}, Obj{n});
  int budget = 100;
  do {
    if (budget-- == 0) throw Error("sample_module: retry budget exhausted");
    p = rng.matrix(f, Obj{n}, Obj{n}, -2, 2);
  } while (!is_invertible(p));
  Mor t = compose(p, compose(gen, inverse(p)));
  Obj x{n};
  Mor act(f, tensor(x, b.carrier), x);
  Mor power = Mor::identity(f, x);
  for (int k = 0; k < b.carrier.dim; ++k) {
    Mor basis_action = power;
    if (b.name == "split_pair") basis_action = (k == 0) ? t : Mor::identity(f, x) - t;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) act.set(r, c * b.carrier.dim + k, basis_action.at(r, c));
    power = compose(t, power);
  }
  RightModule m{b, x, act};
  if (!check_module(m).all_pass()) throw Error("sample_module produced an unlawful action");
  return m;
}

Bimodule product_bimodule(const RightModule& l, const RightModule& r) {
  const Field& f = l.over.field;
  return Bimodule{l.over, r.over, tensor(l.carrier, r.carrier),
                  compose(tensor(l.action, Mor::identity(f, r.carrier)),
                          tensor(braiding(f, l.over.carrier, l.carrier),
                                 Mor::identity(f, r.carrier))),
                  tensor(Mor::identity(f, l.carrier), r.action)};
}

namespace {

MonoidMor augmentation_of(const CommMonoid& b, const CommMonoid& ground) {
  Mor a(b.field, b.carrier, ground.carrier);
  if (b.name == "dual_numbers" || b.name == "t_cubed") {
    a.set(0, 0, 1);  // kill the nilpotents
  } else if (b.name == "split_pair") {
    a.set(0, 0, 1);  // project onto the first factor
  } else if (b.name == "z2_group_algebra") {
    a.set(0, 0, 1);  // s -> 1
    a.set(0, 1, 1);
  } else {
    throw ParseError("no augmentation for " + b.name);
  }
  return MonoidMor{b, ground, a};
}

}  // namespace

namespace {
Instance generate_impl(uint64_t seed, const std::string& profile, const Field& field);
}

Instance generate(uint64_t seed, const std::string& profile, const Field& field) {
  try {
    return generate_impl(seed, profile, field);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw Error(std::string(e.what()) + " (seed " + std::to_string(seed) + ")");
  }
}

namespace {

Instance generate_impl(uint64_t seed, const std::string& profile, const Field& field) {
  if (profile != "small" && profile != "medium")
    throw ParseError("unknown profile: " + profile + " (expected small or medium)");
  const int max_dim = profile == "small" ? 3 : 4;
  Instance inst;
  inst.field = field;
  inst.seed = seed;
  inst.profile = profile;
  Rng rng(seed);

  for (const auto& name : builtin_algebra_names())
    inst.algebras.emplace_back(name, builtin_algebra(name, field));
  const CommMonoid& ground = inst.algebra("ground");

  for (const auto& name : builtin_algebra_names()) {
    const CommMonoid& b = inst.algebra(name);
    inst.morphisms.emplace_back("id_" + name, identity_mor(b));
    if (name == "ground") continue;
    inst.morphisms.emplace_back("unit_" + name, MonoidMor{ground, b, b.unit});
    inst.morphisms.emplace_back("aug_" + name, augmentation_of(b, ground));
  }
  {
    // t |-> t, t^2 |-> 0
    const CommMonoid& t3 = inst.algebra("t_cubed");
    const CommMonoid& d = inst.algebra("dual_numbers");
    Mor m(field, t3.carrier, d.carrier);
    m.set(0, 0, 1);
    m.set(1, 1, 1);
    inst.morphisms.emplace_back("t3_to_dual", MonoidMor{t3, d, m});
    // 1 |-> e1+e2, s |-> e1-e2
    const CommMonoid& z2 = inst.algebra("z2_group_algebra");
    const CommMonoid& sp = inst.algebra("split_pair");
    Mor s(field, z2.carrier, sp.carrier);
    s.set(0, 0, 1);
    s.set(1, 0, 1);
    s.set(0, 1, 1);
    s.set(1, 1, Scalar(field, -1));
    inst.morphisms.emplace_back("z2_to_split", MonoidMor{z2, sp, s});
  }
  for (const auto& [name, f] : inst.morphisms)
    if (!is_monoid_mor(f)) throw Error("generated morphism fails the laws: " + name);

  for (const auto& name : builtin_algebra_names())
    inst.modules.emplace_back("reg_" + name, regular_module(inst.algebra(name)));
  {
    // one dimensional modules through the augmentations
    for (const auto& name : {"dual_numbers", "t_cubed", "split_pair"}) {
      const MonoidMor& aug = inst.morphism(std::string("aug_") + name);
      RightModule m = restrict_module(aug, regular_module(ground));
      inst.modules.emplace_back(std::string("aug_mod_") + name, m);
    }
  }
  const CommMonoid& d = inst.algebra("dual_numbers");
  for (int i = 0; i < 3; ++i) {
    int dim = 1 + rng.below(max_dim);
    inst.modules.emplace_back("rand_dual_" + std::to_string(i), sample_module(rng, d, dim));
  }
  inst.modules.emplace_back("rand_split_0",
                            sample_module(rng, inst.algebra("split_pair"), 1 + rng.below(max_dim)));
  inst.modules.emplace_back("rand_t3_0",
                            sample_module(rng, inst.algebra("t_cubed"), 1 + rng.below(max_dim)));
  if (profile == "medium")
    inst.modules.emplace_back("rand_z2_0", sample_module(rng, inst.algebra("z2_group_algebra"),
                                                         1 + rng.below(max_dim)));
  for (const auto& [name, m] : inst.modules)
    if (!check_module(m).all_pass()) throw Error("generated module fails the laws: " + name);

  inst.bimodules.emplace_back("reg_bimod_dual", opposite_left_action(regular_module(d)));
  inst.bimodules.emplace_back("aug_bimod_dual",
                              opposite_left_action(inst.module("aug_mod_dual_numbers")));
  inst.bimodules.emplace_back(
      "prod_dual_0", product_bimodule(sample_module(rng, d, 1 + rng.below(2)),
                                      sample_module(rng, d, 1 + rng.below(2))));
  inst.bimodules.emplace_back(
      "legs_unit_dual",
      bimodule_from_monoid_legs(inst.morphism("unit_dual_numbers"), identity_mor(d)));
  for (const auto& [name, m] : inst.bimodules)
    if (!check_bimodule(m).all_pass()) throw Error("generated bimodule fails the laws: " + name);

  return inst;
}

}  // namespace

// --- JSON --------------------------------------------------------------------

namespace {

ordered_json mor_entries(const Mor& m) {
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Mor mor_from_entries(const Field& f, Obj src, Obj dst, const ordered_json& rows,
                     const std::string& path) {
  if (!rows.is_array() || static_cast<int>(rows.size()) != dst.dim)
    throw ParseError(path + ": expected " + std::to_string(dst.dim) + " rows");
  Mor m(f, src, dst);
  for (int r = 0; r < dst.dim; ++r) {
    const auto& row = rows[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != src.dim)
      throw ParseError(path + ": row " + std::to_string(r) + " must have " +
                       std::to_string(src.dim) + " entries");
    for (int c = 0; c < src.dim; ++c)
      m.set(r, c, Scalar::parse(f, row[static_cast<size_t>(c)].get<std::string>()));
  }
  return m;
}

ordered_json algebra_json(const CommMonoid& b) {
  ordered_json j;
  j["dim"] = b.carrier.dim;
  ordered_json unit = ordered_json::array();
  for (int i = 0; i < b.carrier.dim; ++i) unit.push_back(b.unit.at(i, 0).str());
  j["unit"] = std::move(unit);
  j["product"] = mor_entries(b.product);
  return j;
}

CommMonoid algebra_from_json(const Field& f, const std::string& name, const ordered_json& j) {
  if (j.contains("builtin")) return builtin_algebra(j["builtin"].get<std::string>(), f);
  CommMonoid b;
  b.name = name;
  b.field = f;
  b.carrier = Obj{j.at("dim").get<int>()};
  b.unit = Mor(f, unit_obj(), b.carrier);
  const auto& unit = j.at("unit");
  if (!unit.is_array() || static_cast<int>(unit.size()) != b.carrier.dim)
    throw ParseError("algebras." + name + ".unit: wrong length");
  for (int i = 0; i < b.carrier.dim; ++i)
    b.unit.set(i, 0, Scalar::parse(f, unit[static_cast<size_t>(i)].get<std::string>()));
  b.product = mor_from_entries(f, tensor(b.carrier, b.carrier), b.carrier, j.at("product"),
                               "algebras." + name + ".product");
  LawReport rep = check_comm_monoid(b);
  if (!rep.all_pass())
    throw ParseError("algebras." + name + ": monoid laws fail (" + rep.checks.front().id + ")");
  return b;
}

std::string algebra_name(const Instance& inst, const CommMonoid& b) {
  for (const auto& [n, a] : inst.algebras)
    if (a == b) return n;
  throw ParseError("algebra not registered in instance");
}

}  // namespace

std::string instance_to_json(const Instance& inst) {
  ordered_json j;
  j["schema"] = "ew-kernel/instance@1";
  j["field"] = inst.field.name();
  j["seed"] = inst.seed;
  j["profile"] = inst.profile;
  ordered_json algebras;
  for (const auto& [name, b] : inst.algebras) algebras[name] = algebra_json(b);
  j["algebras"] = std::move(algebras);
  ordered_json morphisms;
  for (const auto& [name, f] : inst.morphisms) {
    ordered_json m;
    m["src"] = algebra_name(inst, f.src);
    m["dst"] = algebra_name(inst, f.dst);
    m["map"] = mor_entries(f.map);
    morphisms[name] = std::move(m);
  }
  j["morphisms"] = std::move(morphisms);
  ordered_json modules;
  for (const auto& [name, m] : inst.modules) {
    ordered_json e;
    e["algebra"] = algebra_name(inst, m.over);
    e["dim"] = m.carrier.dim;
    e["action"] = mor_entries(m.action);
    modules[name] = std::move(e);
  }
  j["modules"] = std::move(modules);
  ordered_json bimodules;
  for (const auto& [name, m] : inst.bimodules) {
    ordered_json e;
    e["left_algebra"] = algebra_name(inst, m.left_over);
    e["algebra"] = algebra_name(inst, m.right_over);
    e["dim"] = m.carrier.dim;
    e["left_action"] = mor_entries(m.left_action);
    e["action"] = mor_entries(m.right_action);
    bimodules[name] = std::move(e);
  }
  j["bimodules"] = std::move(bimodules);
  return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (j.value("schema", "") != "ew-kernel/instance@1")
    throw ParseError("schema: expected ew-kernel/instance@1");
  Instance inst;
  inst.field = Field::parse(j.at("field").get<std::string>());
  inst.seed = j.value("seed", 0ULL);
  inst.profile = j.value("profile", "small");
  for (const auto& [name, je] : j.at("algebras").items())
    inst.algebras.emplace_back(name, algebra_from_json(inst.field, name, je));
  if (j.contains("morphisms"))
    for (const auto& [name, je] : j.at("morphisms").items()) {
      const CommMonoid& src = inst.algebra(je.at("src").get<std::string>());
      const CommMonoid& dst = inst.algebra(je.at("dst").get<std::string>());
      MonoidMor f{src, dst,
                  mor_from_entries(inst.field, src.carrier, dst.carrier, je.at("map"),
                                   "morphisms." + name + ".map")};
      if (!is_monoid_mor(f)) throw ParseError("morphisms." + name + ": monoid morphism laws fail");
      inst.morphisms.emplace_back(name, f);
    }
  if (j.contains("modules"))
    for (const auto& [name, je] : j.at("modules").items()) {
      const CommMonoid& b = inst.algebra(je.at("algebra").get<std::string>());
      Obj x{je.at("dim").get<int>()};
      RightModule m{b, x,
                    mor_from_entries(inst.field, tensor(x, b.carrier), x, je.at("action"),
                                     "modules." + name + ".action")};
      if (!check_module(m).all_pass())
        throw ParseError("modules." + name + ": module laws fail");
      inst.modules.emplace_back(name, m);
    }
  if (j.contains("bimodules"))
    for (const auto& [name, je] : j.at("bimodules").items()) {
      const CommMonoid& bl = inst.algebra(je.at("left_algebra").get<std::string>());
      const CommMonoid& br = inst.algebra(je.at("algebra").get<std::string>());
      Obj x{je.at("dim").get<int>()};
      Bimodule m{bl, br, x,
                 mor_from_entries(inst.field, tensor(bl.carrier, x), x, je.at("left_action"),
                                  "bimodules." + name + ".left_action"),
                 mor_from_entries(inst.field, tensor(x, br.carrier), x, je.at("action"),
                                  "bimodules." + name + ".action")};
      if (!check_bimodule(m).all_pass())
        throw ParseError("bimodules." + name + ": bimodule laws fail");
      inst.bimodules.emplace_back(name, m);
    }
  return inst;
}

std::string obj_to_json(Obj x) {
  ordered_json j;
  j["dim"] = x.dim;
  return j.dump();
}

Obj obj_from_json(const std::string& text) {
  try {
    ordered_json j = ordered_json::parse(text);
    int dim = j.at("dim").get<int>();
    if (dim < 0) throw ParseError("dim: must be non-negative");
    return Obj{dim};
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid object JSON: ") + e.what());
  }
}

std::string mor_to_json(const Mor& m) {
  ordered_json j;
  j["src"] = m.src().dim;
  j["dst"] = m.dst().dim;
  j["entries"] = mor_entries(m);
  return j.dump();
}

Mor mor_from_json(const Field& f, const std::string& text) {
  try {
    ordered_json j = ordered_json::parse(text);
    Obj src{j.at("src").get<int>()};
    Obj dst{j.at("dst").get<int>()};
    return mor_from_entries(f, src, dst, j.at("entries"), "entries");
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid morphism JSON: ") + e.what());
  }
}

std::string report_to_json(const Report& r, bool include_timing) {
  ordered_json j;
  j["schema"] = "ew-kernel/report@1";
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["field"] = r.field;
  j["version"] = r.version;
  ordered_json checks = ordered_json::array();
  for (const auto& c : r.checks) {
    ordered_json e;
    e["id"] = c.id;
    if (c.expected_negative)
      e["status"] = c.pass ? "expected-negative-confirmed" : "expected-negative-violated";
    else
      e["status"] = c.pass ? "pass" : "fail";
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  if (include_timing) j["timing_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

}  // namespace ewk
