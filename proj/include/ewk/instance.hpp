#ifndef EWK_INSTANCE_HPP
#define EWK_INSTANCE_HPP

#include <string>
#include <utility>
#include <vector>

#include "ewk/module.hpp"
#include "ewk/rng.hpp"

namespace ewk {

// A named collection of algebras, monoid morphisms, modules and bimodules
// over one session field. Every value passes its law checks on load.
struct Instance {
  Field field;
  uint64_t seed = 0;
  std::string profile = "small";
  std::vector<std::pair<std::string, CommMonoid>> algebras;
  std::vector<std::pair<std::string, MonoidMor>> morphisms;
  std::vector<std::pair<std::string, RightModule>> modules;
  std::vector<std::pair<std::string, Bimodule>> bimodules;

  const CommMonoid& algebra(const std::string& name) const;
  const MonoidMor& morphism(const std::string& name) const;
  const RightModule& module(const std::string& name) const;
  const Bimodule& bimodule(const std::string& name) const;
  std::vector<RightModule> modules_over(const CommMonoid& b) const;
};

// Seeded sample of a lawful module over a builtin algebra: a conjugate of a
// canonical solution of the defining relation, rejected and retried until
// the conjugating matrix is invertible.
RightModule sample_module(Rng& rng, const CommMonoid& b, int dim);

// (l (x) r) with the left action on the first factor and the right action on
// the second; the two actions commute by construction.
Bimodule product_bimodule(const RightModule& l, const RightModule& r);

// Deterministic instance: all builtin algebras, a curated set of monoid
// morphisms, and seeded random modules/bimodules. profile "small" bounds
// module dims by 3, "medium" by 4.
Instance generate(uint64_t seed, const std::string& profile, const Field& field);

std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

// Standalone value serialization: {"dim": n} for objects and
// {"src": n, "dst": m, "entries": [["p/q", ...], ...]} for morphisms, with
// canonical fraction strings (decimal residues over a prime field).
// Round trips are bit-exact.
std::string obj_to_json(Obj x);
Obj obj_from_json(const std::string& text);
std::string mor_to_json(const Mor& m);
Mor mor_from_json(const Field& f, const std::string& text);

// --- reports -----------------------------------------------------------------

struct Report {
  std::string suite;
  uint64_t seed = 0;
  std::string field;
  std::string version;
  std::vector<LawCheck> checks;
  double elapsed_ms = 0.0;

  bool ok() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

std::string report_to_json(const Report& r, bool include_timing = true);

extern const char* const kArtifactVersion;

}  // namespace ewk

#endif  // EWK_INSTANCE_HPP
