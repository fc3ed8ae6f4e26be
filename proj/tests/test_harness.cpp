#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ewk/suites.hpp"

using namespace ewk;

namespace {
const Field Q = Field::rationals();
}

TEST_CASE("instance generation is deterministic") {
  Instance a = generate(0, "small", Q);
  Instance b = generate(0, "small", Q);
  CHECK(instance_to_json(a) == instance_to_json(b));
  Instance c = generate(1, "small", Q);
  CHECK(instance_to_json(a) != instance_to_json(c));
}

TEST_CASE("generated instances satisfy their law checks") {
  for (uint64_t seed : {0ULL, 7ULL}) {
    Instance inst = generate(seed, "small", Q);
    CHECK(!inst.algebras.empty());
    CHECK(!inst.morphisms.empty());
    for (const auto& [name, m] : inst.modules) {
      INFO(name);
      CHECK(check_module(m).all_pass());
      CHECK(m.carrier.dim <= 3);
    }
    for (const auto& [name, m] : inst.bimodules) CHECK(check_bimodule(m).all_pass());
  }
  Instance medium = generate(0, "medium", Q);
  for (const auto& [name, m] : medium.modules) CHECK(m.carrier.dim <= 4);
  for (const auto& [na, a] : medium.algebras)
    for (const auto& [nb, b] : medium.algebras)
      CHECK(coproduct(a, b).monoid.carrier.dim <= 16);
  CHECK_THROWS_AS(generate(0, "huge", Q), ParseError);
}

TEST_CASE("object and morphism JSON round trips are bit-exact") {
  CHECK(obj_from_json(obj_to_json(Obj{5})) == Obj{5});
  CHECK(obj_from_json(obj_to_json(Obj{0})) == Obj{0});
  Rng rng(6);
  Mor m = rng.matrix(Q, Obj{3}, Obj{2}, -9, 9);
  m.set(0, 0, Scalar(Q, mpq_class(-7, 3)));
  std::string text = mor_to_json(m);
  CHECK(text == mor_to_json(mor_from_json(Q, text)));
  CHECK(mor_from_json(Q, text) == m);
  // empty shapes survive
  Mor e = Mor::zero(Q, Obj{0}, Obj{2});
  CHECK(mor_from_json(Q, mor_to_json(e)) == e);
  CHECK_THROWS_AS(mor_from_json(Q, "{\"src\":1}"), ParseError);
  // prime field residues as decimal strings
  Field f5 = Field::prime(5);
  Mor p = rng.matrix(f5, Obj{2}, Obj{2}, 0, 4);
  CHECK(mor_from_json(f5, mor_to_json(p)) == p);
}

TEST_CASE("instance JSON round trip is exact") {
  Instance inst = generate(3, "small", Q);
  std::string text = instance_to_json(inst);
  Instance back = instance_from_json(text);
  CHECK(instance_to_json(back) == text);
  CHECK(back.algebra("dual_numbers") == inst.algebra("dual_numbers"));
  CHECK(back.module("rand_dual_0") == inst.module("rand_dual_0"));
  CHECK(back.bimodule("prod_dual_0") == inst.bimodule("prod_dual_0"));
}

TEST_CASE("prime field instances") {
  Field f5 = Field::prime(5);
  Instance inst = generate(2, "small", f5);
  std::string text = instance_to_json(inst);
  Instance back = instance_from_json(text);
  CHECK(instance_to_json(back) == text);
  // scalars reduced mod 5 on load
  CHECK(text.find("fp:5") != std::string::npos);
  for (const auto& suite : {"module-laws", "tensor-coherence", "ew", "main-thm"}) {
    Report rep = run_suite(suite, inst);
    INFO(suite);
    CHECK(rep.ok());
  }
}

TEST_CASE("malformed inputs are rejected with a path") {
  Instance inst = generate(0, "small", Q);
  std::string text = instance_to_json(inst);

  SUBCASE("bad schema") {
    CHECK_THROWS_AS(instance_from_json("{\"schema\":\"nope\"}"), ParseError);
  }
  SUBCASE("zero denominator") {
    std::string bad = text;
    bad.replace(bad.find("\"1\""), 3, "\"1/0\"");
    CHECK_THROWS_WITH_AS(instance_from_json(bad), doctest::Contains("1/0"), ParseError);
  }
  SUBCASE("unlawful module rejected with its name") {
    std::string bad = text;
    // break the regular dual_numbers module action
    size_t pos = bad.find("\"reg_dual_numbers\"");
    REQUIRE(pos != std::string::npos);
    size_t a = bad.find("\"action\"", pos);
    size_t one = bad.find("\"1\"", a);
    bad.replace(one, 3, "\"7\"");
    try {
      instance_from_json(bad);
      CHECK(false);
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("reg_dual_numbers") != std::string::npos);
    }
  }
  SUBCASE("non-integer scalar in a prime field") {
    Instance i5 = generate(0, "small", Field::prime(5));
    std::string t5 = instance_to_json(i5);
    size_t pos = t5.find("\"1\"");
    std::string bad = t5;
    bad.replace(pos, 3, "\"1/2\"");
    CHECK_THROWS_AS(instance_from_json(bad), ParseError);
  }
}

TEST_CASE("reports are reproducible modulo timing") {
  Instance inst = generate(0, "small", Q);
  Report r1 = run_suite("ew", inst);
  Report r2 = run_suite("ew", inst);
  CHECK(report_to_json(r1, false) == report_to_json(r2, false));
  CHECK(r1.ok());
}

TEST_CASE("expected negatives are first class in the ew suite") {
  Instance inst = generate(0, "small", Q);
  Report rep = run_suite("ew", inst);
  bool found = false;
  for (const auto& c : rep.checks)
    if (c.expected_negative) {
      found = true;
      CHECK(c.pass);
    }
  CHECK(found);
  CHECK(report_to_json(rep).find("expected-negative-confirmed") != std::string::npos);
}

TEST_CASE("every named suite runs green on seed 0") {
  Instance inst = generate(0, "small", Q);
  for (const auto& name : suite_names()) {
    if (name == "all") continue;  // covered by the acceptance suite
    Report rep = run_suite(name, inst);
    INFO(name);
    CHECK(rep.ok());
    CHECK(!rep.checks.empty());
  }
  CHECK_THROWS_AS(run_suite("bogus", inst), ParseError);
}

TEST_CASE("sampled module morphisms are equivariant") {
  Instance inst = generate(0, "small", Q);
  Rng rng(4);
  const RightModule& x = inst.module("rand_dual_0");
  const RightModule& y = inst.module("reg_dual_numbers");
  ModuleMor h = sample_module_mor(rng, x, y);
  CHECK(is_module_mor(h));
}

TEST_CASE("functor expression parsing") {
  Instance inst = generate(0, "small", Q);
  const CommMonoid& d = inst.algebra("dual_numbers");

  FunctorExpr t = parse_functor_expr("tensor(reg_bimod_dual)", inst);
  CHECK(t.kind() == FunctorExpr::Kind::TensorBimodule);
  CHECK(t.src_base() == d);

  FunctorExpr c = parse_functor_expr(" tensor(legs_unit_dual) ; restrict(id_dual_numbers) ", inst);
  CHECK(c.kind() == FunctorExpr::Kind::Compose);
  CHECK(c.src_base() == inst.algebra("ground"));
  CHECK(c.dst_base() == d);

  FunctorExpr h = parse_functor_expr("hom(aug_bimod_dual)", inst);
  CHECK(!h.structurally_cocontinuous());
  FunctorExpr i = parse_functor_expr("id(dual_numbers)", inst);
  CHECK(i.apply_obj(inst.module("reg_dual_numbers")) == inst.module("reg_dual_numbers"));

  CHECK_THROWS_AS(parse_functor_expr("", inst), ParseError);
  CHECK_THROWS_AS(parse_functor_expr("spin(reg_bimod_dual)", inst), ParseError);
  CHECK_THROWS_AS(parse_functor_expr("tensor(nope)", inst), ParseError);
  CHECK_THROWS_AS(parse_functor_expr("tensor(reg_bimod_dual) restrict(id_dual_numbers)", inst),
                  ParseError);
  // base mismatch between stages is caught by the composition check
  CHECK_THROWS_AS(parse_functor_expr("tensor(reg_bimod_dual) ; tensor(legs_unit_dual)", inst),
                  DimMismatch);
}
