#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ewk/main_thm.hpp"
#include "ewk/rng.hpp"
#include "helpers.hpp"

using namespace ewk;
using namespace ewk::testing;

namespace {

const Field Q = Field::rationals();

MonoidMor aug_mor(const CommMonoid& d, const CommMonoid& k) {
  Mor a(Q, d.carrier, k.carrier);
  a.set(0, 0, 1);
  return MonoidMor{d, k, a};
}

}  // namespace

TEST_CASE("comm_to_functor") {
  CommMonoid k = builtin_algebra("ground", Q);
  CommMonoid d = builtin_algebra("dual_numbers", Q);

  SUBCASE("trivial pair gives the identity-like functor with trivial coherences") {
    CommOverPair p{k, k, k, identity_mor(k), identity_mor(k)};
    LaxFunctor F = comm_to_functor(p);
    RightModule x{k, Obj{2}, Mor::identity(Q, Obj{2})};
    CHECK(F.expr.apply_obj(x).carrier.dim == 2);
    CHECK(is_module_mor(F.lax.unit));
    CHECK(check_lax_axioms(F, x, x, x).all_pass());
  }
  SUBCASE("extension of scalars: b = k, b' = btilde = D with legs (unit, id)") {
    CommOverPair p{k, d, d, MonoidMor{k, d, d.unit}, identity_mor(d)};
    LaxFunctor F = comm_to_functor(p);
    RightModule x{k, Obj{1}, Mor::identity(Q, Obj{1})};
    RightModule y{k, Obj{2}, Mor::identity(Q, Obj{2})};
    CHECK(F.expr.apply_obj(x).carrier.dim == 2);  // x (x) D
    CHECK(is_module_mor(F.lax.unit));
    ModuleMor coh = F.lax.binary(x, y);
    CHECK(is_module_mor(coh));
    CHECK(is_invertible(coh.map));  // cocontinuous case: strong coherences
    CHECK(check_lax_axioms(F, x, y, x).all_pass());
    CHECK(check_binary_naturality(F, Obj{2}, x, y).all_pass());
  }
  SUBCASE("identity legs over D: coherences reduce to the M_D structure maps") {
    CommOverPair p{d, d, d, identity_mor(d), identity_mor(d)};
    LaxFunctor F = comm_to_functor(p);
    RightModule dd = regular_module(d);
    RightModule kd = augmentation_module(d);
    CHECK(check_lax_axioms(F, dd, kd, dd).all_pass());
    CHECK(lambda(F.expr, kd).invertible);
    CHECK(check_binary_naturality(F, Obj{2}, dd, kd).all_pass());
  }
}

TEST_CASE("functor_to_comm and extraction identities") {
  CommMonoid k = builtin_algebra("ground", Q);
  CommMonoid d = builtin_algebra("dual_numbers", Q);

  SUBCASE("identity-legs pair recovers a monoid isomorphic to D") {
    CommOverPair p{d, d, d, identity_mor(d), identity_mor(d)};
    LaxFunctor F = comm_to_functor(p);
    ExtractedMonoid e = functor_to_comm(F);
    CHECK(check_comm_monoid(e.monoid).all_pass());
    CHECK(e.monoid.carrier.dim == 2);
    CHECK(check_extraction_identities(F).all_pass());
  }
  SUBCASE("augmentation legs collapse to the ground field") {
    CommOverPair p{d, k, k, aug_mor(d, k), identity_mor(k)};
    LaxFunctor F = comm_to_functor(p);
    ExtractedMonoid e = functor_to_comm(F);
    CHECK(e.monoid.carrier.dim == 1);
    CHECK(check_extraction_identities(F).all_pass());
  }
  SUBCASE("pushforward along unit map as a lax functor") {
    // f_* for f: k -> D is lax tensor; its extraction gives D over k (x) D
    SixFunctorPack six = build_pack(MonoidMor{k, d, d.unit});
    LaxFunctor F = pushforward_lax(six);
    CHECK(check_extraction_identities(F).all_pass());
  }
}

TEST_CASE("lambda as a tensor natural transformation") {
  CommMonoid k = builtin_algebra("ground", Q);
  CommMonoid d = builtin_algebra("dual_numbers", Q);
  RightModule dd = regular_module(d);
  RightModule kd = augmentation_module(d);

  SUBCASE("cocontinuous functor from a pair: all squares exact, lambda invertible") {
    CommOverPair p{d, d, coproduct(d, d).monoid, coproduct(d, d).p, coproduct(d, d).pp};
    LaxFunctor F = comm_to_functor(p);
    LawReport rep = lambda_tensor_check(F, {{dd, dd}, {dd, kd}, {kd, kd}});
    CHECK(rep.all_pass());
    CHECK(lambda(F.expr, kd).invertible);
  }
  SUBCASE("samples at (b_b, b_b) reduce to monoid associativity") {
    CommOverPair p{d, d, d, identity_mor(d), identity_mor(d)};
    LaxFunctor F = comm_to_functor(p);
    CHECK(lambda_tensor_check(F, {{dd, dd}}).all_pass());
  }
  SUBCASE("a genuinely lax (non strong) functor: pushforward") {
    SixFunctorPack six = build_pack(MonoidMor{k, d, d.unit});
    LaxFunctor F = pushforward_lax(six);
    RightModule y1 = regular_module(d);
    CHECK(lambda_tensor_check(F, {{y1, y1}, {y1, kd}}).all_pass());
  }
}

TEST_CASE("main theorem round trips") {
  CommMonoid k = builtin_algebra("ground", Q);
  CommMonoid d = builtin_algebra("dual_numbers", Q);
  CommMonoid sp = builtin_algebra("split_pair", Q);

  SUBCASE("free pair: btilde = b (x) b' itself") {
    Coproduct c = coproduct(d, sp);
    CommOverPair p{d, sp, c.monoid, c.p, c.pp};
    CHECK(roundtrip_main(p).all_pass());
  }
  SUBCASE("identity pair over D") {
    CommOverPair p{d, d, d, identity_mor(d), identity_mor(d)};
    CHECK(roundtrip_main(p).all_pass());
  }
  SUBCASE("unit and augmentation mixed pairs") {
    CommOverPair p1{k, d, d, MonoidMor{k, d, d.unit}, identity_mor(d)};
    CHECK(roundtrip_main(p1).all_pass());
    CommOverPair p2{d, k, k, aug_mor(d, k), identity_mor(k)};
    CHECK(roundtrip_main(p2).all_pass());
  }
  SUBCASE("counit round trip on a cocontinuous functor") {
    CommOverPair p{d, d, d, identity_mor(d), identity_mor(d)};
    LaxFunctor F = comm_to_functor(p);
    RightModule dd = regular_module(d);
    RightModule kd = augmentation_module(d);
    CHECK(roundtrip_functor(F, {dd, kd}, {{dd, kd}}).all_pass());
  }
}

TEST_CASE("corollary: morphisms and cocontinuous tensor functors") {
  CommMonoid k = builtin_algebra("ground", Q);
  CommMonoid d = builtin_algebra("dual_numbers", Q);
  RightModule dd = regular_module(d);
  RightModule kd = augmentation_module(d);
  RightModule kk{k, Obj{1}, Mor::identity(Q, Obj{1})};

  SUBCASE("identity morphism") {
    CHECK(corollary_strong(identity_mor(d), {{dd, kd}}).all_pass());
  }
  SUBCASE("unit map k -> D") {
    CHECK(corollary_strong(MonoidMor{k, d, d.unit}, {{kk, kk}}).all_pass());
  }
  SUBCASE("augmentation D -> k") {
    CHECK(corollary_strong(aug_mor(d, k), {{dd, kd}}).all_pass());
  }
  SUBCASE("distinct morphisms are distinguishable") {
    // two distinct augmentations split_pair -> ground
    CommMonoid sp = builtin_algebra("split_pair", Q);
    Mor a1(Q, sp.carrier, k.carrier);
    a1.set(0, 0, 1);
    Mor a2(Q, sp.carrier, k.carrier);
    a2.set(0, 1, 1);
    MonoidMor m1{sp, k, a1}, m2{sp, k, a2};
    REQUIRE(is_monoid_mor(m1));
    REQUIRE(is_monoid_mor(m2));
    CHECK(functors_distinguishable(m1, m2));
    CHECK(!functors_distinguishable(m1, m1));
  }
}
