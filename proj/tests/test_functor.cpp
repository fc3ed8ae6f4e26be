#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ewk/functor.hpp"
#include "ewk/rng.hpp"
#include "helpers.hpp"

using namespace ewk;
using namespace ewk::testing;

namespace {

const Field Q = Field::rationals();

Bimodule aug_bimodule(const CommMonoid& d) { return opposite_left_action(augmentation_module(d)); }

ModuleMor augmentation_mor(const CommMonoid& d) {
  Mor aug(Q, d.carrier, Obj{1});
  aug.set(0, 0, 1);
  return ModuleMor{regular_module(d), augmentation_module(d), aug};
}

}  // namespace

TEST_CASE("functor application") {
  CommMonoid d = builtin_algebra("dual_numbers", Q);
  CommMonoid k = builtin_algebra("ground", Q);
  RightModule dd = regular_module(d);
  RightModule kd = augmentation_module(d);

  SUBCASE("identity functor") {
    FunctorExpr id = FunctorExpr::identity(d);
    CHECK(id.apply_obj(dd) == dd);
    ModuleMor h = augmentation_mor(d);
    CHECK(id.apply_mor(h) == h);
  }
  SUBCASE("tensoring with the regular bimodule is naturally the identity") {
    FunctorExpr F = FunctorExpr::tensor_bimodule(opposite_left_action(dd));
    LambdaResult l = lambda(F, kd);
    CHECK(l.invertible);
    CHECK(F.apply_obj(kd).carrier.dim == 1);
  }
  SUBCASE("hom functor sends the augmentation to the zero map of 1-dim spaces") {
    FunctorExpr F = FunctorExpr::hom_module(aug_bimodule(d));
    ModuleMor h = augmentation_mor(d);
    ModuleMor Fh = F.apply_mor(h);
    CHECK(Fh.src.carrier.dim == 1);
    CHECK(Fh.dst.carrier.dim == 1);
    CHECK(Fh.map.is_zero());
  }
  SUBCASE("functoriality: composition and identity preserved") {
    FunctorExpr F = FunctorExpr::tensor_bimodule(aug_bimodule(d));
    CHECK(F.apply_mor(identity_mor(dd)).map.is_identity());
    ModuleMor h = augmentation_mor(d);
    // dd -> kd -> kd: compose with the identity on kd through the functor
    CHECK(F.apply_mor(compose(identity_mor(kd), h)).map == F.apply_mor(h).map);
  }
  SUBCASE("restriction leaf") {
    MonoidMor unit_leg{k, d, d.unit};
    FunctorExpr F = FunctorExpr::restrict_along(unit_leg);
    RightModule r = F.apply_obj(dd);
    CHECK(r.over == k);
    CHECK(r.carrier.dim == 2);
  }
  SUBCASE("base mismatch rejected") {
    FunctorExpr F = FunctorExpr::identity(k);
    CHECK_THROWS_AS(F.apply_obj(dd), DimMismatch);
    CHECK_THROWS_AS(
        FunctorExpr::compose_with(FunctorExpr::identity(k), FunctorExpr::identity(d)),
        DimMismatch);
  }
}

TEST_CASE("strengths per node") {
  CommMonoid d = builtin_algebra("dual_numbers", Q);
  CommMonoid k = builtin_algebra("ground", Q);
  RightModule dd = regular_module(d);
  RightModule kd = augmentation_module(d);
  Obj w{2}, v{2};

  SUBCASE("unit component is the identity for every node kind") {
    std::vector<FunctorExpr> funcs = {
        FunctorExpr::identity(d), FunctorExpr::tensor_bimodule(aug_bimodule(d)),
        FunctorExpr::hom_module(aug_bimodule(d)),
        FunctorExpr::compose_with(FunctorExpr::tensor_bimodule(aug_bimodule(d)),
                                  FunctorExpr::tensor_bimodule(aug_bimodule(d)))};
    for (const auto& F : funcs) {
      CHECK(check_strength_laws(F, w, v, dd).all_pass());
      CHECK(check_strength_laws(F, w, v, kd).all_pass());
    }
  }
  SUBCASE("tensor leaf strength is invertible") {
    FunctorExpr F = FunctorExpr::tensor_bimodule(aug_bimodule(d));
    CHECK(is_invertible(F.strength(w, dd).map));
  }
  SUBCASE("restriction strength is the identity matrix") {
    MonoidMor unit_leg{k, d, d.unit};
    FunctorExpr F = FunctorExpr::restrict_along(unit_leg);
    CHECK(F.strength(w, dd).map.is_identity());
    CHECK(check_strength_laws(F, w, v, dd).all_pass());
  }
  SUBCASE("hom leaf strength is a module morphism") {
    FunctorExpr F = FunctorExpr::hom_module(aug_bimodule(d));
    ModuleMor t = F.strength(w, dd);
    CHECK(is_module_mor(t));
  }
}

TEST_CASE("canonical left modules") {
  CommMonoid d = builtin_algebra("dual_numbers", Q);
  CommMonoid k = builtin_algebra("ground", Q);

  SUBCASE("tensor functor: canonical module is b (+) X, a lawful bimodule") {
    Bimodule X = aug_bimodule(d);
    Bimodule can = canonical_left_module(FunctorExpr::tensor_bimodule(X));
    CHECK(check_bimodule(can).all_pass());
    CHECK(can.carrier.dim == 1);
  }
  SUBCASE("composite f'_* f^* has canonical module btilde with both leg actions") {
    // f: k -> D (unit), f': D -> D (identity): F = f'_* f^*: M_k -> M_D
    MonoidMor f{k, d, d.unit};
    MonoidMor fp = identity_mor(d);
    Bimodule legs = bimodule_from_monoid_legs(f, fp);
    FunctorExpr F = FunctorExpr::compose_with(
        FunctorExpr::restrict_along(fp),
        FunctorExpr::tensor_bimodule(bimodule_from_monoid_legs(f, identity_mor(d))));
    Bimodule can = canonical_left_module(F);
    CHECK(check_bimodule(can).all_pass());
    CHECK(can.carrier.dim == legs.carrier.dim);
    // over the ground field the presentation is trivial, so equality is exact
    CHECK(can.left_action == legs.left_action);
    CHECK(can.right_action == legs.right_action);
  }
  SUBCASE("hom functor: canonical module is the socle with both actions killing t") {
    FunctorExpr F = FunctorExpr::hom_module(aug_bimodule(d));
    Bimodule can = canonical_left_module(F);
    CHECK(can.carrier.dim == 1);
    CHECK(can.left_action.at(0, 1).is_zero());
    CHECK(can.right_action.at(0, 1).is_zero());
    CHECK(check_bimodule(can).all_pass());
  }
}

TEST_CASE("lambda components") {
  CommMonoid d = builtin_algebra("dual_numbers", Q);
  RightModule dd = regular_module(d);
  RightModule kd = augmentation_module(d);

  SUBCASE("at b_b the component is the unit iso") {
    FunctorExpr F = FunctorExpr::tensor_bimodule(aug_bimodule(d));
    LambdaResult l = lambda(F, dd);
    CHECK(l.invertible);
    CHECK(l.component.map == unit_iso(l.canonical).iso.map);
  }
  SUBCASE("tensor functors have invertible lambda everywhere sampled") {
    FunctorExpr F = FunctorExpr::tensor_bimodule(opposite_left_action(dd));
    for (const auto& z : {dd, kd, tensored(Obj{2}, kd)}) CHECK(lambda(F, z).invertible);
  }
  SUBCASE("the dichotomy witness: lambda of Hom_D(k,-) at k is the zero map of 1-dim spaces") {
    FunctorExpr F = FunctorExpr::hom_module(aug_bimodule(d));
    LambdaResult l = lambda(F, kd);
    CHECK(l.component.src.carrier.dim == 1);
    CHECK(l.component.dst.carrier.dim == 1);
    CHECK(l.component.map.is_zero());
    CHECK(!l.invertible);
  }
  SUBCASE("naturality squares") {
    FunctorExpr F = FunctorExpr::tensor_bimodule(aug_bimodule(d));
    CHECK(check_lambda_naturality(F, Obj{2}, dd).all_pass());
    CHECK(check_lambda_naturality(F, Obj{3}, kd).all_pass());
    FunctorExpr H = FunctorExpr::hom_module(aug_bimodule(d));
    CHECK(check_lambda_naturality(H, Obj{2}, dd).all_pass());
    CHECK(check_lambda_naturality(H, Obj{2}, kd).all_pass());
  }
  SUBCASE("naturality in the functor variable") {
    // bimodule map X -> Y: the augmentation D -> k between regular and socle
    Bimodule X = opposite_left_action(dd);
    Bimodule Y = aug_bimodule(d);
    Mor h = augmentation_mor(d).map;
    CHECK(check_lambda_natural_in_functor(X, Y, h, dd).all_pass());
    CHECK(check_lambda_natural_in_functor(X, Y, h, kd).all_pass());
  }
}

TEST_CASE("cocontinuity probe") {
  CommMonoid d = builtin_algebra("dual_numbers", Q);
  CommMonoid k = builtin_algebra("ground", Q);
  RightModule dd = regular_module(d);
  RightModule kd = augmentation_module(d);
  std::vector<RightModule> samples = {dd, kd, tensored(Obj{2}, dd)};

  SUBCASE("tensor leaf: iso on all samples, structurally cocontinuous") {
    ProbeResult r = cocontinuity_probe(FunctorExpr::tensor_bimodule(aug_bimodule(d)), samples);
    CHECK(r.iso_on_all_samples);
    CHECK(r.structurally_cocontinuous);
  }
  SUBCASE("restriction after tensor: iso on all samples") {
    MonoidMor unit_leg{k, d, d.unit};
    FunctorExpr F = FunctorExpr::compose_with(
        FunctorExpr::restrict_along(unit_leg),
        FunctorExpr::tensor_bimodule(opposite_left_action(dd)));
    ProbeResult r = cocontinuity_probe(F, samples);
    CHECK(r.iso_on_all_samples);
    CHECK(r.structurally_cocontinuous);
  }
  SUBCASE("hom leaf: certified non-cocontinuity witness at k") {
    ProbeResult r = cocontinuity_probe(FunctorExpr::hom_module(aug_bimodule(d)), {kd});
    CHECK(!r.iso_on_all_samples);
    CHECK(!r.structurally_cocontinuous);
    CHECK(r.entries[0].src_dim == 1);
    CHECK(r.entries[0].dst_dim == 1);
  }
}

TEST_CASE("eilenberg-watts round trips") {
  CommMonoid d = builtin_algebra("dual_numbers", Q);
  CommMonoid k = builtin_algebra("ground", Q);
  RightModule dd = regular_module(d);
  RightModule kd = augmentation_module(d);
  std::vector<RightModule> samples = {dd, kd};

  SUBCASE("regular bimodule") {
    CHECK(ew_roundtrip(opposite_left_action(dd), samples).all_pass());
  }
  SUBCASE("D as a (k,D)-bimodule") {
    MonoidMor unit_leg{k, d, d.unit};
    Bimodule X = bimodule_from_monoid_legs(unit_leg, identity_mor(d));
    RightModule kk{k, Obj{1}, Mor::identity(Q, Obj{1})};
    CHECK(ew_roundtrip(X, {kk, tensored(Obj{3}, kk)}).all_pass());
  }
  SUBCASE("seeded random bimodules over (D,D)") {
    Rng rng(61);
    for (int i = 0; i < 3; ++i) {
      // product bimodule: left from a on the left factor, right from b
      Mor t1(Q, Obj{2}, Obj{2});
      t1.set(0, 1, rng.below(3));
      Mor t2(Q, Obj{2}, Obj{2});
      t2.set(0, 1, rng.below(3));
      // build module actions from square-zero generators t1, t2
      auto mod = [&](const Mor& t) {
        Obj x{2};
        Mor act(Q, tensor(x, d.carrier), x);
        for (int r = 0; r < 2; ++r) {
          act.set(r, r * 2 + 0, 1);
          for (int c = 0; c < 2; ++c)
            if (!t.at(r, c).is_zero()) act.set(r, c * 2 + 1, t.at(r, c));
        }
        return RightModule{d, x, act};
      };
      RightModule a = mod(t1), b = mod(t2);
      REQUIRE(check_module(a).all_pass());
      REQUIRE(check_module(b).all_pass());
      // (D,D)-bimodule on a (x) b
      Bimodule X{d, d, tensor(a.carrier, b.carrier),
                 compose(tensor(a.action, Mor::identity(Q, b.carrier)),
                         tensor(braiding(Q, d.carrier, a.carrier), Mor::identity(Q, b.carrier))),
                 tensor(Mor::identity(Q, a.carrier), b.action)};
      REQUIRE(check_bimodule(X).all_pass());
      CHECK(ew_roundtrip(X, samples).all_pass());
    }
  }
}

TEST_CASE("generic adjunction triangles for tensor -| hom") {
  CommMonoid d = builtin_algebra("dual_numbers", Q);
  RightModule dd = regular_module(d);
  RightModule kd = augmentation_module(d);
  CHECK(check_tensor_hom_triangles(dd, aug_bimodule(d), kd).all_pass());
  CHECK(check_tensor_hom_triangles(kd, opposite_left_action(dd), dd).all_pass());
}
