#include "ewk/functor.hpp"

namespace ewk {

struct FunctorExpr::Node {
  Kind kind;
  CommMonoid src, dst;
  Bimodule bimodule;    // TensorBimodule / HomModule
  MonoidMor restrict_f;  // Restrict
  std::shared_ptr<const Node> outer, inner;
};

FunctorExpr FunctorExpr::identity(const CommMonoid& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Identity;
  n->src = b;
  n->dst = b;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::tensor_bimodule(const Bimodule& X) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::TensorBimodule;
  n->src = X.left_over;
  n->dst = X.right_over;
  n->bimodule = X;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::restrict_along(const MonoidMor& f) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Restrict;
  n->src = f.dst;
  n->dst = f.src;
  n->restrict_f = f;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::hom_module(const Bimodule& X) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::HomModule;
  n->src = X.right_over;
  n->dst = X.left_over;
  n->bimodule = X;
  return FunctorExpr(n);
}

FunctorExpr FunctorExpr::compose_with(const FunctorExpr& outer, const FunctorExpr& inner) {
  if (inner.dst_base() != outer.src_base())
    throw DimMismatch("functor composition: inner target base != outer source base");
  auto n = std::make_shared<Node>();
  n->kind = Kind::Compose;
  n->src = inner.src_base();
  n->dst = outer.dst_base();
  n->outer = outer.node_;
  n->inner = inner.node_;
  return FunctorExpr(n);
}

FunctorExpr::Kind FunctorExpr::kind() const { return node_->kind; }
const CommMonoid& FunctorExpr::src_base() const { return node_->src; }
const CommMonoid& FunctorExpr::dst_base() const { return node_->dst; }
const Bimodule& FunctorExpr::leaf_bimodule() const { return node_->bimodule; }
const MonoidMor& FunctorExpr::leaf_restrict() const { return node_->restrict_f; }
FunctorExpr FunctorExpr::outer() const { return FunctorExpr(node_->outer); }
FunctorExpr FunctorExpr::inner() const { return FunctorExpr(node_->inner); }

RightModule FunctorExpr::apply_obj(const RightModule& z) const {
  if (z.over != src_base())
    throw DimMismatch("apply_obj: module base does not match the functor source");
  switch (node_->kind) {
    case Kind::Identity:
      return z;
    case Kind::TensorBimodule:
      return tensor_over(z, node_->bimodule).result;
    case Kind::Restrict:
      return restrict_module(node_->restrict_f, z);
    case Kind::HomModule:
      return hom_functor_obj(node_->bimodule, z).module;
    case Kind::Compose:
      return outer().apply_obj(inner().apply_obj(z));
  }
  throw Error("unreachable");
}

ModuleMor FunctorExpr::apply_mor(const ModuleMor& h) const {
  switch (node_->kind) {
    case Kind::Identity:
      return h;
    case Kind::TensorBimodule:
      return tensor_over_mor(h, node_->bimodule);
    case Kind::Restrict: {
      RightModule s = restrict_module(node_->restrict_f, h.src);
      RightModule d = restrict_module(node_->restrict_f, h.dst);
      return ModuleMor{s, d, h.map};
    }
    case Kind::HomModule: {
      const Bimodule& X = node_->bimodule;
      InternalHom hs = hom_functor_obj(X, h.src);
      InternalHom hd = hom_functor_obj(X, h.dst);
      Mor ambient = compose(hom_postcompose(h.map, X.carrier), hs.pres.incl);
      Mor map = induce_through_equalizer(hd.pres, ambient);
      return ModuleMor{hs.module, hd.module, map};
    }
    case Kind::Compose:
      return outer().apply_mor(inner().apply_mor(h));
  }
  throw Error("unreachable");
}

ModuleMor FunctorExpr::strength(Obj w, const RightModule& z) const {
  const Field& f = z.over.field;
  switch (node_->kind) {
    case Kind::Identity: {
      RightModule wz = tensored(w, z);
      return ModuleMor{wz, wz, Mor::identity(f, wz.carrier)};
    }
    case Kind::TensorBimodule:
      return strength_assoc(w, z, node_->bimodule);
    case Kind::Restrict: {
      // restriction of scalars does not change carriers, so the strength
      // is the identity matrix
      RightModule s = tensored(w, apply_obj(z));
      RightModule d = apply_obj(tensored(w, z));
      return ModuleMor{s, d, Mor::identity(f, s.carrier)};
    }
    case Kind::HomModule: {
      const Bimodule& X = node_->bimodule;
      InternalHom hz = hom_functor_obj(X, z);
      InternalHom hwz = hom_functor_obj(X, tensored(w, z));
      Mor ambient = compose(hom_left_tensor(f, w, X.carrier, z.carrier),
                            tensor(Mor::identity(f, w), hz.pres.incl));
      Mor map = induce_through_equalizer(hwz.pres, ambient);
      return ModuleMor{tensored(w, hz.module), hwz.module, map};
    }
    case Kind::Compose: {
      ModuleMor t_inner = inner().strength(w, z);
      ModuleMor t_outer = outer().strength(w, inner().apply_obj(z));
      return compose(outer().apply_mor(t_inner), t_outer);
    }
  }
  throw Error("unreachable");
}

bool FunctorExpr::structurally_cocontinuous() const {
  switch (node_->kind) {
    case Kind::Identity:
    case Kind::TensorBimodule:
    case Kind::Restrict:  // f_* here is also a left adjoint via f_! = f_*
      return true;
    case Kind::HomModule:
      return false;
    case Kind::Compose:
      return outer().structurally_cocontinuous() && inner().structurally_cocontinuous();
  }
  return false;
}

namespace {

// gamma_{z_b} as a module morphism z (x) b_b -> z_b.
ModuleMor action_as_mor(const RightModule& z) {
  return ModuleMor{tensored(z.carrier, regular_module(z.over)), z, z.action};
}

}  // namespace

Bimodule canonical_left_module(const FunctorExpr& F) {
  const CommMonoid& b = F.src_base();
  RightModule bb = regular_module(b);
  RightModule Fb = F.apply_obj(bb);
  ModuleMor t = F.strength(b.carrier, bb);
  Mor rho = compose(F.apply_mor(action_as_mor(bb)).map, t.map);
  return Bimodule{b, F.dst_base(), Fb.carrier, rho, Fb.action};
}

LambdaResult lambda(const FunctorExpr& F, const RightModule& z) {
  LambdaResult r;
  r.canonical = canonical_left_module(F);
  r.ten = tensor_over(z, r.canonical);
  RightModule bb = regular_module(z.over);
  Mor rhs = compose(F.apply_mor(action_as_mor(z)).map, F.strength(z.carrier, bb).map);
  Mor map = induce_through_coequalizer(r.ten.pres, rhs);
  r.component = ModuleMor{r.ten.result, F.apply_obj(z), map};
  r.invertible = is_invertible(map);
  return r;
}

ProbeResult cocontinuity_probe(const FunctorExpr& F, const std::vector<RightModule>& samples) {
  ProbeResult r;
  r.structurally_cocontinuous = F.structurally_cocontinuous();
  int i = 0;
  for (const auto& z : samples) {
    LambdaResult l = lambda(F, z);
    r.entries.push_back(
        {i++, l.invertible, l.component.src.carrier.dim, l.component.dst.carrier.dim});
    if (!l.invertible) r.iso_on_all_samples = false;
  }
  return r;
}

LawReport check_strength_laws(const FunctorExpr& F, Obj w, Obj v, const RightModule& z) {
  LawReport rep;
  const Field& f = z.over.field;
  rep.add("strength.unit", F.strength(unit_obj(), z).map.is_identity());
  ModuleMor t_v = F.strength(v, z);
  ModuleMor t_w = F.strength(w, tensored(v, z));
  ModuleMor t_joint = F.strength(tensor(w, v), z);
  rep.add_equal("strength.compose", t_joint.map,
                compose(t_w.map, tensor(Mor::identity(f, w), t_v.map)));
  return rep;
}

LawReport check_lambda_naturality(const FunctorExpr& F, Obj w, const RightModule& z) {
  LawReport rep;
  const Field& f = z.over.field;
  LambdaResult lz = lambda(F, z);
  LambdaResult lwz = lambda(F, tensored(w, z));
  ModuleMor a = strength_assoc(f, w, lz.ten, lwz.ten);
  Mor lhs = compose(lwz.component.map, a.map);
  Mor rhs = compose(F.strength(w, z).map, tensor(Mor::identity(f, w), lz.component.map));
  rep.add_equal("lambda.naturality", lhs, rhs);
  return rep;
}

LawReport check_lambda_natural_in_functor(const Bimodule& X, const Bimodule& Y, const Mor& h,
                                          const RightModule& z) {
  LawReport rep;
  FunctorExpr F = FunctorExpr::tensor_bimodule(X);
  FunctorExpr G = FunctorExpr::tensor_bimodule(Y);
  RightModule bb = regular_module(X.left_over);
  // xi_z = id_z (+) h and its component at b_b between the canonical modules
  ModuleMor xi_z = tensor_over_mor_right(z, X, Y, h);
  ModuleMor xi_b = tensor_over_mor_right(bb, X, Y, h);
  LambdaResult lF = lambda(F, z);
  LambdaResult lG = lambda(G, z);
  Mor lifted = tensor_over_mor_right(z, lF.canonical, lG.canonical, xi_b.map).map;
  rep.add_equal("lambda.natural_in_F", compose(lG.component.map, lifted),
                compose(xi_z.map, lF.component.map));
  return rep;
}

LawReport ew_roundtrip(const Bimodule& X, const std::vector<RightModule>& samples) {
  LawReport rep;
  const Field& f = X.left_over.field;
  FunctorExpr F = FunctorExpr::tensor_bimodule(X);
  Bimodule can = canonical_left_module(F);
  UnitIso u = unit_iso(X);
  // iota is a right-module iso by construction; it must also intertwine the
  // canonical left action with the left action of X.
  rep.merge(check_bimodule(can));
  rep.add_equal("ew.unit_iso_left_equivariant", compose(u.iso.map, can.left_action),
                compose(X.left_action, tensor(Mor::identity(f, X.left_over.carrier), u.iso.map)));
  rep.add("ew.unit_iso_invertible", is_invertible(u.iso.map));
  // lambda at b_b is the unit iso of the canonical module
  RightModule bb = regular_module(X.left_over);
  LambdaResult lb = lambda(F, bb);
  rep.add_equal("ew.lambda_at_b_is_unit_iso", lb.component.map, unit_iso(can).iso.map);
  int i = 0;
  for (const auto& z : samples) {
    LambdaResult l = lambda(F, z);
    rep.add("ew.lambda_invertible[" + std::to_string(i++) + "]", l.invertible);
  }
  return rep;
}

}  // namespace ewk
