#include "ewk/six.hpp"

namespace ewk {

namespace {

// b' as a right b-module along f.
RightModule upper_module(const MonoidMor& f) {
  return restrict_module(f, regular_module(f.dst));
}

}  // namespace

SixFunctorPack build_pack(const MonoidMor& f) {
  if (!is_monoid_mor(f)) throw Error("build_pack: not a morphism of commutative monoids");
  Bimodule lower = bimodule_from_monoid_legs(f, identity_mor(f.dst));
  Bimodule upper = bimodule_from_monoid_legs(identity_mor(f.dst), f);
  return SixFunctorPack{f,
                        lower,
                        upper,
                        FunctorExpr::tensor_bimodule(lower),
                        FunctorExpr::restrict_along(f),
                        FunctorExpr::tensor_bimodule(upper),
                        FunctorExpr::hom_module(upper)};
}

ModuleMor star_unit(const SixFunctorPack& p, const RightModule& x) {
  UnitIso jm = right_unit_b(x);
  ModuleMor f_mod{regular_module(p.f.src), upper_module(p.f), p.f.map};
  return compose(mtensor_mor(identity_mor(x), f_mod), jm.inv);
}

ModuleMor star_counit(const SixFunctorPack& p, const RightModule& y) {
  RightModule fy = restrict_module(p.f, y);
  TensorOverResult t = tensor_over(fy, p.lower);
  Mor eps = induce_through_coequalizer(t.pres, y.action);
  return ModuleMor{t.result, y, eps};
}

LawReport check_star_triangles(const SixFunctorPack& p, const RightModule& x,
                               const RightModule& y) {
  LawReport rep;
  const Field& fld = x.over.field;
  // T1: eps*_{f^* x} o f^*(eta*_x) = id
  ModuleMor eta = star_unit(p, x);
  ModuleMor whisk = p.pullback.apply_mor(eta);
  ModuleMor eps_at = star_counit(p, p.pullback.apply_obj(x));
  rep.add_equal("six.star_triangle_pullback", compose(eps_at.map, whisk.map),
                Mor::identity(fld, whisk.src.carrier));
  // T2: f_*(eps*_y) o eta*_{f_* y} = id
  ModuleMor eps = star_counit(p, y);
  ModuleMor eta_at = star_unit(p, p.pushforward.apply_obj(y));
  rep.add_equal("six.star_triangle_pushforward", compose(eps.map, eta_at.map),
                Mor::identity(fld, y.carrier));
  return rep;
}

LawReport check_shriek_triangles(const SixFunctorPack& p, const RightModule& z,
                                 const RightModule& y) {
  return check_tensor_hom_triangles(z, p.upper, y);
}

ModuleMor lax_pushforward(const SixFunctorPack& p, const RightModule& x, const RightModule& y) {
  RightModule fx = restrict_module(p.f, x), fy = restrict_module(p.f, y);
  TensorOverResult tb = mtensor(fx, fy);
  TensorOverResult tbp = mtensor(x, y);
  Mor map = induce_through_coequalizer(tb.pres, tbp.pres.proj);
  return ModuleMor{tb.result, restrict_module(p.f, tbp.result), map};
}

ModuleMor tensor_pullback(const SixFunctorPack& p, const RightModule& x, const RightModule& y) {
  const Field& fld = x.over.field;
  const Obj bp = p.f.dst.carrier;
  TensorOverResult fx = tensor_over(x, p.lower);
  TensorOverResult fy = tensor_over(y, p.lower);
  TensorOverResult prod = mtensor(fx.result, fy.result);  // over b'
  TensorOverResult xy = mtensor(x, y);                    // over b
  TensorOverResult fxy = tensor_over(xy.result, p.lower);
  const Mor idbp = Mor::identity(fld, bp);
  Mor epi = compose(prod.pres.proj, tensor(fx.pres.proj, fy.pres.proj));
  Mor rhs = compose(
      fxy.pres.proj,
      compose(tensor(xy.pres.proj, idbp),
              compose(tensor(Mor::identity(fld, tensor(x.carrier, y.carrier)), p.f.dst.product),
                      tensor(tensor(Mor::identity(fld, x.carrier), braiding(fld, bp, y.carrier)),
                             idbp))));
  Mor coh = factor_through_epi(epi, rhs);
  if (!is_invertible(coh)) throw FactorError("tensor_pullback coherence is not invertible");
  return ModuleMor{prod.result, fxy.result, coh};
}

LaxFunctor pushforward_lax(const SixFunctorPack& p) {
  LaxFunctor F{p.pushforward, {}};
  // (f_*)_{b'_{b'}} = f itself
  F.lax.unit = ModuleMor{regular_module(p.f.src), upper_module(p.f), p.f.map};
  SixFunctorPack pc = p;
  F.lax.binary = [pc](const RightModule& x, const RightModule& y) {
    return lax_pushforward(pc, x, y);
  };
  return F;
}

LaxFunctor pullback_lax(const SixFunctorPack& p) {
  LaxFunctor F{p.pullback, {}};
  // (f^*)_{b_b} = (iota^b)^{-1}
  F.lax.unit = unit_iso(p.lower).inv;
  SixFunctorPack pc = p;
  F.lax.binary = [pc](const RightModule& x, const RightModule& y) {
    return tensor_pullback(pc, x, y);
  };
  return F;
}

LawReport check_mate_consistency(const SixFunctorPack& p, const RightModule& x,
                                 const RightModule& y) {
  LawReport rep;
  const Field& fld = x.over.field;
  // unit part: the colax unit from the mate formula inverts the lax unit
  {
    RightModule bb = regular_module(p.f.src);
    ModuleMor funit{bb, upper_module(p.f), p.f.map};
    ModuleMor through = p.pullback.apply_mor(funit);
    ModuleMor eps = star_counit(p, regular_module(p.f.dst));
    Mor colax_unit = compose(eps.map, through.map);
    rep.add_equal("six.mate_unit", colax_unit, unit_iso(p.lower).iso.map);
  }
  // binary part: the colax coherence equals the inverse of tensor_pullback
  {
    RightModule Fx = p.pullback.apply_obj(x);
    RightModule Fy = p.pullback.apply_obj(y);
    ModuleMor whisk = mtensor_mor(star_unit(p, x), star_unit(p, y));
    ModuleMor laxc = lax_pushforward(p, Fx, Fy);
    ModuleMor through = p.pullback.apply_mor(compose(laxc, whisk));
    ModuleMor eps = star_counit(p, mtensor(Fx, Fy).result);
    Mor colax = compose(eps.map, through.map);
    Mor coh = tensor_pullback(p, x, y).map;
    rep.add_equal("six.mate_binary_left", compose(colax, coh),
                  Mor::identity(fld, coh.src()));
    rep.add_equal("six.mate_binary_right", compose(coh, colax),
                  Mor::identity(fld, coh.dst()));
  }
  return rep;
}

ProjectionFormulaResult projection_formula(const SixFunctorPack& p, const RightModule& x,
                                           const RightModule& y) {
  ProjectionFormulaResult r;
  const Field& fld = x.over.field;
  const CommMonoid& bpm = p.f.dst;
  RightModule fy = restrict_module(p.f, y);
  TensorOverResult fx = tensor_over(x, p.lower);

  // canonical composite (f_*)_{f^* x, y} o (eta*_x (+) id)
  ModuleMor m1 = mtensor_mor(star_unit(p, x), identity_mor(fy));
  ModuleMor m2 = lax_pushforward(p, fx.result, y);
  r.canonical = compose(m2, m1);

  // closed form: a_{x, _b b'_{b'}, y} o (id_x (+) (iota^{b'}_y)^{-1})
  UnitIso iy = left_unit_b(y);  // b' (+)_{b'} y ~ y, over b'
  Bimodule W;  // b' (+)_{b'} y as a (b,b')-bimodule
  W.left_over = p.f.src;
  W.right_over = bpm;
  W.carrier = iy.ten.result.carrier;
  W.right_action = iy.ten.result.action;
  W.left_action = factor_through_epi(
      tensor(Mor::identity(fld, p.f.src.carrier), iy.ten.pres.proj),
      compose(iy.ten.pres.proj, tensor(p.lower.left_action, Mor::identity(fld, y.carrier))));
  // y as a (b,b')-bimodule via the opposite action of f_* y
  Bimodule Ybim{p.f.src, bpm, y.carrier,
                compose(fy.action, braiding(fld, p.f.src.carrier, y.carrier)), y.action};
  TensorOverResult xY = tensor_over(x, Ybim);
  TensorOverResult xW = tensor_over(x, W);
  Mor step1 = induce_through_coequalizer(
      xY.pres, compose(xW.pres.proj, tensor(Mor::identity(fld, x.carrier), iy.inv.map)));
  // mixed associator x (+)_b (b' (+)_{b'} y) -> (x (+)_b b') (+)_{b'} y
  RightModule x_bp = tensored(x.carrier, regular_module(bpm));
  TensorOverResult t_xbp_y = mtensor(x_bp, y);
  Mor alpha = induce_through_coequalizer(tensor_pres_left(fld, x.carrier, iy.ten.pres),
                                         t_xbp_y.pres.proj);
  ModuleMor cqmor{x_bp, fx.result, fx.pres.proj};
  ModuleMor step2 = mtensor_mor(cqmor, identity_mor(y));
  Mor a_mixed = induce_through_coequalizer(xW.pres, compose(step2.map, alpha));
  r.closed_form = compose(a_mixed, step1);

  r.report.add_equal("six.projection_closed_form", r.canonical.map, r.closed_form);
  r.report.add("six.projection_invertible", is_invertible(r.canonical.map));
  return r;
}

ModuleMor shriek_star_iso(const SixFunctorPack& p, const RightModule& y) {
  TensorOverResult t = tensor_over(y, p.upper);
  Mor iso = induce_through_coequalizer(t.pres, y.action);
  if (!is_invertible(iso)) throw FactorError("shriek_star component is not invertible");
  return ModuleMor{t.result, restrict_module(p.f, y), iso};
}

LawReport check_shriek_star_naturality(const SixFunctorPack& p, const ModuleMor& h) {
  LawReport rep;
  ModuleMor iso_src = shriek_star_iso(p, h.src);
  ModuleMor iso_dst = shriek_star_iso(p, h.dst);
  ModuleMor fh = p.shriek.apply_mor(h);
  rep.add_equal("six.shriek_star_natural", compose(iso_dst.map, fh.map),
                compose(h.map, iso_src.map));
  return rep;
}

}  // namespace ewk
