#include "ewk/day.hpp"

namespace ewk {

namespace {

void require_same_bimodule_bases(const Bimodule& X, const Bimodule& Y) {
  if (X.left_over != Y.left_over || X.right_over != Y.right_over)
    throw DimMismatch("convolve: bimodules live over different base pairs");
}

// Residual right b-action on w (+)_b x, induced through the presentation.
RightModule residual_action(const TensorOverResult& t, const CommMonoid& base,
                            const Mor& slot_action) {
  const Field& fld = base.field;
  const Mor idw = Mor::identity(fld, t.source.carrier);
  Mor action = factor_through_epi(
      tensor(t.pres.proj, Mor::identity(fld, base.carrier)),
      compose(t.pres.proj, tensor(idw, slot_action)));
  return RightModule{base, t.pres.quot, action};
}

}  // namespace

ConvolutionResult convolve(const Bimodule& X, const Bimodule& Y) {
  require_same_bimodule_bases(X, Y);
  const Field& fld = X.left_over.field;
  ConvolutionResult r;
  r.x = X;
  r.y = Y;
  r.tensor_algebra = coproduct(X.left_over, X.right_over);
  r.xm = bimodule_as_module(r.tensor_algebra, X);
  r.ym = bimodule_as_module(r.tensor_algebra, Y);
  r.ten = mtensor(r.xm, r.ym);
  const Mor& proj = r.ten.pres.proj;
  Mor rho = factor_through_epi(
      tensor(Mor::identity(fld, X.left_over.carrier), proj),
      compose(proj, tensor(X.left_action, Mor::identity(fld, Y.carrier))));
  Mor gam = factor_through_epi(
      tensor(proj, Mor::identity(fld, X.right_over.carrier)),
      compose(proj, tensor(Mor::identity(fld, X.carrier), Y.right_action)));
  r.product = Bimodule{X.left_over, X.right_over, r.ten.pres.quot, rho, gam};
  return r;
}

ModuleMor theta(const ConvolutionResult& R, const RightModule& w, const RightModule& z) {
  const Field& fld = w.over.field;
  TensorOverResult W = tensor_over(w, R.x);
  TensorOverResult Z = tensor_over(z, R.y);
  TensorOverResult prod_bp = mtensor(W.result, Z.result);  // over b'
  TensorOverResult wz = mtensor(w, z);                     // over b
  TensorOverResult txz = tensor_over(wz.result, R.product);
  Mor epi = compose(prod_bp.pres.proj, tensor(W.pres.proj, Z.pres.proj));
  Mor witness =
      compose(txz.pres.proj,
              compose(tensor(wz.pres.proj, R.ten.pres.proj),
                      tensor(tensor(Mor::identity(fld, w.carrier),
                                    braiding(fld, R.x.carrier, z.carrier)),
                             Mor::identity(fld, R.y.carrier))));
  Mor map = factor_through_epi(epi, witness);
  return ModuleMor{prod_bp.result, txz.result, map};
}

LawReport check_theta(const ConvolutionResult& R, const RightModule& w, const RightModule& z) {
  LawReport rep;
  const Field& fld = w.over.field;
  const CommMonoid& b = R.x.left_over;
  ModuleMor th = theta(R, w, z);

  // Rebuild the bottom path of the defining square from its own components:
  // the b-level swap followed by id (+) (p_*)_{x,y}, each induced through
  // its own presentation.
  TensorOverResult W = tensor_over(w, R.x);
  TensorOverResult Z = tensor_over(z, R.y);
  RightModule xb = restrict_module(R.tensor_algebra.p, R.xm);
  RightModule yb = restrict_module(R.tensor_algebra.p, R.ym);
  RightModule Wb = residual_action(W, b, xb.action);
  RightModule Zb = residual_action(Z, b, yb.action);
  TensorOverResult Mb = mtensor(Wb, Zb);  // (w+x) (+)_b (z+y)
  TensorOverResult wz = mtensor(w, z);
  TensorOverResult xyb = mtensor(xb, yb);  // x (+)_b y
  // x (+)_b y as a (b,b')-bimodule
  Mor rho_xyb = factor_through_epi(
      tensor(Mor::identity(fld, b.carrier), xyb.pres.proj),
      compose(xyb.pres.proj, tensor(R.x.left_action, Mor::identity(fld, R.y.carrier))));
  Mor gam_xyb = factor_through_epi(
      tensor(xyb.pres.proj, Mor::identity(fld, R.x.right_over.carrier)),
      compose(xyb.pres.proj, tensor(Mor::identity(fld, R.x.carrier), R.y.right_action)));
  Bimodule XYb{b, R.x.right_over, xyb.pres.quot, rho_xyb, gam_xyb};
  TensorOverResult t_xyb = tensor_over(wz.result, XYb);
  // swap: (w+x) (+)_b (z+y) -> (w+z) (+)_b (x (+)_b y)
  Mor swap = factor_through_epi(
      compose(Mb.pres.proj, tensor(W.pres.proj, Z.pres.proj)),
      compose(t_xyb.pres.proj,
              compose(tensor(wz.pres.proj, xyb.pres.proj),
                      tensor(tensor(Mor::identity(fld, w.carrier),
                                    braiding(fld, R.x.carrier, z.carrier)),
                             Mor::identity(fld, R.y.carrier)))));
  // (p_*)_{x,y} : x (+)_b y -> x (+)_{b(x)b'} y and its whiskering
  Mor pstar = induce_through_coequalizer(xyb.pres, R.ten.pres.proj);
  ModuleMor whisk = tensor_over_mor_right(wz.result, XYb, R.product, pstar);
  Mor bottom = compose(whisk.map, swap);

  TensorOverResult prod_bp = mtensor(W.result, Z.result);
  rep.add_equal("day.theta_defining", compose(th.map, prod_bp.pres.proj),
                compose(bottom, Mb.pres.proj));
  return rep;
}

LawReport check_theta_natural(const ConvolutionResult& R, const ModuleMor& h,
                              const RightModule& z) {
  LawReport rep;
  ModuleMor th_src = theta(R, h.src, z);
  ModuleMor th_dst = theta(R, h.dst, z);
  ModuleMor fh = tensor_over_mor(h, R.x);
  RightModule Gz = tensor_over(z, R.y).result;
  ModuleMor left = mtensor_mor(fh, identity_mor(Gz));
  ModuleMor hz = mtensor_mor(h, identity_mor(z));
  ModuleMor right = tensor_over_mor(hz, R.product);
  rep.add_equal("day.theta_natural", compose(th_dst.map, left.map),
                compose(right.map, th_src.map));
  return rep;
}

DayUnitIso unit_object_iso(const CommMonoid& b, const CommMonoid& bp, const RightModule& z) {
  const Field& fld = b.field;
  const Mor idb = Mor::identity(fld, b.carrier);
  const Mor idbp = Mor::identity(fld, bp.carrier);
  DayUnitIso u;
  u.unit_bimodule = Bimodule{b, bp, tensor(b.carrier, bp.carrier), tensor(b.product, idbp),
                             tensor(idb, bp.product)};
  u.ten = tensor_over(z, u.unit_bimodule);
  Mor e = induce_through_coequalizer(u.ten.pres, tensor(z.action, idbp));
  EqPresentation hz = hom_module_object(regular_module(b), z);
  Mor gbar = induce_through_equalizer(hz, curry(z.action, z.carrier, b.carrier));
  u.free_side = RightModule{bp, tensor(hz.sub, bp.carrier),
                            tensor(Mor::identity(fld, hz.sub), bp.product)};
  u.iso = ModuleMor{u.ten.result, u.free_side, compose(tensor(gbar, idbp), e)};
  return u;
}

LawReport check_day_unit_natural(const CommMonoid& b, const CommMonoid& bp, const ModuleMor& h) {
  LawReport rep;
  const Field& fld = b.field;
  DayUnitIso us = unit_object_iso(b, bp, h.src);
  DayUnitIso ud = unit_object_iso(b, bp, h.dst);
  ModuleMor lifted = tensor_over_mor(h, us.unit_bimodule);
  EqPresentation hs = hom_module_object(regular_module(b), h.src);
  EqPresentation hd = hom_module_object(regular_module(b), h.dst);
  Mor homh =
      induce_through_equalizer(hd, compose(hom_postcompose(h.map, b.carrier), hs.incl));
  rep.add_equal("day.unit_natural", compose(ud.iso.map, lifted.map),
                compose(tensor(homh, Mor::identity(fld, bp.carrier)), us.iso.map));
  return rep;
}

FactorizationResult universal_factorization(
    const ConvolutionResult& R, const Bimodule& Z, const Mor& psi0,
    const std::vector<std::pair<RightModule, RightModule>>& samples) {
  FactorizationResult out;
  const Bimodule& X = R.x;
  const Bimodule& Y = R.y;
  const CommMonoid& b = X.left_over;
  RightModule bb = regular_module(b);
  FunctorExpr F = FunctorExpr::tensor_bimodule(Z);
  Bimodule canF = canonical_left_module(F);

  auto xi0 = [&](const RightModule& v) { return tensor_over_mor_right(v, R.product, Z, psi0); };
  auto alpha = [&](const RightModule& w, const RightModule& z) {
    RightModule wz = mtensor(w, z).result;
    return compose(xi0(wz), theta(R, w, z));
  };

  // phi = F(jmath) o alpha_{b,b} o ((iota_X)^{-1} (+) (iota_Y)^{-1})
  UnitIso ix = unit_iso(X);
  UnitIso iy = unit_iso(Y);
  ModuleMor pre = mtensor_mor(ix.inv, iy.inv);
  ModuleMor al = alpha(bb, bb);
  ModuleMor Fj = F.apply_mor(right_unit_b(bb).iso);
  out.phi = compose(Fj.map, compose(al.map, pre.map));

  // psi through the b(x)b' presentation, then back along the unit iso
  TensorOverResult xy_bp = mtensor(right_module_of(X), right_module_of(Y));
  out.psi = factor_through_epi(R.ten.pres.proj, compose(out.phi, xy_bp.pres.proj));
  out.recovered = compose(unit_iso(Z).iso.map, out.psi);
  out.report.add_equal("day.recovery", out.recovered, psi0);

  // xi = lambda o (- (+) psi) factors the cone through theta
  int i = 0;
  for (const auto& [w, z] : samples) {
    RightModule wz = mtensor(w, z).result;
    ModuleMor step = tensor_over_mor_right(wz, R.product, canF, out.psi);
    Mor xi_wz = compose(lambda(F, wz).component.map, step.map);
    Mor lhs = alpha(w, z).map;
    Mor rhs = compose(xi_wz, theta(R, w, z).map);
    out.report.add_equal("day.factorization[" + std::to_string(i++) + "]", lhs, rhs);
  }

  // uniqueness half: theta at (b,b) is an epimorphism, so components at
  // b (+) b are determined by their theta-precompositions
  out.report.add("day.theta_bb_epi", has_full_row_rank(theta(R, bb, bb).map));
  return out;
}

LawReport check_convolution_symmetry(const Bimodule& X, const Bimodule& Y) {
  LawReport rep;
  const Field& fld = X.left_over.field;
  ConvolutionResult r1 = convolve(X, Y);
  ConvolutionResult r2 = convolve(Y, X);
  ModuleMor s = braid_b(r1.xm, r1.ym).braid;
  rep.add("day.symmetry_invertible", is_invertible(s.map));
  rep.add_equal("day.symmetry_left_equivariant",
                compose(s.map, r1.product.left_action),
                compose(r2.product.left_action,
                        tensor(Mor::identity(fld, X.left_over.carrier), s.map)));
  rep.add_equal("day.symmetry_right_equivariant",
                compose(s.map, r1.product.right_action),
                compose(r2.product.right_action,
                        tensor(s.map, Mor::identity(fld, X.right_over.carrier))));
  return rep;
}

LawReport check_day_monoid_correspondence(const CommOverPair& p, const RightModule& w,
                                          const RightModule& z) {
  LawReport rep;
  Bimodule X = bimodule_from_monoid_legs(p.f, p.fp);
  ConvolutionResult R = convolve(X, X);
  Mor mult = induce_through_coequalizer(R.ten.pres, p.total.product);
  LaxFunctor G = comm_to_functor(p);
  FunctorExpr F = FunctorExpr::tensor_bimodule(X);
  Bimodule canF = canonical_left_module(F);
  Mor psi = compose(unit_iso(X).inv.map, mult);
  RightModule wz = mtensor(w, z).result;
  ModuleMor step = tensor_over_mor_right(wz, R.product, canF, psi);
  Mor xi_wz = compose(lambda(F, wz).component.map, step.map);
  Mor transported = compose(xi_wz, theta(R, w, z).map);
  rep.add_equal("day.monoid_correspondence", G.lax.binary(w, z).map, transported);
  return rep;
}

}  // namespace ewk
