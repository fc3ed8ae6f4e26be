#include "ewk/mtensor.hpp"

namespace ewk {

namespace {

void require_base(const RightModule& z, const Bimodule& X) {
  if (z.over != X.left_over)
    throw DimMismatch("tensor_over: module base and bimodule left base differ");
}

}  // namespace

TensorOverResult tensor_over(const RightModule& z, const Bimodule& X) {
  require_base(z, X);
  const Field& f = z.over.field;
  const Mor idz = Mor::identity(f, z.carrier);
  const Mor idx = Mor::identity(f, X.carrier);
  const Mor lhs = tensor(z.action, idx);      // (z (x) b) (x) x -> z (x) x
  const Mor rhs = tensor(idz, X.left_action);  // z (x) (b (x) x) -> z (x) x
  TensorOverResult t;
  t.source = z;
  t.through = X;
  t.pres = coequalizer(lhs, rhs);
  // Right b'-action induced through the presentation tensored with b'.
  const Obj bp = X.right_over.carrier;
  CoeqPresentation lifted = tensor_pres_right(t.pres, f, bp);
  Mor h = compose(t.pres.proj, tensor(idz, X.right_action));
  Mor action = induce_through_coequalizer(lifted, h);
  t.result = RightModule{X.right_over, t.pres.quot, action};
  return t;
}

TensorOverResult mtensor(const RightModule& x, const RightModule& y) {
  require_same_base(x, y, "mtensor");
  return tensor_over(x, opposite_left_action(y));
}

ModuleMor tensor_over_mor(const TensorOverResult& ts, const TensorOverResult& td,
                          const ModuleMor& h) {
  const Field& f = h.src.over.field;
  const Mor idx = Mor::identity(f, ts.through.carrier);
  Mor map = induce_through_coequalizer(ts.pres, compose(td.pres.proj, tensor(h.map, idx)));
  return ModuleMor{ts.result, td.result, map};
}

ModuleMor tensor_over_mor(const ModuleMor& h, const Bimodule& X) {
  return tensor_over_mor(tensor_over(h.src, X), tensor_over(h.dst, X), h);
}

ModuleMor tensor_over_mor_right(const RightModule& z, const Bimodule& Xs, const Bimodule& Xd,
                                const Mor& k) {
  TensorOverResult ts = tensor_over(z, Xs);
  TensorOverResult td = tensor_over(z, Xd);
  const Mor idz = Mor::identity(z.over.field, z.carrier);
  Mor map = induce_through_coequalizer(ts.pres, compose(td.pres.proj, tensor(idz, k)));
  return ModuleMor{ts.result, td.result, map};
}

ModuleMor mtensor_mor(const ModuleMor& h, const ModuleMor& k) {
  TensorOverResult ts = mtensor(h.src, k.src);
  TensorOverResult td = mtensor(h.dst, k.dst);
  Mor map = induce_through_coequalizer(ts.pres, compose(td.pres.proj, tensor(h.map, k.map)));
  return ModuleMor{ts.result, td.result, map};
}

ModuleMor strength_assoc(const Field& f, Obj w, const TensorOverResult& tz,
                         const TensorOverResult& twz) {
  Mor map = induce_through_coequalizer(tensor_pres_left(f, w, tz.pres), twz.pres.proj);
  return ModuleMor{tensored(w, tz.result), twz.result, map};
}

ModuleMor strength_assoc(Obj w, const RightModule& z, const Bimodule& X) {
  TensorOverResult tz = tensor_over(z, X);
  TensorOverResult twz = tensor_over(tensored(w, z), X);
  return strength_assoc(z.over.field, w, tz, twz);
}

ModuleMor left_tensor_strength(Obj w, const RightModule& z, const RightModule& x) {
  const Field& f = z.over.field;
  TensorOverResult tz = mtensor(z, x);
  TensorOverResult tzwx = mtensor(z, tensored(w, x));
  Mor h = compose(tzwx.pres.proj,
                  tensor(braiding(f, w, z.carrier), Mor::identity(f, x.carrier)));
  Mor map = induce_through_coequalizer(tensor_pres_left(f, w, tz.pres), h);
  return ModuleMor{tensored(w, tz.result), tzwx.result, map};
}

UnitIso unit_iso(const Bimodule& X) {
  const Field& f = X.left_over.field;
  UnitIso u;
  u.ten = tensor_over(regular_module(X.left_over), X);
  Mor iso = induce_through_coequalizer(u.ten.pres, X.left_action);
  Mor inv = compose(u.ten.pres.proj, tensor(X.left_over.unit, Mor::identity(f, X.carrier)));
  if (compose(iso, inv) != Mor::identity(f, X.carrier) ||
      compose(inv, iso) != Mor::identity(f, u.ten.pres.quot))
    throw FactorError("unit iso failed to invert");
  u.iso = ModuleMor{u.ten.result, right_module_of(X), iso};
  u.inv = ModuleMor{right_module_of(X), u.ten.result, inv};
  return u;
}

UnitIso left_unit_b(const RightModule& x) { return unit_iso(opposite_left_action(x)); }

UnitIso right_unit_b(const RightModule& x) {
  const Field& f = x.over.field;
  UnitIso u;
  u.ten = mtensor(x, regular_module(x.over));
  Mor iso = induce_through_coequalizer(u.ten.pres, x.action);
  Mor inv = compose(u.ten.pres.proj, tensor(Mor::identity(f, x.carrier), x.over.unit));
  if (compose(iso, inv) != Mor::identity(f, x.carrier) ||
      compose(inv, iso) != Mor::identity(f, u.ten.pres.quot))
    throw FactorError("right unit iso failed to invert");
  u.iso = ModuleMor{u.ten.result, x, iso};
  u.inv = ModuleMor{x, u.ten.result, inv};
  return u;
}

AssocData assoc_b(const RightModule& z, const RightModule& x, const RightModule& y) {
  const Field& f = z.over.field;
  AssocData d;
  d.xy = mtensor(x, y);
  d.z_xy = mtensor(z, d.xy.result);
  d.zx = mtensor(z, x);
  d.zx_y = mtensor(d.zx.result, y);
  TensorOverResult zx_tens_y = mtensor(tensored(z.carrier, x), y);
  // Strength of - (+)_b y at (z as a plain object, x).
  Mor alpha =
      induce_through_coequalizer(tensor_pres_left(f, z.carrier, d.xy.pres), zx_tens_y.pres.proj);
  ModuleMor cq_zx{tensored(z.carrier, x), d.zx.result, d.zx.pres.proj};
  ModuleMor m1 = tensor_over_mor(zx_tens_y, d.zx_y, cq_zx);
  Mor map = induce_through_coequalizer(d.z_xy.pres, compose(m1.map, alpha));
  d.assoc = ModuleMor{d.z_xy.result, d.zx_y.result, map};
  return d;
}

BraidData braid_b(const RightModule& x, const RightModule& y) {
  const Field& f = x.over.field;
  BraidData d;
  d.xy = mtensor(x, y);
  d.yx = mtensor(y, x);
  Mor map = induce_through_coequalizer(
      d.xy.pres, compose(d.yx.pres.proj, braiding(f, x.carrier, y.carrier)));
  d.braid = ModuleMor{d.xy.result, d.yx.result, map};
  return d;
}

InternalHom hom_functor_obj(const Bimodule& X, const RightModule& Y) {
  if (Y.over != X.right_over)
    throw DimMismatch("hom_functor_obj: module is not over the bimodule's right base");
  const Field& f = X.left_over.field;
  const Obj x = X.carrier, y = Y.carrier, b = X.left_over.carrier;
  InternalHom h;
  h.through = X;
  h.source = Y;
  h.pres = hom_module_object(right_module_of(X), Y);
  // Ambient action: compose with left multiplication, mu o (id (x) rho bar).
  Mor rho_bar = curry(X.left_action, b, x);
  Mor ambient = compose(hom_compose(f, x, x, y),
                        tensor(Mor::identity(f, hom_obj(x, y)), rho_bar));
  Mor on_sub = compose(ambient, tensor(h.pres.incl, Mor::identity(f, b)));
  Mor action = induce_through_equalizer(h.pres, on_sub);
  h.module = RightModule{X.left_over, h.pres.sub, action};
  return h;
}

InternalHom internal_hom_b(const RightModule& x, const RightModule& y) {
  require_same_base(x, y, "internal_hom_b");
  return hom_functor_obj(opposite_left_action(x), y);
}

AdjunctionUnit adjunction_unit(const RightModule& z, const Bimodule& X) {
  const Field& f = z.over.field;
  AdjunctionUnit r;
  r.ten = tensor_over(z, X);
  r.hom = hom_functor_obj(X, r.ten.result);
  Mor ambient = compose(hom_postcompose(r.ten.pres.proj, X.carrier),
                        coevaluation(f, z.carrier, X.carrier));
  r.unit = ModuleMor{z, r.hom.module, induce_through_equalizer(r.hom.pres, ambient)};
  return r;
}

AdjunctionCounit adjunction_counit(const RightModule& Y, const Bimodule& X) {
  const Field& f = Y.over.field;
  AdjunctionCounit r;
  r.hom = hom_functor_obj(X, Y);
  r.ten = tensor_over(r.hom.module, X);
  Mor ev = compose(evaluation(f, X.carrier, Y.carrier),
                   tensor(r.hom.pres.incl, Mor::identity(f, X.carrier)));
  r.counit = ModuleMor{r.ten.result, Y, induce_through_coequalizer(r.ten.pres, ev)};
  return r;
}

LawReport check_tensor_hom_triangles(const RightModule& z, const Bimodule& X,
                                     const RightModule& Y) {
  LawReport rep;
  // T1 at z: counit_{z (+) X} o (unit_z (+) id_X) = id
  AdjunctionUnit au = adjunction_unit(z, X);
  AdjunctionCounit ac1 = adjunction_counit(au.ten.result, X);
  ModuleMor whiskered = tensor_over_mor(au.ten, ac1.ten, au.unit);
  rep.add_equal("adj.triangle_tensor", compose(ac1.counit, whiskered).map,
                Mor::identity(z.over.field, au.ten.result.carrier));
  // T2 at Y: Hom(X, counit_Y) o unit_{Hom(X,Y)} = id
  AdjunctionCounit ac = adjunction_counit(Y, X);
  AdjunctionUnit au2 = adjunction_unit(ac.hom.module, X);
  Mor ambient = compose(hom_postcompose(ac.counit.map, X.carrier), au2.hom.pres.incl);
  Mor restricted = induce_through_equalizer(ac.hom.pres, ambient);
  rep.add_equal("adj.triangle_hom", compose(restricted, au2.unit.map),
                Mor::identity(z.over.field, ac.hom.module.carrier));
  return rep;
}

LawReport check_pentagon_b(const RightModule& w, const RightModule& z, const RightModule& x,
                           const RightModule& y) {
  LawReport rep;
  RightModule xy = mtensor(x, y).result;
  RightModule wz = mtensor(w, z).result;
  RightModule zx = mtensor(z, x).result;
  ModuleMor a_w_z_xy = assoc_b(w, z, xy).assoc;
  ModuleMor a_wz_x_y = assoc_b(wz, x, y).assoc;
  ModuleMor path1 = compose(a_wz_x_y, a_w_z_xy);

  ModuleMor a_zxy = assoc_b(z, x, y).assoc;
  ModuleMor left = mtensor_mor(identity_mor(w), a_zxy);
  ModuleMor a_w_zx_y = assoc_b(w, zx, y).assoc;
  ModuleMor a_wzx = assoc_b(w, z, x).assoc;
  ModuleMor right = mtensor_mor(a_wzx, identity_mor(y));
  ModuleMor path2 = compose(right, compose(a_w_zx_y, left));

  rep.add_equal("mb.pentagon", path1.map, path2.map);
  return rep;
}

LawReport check_triangle_b(const RightModule& x, const RightModule& y) {
  LawReport rep;
  const RightModule bb = regular_module(x.over);
  ModuleMor a = assoc_b(x, bb, y).assoc;  // x+(b+y) -> (x+b)+y
  UnitIso jm = right_unit_b(x);
  UnitIso io = left_unit_b(y);
  ModuleMor lhs = compose(mtensor_mor(jm.iso, identity_mor(y)), a);
  ModuleMor rhs = mtensor_mor(identity_mor(x), io.iso);
  rep.add_equal("mb.triangle", lhs.map, rhs.map);
  return rep;
}

LawReport check_hexagon_b(const RightModule& x, const RightModule& y, const RightModule& z) {
  LawReport rep;
  RightModule xy = mtensor(x, y).result;
  ModuleMor a1 = assoc_b(x, y, z).assoc;             // x+(y+z) -> (x+y)+z
  ModuleMor s1 = braid_b(xy, z).braid;               // (x+y)+z -> z+(x+y)
  ModuleMor a2 = assoc_b(z, x, y).assoc;             // z+(x+y) -> (z+x)+y
  ModuleMor lhs = compose(a2, compose(s1, a1));

  ModuleMor s2 = mtensor_mor(identity_mor(x), braid_b(y, z).braid);  // x+(y+z) -> x+(z+y)
  ModuleMor a3 = assoc_b(x, z, y).assoc;                             // x+(z+y) -> (x+z)+y
  ModuleMor s3 = mtensor_mor(braid_b(x, z).braid, identity_mor(y));  // (x+z)+y -> (z+x)+y
  ModuleMor rhs = compose(s3, compose(a3, s2));
  rep.add_equal("mb.hexagon", lhs.map, rhs.map);
  return rep;
}

LawReport check_symmetry_b(const RightModule& x, const RightModule& y) {
  LawReport rep;
  ModuleMor s = braid_b(x, y).braid;
  ModuleMor sback = braid_b(y, x).braid;
  rep.add_equal("mb.symmetry", compose(sback, s).map,
                Mor::identity(x.over.field, s.src.carrier));
  return rep;
}

InternalCommMonoid over_to_internal(const MonoidOver& o) {
  InternalCommMonoid i;
  i.carrier = restrict_module(o.leg, regular_module(o.total));
  i.unit = ModuleMor{regular_module(o.base), i.carrier, o.leg.map};
  i.square = mtensor(i.carrier, i.carrier);
  i.product = ModuleMor{i.square.result, i.carrier,
                        induce_through_coequalizer(i.square.pres, o.total.product)};
  return i;
}

MonoidOver internal_to_over(const InternalCommMonoid& i) {
  const CommMonoid& b = i.carrier.over;
  CommMonoid total;
  total.field = b.field;
  total.carrier = i.carrier.carrier;
  total.unit = compose(i.unit.map, b.unit);
  total.product = compose(i.product.map, i.square.pres.proj);
  MonoidOver o;
  o.base = b;
  o.total = total;
  o.leg = MonoidMor{b, total, i.unit.map};
  return o;
}

LawReport check_internal_comm_monoid(const InternalCommMonoid& i) {
  LawReport rep;
  const RightModule& c = i.carrier;
  const ModuleMor idc = identity_mor(c);
  AssocData a = assoc_b(c, c, c);
  ModuleMor m_outer = mtensor_mor(i.product, idc);  // (c+c)+c -> c+c
  ModuleMor m_inner = mtensor_mor(idc, i.product);  // c+(c+c) -> c+c
  rep.add_equal("internal.assoc",
                compose(i.product.map, compose(m_outer.map, a.assoc.map)),
                compose(i.product.map, m_inner.map));
  UnitIso iota = left_unit_b(c);
  ModuleMor u_left = mtensor_mor(i.unit, idc);  // b+c -> c+c
  rep.add_equal("internal.unit_left", compose(i.product.map, u_left.map), iota.iso.map);
  UnitIso jmath = right_unit_b(c);
  ModuleMor u_right = mtensor_mor(idc, i.unit);  // c+b -> c+c
  rep.add_equal("internal.unit_right", compose(i.product.map, u_right.map), jmath.iso.map);
  BraidData s = braid_b(c, c);
  rep.add_equal("internal.comm", compose(i.product.map, s.braid.map), i.product.map);
  return rep;
}

}  // namespace ewk
