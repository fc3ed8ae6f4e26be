#include "ewk/lax.hpp"

namespace ewk {

LawReport check_lax_axioms(const LaxFunctor& F, const RightModule& x, const RightModule& y,
                           const RightModule& z) {
  LawReport rep;
  const FunctorExpr& E = F.expr;
  RightModule Fx = E.apply_obj(x), Fy = E.apply_obj(y), Fz = E.apply_obj(z);

  // associativity compatibility
  {
    ModuleMor a_dst = assoc_b(Fx, Fy, Fz).assoc;  // Fx+(Fy+Fz) -> (Fx+Fy)+Fz
    ModuleMor fxy = F.lax.binary(x, y);
    ModuleMor fyz = F.lax.binary(y, z);
    RightModule xy = mtensor(x, y).result;
    RightModule yz = mtensor(y, z).result;
    ModuleMor lhs = compose(F.lax.binary(xy, z),
                            compose(mtensor_mor(fxy, identity_mor(Fz)), a_dst));
    ModuleMor a_src = assoc_b(x, y, z).assoc;
    ModuleMor rhs = compose(E.apply_mor(a_src),
                            compose(F.lax.binary(x, yz), mtensor_mor(identity_mor(Fx), fyz)));
    rep.add_equal("lax.assoc", lhs.map, rhs.map);
  }
  // unit compatibility, both sides
  {
    RightModule bb = regular_module(x.over);
    UnitIso iota_dst = left_unit_b(Fx);
    ModuleMor lhs = compose(E.apply_mor(left_unit_b(x).iso),
                            compose(F.lax.binary(bb, x), mtensor_mor(F.lax.unit, identity_mor(Fx))));
    rep.add_equal("lax.unit_left", lhs.map, iota_dst.iso.map);
    UnitIso jmath_dst = right_unit_b(Fx);
    ModuleMor rhs = compose(E.apply_mor(right_unit_b(x).iso),
                            compose(F.lax.binary(x, bb), mtensor_mor(identity_mor(Fx), F.lax.unit)));
    rep.add_equal("lax.unit_right", rhs.map, jmath_dst.iso.map);
  }
  // symmetry compatibility
  {
    ModuleMor s_src = braid_b(x, y).braid;
    ModuleMor s_dst = braid_b(Fx, Fy).braid;
    ModuleMor lhs = compose(E.apply_mor(s_src), F.lax.binary(x, y));
    ModuleMor rhs = compose(F.lax.binary(y, x), s_dst);
    rep.add_equal("lax.symmetry", lhs.map, rhs.map);
  }
  return rep;
}

LawReport check_binary_naturality(const LaxFunctor& F, Obj w, const RightModule& x,
                                  const RightModule& y) {
  LawReport rep;
  const FunctorExpr& E = F.expr;
  const Field& fld = x.over.field;
  RightModule Fx = E.apply_obj(x), Fy = E.apply_obj(y);
  RightModule xy = mtensor(x, y).result;
  const Mor idw = Mor::identity(fld, w);

  // first variable: coherence against the strength of - (+) Fy and F
  {
    ModuleMor a = strength_assoc(w, Fx, opposite_left_action(Fy));
    ModuleMor t_x = E.strength(w, x);
    ModuleMor whisk = mtensor_mor(t_x, identity_mor(Fy));
    ModuleMor top = compose(F.lax.binary(tensored(w, x), y), compose(whisk, a));
    ModuleMor a_src = strength_assoc(w, x, opposite_left_action(y));
    ModuleMor bottom = compose(E.apply_mor(a_src),
                               compose(E.strength(w, xy), ModuleMor{tensored(w, mtensor(Fx, Fy).result),
                                                                    tensored(w, E.apply_obj(xy)),
                                                                    tensor(idw, F.lax.binary(x, y).map)}));
    rep.add_equal("lax.natural_first", top.map, bottom.map);
  }
  // second variable: coherence against the strength of Fx (+) - and F
  {
    ModuleMor t2 = left_tensor_strength(w, Fx, Fy);
    ModuleMor whisk = mtensor_mor(identity_mor(Fx), E.strength(w, y));
    ModuleMor top = compose(F.lax.binary(x, tensored(w, y)), compose(whisk, t2));
    ModuleMor t2_src = left_tensor_strength(w, x, y);
    ModuleMor bottom = compose(E.apply_mor(t2_src),
                               compose(E.strength(w, xy), ModuleMor{tensored(w, mtensor(Fx, Fy).result),
                                                                    tensored(w, E.apply_obj(xy)),
                                                                    tensor(idw, F.lax.binary(x, y).map)}));
    rep.add_equal("lax.natural_second", top.map, bottom.map);
  }
  return rep;
}

bool lax_coherences_invertible(const LaxFunctor& F, const RightModule& x, const RightModule& y) {
  if (!is_invertible(F.lax.unit.map)) return false;
  return is_invertible(F.lax.binary(x, y).map);
}

}  // namespace ewk
