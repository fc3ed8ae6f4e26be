#include "ewk/module.hpp"

namespace ewk {

LawReport check_module(const RightModule& x) {
  LawReport rep;
  const Field& f = x.over.field;
  const Mor idx = Mor::identity(f, x.carrier);
  const Mor idb = Mor::identity(f, x.over.carrier);
  const Mor& g = x.action;
  if (g.src() != tensor(x.carrier, x.over.carrier) || g.dst() != x.carrier) {
    rep.add("module.shapes", false, "action shape does not match carrier and base");
    return rep;
  }
  rep.add_equal("module.assoc", compose(g, tensor(g, idb)), compose(g, tensor(idx, x.over.product)));
  rep.add_equal("module.unit", compose(g, tensor(idx, x.over.unit)), idx);
  return rep;
}

LawReport check_module_mor(const ModuleMor& h) {
  LawReport rep;
  if (h.src.over != h.dst.over) {
    rep.add("module_mor.base", false, "source and target live over different monoids");
    return rep;
  }
  const Mor idb = Mor::identity(h.src.over.field, h.src.over.carrier);
  rep.add_equal("module_mor.equivariance", compose(h.map, h.src.action),
                compose(h.dst.action, tensor(h.map, idb)));
  return rep;
}

LawReport check_bimodule(const Bimodule& x) {
  LawReport rep;
  const Field& f = x.left_over.field;
  const Mor idx = Mor::identity(f, x.carrier);
  const Mor idb = Mor::identity(f, x.left_over.carrier);
  const Mor idbp = Mor::identity(f, x.right_over.carrier);
  const Mor& rho = x.left_action;
  const Mor& gam = x.right_action;
  rep.add_equal("bimodule.left_assoc", compose(rho, tensor(x.left_over.product, idx)),
                compose(rho, tensor(idb, rho)));
  rep.add_equal("bimodule.left_unit", compose(rho, tensor(x.left_over.unit, idx)), idx);
  rep.add_equal("bimodule.right_assoc", compose(gam, tensor(gam, idbp)),
                compose(gam, tensor(idx, x.right_over.product)));
  rep.add_equal("bimodule.right_unit", compose(gam, tensor(idx, x.right_over.unit)), idx);
  rep.add_equal("bimodule.commute", compose(gam, tensor(rho, idbp)),
                compose(rho, tensor(idb, gam)));
  return rep;
}

bool is_module_mor(const ModuleMor& h) { return check_module_mor(h).all_pass(); }

ModuleMor identity_mor(const RightModule& x) {
  return ModuleMor{x, x, Mor::identity(x.over.field, x.carrier)};
}

ModuleMor compose(const ModuleMor& g, const ModuleMor& h) {
  if (g.src != h.dst) throw DimMismatch("module morphism composition: middle modules differ");
  return ModuleMor{h.src, g.dst, compose(g.map, h.map)};
}

RightModule regular_module(const CommMonoid& b) { return RightModule{b, b.carrier, b.product}; }

EqPresentation hom_module_object(const RightModule& x, const RightModule& y) {
  require_same_base(x, y, "hom_module_object");
  const Field& f = x.over.field;
  const Mor lhs = hom_precompose(x.action, y.carrier);
  const Mor rhs = compose(hom_postcompose(y.action, tensor(x.carrier, x.over.carrier)),
                          hom_tensor_right(f, x.carrier, y.carrier, x.over.carrier));
  return equalizer(lhs, rhs);
}

RightModule tensored(Obj z, const RightModule& x) {
  const Mor idz = Mor::identity(x.over.field, z);
  return RightModule{x.over, tensor(z, x.carrier), tensor(idz, x.action)};
}

Bimodule opposite_left_action(const RightModule& x) {
  const Field& f = x.over.field;
  Mor rho = compose(x.action, braiding(f, x.over.carrier, x.carrier));
  return Bimodule{x.over, x.over, x.carrier, rho, x.action};
}

Bimodule bimodule_from_monoid_legs(const MonoidMor& f, const MonoidMor& fp) {
  if (f.dst != fp.dst) throw DimMismatch("bimodule_from_monoid_legs: legs target different monoids");
  const CommMonoid& t = f.dst;
  const Mor idt = Mor::identity(t.field, t.carrier);
  Bimodule x;
  x.left_over = f.src;
  x.right_over = fp.src;
  x.carrier = t.carrier;
  x.left_action = compose(t.product, tensor(f.map, idt));
  x.right_action = compose(t.product, tensor(idt, fp.map));
  return x;
}

RightModule restrict_module(const MonoidMor& f, const RightModule& y) {
  if (y.over != f.dst) throw DimMismatch("restrict_module: module is not over the morphism target");
  const Mor idy = Mor::identity(y.over.field, y.carrier);
  return RightModule{f.src, y.carrier, compose(y.action, tensor(idy, f.map))};
}

RightModule right_module_of(const Bimodule& x) {
  return RightModule{x.right_over, x.carrier, x.right_action};
}

RightModule bimodule_as_module(const Coproduct& c, const Bimodule& x) {
  const Field& f = x.left_over.field;
  if (c.p.src != x.left_over || c.pp.src != x.right_over)
    throw DimMismatch("bimodule_as_module: coproduct does not match the bimodule bases");
  const Mor idbp = Mor::identity(f, x.right_over.carrier);
  Mor action = compose(x.right_action,
                       compose(tensor(x.left_action, idbp),
                               tensor(braiding(f, x.carrier, x.left_over.carrier), idbp)));
  return RightModule{c.monoid, x.carrier, action};
}

Bimodule module_as_bimodule(const Coproduct& c, const RightModule& x) {
  if (x.over != c.monoid) throw DimMismatch("module_as_bimodule: module is not over the coproduct");
  const Field& f = x.over.field;
  const Mor idx = Mor::identity(f, x.carrier);
  Bimodule r;
  r.left_over = c.p.src;
  r.right_over = c.pp.src;
  r.carrier = x.carrier;
  r.left_action = compose(x.action, compose(tensor(idx, c.p.map),
                                            braiding(f, c.p.src.carrier, x.carrier)));
  r.right_action = compose(x.action, tensor(idx, c.pp.map));
  return r;
}

void require_same_base(const RightModule& x, const RightModule& y, const char* op) {
  if (x.over != y.over)
    throw DimMismatch(std::string(op) + ": modules live over different base monoids");
}

}  // namespace ewk
