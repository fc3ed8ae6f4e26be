#include "ewk/monoid.hpp"

namespace ewk {

LawReport check_comm_monoid(const CommMonoid& b) {
  LawReport rep;
  const Mor id = Mor::identity(b.field, b.carrier);
  const Mor& m = b.product;
  const Mor& u = b.unit;
  if (u.src() != unit_obj() || u.dst() != b.carrier || m.dst() != b.carrier ||
      m.src() != tensor(b.carrier, b.carrier)) {
    rep.add("monoid.shapes", false, "unit/product shapes do not match the carrier");
    return rep;
  }
  rep.add_equal("monoid.assoc", compose(m, tensor(m, id)), compose(m, tensor(id, m)));
  rep.add_equal("monoid.unit_left", compose(m, tensor(u, id)), id);
  rep.add_equal("monoid.unit_right", compose(m, tensor(id, u)), id);
  rep.add_equal("monoid.comm", compose(m, braiding(b.field, b.carrier, b.carrier)), m);
  return rep;
}

LawReport check_monoid_mor(const MonoidMor& f) {
  LawReport rep;
  if (f.src.field != f.dst.field) {
    rep.add("monoid_mor.field", false, "source and target algebras live over different fields");
    return rep;
  }
  rep.add_equal("monoid_mor.unit", compose(f.map, f.src.unit), f.dst.unit);
  rep.add_equal("monoid_mor.product", compose(f.map, f.src.product),
                compose(f.dst.product, tensor(f.map, f.map)));
  return rep;
}

bool is_monoid_mor(const MonoidMor& f) { return check_monoid_mor(f).all_pass(); }

MonoidMor identity_mor(const CommMonoid& b) {
  return MonoidMor{b, b, Mor::identity(b.field, b.carrier)};
}

MonoidMor compose(const MonoidMor& g, const MonoidMor& f) {
  if (g.src != f.dst) throw DimMismatch("monoid morphism composition: middle objects differ");
  return MonoidMor{f.src, g.dst, compose(g.map, f.map)};
}

Coproduct coproduct(const CommMonoid& b, const CommMonoid& bp) {
  if (b.field != bp.field)
    throw FieldMismatch("coproduct: algebras over different fields (" + b.field.name() + " vs " +
                        bp.field.name() + ")");
  const Field& f = b.field;
  const Mor idb = Mor::identity(f, b.carrier);
  const Mor idbp = Mor::identity(f, bp.carrier);
  CommMonoid t;
  t.name = (b.name.empty() ? "b" : b.name) + "*" + (bp.name.empty() ? "b'" : bp.name);
  t.field = f;
  t.carrier = tensor(b.carrier, bp.carrier);
  t.unit = tensor(b.unit, bp.unit);
  // (m_b (x) m_b') o (id (x) s (x) id)
  t.product = compose(tensor(b.product, bp.product),
                      tensor(tensor(idb, braiding(f, bp.carrier, b.carrier)), idbp));
  Coproduct c{t, {}, {}};
  c.p = MonoidMor{b, t, tensor(idb, bp.unit)};
  c.pp = MonoidMor{bp, t, tensor(b.unit, idbp)};
  return c;
}

MonoidMor copair(const Coproduct& c, const MonoidMor& f, const MonoidMor& fp) {
  if (f.dst != fp.dst) throw DimMismatch("copair: legs have different targets");
  const CommMonoid& t = f.dst;
  return MonoidMor{c.monoid, t, compose(t.product, tensor(f.map, fp.map))};
}

namespace {

// Algebra of a single generator g with relations given by the multiplication
// table on the basis of powers of g (our builtins are all of this shape).
CommMonoid from_structure_table(std::string name, const Field& f, int dim,
                                const std::vector<std::vector<long>>& table) {
  CommMonoid b;
  b.name = std::move(name);
  b.field = f;
  b.carrier = Obj{dim};
  b.unit = Mor(f, unit_obj(), b.carrier);
  b.unit.set(0, 0, 1);
  b.product = Mor(f, tensor(b.carrier, b.carrier), b.carrier);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        long v = table[static_cast<size_t>(i * dim + j)][static_cast<size_t>(k)];
        if (v != 0) b.product.set(k, i * dim + j, v);
      }
  return b;
}

}  // namespace

CommMonoid builtin_algebra(const std::string& name, const Field& f) {
  if (name == "ground") {
    return from_structure_table(name, f, 1, {{1}});
  }
  if (name == "dual_numbers") {
    // basis {1, t}, t^2 = 0
    return from_structure_table(name, f, 2,
                                {{1, 0}, {0, 1},   //
                                 {0, 1}, {0, 0}});
  }
  if (name == "split_pair") {
    // basis {e1, e2}, orthogonal idempotents, unit e1 + e2
    CommMonoid b = from_structure_table(name, f, 2,
                                        {{1, 0}, {0, 0},  //
                                         {0, 0}, {0, 1}});
    b.unit.set(0, 0, 1);
    b.unit.set(1, 0, 1);
    return b;
  }
  if (name == "z2_group_algebra") {
    // basis {1, s}, s^2 = 1
    return from_structure_table(name, f, 2,
                                {{1, 0}, {0, 1},  //
                                 {0, 1}, {1, 0}});
  }
  if (name == "t_cubed") {
    // basis {1, t, t^2}, t^3 = 0
    return from_structure_table(name, f, 3,
                                {{1, 0, 0}, {0, 1, 0}, {0, 0, 1},  //
                                 {0, 1, 0}, {0, 0, 1}, {0, 0, 0},  //
                                 {0, 0, 1}, {0, 0, 0}, {0, 0, 0}});
  }
  throw ParseError("unknown builtin algebra: " + name);
}

const std::vector<std::string>& builtin_algebra_names() {
  static const std::vector<std::string> names = {"ground", "dual_numbers", "split_pair",
                                                 "z2_group_algebra", "t_cubed"};
  return names;
}

}  // namespace ewk
