#ifndef EWK_MODULE_HPP
#define EWK_MODULE_HPP

#include "ewk/monoid.hpp"

namespace ewk {

// A right b-module: carrier x with action x (x) b -> x.
struct RightModule {
  CommMonoid over;
  Obj carrier;
  Mor action;

  friend bool operator==(const RightModule& a, const RightModule& b) {
    return a.over == b.over && a.carrier == b.carrier && a.action == b.action;
  }
  friend bool operator!=(const RightModule& a, const RightModule& b) { return !(a == b); }
};

struct ModuleMor {
  RightModule src, dst;
  Mor map;

  friend bool operator==(const ModuleMor& a, const ModuleMor& b) {
    return a.src == b.src && a.dst == b.dst && a.map == b.map;
  }
  friend bool operator!=(const ModuleMor& a, const ModuleMor& b) { return !(a == b); }
};

// Commuting left b-action and right b'-action on one carrier.
struct Bimodule {
  CommMonoid left_over, right_over;
  Obj carrier;
  Mor left_action;   // b (x) x -> x
  Mor right_action;  // x (x) b' -> x

  friend bool operator==(const Bimodule& a, const Bimodule& b) {
    return a.left_over == b.left_over && a.right_over == b.right_over && a.carrier == b.carrier &&
           a.left_action == b.left_action && a.right_action == b.right_action;
  }
  friend bool operator!=(const Bimodule& a, const Bimodule& b) { return !(a == b); }
};

LawReport check_module(const RightModule& x);
LawReport check_module_mor(const ModuleMor& h);
LawReport check_bimodule(const Bimodule& x);
bool is_module_mor(const ModuleMor& h);

ModuleMor identity_mor(const RightModule& x);
ModuleMor compose(const ModuleMor& g, const ModuleMor& h);

// b as a right module over itself, action m_b.
RightModule regular_module(const CommMonoid& b);

// Hom object M_b(x,y) inside hom(x,y): the equalizer of precomposition by
// the action of x against postcomposition by the action of y.
EqPresentation hom_module_object(const RightModule& x, const RightModule& y);

// Tensored object z (x) x with action id_z (x) gamma_x.
RightModule tensored(Obj z, const RightModule& x);

// The (b,b)-bimodule (x, gamma o s, gamma) built from a right module over a
// commutative monoid.
Bimodule opposite_left_action(const RightModule& x);

// _b btilde_b' with left action m o (f (x) id) and right action m o (id (x) f').
Bimodule bimodule_from_monoid_legs(const MonoidMor& f, const MonoidMor& fp);

// Restriction of scalars along f: b -> b' (f_* on objects).
RightModule restrict_module(const MonoidMor& f, const RightModule& y);
// Forget the left action.
RightModule right_module_of(const Bimodule& x);
// A bimodule is the same thing as a right module over the coproduct algebra.
RightModule bimodule_as_module(const Coproduct& c, const Bimodule& x);
Bimodule module_as_bimodule(const Coproduct& c, const RightModule& x);

void require_same_base(const RightModule& x, const RightModule& y, const char* op);

}  // namespace ewk

#endif  // EWK_MODULE_HPP
