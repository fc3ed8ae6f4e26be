#ifndef EWK_MTENSOR_HPP
#define EWK_MTENSOR_HPP

#include "ewk/module.hpp"

namespace ewk {

// z (+)_b X for z a right b-module and X a (b,b')-bimodule: the coequalizer
// of the two action maps on z (x) b (x) X, carrying the induced right
// b'-action. Every construction downstream is phrased against pres, so the
// presentation is part of the value.
struct TensorOverResult {
  RightModule source;  // z, over b
  Bimodule through;    // X
  RightModule result;  // z (+)_b X, over b'
  CoeqPresentation pres;
};

TensorOverResult tensor_over(const RightModule& z, const Bimodule& X);

// x (+)_b y for right b-modules over a commutative monoid, via the opposite
// left action on y.
TensorOverResult mtensor(const RightModule& x, const RightModule& y);

// h (+) id_X on the first slot; both presentations are recomputed
// deterministically (or supplied by the caller).
ModuleMor tensor_over_mor(const ModuleMor& h, const Bimodule& X);
ModuleMor tensor_over_mor(const TensorOverResult& ts, const TensorOverResult& td,
                          const ModuleMor& h);

// id_z (+) k for a map of bimodules k (equivariant for both actions).
ModuleMor tensor_over_mor_right(const RightModule& z, const Bimodule& Xs, const Bimodule& Xd,
                                const Mor& k);

// Functorial action of (+)_b in both slots at once.
ModuleMor mtensor_mor(const ModuleMor& h, const ModuleMor& k);

// The tensorial strength a_{w,z,X}: w (x) (z (+)_b X) -> (w (x) z) (+)_b X of
// the cocontinuous functor - (+)_b X, an isomorphism.
ModuleMor strength_assoc(Obj w, const RightModule& z, const Bimodule& X);
ModuleMor strength_assoc(const Field& f, Obj w, const TensorOverResult& tz,
                         const TensorOverResult& twz);

// Strength of z (+)_b - : w (x) (z (+)_b x) -> z (+)_b (w (x) x), determined
// by cq o (s_{w,z} (x) id_x).
ModuleMor left_tensor_strength(Obj w, const RightModule& z, const RightModule& x);

// iota^b_X : b (+)_b X -> X, the unique iso with iota o cq = left action.
struct UnitIso {
  TensorOverResult ten;
  ModuleMor iso, inv;
};
UnitIso unit_iso(const Bimodule& X);

UnitIso left_unit_b(const RightModule& x);   // iota^b_x : b (+)_b x -> x
UnitIso right_unit_b(const RightModule& x);  // jmath^b_x : x (+)_b b -> x

struct AssocData {
  TensorOverResult xy, z_xy, zx, zx_y;
  ModuleMor assoc;  // z (+) (x (+) y) -> (z (+) x) (+) y
};
AssocData assoc_b(const RightModule& z, const RightModule& x, const RightModule& y);

struct BraidData {
  TensorOverResult xy, yx;
  ModuleMor braid;  // x (+) y -> y (+) x
};
BraidData braid_b(const RightModule& x, const RightModule& y);

// Hom object of the right adjoint Hom_{b'}(X,-) at Y, realized as the
// equalizer subspace of hom(x,y) with the action transported along the
// chosen retraction.
struct InternalHom {
  Bimodule through;    // X, a (b,b')-bimodule
  RightModule source;  // Y over b'
  EqPresentation pres;
  RightModule module;  // over b
};
InternalHom hom_functor_obj(const Bimodule& X, const RightModule& Y);

// Closed structure of M_b: Hom_b(x,-) right adjoint to - (+)_b x.
InternalHom internal_hom_b(const RightModule& x, const RightModule& y);

struct AdjunctionUnit {
  TensorOverResult ten;  // z (+)_b X
  InternalHom hom;       // Hom_{b'}(X, z (+)_b X)
  ModuleMor unit;        // z -> hom.module
};
AdjunctionUnit adjunction_unit(const RightModule& z, const Bimodule& X);

struct AdjunctionCounit {
  InternalHom hom;       // Hom_{b'}(X, Y)
  TensorOverResult ten;  // hom.module (+)_b X
  ModuleMor counit;      // ten.result -> Y
};
AdjunctionCounit adjunction_counit(const RightModule& Y, const Bimodule& X);

// Exact triangle identities of - (+)_b X -| Hom_{b'}(X,-) at (z, Y).
LawReport check_tensor_hom_triangles(const RightModule& z, const Bimodule& X,
                                     const RightModule& Y);

// --- coherence laws of (M_b, (+)_b, b_b) -------------------------------------

LawReport check_pentagon_b(const RightModule& w, const RightModule& z, const RightModule& x,
                           const RightModule& y);
LawReport check_triangle_b(const RightModule& x, const RightModule& y);
LawReport check_hexagon_b(const RightModule& x, const RightModule& y, const RightModule& z);
LawReport check_symmetry_b(const RightModule& x, const RightModule& y);

// --- Comm_b = Comm(M_b) ------------------------------------------------------

struct InternalCommMonoid {
  RightModule carrier;      // btilde as a right b-module
  ModuleMor unit;           // b_b -> carrier
  TensorOverResult square;  // carrier (+)_b carrier
  ModuleMor product;        // square.result -> carrier
};

InternalCommMonoid over_to_internal(const MonoidOver& o);
MonoidOver internal_to_over(const InternalCommMonoid& i);
LawReport check_internal_comm_monoid(const InternalCommMonoid& i);

}  // namespace ewk

#endif  // EWK_MTENSOR_HPP
